#include "bicyclic/ideals.hpp"

#include <algorithm>
#include <stdexcept>

namespace bicyclic {

std::vector<BicyclicElem> right_ideal(Exp i, Carrier c, Exp trunc) {
  if (c != Carrier::CPlus) {
    throw std::invalid_argument("right_ideal: only CPLUS is supported");
  }
  std::vector<BicyclicElem> out;
  for (Exp s = 0; s <= trunc; ++s) {
    for (Exp t = std::max(s, i); t <= trunc; ++t) {
      out.push_back({s, t});
    }
  }
  return out;
}

std::vector<BicyclicElem> finite_open_nbhd(BicyclicElem x) {
  if (!in_carrier(x, Carrier::CPlus)) {
    throw std::invalid_argument("finite_open_nbhd: " + to_string(x) +
                                " is not in CPLUS");
  }
  std::vector<BicyclicElem> out;
  for (Exp s = 0; s <= x.j; ++s) {
    for (Exp t = s; t <= x.j; ++t) {
      out.push_back({s, t});
    }
  }
  return out;
}

}  // namespace bicyclic
