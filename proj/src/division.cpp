#include "bicyclic/division.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bicyclic {

namespace {

void require_divisor(BicyclicElem v, Carrier c, char const* who) {
  if (c != Carrier::Full && c != Carrier::CPlus && c != Carrier::CMinus) {
    throw std::invalid_argument(std::string(who) +
                                ": division is defined on FULL, CPLUS, CMINUS");
  }
  if (!in_carrier(v, c)) {
    throw std::invalid_argument(std::string(who) + ": divisor " +
                                to_string(v) + " outside carrier");
  }
}

std::vector<BicyclicElem> keep_members(std::vector<BicyclicElem> xs,
                                       Carrier c) {
  std::erase_if(xs, [c](BicyclicElem x) { return !in_carrier(x, c); });
  std::sort(xs.begin(), xs.end());
  return xs;
}

}  // namespace

std::vector<BicyclicElem> solve_right_div(BicyclicElem v, BicyclicElem w,
                                          Carrier c) {
  require_divisor(v, c, "solve_right_div");
  std::vector<BicyclicElem> out;
  // u.i > v.j: v*u = (v.i - v.j + u.i, u.j)
  if (w.i > v.i) {
    out.push_back({checked_add(w.i - v.i, v.j), w.j});
  }
  if (w.i == v.i) {
    // u.i == v.j: v*u = (v.i, u.j)
    out.push_back({v.j, w.j});
    // u.i < v.j: v*u = (v.i, v.j - u.i + u.j)
    Exp const lo = w.j >= v.j ? 0 : v.j - w.j;
    for (Exp ui = lo; ui < v.j; ++ui) {
      out.push_back({ui, w.j + ui - v.j});
    }
  }
  return keep_members(std::move(out), c);
}

std::vector<BicyclicElem> solve_left_div(BicyclicElem v, BicyclicElem w,
                                         Carrier c) {
  require_divisor(v, c, "solve_left_div");
  std::vector<BicyclicElem> out;
  if (v.j == w.j) {
    // u.j < v.i: u*v = (u.i - u.j + v.i, v.j)
    Exp const lo = w.i >= v.i ? 0 : v.i - w.i;
    for (Exp uj = lo; uj < v.i; ++uj) {
      out.push_back({w.i + uj - v.i, uj});
    }
    // u.j == v.i: u*v = (u.i, v.j)
    out.push_back({w.i, v.i});
  }
  // u.j > v.i: u*v = (u.i, u.j - v.i + v.j)
  if (w.j > v.j) {
    out.push_back({w.i, checked_add(w.j - v.j, v.i)});
  }
  return keep_members(std::move(out), c);
}

}  // namespace bicyclic
