#pragma once

#include <vector>

#include "bicyclic/element.hpp"
#include "oracle.hpp"

inline oracle::Pair P(bicyclic::BicyclicElem x) { return {x.i, x.j}; }
inline bicyclic::BicyclicElem E(oracle::Pair x) { return {x.first, x.second}; }

inline std::vector<bicyclic::BicyclicElem> E(std::vector<oracle::Pair> const& xs) {
  std::vector<bicyclic::BicyclicElem> out;
  for (auto x : xs) out.push_back(E(x));
  return out;
}

inline oracle::Set S(bicyclic::Carrier c) {
  switch (c) {
    case bicyclic::Carrier::CPlus:
      return oracle::Set::Plus;
    case bicyclic::Carrier::CMinus:
      return oracle::Set::Minus;
    default:
      return oracle::Set::Full;
  }
}
