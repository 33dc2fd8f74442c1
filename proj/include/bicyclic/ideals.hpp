#pragma once

#include <vector>

#include "bicyclic/element.hpp"

namespace bicyclic {

// The principal ideal CPlus * b^i a^i, truncated to exponents <= trunc:
// { (s,t) in CPlus : t >= i, t <= trunc }. Only CPlus is accepted.
std::vector<BicyclicElem> right_ideal(Exp i, Carrier c, Exp trunc);

// { (s,t) in CPlus : t <= x.j }, the complement of CPlus * b^(j+1) a^(j+1).
// Contains x and has (x.j+1)(x.j+2)/2 elements. Requires x in CPlus.
std::vector<BicyclicElem> finite_open_nbhd(BicyclicElem x);

}  // namespace bicyclic
