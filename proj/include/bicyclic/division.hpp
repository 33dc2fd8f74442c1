#pragma once

#include <vector>

#include "bicyclic/element.hpp"

namespace bicyclic {

// Exact solution sets of the one-sided division equations, read off the
// three cases of the product formula. Both sets are finite for every
// carrier. Results are sorted lexicographically.
//
// Preconditions: c is Full, CPlus or CMinus and v is in c. The target w may
// lie outside c, in which case the result is empty.

// { u in c : v * u = w }
std::vector<BicyclicElem> solve_right_div(BicyclicElem v, BicyclicElem w,
                                          Carrier c);

// { u in c : u * v = w }
std::vector<BicyclicElem> solve_left_div(BicyclicElem v, BicyclicElem w,
                                         Carrier c);

}  // namespace bicyclic
