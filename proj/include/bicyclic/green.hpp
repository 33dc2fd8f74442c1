#pragma once

#include <string_view>
#include <vector>

#include "bicyclic/element.hpp"

namespace bicyclic {

enum class GreenRelation { R, L, J, D, H };

std::string_view relation_name(GreenRelation rel);
inline constexpr GreenRelation kAllRelations[] = {
    GreenRelation::R, GreenRelation::L, GreenRelation::J, GreenRelation::D,
    GreenRelation::H};

// Outcome of a Green's relation query.
//
// R, L and H are decided exactly through the division solvers, so `exact`
// is set and `bound` is irrelevant. J and D are searched over witnesses
// whose exponents are at most `bound`; a negative answer only means no
// witness exists below that bound.
//
// Witness layout when related:
//   R, L : [x, y]            u*x = v, v*y = u   (R)   x*u = v, y*v = u   (L)
//   H    : [xR, yR, xL, yL]
//   J    : [x1, y1, x2, y2]  x1*u*y1 = v, x2*v*y2 = u
//   D    : [w, w']           u L w R v and u R w' L v
struct GreenVerdict {
  enum class Kind { Related, NotRelatedWithinBound };

  GreenRelation relation = GreenRelation::R;
  Kind kind = Kind::NotRelatedWithinBound;
  bool exact = false;
  Exp bound = 0;
  std::vector<BicyclicElem> witnesses;
  // Only meaningful for D: whether L o R and R o L gave the same answer.
  bool compositions_agree = true;

  bool related() const { return kind == Kind::Related; }
};

// Preconditions: c is CPlus or CMinus and u, v are in c.
GreenVerdict green_related(GreenRelation rel, BicyclicElem u, BicyclicElem v,
                           Carrier c, Exp bound);

// Partition of { x in c : x.i, x.j <= elem_bound } induced by pairwise
// green_related calls. Classes and their members are sorted.
std::vector<std::vector<BicyclicElem>> green_classes(GreenRelation rel,
                                                     Carrier c, Exp elem_bound,
                                                     Exp witness_bound);

}  // namespace bicyclic
