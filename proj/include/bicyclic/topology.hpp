#pragma once

// Neighbourhood-base topologies on the bicyclic carriers. A topology is
// represented only by its basic open sets; each basic set is a
// (family, center, parameter) triple with closed-form membership.
//
//   DISCRETE     {x}
//   TAU2         O_n(x) = {x} u {x + l(1,1) : l > n}
//   TAUC         W_n(x) = {x} u (carrier \ C_n),  C_n = {i, j <= n}
//   TAUS         U_n(0) = {0} u {(i,j) in CPlus : j >= n};  other points isolated
//   TAUP_OMEGA   U_n(s) = {(0, s + p^n t) : t >= 0}
//   TAUP_PLUS    W_n(k, k+s) = {(k, k+s + p^n t) : t >= 0}
//   TAUP_MINUS   alpha-image of TAUP_PLUS
//
// Every family has decreasing chains: the (n+1)-basic sits inside the n-basic.

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "bicyclic/element.hpp"

namespace bicyclic {

enum class FamilyTag { Discrete, Tau2, TauC, TauS, TaupOmega, TaupPlus, TaupMinus };

std::string_view family_tag_name(FamilyTag tag);

bool is_prime(Exp p);

// p^n; throws std::overflow_error when it does not fit in 63 bits.
Exp prime_power(Exp p, Exp n);

class Family {
 public:
  static Family discrete(Carrier c);
  static Family tau2(Carrier c = Carrier::Full);
  static Family tauc(Carrier c = Carrier::Full);
  static Family taus();
  static Family taup_omega(Exp p);
  static Family taup_plus(Exp p);
  static Family taup_minus(Exp p);

  FamilyTag tag() const { return tag_; }
  Carrier carrier() const { return carrier_; }
  // The prime of the p-adic families.
  std::optional<Exp> prime() const;
  bool is_padic() const;

  // e.g. "TAUP_PLUS(p=3)" or "TAUC/CPLUS"
  std::string name() const;

  friend bool operator==(Family const&, Family const&) = default;

 private:
  Family(FamilyTag tag, Carrier c, Exp p) : tag_(tag), carrier_(c), p_(p) {}

  FamilyTag tag_;
  Carrier carrier_;
  Exp p_;
};

// Basic open set with the given center and parameter. For TAUS the
// parameter is the neighbourhood index at zero and is ignored at the
// isolated points.
struct BasicNbhd {
  Family family;
  ExtElem center;
  Exp n = 0;

  friend bool operator==(BasicNbhd const&, BasicNbhd const&) = default;
};

// Validates that the center lies in the family's carrier.
BasicNbhd make_basic(Family const& family, ExtElem const& center, Exp n);

std::string to_string(BasicNbhd const& b);

// An arithmetic progression base + t * step, t >= 0. Steps are (d,d), (0,d)
// or (d,0) with d > 0.
struct Ray {
  BicyclicElem base;
  Exp di = 0;
  Exp dj = 0;

  BicyclicElem at(Exp t) const;
  bool contains(BicyclicElem x) const;

  friend bool operator==(Ray const&, Ray const&) = default;
};

// Exact description of a subset of a carrier: either finitely many points
// plus at most one ray, or (when `complement` is set) everything in the
// carrier except a finite list.
struct Shape {
  Carrier carrier = Carrier::Full;
  std::vector<ExtElem> points;
  std::optional<Ray> ray;
  std::optional<std::vector<ExtElem>> complement;

  bool is_cofinite() const { return complement.has_value(); }
  bool is_finite() const { return !complement && !ray; }
  bool contains(ExtElem const& x) const;
};

Shape shape_of(BasicNbhd const& b);

// Raised when a subset question has no registered closed form and the
// witness search comes back empty. Never read as "subset".
class UndecidedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool nbhd_member(BasicNbhd const& b, ExtElem const& x);

// First `count` members in the canonical order: center first, then along
// the defining progression; TAUC and TAUS at zero walk the remaining
// carrier shell by shell (max(i,j) = r), lexicographically within a shell.
std::vector<ExtElem> nbhd_enumerate(BasicNbhd const& b, std::size_t count);

struct Cofinite {
  std::vector<ExtElem> complement;
  friend bool operator==(Cofinite const&, Cofinite const&) = default;
};
struct NotCofinite {
  std::string reason;
  std::vector<ExtElem> missed;  // a few verified non-members
  friend bool operator==(NotCofinite const&, NotCofinite const&) = default;
};
using CofinitenessVerdict = std::variant<Cofinite, NotCofinite>;

CofinitenessVerdict nbhd_is_cofinite(BasicNbhd const& b);

struct Subset {
  friend bool operator==(Subset const&, Subset const&) = default;
};
struct NotSubset {
  ExtElem witness;
  friend bool operator==(NotSubset const&, NotSubset const&) = default;
};
using SubsetVerdict = std::variant<Subset, NotSubset>;

inline bool is_subset(SubsetVerdict const& v) {
  return std::holds_alternative<Subset>(v);
}

// Exact inclusion of shapes over the same carrier; UndecidedError otherwise.
SubsetVerdict shape_subset(Shape const& inner, Shape const& outer);
SubsetVerdict nbhd_subset(BasicNbhd const& inner, BasicNbhd const& outer);

// Exact emptiness of the intersection.
bool shapes_disjoint(Shape const& a, Shape const& b);

struct SeparatedBy {
  BasicNbhd at_x;
  BasicNbhd at_y;
  friend bool operator==(SeparatedBy const&, SeparatedBy const&) = default;
};
struct NotSeparatedWithinBound {
  Exp bound = 0;
  std::string reason;
  friend bool operator==(NotSeparatedWithinBound const&,
                         NotSeparatedWithinBound const&) = default;
};
using SeparationVerdict = std::variant<SeparatedBy, NotSeparatedWithinBound>;

// Disjoint basic neighbourhoods of two distinct points. The p-adic families
// are decided in closed form; the others search parameters <= param_bound.
SeparationVerdict separate(Family const& family, ExtElem const& x,
                           ExtElem const& y, Exp param_bound);

// Smallest n with y outside the n-basic at x, if any.
std::optional<Exp> excluding_param(Family const& family, ExtElem const& x,
                                   ExtElem const& y);

// T1 separation of two distinct points.
bool t1_check(Family const& family, ExtElem const& x, ExtElem const& y);

struct CompactByCofinite {
  std::string anchor;             // "0" or "every point"
  std::string complement_formula;
  Exp inspected = 0;              // truncation used for the inspection
  friend bool operator==(CompactByCofinite const&,
                         CompactByCofinite const&) = default;
};
struct NoCertificate {
  std::string reason;
  friend bool operator==(NoCertificate const&, NoCertificate const&) = default;
};
using CompactnessVerdict = std::variant<CompactByCofinite, NoCertificate>;

CompactnessVerdict compactness_certificate(Family const& family, Exp trunc);

// TAUP_PLUS basic -> TAUP_MINUS basic at alpha(center), same p and n.
BasicNbhd dualize_base(BasicNbhd const& b);

}  // namespace bicyclic
