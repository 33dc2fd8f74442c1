#pragma once

// Continuity of one-sided shifts (and, boundedly, of the multiplication)
// with respect to the registered neighbourhood families.
//
// For a shift f and a point x, continuity at x means: for every basic V_n at
// f(x) some basic B_m at x has f(B_m) inside V_n. Witness tables record the
// smallest such m for each n.

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "bicyclic/element.hpp"
#include "bicyclic/topology.hpp"

namespace bicyclic {

enum class Side { Left, Right };

std::string_view side_name(Side side);

// Left: x -> s x.  Right: x -> x s.
struct ShiftSpec {
  Side side = Side::Left;
  ExtElem s;
  Family family;
  ExtElem point;

  friend bool operator==(ShiftSpec const&, ShiftSpec const&) = default;
};

ExtElem apply_shift(ShiftSpec const& spec, ExtElem const& x);

struct WitnessEntry {
  Exp n = 0;
  Exp m = 0;
  friend bool operator==(WitnessEntry const&, WitnessEntry const&) = default;
};

struct Escape {
  Exp m = 0;
  ExtElem u;      // member of the m-basic at the point
  ExtElem image;  // shift(u), outside the offending basic
  friend bool operator==(Escape const&, Escape const&) = default;
};

struct ContinuousExact {
  std::string rule;
  std::vector<WitnessEntry> table;
  friend bool operator==(ContinuousExact const&, ContinuousExact const&) = default;
};

struct ContinuousUpToBound {
  Exp bound = 0;
  std::vector<WitnessEntry> table;
  friend bool operator==(ContinuousUpToBound const&,
                         ContinuousUpToBound const&) = default;
};

struct Discontinuous {
  BasicNbhd offending;
  std::vector<Escape> escapes;  // one per m <= bound
  std::string rule;
  Exp bound = 0;
  friend bool operator==(Discontinuous const&, Discontinuous const&) = default;
};

// A subset question came back undecided, or no m was found within the cap.
struct Inconclusive {
  Exp n = 0;
  std::string reason;
  friend bool operator==(Inconclusive const&, Inconclusive const&) = default;
};

using ContinuityVerdict =
    std::variant<ContinuousExact, ContinuousUpToBound, Discontinuous, Inconclusive>;

std::string_view verdict_kind(ContinuityVerdict const& v);
bool is_continuous(ContinuityVerdict const& v);

// Image of a TAUP_PLUS basic under the left shift by s; the image is again a
// basic with the same parameter.
BasicNbhd shift_image_taup(BicyclicElem s, BasicNbhd const& b);

// Exact image of a non-cofinite basic under a shift. Throws
// std::invalid_argument for cofinite basics.
Shape shift_image_shape(ShiftSpec const& spec, BasicNbhd const& b);

// Preimages of elements under a fixed shift (the point of the spec is
// ignored), memoised on a grid per shift. Not thread safe; one per worker.
class PreimageCache {
 public:
  std::vector<BicyclicElem> const& preimages(ShiftSpec const& spec,
                                             BicyclicElem w);

 private:
  struct Table {
    Exp width = 0;
    std::vector<std::optional<std::vector<BicyclicElem>>> cells;
  };
  using Key = std::tuple<Side, ExtElem, Carrier>;

  std::map<Key, Table> tables_;
  std::optional<Key> last_key_;
  Table* last_ = nullptr;
};

// { u : shift(u) = w } in the carrier of the spec's family.
std::vector<BicyclicElem> shift_preimages(ShiftSpec const& spec, BicyclicElem w);

ContinuityVerdict check_shift_continuity(ShiftSpec const& spec, Exp param_bound,
                                         PreimageCache* cache = nullptr);

// Independent re-check of a verdict by direct products over enumerations:
// every table entry's m-basic maps into the n-basic on the first `depth`
// members, and every escape is a genuine escape.
bool revalidate(ShiftSpec const& spec, ContinuityVerdict const& verdict,
                std::size_t depth);

// Sweep at x = (k1, k1+s1), y = (k2, k2+s2): the operation x*y is
// examined in both variables.
struct Remark16Outcome {
  BicyclicElem x;
  BicyclicElem y;
  ContinuityVerdict right_shift;  // x' -> x' y at x
  ContinuityVerdict left_shift;   // y' -> x y' at y
  // The literal reading (continuity in the right variable) is not what fails.
  bool terminology_tension = false;
};

Remark16Outcome remark16_sweep(Exp p, Exp k1, Exp s1, Exp k2, Exp s2,
                               Exp param_bound);

struct TausReport {
  Exp index_bound = 0;
  Exp elem_bound = 0;
  std::size_t checked_a = 0, checked_b = 0, checked_c = 0, checked_d = 0;
  std::vector<std::string> failures;
  // (n, i) with n < i where U_n(0)*(i,i) inside U_n(0) still holds.
  std::vector<std::pair<Exp, Exp>> guard_not_necessary;
  // (x, y, n, a, b): basics at x, y with parameters a, b map into V_n(xy).
  struct Joint {
    ExtElem x, y;
    Exp n, a, b;
  };
  std::vector<Joint> joint_table;
  bool ok() const { return failures.empty(); }
};

TausReport verify_taus_monoid(Exp index_bound, Exp elem_bound);

struct Tau2Report {
  Exp elem_bound = 0;
  Exp param_bound = 0;
  Exp search_bound = 0;  // bound on a, b
  Exp depth = 0;         // product enumeration depth
  struct Entry {
    Carrier carrier;
    BicyclicElem x, y;
    Exp n, a, b;
  };
  std::vector<Entry> table;
  std::vector<std::string> inconclusive;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty() && inconclusive.empty(); }
};

Tau2Report verify_tau2_semigroup(Exp elem_bound, Exp param_bound);

struct TaucReport {
  Exp elem_bound = 0;
  Exp param_bound = 0;
  std::size_t checks = 0;
  std::size_t continuous = 0;
  Exp max_m = 0;
  std::vector<std::string> inconclusive;
  std::vector<std::string> failures;
  // First few tables, for the report payload.
  std::vector<std::pair<ShiftSpec, ContinuityVerdict>> samples;
  bool ok() const { return failures.empty() && inconclusive.empty(); }
};

TaucReport verify_tauc_shift_continuity(Exp elem_bound, Exp param_bound);

struct Theorem6Report {
  BicyclicElem x;
  Exp check_bound = 0;
  bool retractions_idempotent = false;
  bool image_is_ideal = false;
  bool nbhd_is_complement = false;
  std::vector<BicyclicElem> nbhd;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

Theorem6Report theorem6_forcing(BicyclicElem x, Exp check_bound);

// The left/right shift suite on TAUP_PLUS and its alpha-dual.
struct ShiftEntry {
  ShiftSpec spec;
  ContinuityVerdict verdict;
};

struct Prop15Suite {
  Exp p = 2;
  Exp elem_bound = 0;
  Exp param_bound = 0;
  std::vector<ShiftEntry> entries;
};

// Both shifts for every s, point in CPLUS with exponents <= elem_bound.
Prop15Suite prop15_suite(Exp p, Exp elem_bound, Exp param_bound);

ShiftSpec dualize(ShiftSpec const& spec);
ContinuityVerdict dualize(ContinuityVerdict const& v);

struct DualReport {
  Prop15Suite dual;
  std::vector<std::size_t> sampled;   // indices recomputed directly
  std::vector<std::size_t> mismatches;
};

DualReport dual_report(Prop15Suite const& rep, std::size_t samples);

}  // namespace bicyclic
