#include <doctest.h>

#include <set>

#include "bicyclic/topology.hpp"
#include "support.hpp"

using namespace bicyclic;
using BE = BicyclicElem;

namespace {

std::vector<Family> all_families() {
  return {Family::discrete(Carrier::Full), Family::discrete(Carrier::CPlus),
          Family::tau2(Carrier::Full),     Family::tau2(Carrier::CPlus),
          Family::tauc(Carrier::Full),     Family::tauc(Carrier::CPlus),
          Family::taus(),                  Family::taup_omega(2),
          Family::taup_omega(3),           Family::taup_plus(2),
          Family::taup_plus(3),            Family::taup_minus(2),
          Family::taup_minus(5)};
}

std::vector<ExtElem> points(Family const& f, Exp bound) {
  if (f.carrier() == Carrier::Omega) {
    std::vector<ExtElem> out;
    for (Exp s = 0; s <= bound; ++s) out.push_back(BE{0, s});
    return out;
  }
  if (f.carrier() == Carrier::SZero) return box_ext(Carrier::SZero, bound);
  auto const xs = box(f.carrier(), bound);
  return {xs.begin(), xs.end()};
}

// Membership straight from the displayed definitions.
bool reference_member(BasicNbhd const& b, ExtElem const& x) {
  auto const& f = b.family;
  constexpr Exp reach = 200;
  switch (f.tag()) {
    case FamilyTag::Discrete:
      return x == b.center;
    case FamilyTag::Tau2:
      return oracle::tau2(P(b.center.elem()), b.n, P(x.elem()), reach);
    case FamilyTag::TauC:
      return oracle::tauc(P(b.center.elem()), b.n, P(x.elem()));
    case FamilyTag::TauS:
      if (!b.center.is_zero()) return x == b.center;
      return oracle::taus_zero(b.n, x.is_zero() ? std::nullopt
                                                : std::optional(P(x.elem())));
    case FamilyTag::TaupOmega:
    case FamilyTag::TaupPlus:
      return oracle::taup_plus(*f.prime(), P(b.center.elem()), b.n, P(x.elem()), reach);
    case FamilyTag::TaupMinus:
      return oracle::taup_minus(*f.prime(), P(b.center.elem()), b.n, P(x.elem()), reach);
  }
  return false;
}

bool disjoint_on(BasicNbhd const& a, BasicNbhd const& b, std::size_t depth) {
  for (auto const& x : nbhd_enumerate(a, depth)) {
    if (nbhd_member(b, x)) return false;
  }
  for (auto const& y : nbhd_enumerate(b, depth)) {
    if (nbhd_member(a, y)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("families validate their parameters") {
  CHECK_THROWS_AS(Family::taup_plus(4), std::invalid_argument);
  CHECK_THROWS_AS(Family::taup_omega(1), std::invalid_argument);
  CHECK_THROWS_AS(Family::tau2(Carrier::CMinus), std::invalid_argument);
  CHECK_THROWS_AS(make_basic(Family::taup_plus(2), BE{2, 1}, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_basic(Family::taup_omega(2), BE{1, 1}, 0), std::invalid_argument);
  CHECK(Family::taup_plus(3).name() == "TAUP_PLUS(p=3)");
  CHECK_FALSE(Family::tauc().prime().has_value());
}

TEST_CASE("nbhd_member examples") {
  auto const tp = Family::taup_plus(2);
  CHECK(nbhd_member(make_basic(tp, BE{1, 2}, 1), BE{1, 4}));
  CHECK_FALSE(nbhd_member(make_basic(tp, BE{1, 2}, 1), BE{2, 3}));
  CHECK(nbhd_member(make_basic(Family::tauc(), BE{0, 0}, 3), BE{5, 7}));
  CHECK_FALSE(nbhd_member(make_basic(Family::taus(), ExtElem::zero(), 3), BE{0, 2}));
  CHECK_THROWS_AS(nbhd_member(make_basic(tp, BE{1, 2}, 1), BE{3, 1}), std::invalid_argument);
}

TEST_CASE("membership agrees with the defining sets") {
  for (auto const& f : all_families()) {
    auto const pts = points(f, 7);
    for (auto const& c : points(f, 4)) {
      for (Exp n = 0; n <= 3; ++n) {
        auto const b = make_basic(f, c, n);
        REQUIRE(nbhd_member(b, c));
        for (auto const& x : pts) {
          INFO(to_string(b) << " at " << to_string(x));
          REQUIRE(nbhd_member(b, x) == reference_member(b, x));
        }
      }
    }
  }
}

TEST_CASE("nbhd_enumerate examples") {
  CHECK(nbhd_enumerate(make_basic(Family::tau2(), BE{1, 1}, 0), 3) ==
        std::vector<ExtElem>{BE{1, 1}, BE{2, 2}, BE{3, 3}});
  CHECK(nbhd_enumerate(make_basic(Family::taup_plus(3), BE{0, 1}, 1), 3) ==
        std::vector<ExtElem>{BE{0, 1}, BE{0, 4}, BE{0, 7}});
  CHECK(nbhd_enumerate(make_basic(Family::discrete(Carrier::Full), BE{2, 2}, 0), 5) ==
        std::vector<ExtElem>{BE{2, 2}});
  auto const w = nbhd_enumerate(make_basic(Family::tauc(), BE{0, 0}, 1), 4);
  CHECK(w == std::vector<ExtElem>{BE{0, 0}, BE{0, 2}, BE{1, 2}, BE{2, 0}});
}

TEST_CASE("enumeration consistency") {
  for (auto const& f : all_families()) {
    for (auto const& c : points(f, 3)) {
      for (Exp n = 0; n <= 2; ++n) {
        auto const b = make_basic(f, c, n);
        auto const xs = nbhd_enumerate(b, 30);
        REQUIRE(!xs.empty());
        REQUIRE(xs.front() == c);
        std::set<ExtElem> seen(xs.begin(), xs.end());
        REQUIRE(seen.size() == xs.size());
        for (auto const& x : xs) REQUIRE(nbhd_member(b, x));
        // Nothing skipped: every member strictly inside the frontier of the
        // last listed element appears.
        if (f.tag() == FamilyTag::TauC || f.tag() == FamilyTag::TauS ||
            f.tag() == FamilyTag::Discrete || xs.size() < 30) {
          continue;
        }
        auto const last = xs.back().elem();
        for (auto const& x : points(f, std::max(last.i, last.j))) {
          bool const inside = x.elem().i <= last.i && x.elem().j <= last.j;
          if (inside && nbhd_member(b, x)) REQUIRE(seen.count(x));
        }
      }
    }
  }
  // Shell order for the cofinite families: every member of a shell appears
  // before the next shell starts.
  auto const b = make_basic(Family::tauc(), BE{1, 1}, 2);
  auto const xs = nbhd_enumerate(b, 60);
  auto const last = xs.back().elem();
  Exp const r = std::max(last.i, last.j);
  for (auto const& x : box(Carrier::Full, r - 1)) {
    if (nbhd_member(b, x)) REQUIRE(std::find(xs.begin(), xs.end(), ExtElem(x)) != xs.end());
  }
}

TEST_CASE("nbhd_is_cofinite examples") {
  auto const s = nbhd_is_cofinite(make_basic(Family::taus(), ExtElem::zero(), 3));
  REQUIRE(std::holds_alternative<Cofinite>(s));
  CHECK(std::get<Cofinite>(s).complement ==
        std::vector<ExtElem>{BE{0, 0}, BE{0, 1}, BE{0, 2}, BE{1, 1}, BE{1, 2}, BE{2, 2}});
  auto const c = nbhd_is_cofinite(make_basic(Family::tauc(), BE{0, 0}, 2));
  REQUIRE(std::holds_alternative<Cofinite>(c));
  CHECK(std::get<Cofinite>(c).complement.size() == 8);
  CHECK(std::holds_alternative<NotCofinite>(
      nbhd_is_cofinite(make_basic(Family::discrete(Carrier::Full), BE{0, 0}, 0))));
  auto const t = nbhd_is_cofinite(make_basic(Family::tau2(), BE{0, 1}, 0));
  REQUIRE(std::holds_alternative<NotCofinite>(t));
  for (auto const& m : std::get<NotCofinite>(t).missed) {
    CHECK_FALSE(nbhd_member(make_basic(Family::tau2(), BE{0, 1}, 0), m));
  }
}

TEST_CASE("TAUS complement has n(n+1)/2 elements") {
  for (Exp n = 0; n <= 20; ++n) {
    auto const b = make_basic(Family::taus(), ExtElem::zero(), n);
    auto const v = nbhd_is_cofinite(b);
    REQUIRE(std::holds_alternative<Cofinite>(v));
    std::size_t missing = 0;
    for (auto const& x : box_ext(Carrier::SZero, n + 3)) {
      if (!oracle::taus_zero(n, x.is_zero() ? std::nullopt : std::optional(P(x.elem())))) {
        ++missing;
      }
    }
    REQUIRE(missing == n * (n + 1) / 2);
    REQUIRE(std::get<Cofinite>(v).complement.size() == missing);
  }
}

TEST_CASE("TAUC complements are exact") {
  for (auto c : {Carrier::Full, Carrier::CPlus}) {
    auto const f = Family::tauc(c);
    for (auto const& x : box(c, 4)) {
      for (Exp n = 0; n <= 4; ++n) {
        auto const v = nbhd_is_cofinite(make_basic(f, x, n));
        std::vector<ExtElem> expect;
        for (auto y : box(c, 6)) {
          if (!oracle::tauc(P(x), n, P(y))) expect.push_back(y);
        }
        REQUIRE(std::get<Cofinite>(v).complement == expect);
      }
    }
  }
}

TEST_CASE("nbhd_subset examples") {
  auto const tp = Family::taup_plus(2);
  CHECK(is_subset(nbhd_subset(make_basic(tp, BE{1, 2}, 3), make_basic(tp, BE{1, 2}, 1))));
  CHECK(is_subset(nbhd_subset(make_basic(Family::tau2(), BE{0, 0}, 1),
                              make_basic(Family::tauc(), BE{0, 0}, 0))));
  auto const v = nbhd_subset(make_basic(tp, BE{0, 2}, 1), make_basic(tp, BE{0, 0}, 2));
  REQUIRE(std::holds_alternative<NotSubset>(v));
  CHECK(std::get<NotSubset>(v).witness == ExtElem(BE{0, 2}));
  CHECK_THROWS_AS(nbhd_subset(make_basic(tp, BE{0, 2}, 1),
                              make_basic(Family::tauc(Carrier::Full), BE{0, 0}, 2)),
                  std::invalid_argument);
}

TEST_CASE("chain monotonicity") {
  for (auto const& f : all_families()) {
    for (auto const& c : points(f, 4)) {
      for (Exp n = 0; n <= 6; ++n) {
        REQUIRE(is_subset(nbhd_subset(make_basic(f, c, n + 1), make_basic(f, c, n))));
      }
    }
  }
}

TEST_CASE("subset verdicts agree with enumeration") {
  // Within one carrier, compare the decided verdict with a search over a
  // box large enough to expose every witness at this scale.
  for (auto const& f : all_families()) {
    auto const centers = points(f, 3);
    for (auto const& g : all_families()) {
      if (g.carrier() != f.carrier()) continue;
      for (auto const& x : centers) {
        for (auto const& y : centers) {
          for (Exp n = 0; n <= 2; ++n) {
            for (Exp m = 0; m <= 2; ++m) {
              auto const a = make_basic(f, x, n);
              auto const b = make_basic(g, y, m);
              SubsetVerdict v;
              try {
                v = nbhd_subset(a, b);
              } catch (UndecidedError const&) {
                continue;
              }
              bool found = false;
              for (auto const& z : points(f, 40)) {
                if (nbhd_member(a, z) && !nbhd_member(b, z)) {
                  found = true;
                  break;
                }
              }
              INFO(to_string(a) << " in " << to_string(b));
              REQUIRE(is_subset(v) == !found);
              if (auto const* ns = std::get_if<NotSubset>(&v)) {
                REQUIRE(nbhd_member(a, ns->witness));
                REQUIRE_FALSE(nbhd_member(b, ns->witness));
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("TAUP basics fix the b-exponent") {
  for (Exp p : {2, 3, 5}) {
    auto const f = Family::taup_plus(p);
    for (auto c : box(Carrier::CPlus, 5)) {
      for (Exp n = 0; n <= 3; ++n) {
        for (auto const& x : nbhd_enumerate(make_basic(f, c, n), 20)) {
          REQUIRE(x.elem().i == c.i);
        }
      }
    }
  }
}

TEST_CASE("separate examples") {
  auto const tp = Family::taup_plus(2);
  auto const v = separate(tp, BE{1, 2}, BE{1, 4}, 8);
  REQUIRE(std::holds_alternative<SeparatedBy>(v));
  CHECK(std::get<SeparatedBy>(v).at_x == make_basic(tp, BE{1, 2}, 2));
  CHECK(std::get<SeparatedBy>(v).at_y == make_basic(tp, BE{1, 4}, 2));
  auto const w = separate(tp, BE{0, 0}, BE{1, 1}, 8);
  REQUIRE(std::holds_alternative<SeparatedBy>(w));
  CHECK(std::get<SeparatedBy>(w).at_x.n == 0);
  CHECK(std::get<SeparatedBy>(w).at_y.n == 0);
  auto const c = separate(Family::tauc(), BE{0, 0}, BE{0, 1}, 10);
  REQUIRE(std::holds_alternative<NotSeparatedWithinBound>(c));
  CHECK(std::get<NotSeparatedWithinBound>(c).bound == 10);
  CHECK_THROWS_AS(separate(tp, BE{1, 2}, BE{1, 2}, 3), std::invalid_argument);
}

TEST_CASE("separating basics are disjoint") {
  for (auto const& f : all_families()) {
    auto const pts = points(f, 4);
    for (auto const& x : pts) {
      for (auto const& y : pts) {
        if (x == y) continue;
        auto const v = separate(f, x, y, 6);
        if (auto const* s = std::get_if<SeparatedBy>(&v)) {
          REQUIRE(s->at_x.center == x);
          REQUIRE(s->at_y.center == y);
          REQUIRE(shapes_disjoint(shape_of(s->at_x), shape_of(s->at_y)));
          REQUIRE(disjoint_on(s->at_x, s->at_y, 50));
        } else {
          // Nothing within the bound separates: every pair of basics meets.
          for (Exp n = 0; n <= 6; ++n) {
            for (Exp m = 0; m <= 6; ++m) {
              REQUIRE_FALSE(shapes_disjoint(shape_of(make_basic(f, x, n)),
                                            shape_of(make_basic(f, y, m))));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("p-adic families are Hausdorff, TAUC never separates") {
  for (auto const& f : {Family::taup_plus(2), Family::taup_minus(3), Family::taup_omega(5)}) {
    auto const pts = points(f, 5);
    for (auto const& x : pts) {
      for (auto const& y : pts) {
        if (x != y) REQUIRE(std::holds_alternative<SeparatedBy>(separate(f, x, y, 1)));
      }
    }
  }
  for (auto const& x : box(Carrier::Full, 3)) {
    for (auto const& y : box(Carrier::Full, 3)) {
      if (x != y) {
        REQUIRE(std::holds_alternative<NotSeparatedWithinBound>(
            separate(Family::tauc(), x, y, 8)));
      }
    }
  }
}

TEST_CASE("TAU2 separates exactly the off-diagonal pairs") {
  auto const f = Family::tau2();
  for (auto const& x : box(Carrier::Full, 4)) {
    for (auto const& y : box(Carrier::Full, 4)) {
      if (x == y) continue;
      bool const codiagonal = x.i - std::min(x.i, x.j) == y.i - std::min(y.i, y.j) &&
                              x.j - std::min(x.i, x.j) == y.j - std::min(y.i, y.j);
      REQUIRE(std::holds_alternative<SeparatedBy>(separate(f, x, y, 8)) == !codiagonal);
    }
  }
  auto const v = separate(f, BE{0, 0}, BE{2, 2}, 8);
  CHECK(std::get<NotSeparatedWithinBound>(v).reason ==
        "co-diagonal points: the diagonal rays meet");
}

TEST_CASE("t1_check") {
  CHECK(t1_check(Family::tau2(), BE{0, 0}, BE{2, 2}));
  CHECK(excluding_param(Family::tau2(), BE{0, 0}, BE{2, 2}) == Exp{2});
  CHECK(t1_check(Family::tauc(), BE{0, 0}, BE{1, 1}));
  CHECK(excluding_param(Family::tauc(), BE{0, 0}, BE{1, 1}) == Exp{1});
  CHECK(excluding_param(Family::tauc(), BE{1, 1}, BE{0, 0}) == Exp{0});
  for (auto const& f : all_families()) {
    auto const pts = points(f, 4);
    for (auto const& x : pts) {
      for (auto const& y : pts) {
        if (x == y) continue;
        REQUIRE(t1_check(f, x, y));
        auto const n = excluding_param(f, x, y);
        REQUIRE(n.has_value());
        REQUIRE_FALSE(nbhd_member(make_basic(f, x, *n), y));
        if (*n > 0) REQUIRE(nbhd_member(make_basic(f, x, *n - 1), y));
      }
    }
  }
  CHECK_THROWS_AS(t1_check(Family::tauc(), BE{1, 1}, BE{1, 1}), std::invalid_argument);
}

TEST_CASE("compactness certificates") {
  auto const s = compactness_certificate(Family::taus(), 20);
  REQUIRE(std::holds_alternative<CompactByCofinite>(s));
  CHECK(std::get<CompactByCofinite>(s).anchor == "0");
  auto const c = compactness_certificate(Family::tauc(), 8);
  REQUIRE(std::holds_alternative<CompactByCofinite>(c));
  CHECK(std::get<CompactByCofinite>(c).anchor == "every point");
  CHECK(std::holds_alternative<CompactByCofinite>(
      compactness_certificate(Family::tauc(Carrier::CPlus), 8)));
  for (auto const& f : {Family::taup_plus(2), Family::tau2(), Family::discrete(Carrier::Full)}) {
    CHECK(std::holds_alternative<NoCertificate>(compactness_certificate(f, 8)));
  }
}

TEST_CASE("dualize_base") {
  auto const tp = Family::taup_plus(2);
  auto const d = dualize_base(make_basic(tp, BE{1, 3}, 2));
  CHECK(d == make_basic(Family::taup_minus(2), BE{3, 1}, 2));
  CHECK(dualize_base(make_basic(tp, BE{0, 0}, 1)).center == ExtElem(BE{0, 0}));
  CHECK(nbhd_member(make_basic(tp, BE{1, 3}, 2), BE{1, 7}));
  CHECK(nbhd_member(d, BE{7, 1}));
  CHECK_THROWS_AS(dualize_base(make_basic(Family::tauc(), BE{0, 0}, 1)),
                  std::invalid_argument);
  for (Exp p : {2, 3}) {
    for (auto c : box(Carrier::CPlus, 4)) {
      for (Exp n = 0; n <= 3; ++n) {
        auto const b = make_basic(Family::taup_plus(p), c, n);
        auto const db = dualize_base(b);
        for (auto x : box(Carrier::CPlus, 12)) {
          REQUIRE(nbhd_member(b, x) == nbhd_member(db, alpha(x)));
        }
      }
    }
  }
}

TEST_CASE("shapes describe their basics") {
  for (auto const& f : all_families()) {
    for (auto const& c : points(f, 3)) {
      for (Exp n = 0; n <= 2; ++n) {
        auto const b = make_basic(f, c, n);
        auto const sh = shape_of(b);
        for (auto const& x : points(f, 12)) REQUIRE(sh.contains(x) == nbhd_member(b, x));
      }
    }
  }
}
