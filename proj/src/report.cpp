#include "bicyclic/report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <sstream>

#include "bicyclic/continuity.hpp"
#include "bicyclic/division.hpp"
#include "bicyclic/green.hpp"
#include "bicyclic/ideals.hpp"
#include "bicyclic/serialize.hpp"
#include "bicyclic/topology.hpp"

namespace bicyclic {

using nlohmann::json;

namespace {

struct Anchor {
  std::string_view section;
  std::string_view quote;
};

constexpr Anchor kProp3{"Prop. 3", "are submonoids of 𝒞(a,b)"};
constexpr Anchor kSZero{"τ_S example", "the monoid 𝒞₊(a,b) with the adjoined zero"};
constexpr Anchor kProp4{"Prop. 4", "are anti-isomorphic"};
constexpr Anchor kAlpha{"Prop. 4", "by the formula α(b^ia^j)=b^ja^i"};
constexpr Anchor kGreen{"§2 proposition", "coincide with the equality relation"};
constexpr Anchor kEq29{"Eq. (2.9)", "𝒞₊(a,b)·b^ia^i = {b^sa^t∈𝒞₊(a,b): t⩾i}"};
constexpr Anchor kLemma10{"Lemma 10",
                          "both sets {u∈𝒞₊(a,b): vu=w} and {u∈𝒞₊(a,b): uv=w} are finite"};
constexpr Anchor kThm6{"Theorem 6", "has a finite open neighbourhood"};
constexpr Anchor kEq210{"Eq. (2.10)", "U_p(0)·U_p(0)⊆U_p(0) and b^ka^l·U_p(0)⊆U_p(0)"};
constexpr Anchor kTausCompact{"τ_S example", "the space (S,τ_S) is compact"};
constexpr Anchor kTau2{"Example 8", "locally compact semigroup T₁-topology"};
constexpr Anchor kTauc{"Example 9", "shift-continuous compact T₁-topology"};
constexpr Anchor kProp15Right{"Prop. 15", "is a right topological semigroup"};
constexpr Anchor kProp15Left{"Prop. 15", "is not a left topological semigroup"};
constexpr Anchor kIota{"§3", "the map ι_k is a monoid homomorphism"};
constexpr Anchor kHausdorff{"§3", "by Hausdorffness of (ω,τ_p^i)"};
constexpr Anchor kRemark16{"Remark 16", "the semigroup operation is not right-continuous"};
constexpr Anchor kProp17{"Prop. 17",
                         "admits a non-discrete left-continuous topology τ_p⁻"};

ClaimReport start(std::string id, Anchor a, std::string prediction) {
  ClaimReport r;
  r.claim = std::move(id);
  r.section = a.section;
  r.quote = a.quote;
  r.prediction = std::move(prediction);
  return r;
}

void conclude(ClaimReport& r, bool ok, std::string verdict) {
  r.matches_prediction = ok;
  r.verdict = std::move(verdict);
}

std::string count(std::size_t n) { return std::to_string(n); }

using Group = std::vector<ClaimReport> (*)(RunConfig const&);

// Submonoids ------------------------------------------------------------------

ClaimReport closure_claim(Carrier c, Exp bound) {
  auto const name = std::string(carrier_name(c));
  auto r = start("prop3.closure-" + std::string(c == Carrier::CPlus ? "cplus" : "cminus"),
                 kProp3, "every product of " + name + " elements stays in " + name);
  auto const elems = box(c, bound);
  std::size_t checked = 0;
  json bad = json::array();
  for (auto const& x : elems) {
    for (auto const& y : elems) {
      ++checked;
      try {
        mul_closed(x, y, c);
      } catch (std::logic_error const&) {
        if (bad.size() < 5) bad.push_back({x, y, mul(x, y)});
      }
    }
  }
  r.bounds = {{"elem_bound", bound}};
  r.witnesses = bad.empty() ? json::array({json::array({elems.back(), elems.back(),
                                                        mul(elems.back(), elems.back())})})
                            : bad;
  conclude(r, bad.empty(),
           bad.empty() ? "closed: " + count(checked) + " products stay in " + name
                       : "NOT closed: " + count(bad.size()) + "+ products escape");
  return r;
}

std::vector<ClaimReport> group_prop3(RunConfig const& cfg) {
  std::vector<ClaimReport> out;
  out.push_back(closure_claim(Carrier::CPlus, cfg.elem_bound));
  out.push_back(closure_claim(Carrier::CMinus, cfg.elem_bound));

  auto r = start("prop3.s-zero-monoid", kSZero,
                 "S is a monoid with absorbing zero: associative, identity 1");
  auto const elems = box_ext(Carrier::SZero, cfg.elem_bound);
  std::size_t checked = 0;
  json bad = json::array();
  for (auto const& x : elems) {
    if (mul_s(x, kIdentity) != x || mul_s(kIdentity, x) != x ||
        mul_s(x, ExtElem::zero()) != ExtElem::zero()) {
      bad.push_back({x});
    }
    for (auto const& y : elems) {
      auto const xy = mul_s(x, y);
      for (auto const& z : elems) {
        ++checked;
        if (mul_s(xy, z) != mul_s(x, mul_s(y, z)) && bad.size() < 5) {
          bad.push_back({x, y, z});
        }
      }
    }
  }
  r.bounds = {{"elem_bound", cfg.elem_bound}};
  r.witnesses = bad;
  conclude(r, bad.empty(),
           bad.empty() ? "monoid laws hold on " + count(checked) + " triples"
                       : "monoid laws fail");
  out.push_back(std::move(r));
  return out;
}

// Anti-isomorphism ------------------------------------------------------------

std::vector<ClaimReport> group_prop4(RunConfig const& cfg) {
  std::vector<ClaimReport> out;
  auto const full = box(Carrier::Full, cfg.elem_bound);

  auto r = start("prop4.anti-homomorphism", kProp4,
                 "alpha(xy) = alpha(y) alpha(x) for all pairs");
  std::size_t checked = 0;
  json bad = json::array();
  for (auto const& x : full) {
    for (auto const& y : full) {
      ++checked;
      if (alpha(mul(x, y)) != mul(alpha(y), alpha(x)) && bad.size() < 5) {
        bad.push_back({x, y});
      }
    }
  }
  r.bounds = {{"elem_bound", cfg.elem_bound}};
  BicyclicElem const x{1, 2}, y{1, 3};
  r.witnesses = bad.empty()
                    ? json::array({{{"x", x}, {"y", y}, {"alpha(xy)", alpha(mul(x, y))},
                                    {"alpha(y)alpha(x)", mul(alpha(y), alpha(x))}}})
                    : bad;
  conclude(r, bad.empty(),
           bad.empty() ? "anti-homomorphism on " + count(checked) + " pairs"
                       : "anti-homomorphism fails");
  out.push_back(std::move(r));

  auto f = start("prop4.alpha-bijection", kAlpha,
                 "alpha is an involution mapping CPLUS onto CMINUS; basics dualize");
  bool ok = true;
  for (auto const& e : full) {
    ok = ok && alpha(alpha(e)) == e;
  }
  std::vector<BicyclicElem> image;
  for (auto const& e : box(Carrier::CPlus, cfg.elem_bound)) {
    image.push_back(alpha(e));
  }
  std::sort(image.begin(), image.end());
  bool const onto = image == box(Carrier::CMinus, cfg.elem_bound);
  std::size_t commuted = 0;
  auto const fam = Family::taup_plus(cfg.prime);
  for (auto const& c : box(Carrier::CPlus, std::min<Exp>(cfg.elem_bound, 4))) {
    for (Exp n = 0; n <= 2; ++n) {
      auto const b = make_basic(fam, c, n);
      auto const d = dualize_base(b);
      for (auto const& e : box(Carrier::CPlus, cfg.elem_bound)) {
        ++commuted;
        ok = ok && nbhd_member(b, e) == nbhd_member(d, alpha(e));
      }
    }
  }
  f.bounds = {{"elem_bound", cfg.elem_bound}, {"prime", cfg.prime}};
  f.witnesses = json::array(
      {{{"alpha", json::array({BicyclicElem{1, 3}, alpha(BicyclicElem{1, 3})})}},
       {{"dualize_base", dualize_base(make_basic(fam, BicyclicElem{1, 3}, 2))}}});
  conclude(f, ok && onto,
           ok && onto ? "involution, bijective CPLUS -> CMINUS, " + count(commuted) +
                            " membership commutations"
                      : "alpha fails to be a bijective involution");
  out.push_back(std::move(f));
  return out;
}

// Green's relations -----------------------------------------------------------

ClaimReport green_claim(Carrier c, RunConfig const& cfg) {
  auto const name = std::string(c == Carrier::CPlus ? "cplus" : "cminus");
  auto r = start("green.trivial-" + name, kGreen,
                 "every Green class is a singleton; D = L o R = R o L");
  json classes = json::object();
  bool ok = true;
  for (auto rel : kAllRelations) {
    auto const cls = green_classes(rel, c, cfg.elem_bound, cfg.witness_bound);
    std::size_t nontrivial = 0;
    for (auto const& k : cls) {
      if (k.size() != 1) ++nontrivial;
    }
    ok = ok && nontrivial == 0;
    classes[std::string(relation_name(rel))] = {{"classes", cls.size()},
                                                {"non_singleton", nontrivial}};
  }
  auto const elems = box(c, cfg.elem_bound);
  bool agree = true;
  bool reflexive = true;
  for (auto const& u : elems) {
    for (auto rel : kAllRelations) {
      reflexive = reflexive && green_related(rel, u, u, c, cfg.witness_bound).related();
    }
    for (auto const& v : elems) {
      agree = agree &&
              green_related(GreenRelation::D, u, v, c, cfg.witness_bound).compositions_agree;
    }
  }
  r.bounds = {{"elem_bound", cfg.elem_bound}, {"witness_bound", cfg.witness_bound}};
  r.witnesses = json::array({classes});
  if (elems.size() > 1) {
    auto const v = green_related(GreenRelation::R, elems[0], elems[1], c, cfg.witness_bound);
    r.witnesses.push_back({{"relation", "R"},
                           {"u", elems[0]},
                           {"v", elems[1]},
                           {"related", v.related()},
                           {"exact", v.exact}});
  }
  bool const all = ok && agree && reflexive;
  conclude(r, all,
           all ? "all classes singletons over " + count(elems.size()) +
                     " elements (R, L, H exact; J, D up to witness bound)"
               : "non-trivial class or failed composition check");
  return r;
}

std::vector<ClaimReport> group_green(RunConfig const& cfg) {
  return {green_claim(Carrier::CPlus, cfg), green_claim(Carrier::CMinus, cfg)};
}

// Principal ideals --------------------------------------------------------------

std::vector<ClaimReport> group_eq29(RunConfig const& cfg) {
  auto r = start("eq29.right-ideal", kEq29,
                 "CPLUS * (i,i) is exactly { (s,t) : t >= i } at every truncation");
  Exp const trunc = cfg.elem_bound;
  bool ok = true;
  json sizes = json::array();
  for (Exp i = 0; i <= trunc; ++i) {
    std::set<BicyclicElem> products;
    for (auto const& x : box(Carrier::CPlus, trunc + i)) {
      auto const w = mul(x, BicyclicElem{i, i});
      if (w.i <= trunc && w.j <= trunc) products.insert(w);
    }
    auto const ideal = right_ideal(i, Carrier::CPlus, trunc);
    ok = ok && std::vector<BicyclicElem>(products.begin(), products.end()) == ideal;
    sizes.push_back({i, ideal.size()});
  }
  r.bounds = {{"trunc", trunc}};
  r.witnesses = {{{"i_and_size", sizes}}};
  conclude(r, ok, ok ? "truncated ideals equal product sets for i <= " + count(trunc)
                     : "ideal differs from product set");
  return {r};
}

// Division ------------------------------------------------------------------

std::vector<ClaimReport> group_lemma10(RunConfig const& cfg) {
  auto r = start("lemma10.division-finite", kLemma10,
                 "both division sets are finite and given by the closed form");
  bool ok = true;
  std::size_t pairs = 0, largest = 0;
  for (Carrier c : {Carrier::CPlus, Carrier::CMinus}) {
    auto const elems = box(c, cfg.elem_bound);
    for (auto const& v : elems) {
      for (auto const& w : elems) {
        ++pairs;
        auto const right = solve_right_div(v, w, c);
        auto const left = solve_left_div(v, w, c);
        largest = std::max({largest, right.size(), left.size()});
        // Exhaustive search; in CPLUS and CMINUS every solution has
        // exponents <= max(v, w).
        Exp const reach = std::max({v.i, v.j, w.i, w.j}) + 5;
        std::vector<BicyclicElem> rs, ls;
        for (auto const& u : box(c, reach)) {
          if (mul(v, u) == w) rs.push_back(u);
          if (mul(u, v) == w) ls.push_back(u);
        }
        ok = ok && rs == right && ls == left;
      }
    }
  }
  BicyclicElem const v{1, 2}, w{1, 3};
  r.bounds = {{"elem_bound", cfg.elem_bound}, {"search", "max exponent + 5"}};
  r.witnesses = json::array({{{"v", v},
                              {"w", w},
                              {"right", solve_right_div(v, w, Carrier::CPlus)},
                              {"left", solve_left_div(v, w, Carrier::CPlus)}}});
  conclude(r, ok,
           ok ? "closed form equals search on " + count(pairs) +
                    " pairs; largest set " + count(largest)
              : "closed form disagrees with search");
  return {r};
}

// Discreteness forcing ------------------------------------------------------

std::vector<ClaimReport> group_thm6(RunConfig const& cfg) {
  auto r = start("thm6.finite-neighbourhood", kThm6,
                 "each x has the finite neighbourhood {t <= x.j}, complement of a retract");
  bool ok = true;
  std::size_t points = 0;
  json samples = json::array();
  for (auto const& x : box(Carrier::CPlus, cfg.elem_bound)) {
    auto const rep = theorem6_forcing(x, cfg.elem_bound);
    ++points;
    ok = ok && rep.ok();
    if (x == BicyclicElem{0, 0} || x == BicyclicElem{1, 3} || !rep.ok()) {
      samples.push_back({{"x", x},
                         {"nbhd_size", rep.nbhd.size()},
                         {"retractions", rep.retractions_idempotent},
                         {"image_is_ideal", rep.image_is_ideal},
                         {"complement", rep.nbhd_is_complement}});
    }
  }
  r.bounds = {{"elem_bound", cfg.elem_bound}};
  r.witnesses = samples;
  conclude(r, ok,
           ok ? "finite open neighbourhood of size (j+1)(j+2)/2 at " + count(points) +
                    " points; Hausdorff left-continuous topologies are then discrete"
              : "forcing skeleton failed");
  return {r};
}

// S = CPLUS + {0} -------------------------------------------------------------

std::vector<ClaimReport> group_taus(RunConfig const& cfg) {
  std::vector<ClaimReport> out;
  auto r = start("taus.eq210-inclusions", kEq210,
                 "(a)-(c) inclusions hold and multiplication is jointly continuous");
  auto const rep = verify_taus_monoid(cfg.param_bound, cfg.elem_bound);
  r.bounds = {{"index_bound", cfg.param_bound}, {"elem_bound", cfg.elem_bound}};
  json guard = json::array();
  for (auto const& [n, i] : rep.guard_not_necessary) {
    if (guard.size() < 10) guard.push_back({n, i});
  }
  json joint = json::array();
  for (auto const& j : rep.joint_table) {
    if (j.n == cfg.param_bound && joint.size() < 6) {
      joint.push_back({{"x", j.x}, {"y", j.y}, {"n", j.n}, {"a", j.a}, {"b", j.b}});
    }
  }
  r.witnesses = json::array({{{"checked", {rep.checked_a, rep.checked_b, rep.checked_c,
                                           rep.checked_d}}},
                             {{"guard_not_necessary", guard},
                              {"guard_not_necessary_count", rep.guard_not_necessary.size()}},
                             {{"joint", joint}},
                             {{"failures", rep.failures.size()}}});
  conclude(r, rep.ok(),
           rep.ok() ? "inclusions (a)-(c) and joint continuity hold; guard n >= i never "
                      "needed in " + count(rep.guard_not_necessary.size()) + " cases"
                    : "failure: " + rep.failures.front());
  out.push_back(std::move(r));

  auto c = start("taus.compact", kTausCompact,
                 "CompactByCofinite with |S \\ U_n(0)| = n(n+1)/2");
  auto const fam = Family::taus();
  auto const cert = compactness_certificate(fam, cfg.elem_bound);
  bool ok = std::holds_alternative<CompactByCofinite>(cert);
  for (Exp n = 0; n <= cfg.elem_bound; ++n) {
    auto const v = nbhd_is_cofinite(make_basic(fam, ExtElem::zero(), n));
    auto const* cof = std::get_if<Cofinite>(&v);
    ok = ok && cof && cof->complement.size() == n * (n + 1) / 2;
  }
  auto const iso = nbhd_is_cofinite(make_basic(fam, BicyclicElem{1, 2}, 0));
  ok = ok && std::holds_alternative<NotCofinite>(iso);
  c.bounds = {{"trunc", cfg.elem_bound}};
  c.witnesses = json::array({cert, nbhd_is_cofinite(make_basic(fam, ExtElem::zero(), 3))});
  conclude(c, ok, ok ? "CompactByCofinite(anchor 0)" : "no compactness certificate");
  out.push_back(std::move(c));
  return out;
}

// Diagonal topology ---------------------------------------------------------

std::vector<ClaimReport> group_tau2(RunConfig const& cfg) {
  std::vector<ClaimReport> out;
  auto r = start("tau2.t1", kTau2,
                 "T1 on every distinct pair; co-diagonal pairs are not separated");
  auto const fam = Family::tau2(Carrier::Full);
  auto const elems = box(Carrier::Full, cfg.elem_bound);
  bool t1 = true;
  std::size_t pairs = 0;
  for (auto const& x : elems) {
    for (auto const& y : elems) {
      if (x != y) {
        ++pairs;
        t1 = t1 && t1_check(fam, x, y);
      }
    }
  }
  bool chains = true;
  for (auto const& x : box(Carrier::Full, std::min<Exp>(cfg.elem_bound, 4))) {
    for (Exp n = 0; n < cfg.param_bound; ++n) {
      chains = chains && is_subset(nbhd_subset(make_basic(fam, x, n + 1),
                                               make_basic(fam, x, n)));
    }
  }
  auto const codiag = separate(fam, BicyclicElem{0, 0}, BicyclicElem{2, 2}, cfg.param_bound);
  auto const offdiag = separate(fam, BicyclicElem{0, 0}, BicyclicElem{0, 1}, cfg.param_bound);
  bool const pattern = std::holds_alternative<NotSeparatedWithinBound>(codiag) &&
                       std::holds_alternative<SeparatedBy>(offdiag);
  r.bounds = {{"elem_bound", cfg.elem_bound}, {"param_bound", cfg.param_bound}};
  r.witnesses = json::array({codiag, offdiag});
  bool const ok = t1 && chains && pattern;
  conclude(r, ok,
           ok ? "T1 on " + count(pairs) + " pairs; chains decrease; (0,0),(2,2) not "
                "separated within bound"
              : "T1 or chain check failed");
  out.push_back(std::move(r));

  auto j = start("tau2.joint-continuity", kTau2,
                 "multiplication is jointly continuous (certified up to bound)");
  auto const rep = verify_tau2_semigroup(cfg.elem_bound, cfg.param_bound);
  j.bounds = {{"elem_bound", rep.elem_bound},
              {"param_bound", rep.param_bound},
              {"search_bound", rep.search_bound},
              {"depth", rep.depth}};
  json table = json::array();
  Exp max_param = 0;
  for (auto const& e : rep.table) {
    max_param = std::max({max_param, e.a, e.b});
    bool const show = (e.x == BicyclicElem{0, 0} && e.y == BicyclicElem{0, 0} && e.n == 2) ||
                      (e.x == BicyclicElem{0, 1} && e.y == BicyclicElem{1, 1} && e.n == 1);
    if (show) {
      table.push_back({{"carrier", carrier_name(e.carrier)},
                       {"x", e.x},
                       {"y", e.y},
                       {"n", e.n},
                       {"a", e.a},
                       {"b", e.b}});
    }
  }
  j.witnesses = json::array({{{"table_sample", table},
                              {"entries", rep.table.size()},
                              {"max_parameter", max_param},
                              {"inconclusive", rep.inconclusive.size()}}});
  conclude(j, rep.ok(),
           rep.ok() ? "ContinuousUpToBound: " + count(rep.table.size()) +
                          " (x, y, n) entries, parameters <= " + std::to_string(max_param)
                    : "failures or inconclusive entries");
  out.push_back(std::move(j));

  auto s = start("tau2.inside-tauc", kTau2, "O_1(1) is inside W_0(1)");
  auto const v = nbhd_subset(make_basic(fam, kIdentity, 1),
                             make_basic(Family::tauc(Carrier::Full), kIdentity, 0));
  conclude(s, is_subset(v), is_subset(v) ? "Subset" : "NotSubset");
  s.witnesses = json::array({"TAU2[1, n=1]", "TAUC[1, n=0]"});
  out.push_back(std::move(s));
  return out;
}

// Cofinite topology ---------------------------------------------------------

std::vector<ClaimReport> group_tauc(RunConfig const& cfg) {
  std::vector<ClaimReport> out;
  auto const fam = Family::tauc(Carrier::Full);

  auto t = start("tauc.t1", kTauc, "T1 on every distinct pair");
  auto const elems = box(Carrier::Full, cfg.elem_bound);
  bool t1 = true;
  std::size_t pairs = 0;
  for (auto const& x : elems) {
    for (auto const& y : elems) {
      if (x != y) {
        ++pairs;
        t1 = t1 && t1_check(fam, x, y);
      }
    }
  }
  t.bounds = {{"elem_bound", cfg.elem_bound}};
  t.witnesses = json::array({{{"x", BicyclicElem{0, 0}},
                              {"y", BicyclicElem{1, 1}},
                              {"excluding_at_x", *excluding_param(fam, kIdentity, BicyclicElem{1, 1})},
                              {"excluding_at_y", *excluding_param(fam, BicyclicElem{1, 1}, kIdentity)}}});
  conclude(t, t1, t1 ? "T1 on " + count(pairs) + " pairs" : "T1 fails");
  out.push_back(std::move(t));

  auto h = start("tauc.not-hausdorff", kTauc,
                 "no pair is separated: cofinite basics always meet");
  auto const small = box(Carrier::Full, std::min<Exp>(cfg.elem_bound, 4));
  bool none = true;
  std::size_t tried = 0;
  for (auto const& x : small) {
    for (auto const& y : small) {
      if (x < y) {
        ++tried;
        none = none && std::holds_alternative<NotSeparatedWithinBound>(
                           separate(fam, x, y, cfg.param_bound));
      }
    }
  }
  h.bounds = {{"elem_bound", std::min<Exp>(cfg.elem_bound, 4)},
              {"param_bound", cfg.param_bound}};
  h.witnesses = json::array(
      {separate(fam, BicyclicElem{0, 0}, BicyclicElem{0, 1}, cfg.param_bound)});
  conclude(h, none,
           none ? "NotSeparatedWithinBound on all " + count(tried) + " pairs"
                : "some pair separated");
  out.push_back(std::move(h));

  auto s = start("tauc.shift-continuity", kTauc,
                 "both shifts continuous (certified up to bound), none inconclusive");
  auto const rep = verify_tauc_shift_continuity(cfg.elem_bound, cfg.param_bound);
  s.bounds = {{"elem_bound", cfg.elem_bound}, {"param_bound", cfg.param_bound}};
  json samples = json::array();
  for (auto const& [spec, v] : rep.samples) {
    samples.push_back({{"spec", spec}, {"verdict", v}});
  }
  s.witnesses = json::array({{{"checks", rep.checks},
                              {"continuous", rep.continuous},
                              {"inconclusive", rep.inconclusive.size()},
                              {"max_m", rep.max_m}},
                             {{"samples", samples}}});
  conclude(s, rep.ok(),
           rep.ok() ? "ContinuousUpToBound for all " + count(rep.checks) + " shifts"
                    : count(rep.failures.size()) + " failures, " +
                          count(rep.inconclusive.size()) + " inconclusive");
  out.push_back(std::move(s));

  auto c = start("tauc.compact", kTauc, "CompactByCofinite at every point");
  auto const cert = compactness_certificate(fam, std::min<Exp>(cfg.elem_bound, 8));
  auto const cof = nbhd_is_cofinite(make_basic(fam, kIdentity, 2));
  bool const ok = std::holds_alternative<CompactByCofinite>(cert) &&
                  std::holds_alternative<Cofinite>(cof);
  c.bounds = {{"trunc", std::min<Exp>(cfg.elem_bound, 8)}};
  c.witnesses = json::array({cert, cof});
  conclude(c, ok, ok ? "CompactByCofinite(every point)" : "no certificate");
  out.push_back(std::move(c));
  return out;
}

// p-adic row topology -----------------------------------------------------------

bool image_law_holds(ShiftSpec const& spec, Exp param_bound) {
  constexpr std::size_t depth = 50;
  for (Exp n = 0; n <= param_bound; ++n) {
    auto const b = make_basic(spec.family, spec.point, n);
    auto const img = shift_image_taup(spec.s.elem(), b);
    auto const src = nbhd_enumerate(b, depth);
    auto const dst = nbhd_enumerate(img, depth);
    for (std::size_t k = 0; k < depth; ++k) {
      if (apply_shift(spec, src[k]) != dst[k]) return false;
    }
  }
  return true;
}

std::vector<ClaimReport> group_prop15(RunConfig const& cfg) {
  std::vector<ClaimReport> out;
  Exp const p = cfg.prime;
  auto const fam = Family::taup_plus(p);
  auto const suite = prop15_suite(p, cfg.elem_bound, cfg.param_bound);

  auto r = start("prop15.right-topological", kProp15Right,
                 "every left shift is ContinuousExact; images are translated basics");
  std::size_t lefts = 0, exact = 0, law = 0, sound = 0;
  std::size_t rights = 0, right_cont = 0, right_disc = 0;
  for (auto const& e : suite.entries) {
    if (revalidate(e.spec, e.verdict, 20)) ++sound;
    if (e.spec.side == Side::Left) {
      ++lefts;
      if (std::holds_alternative<ContinuousExact>(e.verdict)) ++exact;
      if (image_law_holds(e.spec, cfg.param_bound)) ++law;
    } else {
      ++rights;
      if (is_continuous(e.verdict)) ++right_cont;
      if (std::holds_alternative<Discontinuous>(e.verdict)) ++right_disc;
    }
  }
  bool const ok = exact == lefts && law == lefts && sound == suite.entries.size();
  r.bounds = {{"prime", p}, {"elem_bound", cfg.elem_bound}, {"param_bound", cfg.param_bound},
              {"image_depth", 50}};
  auto const ex = make_basic(fam, BicyclicElem{2, 2}, 1);
  r.witnesses = json::array(
      {{{"left_shifts", lefts}, {"exact", exact}, {"image_law", law},
        {"revalidated", sound}},
       {{"s", BicyclicElem{0, 1}}, {"basic", ex},
        {"image", shift_image_taup(BicyclicElem{0, 1}, ex)}}});
  conclude(r, ok,
           ok ? "ContinuousExact for all " + count(lefts) +
                    " left shifts; image law at depth 50"
              : "left shift not exact in " + count(lefts - exact) + " cases");
  out.push_back(std::move(r));

  auto d = start("prop15.not-left-topological", kProp15Left,
                 "right shift by ba at 1 is Discontinuous with u_m = a^(p^m)");
  ShiftSpec const spec{Side::Right, BicyclicElem{1, 1}, fam, kIdentity};
  auto const v = check_shift_continuity(spec, cfg.param_bound);
  bool pattern = false;
  if (auto const* dv = std::get_if<Discontinuous>(&v)) {
    pattern = revalidate(spec, v, 1);
    for (auto const& e : dv->escapes) {
      pattern = pattern && e.u == ExtElem(BicyclicElem{0, prime_power(p, e.m)});
    }
  }
  d.bounds = {{"prime", p}, {"param_bound", cfg.param_bound}};
  d.witnesses = json::array({v, {{"right_shifts", rights},
                                 {"continuous", right_cont},
                                 {"discontinuous", right_disc}}});
  conclude(d, pattern,
           pattern ? "Discontinuous: (0,p^m)*(1,1) = (0,p^m) leaves every basic at (1,1)"
                   : std::string(verdict_kind(v)));
  out.push_back(std::move(d));

  auto i = start("prop15.iota-isomorphism", kIota,
                 "iota_k is a homomorphism onto R_k and carries U_n(s) to W_n");
  bool hom = true;
  Exp const b = cfg.elem_bound;
  for (Exp k = 0; k <= b; ++k) {
    for (Exp s1 = 0; s1 <= b; ++s1) {
      hom = hom && iota_inv(k, iota(k, s1)) == s1;
      for (Exp s2 = 0; s2 <= b; ++s2) {
        hom = hom && mul(iota(k, s1), iota(k, s2)) == iota(k, s1 + s2);
      }
    }
  }
  auto const omega = Family::taup_omega(p);
  for (Exp k = 0; k <= std::min<Exp>(b, 3); ++k) {
    for (Exp s = 0; s <= b; ++s) {
      for (Exp n = 0; n <= 2; ++n) {
        auto const u = make_basic(omega, BicyclicElem{0, s}, n);
        auto const w = make_basic(fam, iota(k, s), n);
        for (Exp t = 0; t <= 2 * b; ++t) {
          hom = hom && nbhd_member(u, BicyclicElem{0, t}) == nbhd_member(w, iota(k, t));
        }
      }
    }
  }
  i.bounds = {{"elem_bound", b}, {"prime", p}};
  i.witnesses = json::array({{{"iota(2,3)", iota(2, 3)},
                              {"iota(1,2)*iota(1,3)", mul(iota(1, 2), iota(1, 3))}}});
  conclude(i, hom, hom ? "homomorphism and basic transport hold" : "iota fails");
  out.push_back(std::move(i));

  auto h = start("prop15.hausdorff", kHausdorff,
                 "distinct points have disjoint basics; chains decrease");
  auto const pts = box(Carrier::CPlus, std::min<Exp>(b, 6));
  bool sep = true;
  std::size_t tried = 0;
  for (auto const& x : pts) {
    for (auto const& y : pts) {
      if (x == y) continue;
      ++tried;
      auto const v2 = separate(fam, x, y, cfg.param_bound);
      auto const* by = std::get_if<SeparatedBy>(&v2);
      if (!by) {
        sep = false;
        continue;
      }
      auto const ex2 = nbhd_enumerate(by->at_x, 50);
      auto const ey = nbhd_enumerate(by->at_y, 50);
      for (auto const& q : ex2) {
        sep = sep && std::find(ey.begin(), ey.end(), q) == ey.end();
      }
    }
    for (Exp n = 0; n < cfg.param_bound; ++n) {
      sep = sep && is_subset(nbhd_subset(make_basic(fam, x, n + 1), make_basic(fam, x, n)));
    }
  }
  h.bounds = {{"elem_bound", std::min<Exp>(b, 6)}, {"prime", p}, {"depth", 50}};
  h.witnesses = json::array({separate(fam, BicyclicElem{1, 2}, BicyclicElem{1, 4},
                                      cfg.param_bound)});
  conclude(h, sep, sep ? "SeparatedBy on all " + count(tried) + " pairs" : "separation fails");
  out.push_back(std::move(h));
  return out;
}

// Right shifts at row pairs ---------------------------------------------------

constexpr Exp kRemarkReach = 6;

std::vector<ClaimReport> group_remark16(RunConfig const& cfg) {
  std::vector<ClaimReport> out;
  std::size_t tuples = 0, disc = 0, tension = 0, left_cont = 0;
  std::size_t boundary = 0, boundary_cont = 0;
  json counter = json::array();
  for (Exp k2 = 0; k2 <= kRemarkReach; ++k2) {
    for (Exp k1 = 0; k1 <= k2; ++k1) {
      for (Exp s1 = 0; k1 + s1 <= k2; ++s1) {
        for (Exp s2 = 0; s2 <= kRemarkReach; ++s2) {
          auto const o = remark16_sweep(cfg.prime, k1, s1, k2, s2, cfg.param_bound);
          ++tuples;
          if (std::holds_alternative<Discontinuous>(o.right_shift)) ++disc;
          if (is_continuous(o.left_shift)) ++left_cont;
          if (o.terminology_tension) ++tension;
          if (k1 + s1 == k2) {
            ++boundary;
            if (is_continuous(o.right_shift)) ++boundary_cont;
          }
          if (!std::holds_alternative<Discontinuous>(o.right_shift) && counter.size() < 5) {
            counter.push_back({{"k1", k1}, {"s1", s1}, {"k2", k2}, {"s2", s2},
                               {"right_shift", o.right_shift}});
          }
        }
      }
    }
  }
  auto r = start("remark16.right-shift", kRemark16,
                 "right shift by y is Discontinuous at x for every k1+s1 <= k2");
  r.bounds = {{"prime", cfg.prime}, {"k2_max", kRemarkReach}, {"s2_max", kRemarkReach},
              {"param_bound", cfg.param_bound}};
  r.witnesses = json::array({{{"tuples", tuples},
                              {"discontinuous", disc},
                              {"boundary_tuples", boundary},
                              {"boundary_continuous", boundary_cont}},
                             {{"counterexamples", counter}}});
  conclude(r, disc == tuples,
           disc == tuples
               ? "Discontinuous at all " + count(tuples) + " tuples"
               : "Discontinuous at " + count(disc) + " of " + count(tuples) +
                     " tuples; continuous at " + count(boundary_cont) +
                     " boundary tuples k1+s1 = k2 (image of W_m is W_m(xy))");
  auto t = start("remark16.terminology", kRemark16,
                 "tension flagged: continuity in the right variable never fails");
  t.bounds = r.bounds;
  out.push_back(std::move(r));
  t.witnesses = json::array({{{"tuples", tuples},
                              {"left_shift_continuous", left_cont},
                              {"flagged", tension}}});
  bool const ok = left_cont == tuples;
  conclude(t, ok,
           ok ? "flagged at all " + count(tension) +
                    " tuples: left shifts (right variable) are continuous; the failure is "
                    "in the left variable"
              : "a left shift failed, contradicting the right-topological claim");
  out.push_back(std::move(t));
  return out;
}

// Dual topology ----------------------------------------------------------------

std::vector<ClaimReport> group_prop17(RunConfig const& cfg) {
  auto r = start("prop17.duality", kProp17,
                 "dualized suite matches direct CMINUS computation; left shifts fail");
  auto const suite = prop15_suite(cfg.prime, cfg.elem_bound, cfg.param_bound);
  auto const dual = dual_report(suite, 25);
  std::size_t right_exact = 0, rights = 0, left_disc = 0;
  for (auto const& e : dual.dual.entries) {
    if (e.spec.side == Side::Right) {
      ++rights;
      if (std::holds_alternative<ContinuousExact>(e.verdict)) ++right_exact;
    } else if (std::holds_alternative<Discontinuous>(e.verdict)) {
      ++left_disc;
    }
  }
  ShiftSpec const spec{Side::Left, BicyclicElem{1, 1}, Family::taup_minus(cfg.prime),
                       kIdentity};
  auto const v = check_shift_continuity(spec, std::min<Exp>(cfg.param_bound, 3));
  bool const ok = dual.mismatches.empty() && right_exact == rights && left_disc > 0 &&
                  std::holds_alternative<Discontinuous>(v);
  r.bounds = {{"prime", cfg.prime}, {"elem_bound", cfg.elem_bound},
              {"param_bound", cfg.param_bound}, {"samples", dual.sampled.size()}};
  r.witnesses = json::array({{{"sampled", dual.sampled}, {"mismatches", dual.mismatches}},
                             {{"right_exact", right_exact}, {"left_discontinuous", left_disc}},
                             v});
  conclude(r, ok,
           ok ? "dual verdicts reproduced on " + count(dual.sampled.size()) +
                    " samples; right shifts exact, left shift by ab at 1 Discontinuous"
              : count(dual.mismatches.size()) + " mismatches");
  return {r};
}

struct GroupInfo {
  std::string_view name;
  Group run;
  std::vector<std::string_view> ops;
};

std::vector<GroupInfo> const& registry() {
  static std::vector<GroupInfo> const groups{
      {"prop3", group_prop3, {"mul", "in_carrier", "mul_closed", "mul_s"}},
      {"prop4", group_prop4, {"alpha", "mul", "dualize_base", "nbhd_member"}},
      {"green", group_green,
       {"green_related", "green_classes", "solve_right_div", "solve_left_div"}},
      {"eq29", group_eq29, {"right_ideal", "mul"}},
      {"lemma10", group_lemma10, {"solve_right_div", "solve_left_div", "mul"}},
      {"thm6", group_thm6, {"theorem6_forcing", "finite_open_nbhd", "right_ideal"}},
      {"taus", group_taus,
       {"verify_taus_monoid", "compactness_certificate", "nbhd_is_cofinite",
        "check_shift_continuity", "nbhd_member", "mul_s"}},
      {"tau2", group_tau2,
       {"verify_tau2_semigroup", "t1_check", "separate", "nbhd_subset", "nbhd_member"}},
      {"tauc", group_tauc,
       {"verify_tauc_shift_continuity", "t1_check", "separate",
        "compactness_certificate", "nbhd_is_cofinite", "check_shift_continuity"}},
      {"prop15", group_prop15,
       {"check_shift_continuity", "shift_image_taup", "nbhd_enumerate", "nbhd_member",
        "iota", "iota_inv", "separate", "nbhd_subset"}},
      {"remark16", group_remark16, {"remark16_sweep", "check_shift_continuity"}},
      {"prop17", group_prop17, {"dual_report", "dualize_base", "check_shift_continuity"}},
  };
  return groups;
}

}  // namespace

void validate(RunConfig const& cfg) {
  if (!is_prime(cfg.prime)) {
    throw ConfigError("prime must be a prime >= 2, got " + std::to_string(cfg.prime));
  }
  if (cfg.param_bound < 1 || cfg.witness_bound < 1) {
    throw ConfigError("param and witness bounds must be >= 1");
  }
}

json to_json(ClaimReport const& r) {
  return {{"claim", r.claim},
          {"anchor", {{"section", r.section}, {"quote", r.quote}}},
          {"prediction", r.prediction},
          {"verdict", r.verdict},
          {"matches_prediction", r.matches_prediction},
          {"bounds", r.bounds},
          {"witnesses", r.witnesses},
          {"runtime_ms", r.runtime_ms}};
}

std::vector<std::string_view> const& claim_groups() {
  static std::vector<std::string_view> const names = [] {
    std::vector<std::string_view> out;
    for (auto const& g : registry()) out.push_back(g.name);
    return out;
  }();
  return names;
}

std::vector<std::string_view> const& group_operations(std::string_view group) {
  for (auto const& g : registry()) {
    if (g.name == group) return g.ops;
  }
  throw ConfigError("unknown claim group: " + std::string(group));
}

std::vector<std::string_view> const& all_operations() {
  static std::vector<std::string_view> const ops{
      "mul", "in_carrier", "mul_closed", "alpha", "solve_right_div", "solve_left_div",
      "green_related", "green_classes", "right_ideal", "finite_open_nbhd", "mul_s",
      "iota", "iota_inv", "nbhd_member", "nbhd_enumerate", "nbhd_is_cofinite",
      "nbhd_subset", "separate", "t1_check", "compactness_certificate", "dualize_base",
      "shift_image_taup", "check_shift_continuity", "remark16_sweep",
      "verify_taus_monoid", "verify_tau2_semigroup", "verify_tauc_shift_continuity",
      "theorem6_forcing", "dual_report"};
  return ops;
}

std::vector<ClaimReport> run_claims(std::string_view group, RunConfig const& cfg) {
  validate(cfg);
  auto timed = [&cfg](GroupInfo const& g) {
    auto const t0 = std::chrono::steady_clock::now();
    auto reports = g.run(cfg);
    auto const ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    for (auto& r : reports) r.runtime_ms = ms / static_cast<double>(reports.size());
    return reports;
  };
  std::vector<ClaimReport> out;
  if (group == "all") {
    std::vector<std::future<std::vector<ClaimReport>>> jobs;
    for (auto const& g : registry()) {
      jobs.push_back(std::async(std::launch::async, timed, std::cref(g)));
    }
    for (auto& j : jobs) {
      auto part = j.get();
      std::move(part.begin(), part.end(), std::back_inserter(out));
    }
  } else {
    auto it = std::find_if(registry().begin(), registry().end(),
                           [&](GroupInfo const& g) { return g.name == group; });
    if (it == registry().end()) {
      throw ConfigError("unknown claim: " + std::string(group));
    }
    out = timed(*it);
  }
  std::sort(out.begin(), out.end(),
            [](ClaimReport const& a, ClaimReport const& b) { return a.claim < b.claim; });
  return out;
}

json report_document(std::vector<ClaimReport> const& reports) {
  json arr = json::array();
  for (auto const& r : reports) arr.push_back(to_json(r));
  return {{"schema", 1}, {"reports", arr}};
}

std::string render_text(std::vector<ClaimReport> const& reports) {
  std::ostringstream os;
  for (auto const& r : reports) {
    os << (r.matches_prediction ? "[ok]       " : "[MISMATCH] ") << r.claim << "\n"
       << "    " << r.section << ": \"" << r.quote << "\"\n"
       << "    verdict: " << r.verdict << "\n"
       << "    bounds:  " << r.bounds.dump() << "\n";
  }
  return os.str();
}

std::vector<std::string> prediction_diff(std::vector<ClaimReport> const& reports) {
  std::vector<std::string> out;
  for (auto const& r : reports) {
    if (!r.matches_prediction) {
      out.push_back(r.claim + ":\n  - predicted: " + r.prediction +
                    "\n  + observed:  " + r.verdict);
    }
  }
  return out;
}

namespace {

std::map<std::string, json> index_reports(json const& doc, char const* which) {
  json const* arr = &doc;
  if (doc.is_object()) {
    if (!doc.contains("reports") || !doc.at("reports").is_array()) {
      throw std::invalid_argument(std::string(which) + ": missing \"reports\" array");
    }
    arr = &doc.at("reports");
  } else if (!doc.is_array()) {
    throw std::invalid_argument(std::string(which) + ": expected an object or array");
  }
  std::map<std::string, json> out;
  for (auto const& r : *arr) {
    if (!r.is_object() || !r.contains("claim") || !r.at("claim").is_string()) {
      throw std::invalid_argument(std::string(which) + ": report without a claim id");
    }
    json copy = r;
    copy.erase("runtime_ms");
    auto const id = copy.at("claim").get<std::string>();
    if (!out.emplace(id, std::move(copy)).second) {
      throw std::invalid_argument(std::string(which) + ": duplicate claim " + id);
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> diff_reports(json const& golden, json const& fresh) {
  std::vector<std::string> out;
  if (golden.is_object() && fresh.is_object() &&
      golden.value("schema", 0) != fresh.value("schema", 0)) {
    out.push_back("schema differs");
  }
  auto const g = index_reports(golden, "golden");
  auto const f = index_reports(fresh, "fresh");
  for (auto const& [id, gr] : g) {
    auto it = f.find(id);
    if (it == f.end()) {
      out.push_back(id + ": missing from fresh");
      continue;
    }
    for (auto const& [key, val] : gr.items()) {
      if (!it->second.contains(key)) {
        out.push_back(id + ": field " + key + " missing from fresh");
      } else if (it->second.at(key) != val) {
        out.push_back(id + ": " + key + " differs\n  - " + val.dump() + "\n  + " +
                      it->second.at(key).dump());
      }
    }
    for (auto const& [key, val] : it->second.items()) {
      if (!gr.contains(key)) out.push_back(id + ": unexpected field " + key);
    }
  }
  for (auto const& [id, fr] : f) {
    if (!g.count(id)) out.push_back(id + ": not in golden");
  }
  return out;
}

}  // namespace bicyclic
