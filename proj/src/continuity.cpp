#include "bicyclic/continuity.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <set>
#include <stdexcept>

#include "bicyclic/division.hpp"
#include "bicyclic/ideals.hpp"

namespace bicyclic {

namespace {

Exp exps_of(ExtElem const& x) {
  return x.is_zero() ? 0 : std::max(x.elem().i, x.elem().j);
}

std::string describe(ShiftSpec const& spec) {
  return std::string(side_name(spec.side)) + " shift by " + to_string(spec.s) +
         " at " + to_string(spec.point) + " in " + spec.family.name();
}

bool is_obstructed(ShiftSpec const& spec) {
  auto const tag = spec.family.tag();
  if (tag == FamilyTag::TaupPlus && spec.side == Side::Right) {
    return spec.point.elem().j < spec.s.elem().i;
  }
  if (tag == FamilyTag::TaupMinus && spec.side == Side::Left) {
    return spec.point.elem().i < spec.s.elem().j;
  }
  return false;
}

constexpr std::string_view kPlusObstruction = "b-exponent obstruction";
constexpr std::string_view kMinusObstruction = "a-exponent obstruction";

// Escaping point inside the m-basic: far enough along the progression that
// the shift lands in the other case of the product formula.
BicyclicElem escaping_point(ShiftSpec const& spec, Exp m) {
  Exp const q = prime_power(*spec.family.prime(), m);
  auto const x = spec.point.elem();
  auto const s = spec.s.elem();
  if (spec.family.tag() == FamilyTag::TaupPlus) {
    Exp const t = std::max<Exp>(1, (s.i - x.j + q - 1) / q);
    return {x.i, checked_add(x.j, checked_mul(q, t))};
  }
  Exp const t = std::max<Exp>(1, (s.j - x.i + q - 1) / q);
  return {checked_add(x.i, checked_mul(q, t)), x.j};
}

struct ExactRule {
  std::string name;
  std::function<Exp(Exp)> m_of_n;
};

std::optional<ExactRule> exact_rule(ShiftSpec const& spec) {
  auto const id = [](Exp n) { return n; };
  auto const zero = [](Exp) { return Exp{0}; };
  switch (spec.family.tag()) {
    case FamilyTag::Discrete:
      return ExactRule{"singleton", zero};
    case FamilyTag::TaupOmega:
      return ExactRule{"translated-basic", id};
    case FamilyTag::TaupPlus:
    case FamilyTag::TaupMinus:
      if (is_obstructed(spec)) {
        return std::nullopt;
      }
      return ExactRule{"translated-basic", id};
    case FamilyTag::TauS: {
      if (!spec.point.is_zero()) {
        return ExactRule{"isolated-point", zero};
      }
      if (spec.s.is_zero()) {
        return ExactRule{"absorbing-zero", zero};
      }
      Exp const k = spec.s.elem().i;
      Exp const l = spec.s.elem().j;
      if (spec.side == Side::Left) {
        return ExactRule{"zero-index", [l](Exp n) { return l >= n ? 0 : n; }};
      }
      return ExactRule{"zero-index",
                       [k, l](Exp n) { return l >= n ? 0 : n - l + k; }};
    }
    default:
      return std::nullopt;
  }
}

// Index below which a preimage must lie for the m-basic at the point to
// avoid it (cofinite families only).
Exp avoid_index(FamilyTag tag, BicyclicElem u) {
  return tag == FamilyTag::TauC ? std::max(u.i, u.j) : u.j + 1;
}

}  // namespace

std::string_view side_name(Side side) {
  return side == Side::Left ? "left" : "right";
}

ExtElem apply_shift(ShiftSpec const& spec, ExtElem const& x) {
  auto const c = spec.family.carrier();
  return spec.side == Side::Left ? mul_in(c, spec.s, x) : mul_in(c, x, spec.s);
}

std::string_view verdict_kind(ContinuityVerdict const& v) {
  switch (v.index()) {
    case 0:
      return "ContinuousExact";
    case 1:
      return "ContinuousUpToBound";
    case 2:
      return "Discontinuous";
    default:
      return "Inconclusive";
  }
}

bool is_continuous(ContinuityVerdict const& v) {
  return std::holds_alternative<ContinuousExact>(v) ||
         std::holds_alternative<ContinuousUpToBound>(v);
}

BasicNbhd shift_image_taup(BicyclicElem s, BasicNbhd const& b) {
  if (b.family.tag() != FamilyTag::TaupPlus) {
    throw std::invalid_argument("shift_image_taup: expected a TAUP_PLUS basic");
  }
  if (!in_carrier(s, Carrier::CPlus)) {
    throw std::invalid_argument("shift_image_taup: " + to_string(s) +
                                " is not in CPLUS");
  }
  Exp const k1 = s.i;
  Exp const s1 = s.j - s.i;
  Exp const k2 = b.center.elem().i;
  Exp const s2 = b.center.elem().j - k2;
  BicyclicElem center;
  if (k1 + s1 < k2) {
    center = {k2 - s1, k2 + s2};
  } else if (k1 + s1 == k2) {
    center = {k1, k2 + s2};
  } else {
    center = {k1, k1 + s1 + s2};
  }
  return make_basic(b.family, center, b.n);
}

Shape shift_image_shape(ShiftSpec const& spec, BasicNbhd const& b) {
  auto const src = shape_of(b);
  if (src.is_cofinite()) {
    throw std::invalid_argument("shift_image_shape: cofinite basic " +
                                to_string(b));
  }
  Shape out;
  out.carrier = src.carrier;
  for (auto const& q : src.points) {
    out.points.push_back(apply_shift(spec, q));
  }
  if (!src.ray) {
    return out;
  }
  auto const& ray = *src.ray;
  Exp first_tail = 0;
  if (src.carrier != Carrier::Omega) {
    auto const s = spec.s.elem();
    bool const left = spec.side == Side::Left;
    Exp const step = left ? ray.di : ray.dj;
    Exp const key0 = left ? ray.base.i : ray.base.j;
    Exp const threshold = left ? s.j : s.i;
    if (step != 0 && key0 <= threshold) {
      first_tail = (threshold - key0) / step + 1;
    }
  }
  for (Exp t = 0; t < first_tail; ++t) {
    out.points.push_back(apply_shift(spec, ray.at(t)));
  }
  out.ray = Ray{apply_shift(spec, ray.at(first_tail)).elem(), ray.di, ray.dj};
  for (Exp t = 0; t < 4; ++t) {
    if (apply_shift(spec, ray.at(first_tail + t)) != ExtElem(out.ray->at(t))) {
      throw std::logic_error("shift_image_shape: tail is not affine for " +
                             describe(spec));
    }
  }
  return out;
}

std::vector<BicyclicElem> shift_preimages(ShiftSpec const& spec, BicyclicElem w) {
  auto c = spec.family.carrier();
  if (c == Carrier::Omega) {
    throw std::invalid_argument("shift_preimages: OMEGA is not supported");
  }
  if (c == Carrier::SZero) {
    if (spec.s.is_zero()) {
      return {};
    }
    c = Carrier::CPlus;
  }
  if (!in_carrier(w, c)) {
    return {};
  }
  return spec.side == Side::Left ? solve_right_div(spec.s.elem(), w, c)
                                 : solve_left_div(spec.s.elem(), w, c);
}

std::vector<BicyclicElem> const& PreimageCache::preimages(ShiftSpec const& spec,
                                                          BicyclicElem w) {
  Key key{spec.side, spec.s, spec.family.carrier()};
  if (!last_key_ || *last_key_ != key) {
    last_ = &tables_[key];
    last_key_ = key;
  }
  Table& t = *last_;
  if (w.i >= t.width || w.j >= t.width) {
    Exp const width = std::max({Exp{16}, 2 * t.width, w.i + 1, w.j + 1});
    std::vector<std::optional<std::vector<BicyclicElem>>> cells(width * width);
    for (Exp i = 0; i < t.width; ++i) {
      for (Exp j = 0; j < t.width; ++j) {
        cells[i * width + j] = std::move(t.cells[i * t.width + j]);
      }
    }
    t.cells = std::move(cells);
    t.width = width;
  }
  auto& cell = t.cells[w.i * t.width + w.j];
  if (!cell) {
    cell = shift_preimages(spec, w);
  }
  return *cell;
}

ContinuityVerdict check_shift_continuity(ShiftSpec const& spec, Exp param_bound,
                                         PreimageCache* cache) {
  auto const& fam = spec.family;
  if (!belongs(spec.s, fam.carrier()) || !belongs(spec.point, fam.carrier())) {
    throw std::invalid_argument("check_shift_continuity: " + describe(spec) +
                                " leaves the carrier");
  }
  auto const fp = apply_shift(spec, spec.point);

  if (is_obstructed(spec)) {
    Discontinuous out{make_basic(fam, fp, 0), {},
                      std::string(fam.tag() == FamilyTag::TaupPlus
                                      ? kPlusObstruction
                                      : kMinusObstruction),
                      param_bound};
    auto const target = shape_of(out.offending);
    for (Exp m = 0; m <= param_bound; ++m) {
      auto const src = make_basic(fam, spec.point, m);
      ExtElem const u = escaping_point(spec, m);
      auto const img = apply_shift(spec, u);
      if (!nbhd_member(src, u) || nbhd_member(out.offending, img)) {
        throw std::logic_error("obstruction rule failed for " + describe(spec));
      }
      if (is_subset(shape_subset(shift_image_shape(spec, src), target))) {
        throw std::logic_error("obstruction contradicts image shape for " +
                               describe(spec));
      }
      out.escapes.push_back({m, u, img});
    }
    return out;
  }

  Exp const cap = param_bound + exps_of(spec.s) + exps_of(spec.point) + 1;
  std::vector<WitnessEntry> table;
  bool const cofinite_source =
      shape_of(make_basic(fam, spec.point, 0)).is_cofinite();
  for (Exp n = 0; n <= param_bound; ++n) {
    auto const target_basic = make_basic(fam, fp, n);
    auto const target = shape_of(target_basic);
    std::optional<Exp> found;
    if (cofinite_source) {
      if (!target.is_cofinite()) {
        return Inconclusive{n, "cofinite basic mapped towards a thin target"};
      }
      Exp need = 0;
      for (auto const& w : *target.complement) {
        if (w.is_zero()) {
          continue;
        }
        auto const pre = cache ? cache->preimages(spec, w.elem())
                               : shift_preimages(spec, w.elem());
        for (auto const& u : pre) {
          need = std::max(need, avoid_index(fam.tag(), u));
        }
      }
      if (need <= cap) {
        found = need;
      }
    } else {
      try {
        for (Exp m = 0; m <= cap && !found; ++m) {
          auto const img = shift_image_shape(spec, make_basic(fam, spec.point, m));
          if (is_subset(shape_subset(img, target))) {
            found = m;
          }
        }
      } catch (UndecidedError const& e) {
        return Inconclusive{n, e.what()};
      }
    }
    if (!found) {
      return Inconclusive{n, "no m <= " + std::to_string(cap)};
    }
    table.push_back({n, *found});
  }

  if (auto rule = exact_rule(spec)) {
    for (auto const& e : table) {
      if (rule->m_of_n(e.n) != e.m) {
        throw std::logic_error("rule " + rule->name + " disagrees at n=" +
                               std::to_string(e.n) + " for " + describe(spec));
      }
    }
    return ContinuousExact{rule->name, std::move(table)};
  }
  return ContinuousUpToBound{param_bound, std::move(table)};
}

bool revalidate(ShiftSpec const& spec, ContinuityVerdict const& verdict,
                std::size_t depth) {
  auto const& fam = spec.family;
  auto const fp = apply_shift(spec, spec.point);
  auto check_table = [&](std::vector<WitnessEntry> const& table) {
    for (auto const& e : table) {
      auto const target = make_basic(fam, fp, e.n);
      for (auto const& u : nbhd_enumerate(make_basic(fam, spec.point, e.m), depth)) {
        if (!nbhd_member(target, apply_shift(spec, u))) {
          return false;
        }
      }
    }
    return true;
  };
  if (auto const* ce = std::get_if<ContinuousExact>(&verdict)) {
    return check_table(ce->table);
  }
  if (auto const* cb = std::get_if<ContinuousUpToBound>(&verdict)) {
    return check_table(cb->table);
  }
  if (auto const* d = std::get_if<Discontinuous>(&verdict)) {
    if (d->offending.center != fp || d->escapes.size() != d->bound + 1) {
      return false;
    }
    for (auto const& e : d->escapes) {
      if (!nbhd_member(make_basic(fam, spec.point, e.m), e.u) ||
          apply_shift(spec, e.u) != e.image ||
          nbhd_member(d->offending, e.image)) {
        return false;
      }
    }
    return true;
  }
  return false;
}

Remark16Outcome remark16_sweep(Exp p, Exp k1, Exp s1, Exp k2, Exp s2,
                               Exp param_bound) {
  if (k1 + s1 > k2) {
    throw std::invalid_argument("remark16_sweep: requires k1 + s1 <= k2");
  }
  auto const fam = Family::taup_plus(p);
  Remark16Outcome out;
  out.x = {k1, k1 + s1};
  out.y = {k2, k2 + s2};
  out.right_shift =
      check_shift_continuity({Side::Right, out.y, fam, out.x}, param_bound);
  out.left_shift =
      check_shift_continuity({Side::Left, out.x, fam, out.y}, param_bound);
  out.terminology_tension = is_continuous(out.left_shift);
  return out;
}

// S = CPlus + {0} ------------------------------------------------------------

TausReport verify_taus_monoid(Exp index_bound, Exp elem_bound) {
  TausReport rep;
  rep.index_bound = index_bound;
  rep.elem_bound = elem_bound;
  auto const fam = Family::taus();
  auto const elems = box(Carrier::CPlus, elem_bound);
  auto const all = box_ext(Carrier::SZero, elem_bound);
  auto fail = [&rep](std::string msg) { rep.failures.push_back(std::move(msg)); };

  for (Exp n = 0; n <= index_bound; ++n) {
    auto const un = make_basic(fam, ExtElem::zero(), n);
    std::vector<ExtElem> members;
    for (auto const& x : all) {
      if (nbhd_member(un, x)) {
        members.push_back(x);
      }
    }
    for (auto const& u : members) {
      for (auto const& v : members) {
        ++rep.checked_a;
        if (!nbhd_member(un, mul_s(u, v))) {
          fail("(a) n=" + std::to_string(n) + ": " + to_string(u) + " * " +
               to_string(v));
        }
      }
      for (auto const& x : elems) {
        ++rep.checked_b;
        if (!nbhd_member(un, mul_s(x, u))) {
          fail("(b) n=" + std::to_string(n) + ": " + to_string(x) + " * " +
               to_string(u));
        }
      }
    }
    for (Exp i = 0; i <= elem_bound; ++i) {
      bool holds = true;
      for (auto const& u : members) {
        ++rep.checked_c;
        holds = holds && nbhd_member(un, mul_s(u, BicyclicElem{i, i}));
      }
      if (n >= i && !holds) {
        fail("(c) n=" + std::to_string(n) + ", i=" + std::to_string(i));
      }
      if (n < i && holds) {
        rep.guard_not_necessary.emplace_back(n, i);
      }
    }
  }

  // (d) joint continuity. Points of CPlus are isolated, so only pairs that
  // involve the zero need a real parameter; those come from the shift checker.
  for (auto const& x : all) {
    for (auto const& y : all) {
      auto const xy = mul_s(x, y);
      std::vector<WitnessEntry> from_x, from_y;
      if (x.is_zero() && !y.is_zero()) {
        auto v = check_shift_continuity({Side::Right, y, fam, x}, index_bound);
        if (auto const* ce = std::get_if<ContinuousExact>(&v)) {
          from_x = ce->table;
        }
      } else if (!x.is_zero() && y.is_zero()) {
        auto v = check_shift_continuity({Side::Left, x, fam, y}, index_bound);
        if (auto const* ce = std::get_if<ContinuousExact>(&v)) {
          from_y = ce->table;
        }
      }
      for (Exp n = 0; n <= index_bound; ++n) {
        Exp a = 0, b = 0;
        if (x.is_zero() && y.is_zero()) {
          a = n;  // products have a-exponent >= that of the left factor
        } else if (x.is_zero()) {
          if (from_x.size() <= n) {
            fail("(d) no shift table at " + to_string(x) + ", " + to_string(y));
            continue;
          }
          a = from_x[n].m;
        } else if (y.is_zero()) {
          if (from_y.size() <= n) {
            fail("(d) no shift table at " + to_string(x) + ", " + to_string(y));
            continue;
          }
          b = from_y[n].m;
        }
        auto const target = make_basic(fam, xy, n);
        auto const bx = make_basic(fam, x, a);
        auto const by = make_basic(fam, y, b);
        std::vector<ExtElem> us, vs;
        std::copy_if(all.begin(), all.end(), std::back_inserter(us),
                     [&](ExtElem const& u) { return nbhd_member(bx, u); });
        std::copy_if(all.begin(), all.end(), std::back_inserter(vs),
                     [&](ExtElem const& v) { return nbhd_member(by, v); });
        for (auto const& u : us) {
          for (auto const& v : vs) {
            ++rep.checked_d;
            if (!nbhd_member(target, mul_s(u, v))) {
              fail("(d) " + to_string(x) + ", " + to_string(y) + " n=" +
                   std::to_string(n));
            }
          }
        }
        if (x.is_zero() || y.is_zero()) {
          rep.joint_table.push_back({x, y, n, a, b});
        }
      }
    }
  }
  return rep;
}

// TAU2 -------------------------------------------------------------------------

Tau2Report verify_tau2_semigroup(Exp elem_bound, Exp param_bound) {
  Tau2Report rep;
  rep.elem_bound = elem_bound;
  rep.param_bound = param_bound;
  rep.search_bound = param_bound + elem_bound;
  rep.depth = param_bound + 8;

  for (Carrier c : {Carrier::Full, Carrier::CPlus}) {
    auto const fam = Family::tau2(c);
    auto const elems = box(c, elem_bound);
    for (auto const& x : elems) {
      for (auto const& y : elems) {
        auto const xy = mul(x, y);
        // Every product of diagonal translates x+l, y+l' lies on the diagonal
        // of xy; f gives its b-exponent and moves in unit steps.
        auto f = [&](Exp l, Exp lp) {
          return x.i + std::max<Exp>(l, (y.i + lp > x.j) ? y.i + lp - x.j : 0);
        };
        Exp const f00 = f(0, 0);
        for (Exp n = 0; n <= param_bound; ++n) {
          std::optional<Exp> a, b;
          if (n == 0) {
            a = 0;
            b = 0;
          } else {
            for (Exp t = 0; t <= rep.search_bound && !a; ++t) {
              if (f(t + 1, 0) > f00 + n) a = t;
            }
            for (Exp t = 0; t <= rep.search_bound && !b; ++t) {
              if (f(0, t + 1) > f00 + n) b = t;
            }
          }
          if (!a || !b) {
            rep.inconclusive.push_back(to_string(x) + " * " + to_string(y) +
                                       " n=" + std::to_string(n));
            continue;
          }
          auto const target = make_basic(fam, xy, n);
          // Product check on the enumeration, and minimality of a and b.
          auto offsets = [&](Exp param) {
            std::vector<Exp> ls{0};
            for (Exp l = param + 1; l <= param + rep.depth; ++l) ls.push_back(l);
            return ls;
          };
          auto all_inside = [&](Exp pa, Exp pb) {
            for (Exp l : offsets(pa)) {
              for (Exp lp : offsets(pb)) {
                auto const prod = mul({x.i + l, x.j + l}, {y.i + lp, y.j + lp});
                if (!nbhd_member(target, prod)) return false;
              }
            }
            return true;
          };
          if (!all_inside(*a, *b)) {
            rep.failures.push_back("product escapes: " + to_string(x) + " * " +
                                   to_string(y) + " n=" + std::to_string(n));
          }
          if ((*a > 0 && all_inside(*a - 1, *b)) ||
              (*b > 0 && all_inside(*a, *b - 1))) {
            rep.failures.push_back("not minimal: " + to_string(x) + " * " +
                                   to_string(y) + " n=" + std::to_string(n));
          }
          rep.table.push_back({c, x, y, n, *a, *b});
        }
      }
    }
  }
  return rep;
}

// TAUC -------------------------------------------------------------------------

TaucReport verify_tauc_shift_continuity(Exp elem_bound, Exp param_bound) {
  TaucReport rep;
  rep.elem_bound = elem_bound;
  rep.param_bound = param_bound;
  for (Carrier c : {Carrier::Full, Carrier::CPlus}) {
    auto const fam = Family::tauc(c);
    auto const elems = box(c, elem_bound);
    PreimageCache cache;
    for (Side side : {Side::Left, Side::Right}) {
      for (auto const& s : elems) {
        for (auto const& x : elems) {
          ShiftSpec const spec{side, s, fam, x};
          auto v = check_shift_continuity(spec, param_bound, &cache);
          ++rep.checks;
          if (auto const* cb = std::get_if<ContinuousUpToBound>(&v)) {
            ++rep.continuous;
            for (auto const& e : cb->table) rep.max_m = std::max(rep.max_m, e.m);
          } else if (auto const* inc = std::get_if<Inconclusive>(&v)) {
            rep.inconclusive.push_back(describe(spec) + ": " + inc->reason);
          } else {
            rep.failures.push_back(describe(spec) + ": " +
                                   std::string(verdict_kind(v)));
          }
          if (rep.samples.size() < 4 && s != kIdentity) {
            rep.samples.emplace_back(spec, std::move(v));
          }
        }
      }
    }
  }
  return rep;
}

// Discreteness forcing -------------------------------------------------------

Theorem6Report theorem6_forcing(BicyclicElem x, Exp check_bound) {
  if (!in_carrier(x, Carrier::CPlus)) {
    throw std::invalid_argument("theorem6_forcing: " + to_string(x) +
                                " is not in CPLUS");
  }
  Theorem6Report rep;
  rep.x = x;
  rep.check_bound = check_bound;
  Exp const top = x.j + 1;
  Exp const trunc = std::max(check_bound, top);

  rep.retractions_idempotent = true;
  for (Exp i = 0; i <= top; ++i) {
    BicyclicElem const e{i, i};
    for (auto const& u : box(Carrier::CPlus, check_bound)) {
      auto const once = mul(u, e);
      if (mul(once, e) != once) {
        rep.retractions_idempotent = false;
        rep.failures.push_back("rho_" + to_string(e) + " not idempotent at " +
                               to_string(u));
      }
    }
  }

  std::set<BicyclicElem> image;
  for (auto const& u : box(Carrier::CPlus, trunc + top)) {
    auto const w = mul(u, BicyclicElem{top, top});
    if (w.i <= trunc && w.j <= trunc) image.insert(w);
  }
  auto const ideal = right_ideal(top, Carrier::CPlus, trunc);
  rep.image_is_ideal =
      std::vector<BicyclicElem>(image.begin(), image.end()) == ideal;
  if (!rep.image_is_ideal) {
    rep.failures.push_back("image of rho_" + to_string(BicyclicElem{top, top}) +
                           " differs from the ideal");
  }

  rep.nbhd = finite_open_nbhd(x);
  std::vector<BicyclicElem> joined = rep.nbhd;
  joined.insert(joined.end(), ideal.begin(), ideal.end());
  std::sort(joined.begin(), joined.end());
  bool const partition =
      std::adjacent_find(joined.begin(), joined.end()) == joined.end() &&
      joined == box(Carrier::CPlus, trunc);
  rep.nbhd_is_complement =
      partition && std::find(rep.nbhd.begin(), rep.nbhd.end(), x) != rep.nbhd.end() &&
      rep.nbhd.size() == (x.j + 1) * (x.j + 2) / 2;
  if (!rep.nbhd_is_complement) {
    rep.failures.push_back("finite neighbourhood is not the complement");
  }
  return rep;
}

// TAUP_PLUS suite and its dual ------------------------------------------------

Prop15Suite prop15_suite(Exp p, Exp elem_bound, Exp param_bound) {
  Prop15Suite suite;
  suite.p = p;
  suite.elem_bound = elem_bound;
  suite.param_bound = param_bound;
  auto const fam = Family::taup_plus(p);
  auto const elems = box(Carrier::CPlus, elem_bound);
  for (Side side : {Side::Left, Side::Right}) {
    for (auto const& s : elems) {
      for (auto const& x : elems) {
        ShiftSpec spec{side, s, fam, x};
        auto v = check_shift_continuity(spec, param_bound);
        suite.entries.push_back({spec, std::move(v)});
      }
    }
  }
  return suite;
}

ShiftSpec dualize(ShiftSpec const& spec) {
  auto const p = spec.family.prime();
  std::optional<Family> fam;
  if (spec.family.tag() == FamilyTag::TaupPlus) {
    fam = Family::taup_minus(*p);
  } else if (spec.family.tag() == FamilyTag::TaupMinus) {
    fam = Family::taup_plus(*p);
  } else {
    throw std::invalid_argument("dualize: only the p-adic row/column families");
  }
  return {spec.side == Side::Left ? Side::Right : Side::Left, alpha(spec.s),
          *fam, alpha(spec.point)};
}

ContinuityVerdict dualize(ContinuityVerdict const& v) {
  auto const* d = std::get_if<Discontinuous>(&v);
  if (!d) {
    return v;
  }
  Discontinuous out = *d;
  auto const& fam = d->offending.family;
  if (fam.tag() == FamilyTag::TaupPlus) {
    out.offending = dualize_base(d->offending);
  } else {
    out.offending = make_basic(Family::taup_plus(*fam.prime()),
                               alpha(d->offending.center), d->offending.n);
  }
  out.rule = d->rule == kPlusObstruction ? kMinusObstruction : kPlusObstruction;
  for (auto& e : out.escapes) {
    e.u = alpha(e.u);
    e.image = alpha(e.image);
  }
  return out;
}

DualReport dual_report(Prop15Suite const& rep, std::size_t samples) {
  DualReport out;
  out.dual.p = rep.p;
  out.dual.elem_bound = rep.elem_bound;
  out.dual.param_bound = rep.param_bound;
  for (auto const& e : rep.entries) {
    out.dual.entries.push_back({dualize(e.spec), dualize(e.verdict)});
  }
  auto const total = out.dual.entries.size();
  samples = std::min(samples, total);
  for (std::size_t k = 0; k < samples; ++k) {
    out.sampled.push_back(k * total / samples);
  }
  for (auto const idx : out.sampled) {
    auto const& e = out.dual.entries[idx];
    if (check_shift_continuity(e.spec, rep.param_bound) != e.verdict) {
      out.mismatches.push_back(idx);
    }
  }
  return out;
}

}  // namespace bicyclic
