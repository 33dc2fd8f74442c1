#include "bicyclic/topology.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace bicyclic {

namespace {

using i128 = __int128;

constexpr Exp kMaxPower = Exp{1} << 62;

// Does p^n divide d? Exact for every n, without forming huge powers.
bool power_divides(Exp p, Exp n, Exp d) {
  if (d == 0) {
    return true;
  }
  Exp q = 1;
  for (Exp k = 0; k < n; ++k) {
    if (q > d / p) {
      return false;
    }
    q *= p;
  }
  return d % q == 0;
}

// Largest v with p^v | d, for d > 0.
Exp valuation(Exp p, Exp d) {
  Exp v = 0;
  while (d % p == 0) {
    d /= p;
    ++v;
  }
  return v;
}

void require_member(Family const& f, ExtElem const& x, char const* who) {
  if (!belongs(x, f.carrier())) {
    throw std::invalid_argument(std::string(who) + ": " + to_string(x) +
                                " is not in the carrier of " + f.name());
  }
}

bool contains_sorted(std::vector<ExtElem> const& xs, ExtElem const& x) {
  return std::binary_search(xs.begin(), xs.end(), x);
}

Exp max_coordinate(std::vector<ExtElem> const& xs) {
  Exp m = 0;
  for (auto const& x : xs) {
    if (!x.is_zero()) {
      m = std::max({m, x.elem().i, x.elem().j});
    }
  }
  return m;
}

// Shell-ordered walk over a carrier, zero first.
template <typename Visit>
void walk_carrier(Carrier c, Exp first_shell, Exp last_shell, Visit&& visit) {
  if (c == Carrier::SZero && first_shell == 0) {
    if (!visit(ExtElem::zero())) {
      return;
    }
  }
  for (Exp r = first_shell; r <= last_shell; ++r) {
    for (auto const& e : shell(c, r)) {
      if (!visit(ExtElem(e))) {
        return;
      }
    }
  }
}

enum class Dir { Diag, Row, Col };

Dir dir_of(Ray const& r) {
  if (r.di == 0) {
    return Dir::Row;
  }
  if (r.dj == 0) {
    return Dir::Col;
  }
  return Dir::Diag;
}

Exp units(Ray const& r) { return dir_of(r) == Dir::Row ? r.dj : r.di; }

i128 position(BicyclicElem x, Dir d) {
  return d == Dir::Row ? static_cast<i128>(x.j) : static_cast<i128>(x.i);
}

bool collinear(Ray const& a, Ray const& b) {
  auto const d = dir_of(a);
  if (d != dir_of(b)) {
    return false;
  }
  switch (d) {
    case Dir::Diag:
      return static_cast<i128>(a.base.i) - a.base.j ==
             static_cast<i128>(b.base.i) - b.base.j;
    case Dir::Row:
      return a.base.i == b.base.i;
    case Dir::Col:
      return a.base.j == b.base.j;
  }
  return false;
}

i128 floor_mod(i128 a, i128 m) {
  auto r = a % m;
  return r < 0 ? r + m : r;
}

// If all but finitely many points of `inner` lie on `outer`, returns T with
// inner.at(t) on outer for every t >= T. Otherwise infinitely many points
// miss, and nullopt is returned.
std::optional<Exp> finite_failure_bound(Ray const& inner, Ray const& outer) {
  if (!collinear(inner, outer)) {
    return std::nullopt;
  }
  auto const d = dir_of(inner);
  i128 const alpha_units = units(inner);
  i128 const beta_units = units(outer);
  i128 const off0 = position(inner.base, d) - position(outer.base, d);
  if (alpha_units % beta_units != 0 || floor_mod(off0, beta_units) != 0) {
    return std::nullopt;
  }
  if (off0 >= 0) {
    return Exp{0};
  }
  return static_cast<Exp>((-off0 + alpha_units - 1) / alpha_units);
}

bool rays_intersect(Ray const& a, Ray const& b) {
  if (dir_of(a) == dir_of(b)) {
    if (!collinear(a, b)) {
      return false;
    }
    auto const d = dir_of(a);
    i128 const g = std::gcd(static_cast<Exp>(units(a)), static_cast<Exp>(units(b)));
    return floor_mod(position(a.base, d) - position(b.base, d), g) == 0;
  }
  // t * va - s * vb = b.base - a.base
  i128 const a11 = a.di, a12 = -static_cast<i128>(b.di);
  i128 const a21 = a.dj, a22 = -static_cast<i128>(b.dj);
  i128 const r1 = static_cast<i128>(b.base.i) - a.base.i;
  i128 const r2 = static_cast<i128>(b.base.j) - a.base.j;
  i128 const det = a11 * a22 - a12 * a21;
  i128 const tn = r1 * a22 - a12 * r2;
  i128 const sn = a11 * r2 - a21 * r1;
  if (tn % det != 0 || sn % det != 0) {
    return false;
  }
  return tn / det >= 0 && sn / det >= 0;
}

// Witness for ray \not\subseteq outer, or nullopt when the ray is inside.
std::optional<ExtElem> ray_escape(Ray const& ray, Shape const& outer) {
  if (outer.is_cofinite()) {
    auto const m = max_coordinate(*outer.complement);
    for (Exp t = 0;; ++t) {
      auto const q = ray.at(t);
      if (q.i > m || q.j > m) {
        break;
      }
      if (!outer.contains(q)) {
        return ExtElem(q);
      }
    }
    return std::nullopt;
  }
  std::optional<Exp> bound;
  if (outer.ray) {
    bound = finite_failure_bound(ray, *outer.ray);
  }
  if (bound) {
    for (Exp t = 0; t < *bound; ++t) {
      if (!outer.contains(ray.at(t))) {
        return ExtElem(ray.at(t));
      }
    }
    return std::nullopt;
  }
  Exp const limit = 2 * (outer.points.size() + 2);
  for (Exp t = 0; t <= limit; ++t) {
    if (!outer.contains(ray.at(t))) {
      return ExtElem(ray.at(t));
    }
  }
  throw UndecidedError("ray inclusion: no escaping point found");
}

}  // namespace

std::string_view family_tag_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::Discrete:
      return "DISCRETE";
    case FamilyTag::Tau2:
      return "TAU2";
    case FamilyTag::TauC:
      return "TAUC";
    case FamilyTag::TauS:
      return "TAUS";
    case FamilyTag::TaupOmega:
      return "TAUP_OMEGA";
    case FamilyTag::TaupPlus:
      return "TAUP_PLUS";
    case FamilyTag::TaupMinus:
      return "TAUP_MINUS";
  }
  return "?";
}

bool is_prime(Exp p) {
  if (p < 2) {
    return false;
  }
  for (Exp d = 2; d <= p / d; ++d) {
    if (p % d == 0) {
      return false;
    }
  }
  return true;
}

Exp prime_power(Exp p, Exp n) {
  Exp q = 1;
  for (Exp k = 0; k < n; ++k) {
    if (q > kMaxPower / p) {
      throw std::overflow_error("prime_power: " + std::to_string(p) + "^" +
                                std::to_string(n) + " is too large");
    }
    q *= p;
  }
  return q;
}

// Family -------------------------------------------------------------------

Family Family::discrete(Carrier c) { return {FamilyTag::Discrete, c, 0}; }

Family Family::tau2(Carrier c) {
  if (c != Carrier::Full && c != Carrier::CPlus) {
    throw std::invalid_argument("TAU2 lives on FULL or CPLUS");
  }
  return {FamilyTag::Tau2, c, 0};
}

Family Family::tauc(Carrier c) {
  if (c != Carrier::Full && c != Carrier::CPlus) {
    throw std::invalid_argument("TAUC lives on FULL or CPLUS");
  }
  return {FamilyTag::TauC, c, 0};
}

Family Family::taus() { return {FamilyTag::TauS, Carrier::SZero, 0}; }

namespace {
Exp checked_prime(Exp p) {
  if (!is_prime(p)) {
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  }
  return p;
}
}  // namespace

Family Family::taup_omega(Exp p) {
  return {FamilyTag::TaupOmega, Carrier::Omega, checked_prime(p)};
}
Family Family::taup_plus(Exp p) {
  return {FamilyTag::TaupPlus, Carrier::CPlus, checked_prime(p)};
}
Family Family::taup_minus(Exp p) {
  return {FamilyTag::TaupMinus, Carrier::CMinus, checked_prime(p)};
}

bool Family::is_padic() const {
  return tag_ == FamilyTag::TaupOmega || tag_ == FamilyTag::TaupPlus ||
         tag_ == FamilyTag::TaupMinus;
}

std::optional<Exp> Family::prime() const {
  return is_padic() ? std::optional<Exp>(p_) : std::nullopt;
}

std::string Family::name() const {
  std::string s(family_tag_name(tag_));
  if (is_padic()) {
    s += "(p=" + std::to_string(p_) + ")";
  } else if (tag_ != FamilyTag::TauS) {
    s += "/";
    s += carrier_name(carrier_);
  }
  return s;
}

BasicNbhd make_basic(Family const& family, ExtElem const& center, Exp n) {
  require_member(family, center, "make_basic");
  return BasicNbhd{family, center, n};
}

std::string to_string(BasicNbhd const& b) {
  return b.family.name() + "[" + to_string(b.center) + ", n=" +
         std::to_string(b.n) + "]";
}

// Ray / Shape ----------------------------------------------------------------

BicyclicElem Ray::at(Exp t) const {
  return {checked_add(base.i, checked_mul(t, di)),
          checked_add(base.j, checked_mul(t, dj))};
}

bool Ray::contains(BicyclicElem x) const {
  if (x.i < base.i || x.j < base.j) {
    return false;
  }
  Exp const oi = x.i - base.i;
  Exp const oj = x.j - base.j;
  if (di == 0) {
    return oi == 0 && oj % dj == 0;
  }
  if (dj == 0) {
    return oj == 0 && oi % di == 0;
  }
  return oi % di == 0 && oj == (oi / di) * dj;
}

bool Shape::contains(ExtElem const& x) const {
  if (!belongs(x, carrier)) {
    return false;
  }
  if (complement) {
    return !contains_sorted(*complement, x);
  }
  if (std::find(points.begin(), points.end(), x) != points.end()) {
    return true;
  }
  return ray && !x.is_zero() && ray->contains(x.elem());
}

Shape shape_of(BasicNbhd const& b) {
  Shape s;
  s.carrier = b.family.carrier();
  auto const& c = b.center;
  switch (b.family.tag()) {
    case FamilyTag::Discrete:
      s.points = {c};
      break;
    case FamilyTag::Tau2: {
      auto const e = c.elem();
      Exp const l = checked_add(b.n, 1);
      s.points = {c};
      s.ray = Ray{{checked_add(e.i, l), checked_add(e.j, l)}, 1, 1};
      break;
    }
    case FamilyTag::TauC: {
      std::vector<ExtElem> comp;
      for (auto const& e : box(s.carrier, b.n)) {
        if (ExtElem(e) != c) {
          comp.emplace_back(e);
        }
      }
      std::sort(comp.begin(), comp.end());
      s.complement = std::move(comp);
      break;
    }
    case FamilyTag::TauS: {
      if (!c.is_zero()) {
        s.points = {c};
        break;
      }
      std::vector<ExtElem> comp;
      for (Exp j = 0; j < b.n; ++j) {
        for (Exp i = 0; i <= j; ++i) {
          comp.emplace_back(BicyclicElem{i, j});
        }
      }
      std::sort(comp.begin(), comp.end());
      s.complement = std::move(comp);
      break;
    }
    case FamilyTag::TaupOmega:
    case FamilyTag::TaupPlus:
      s.ray = Ray{c.elem(), 0, prime_power(*b.family.prime(), b.n)};
      break;
    case FamilyTag::TaupMinus:
      s.ray = Ray{c.elem(), prime_power(*b.family.prime(), b.n), 0};
      break;
  }
  return s;
}

// Membership -----------------------------------------------------------------

bool nbhd_member(BasicNbhd const& b, ExtElem const& x) {
  require_member(b.family, x, "nbhd_member");
  if (x == b.center) {
    return true;
  }
  auto const& c = b.center;
  switch (b.family.tag()) {
    case FamilyTag::Discrete:
      return false;
    case FamilyTag::Tau2: {
      auto const e = c.elem();
      auto const y = x.elem();
      return y.i > e.i && y.j > e.j && y.i - e.i == y.j - e.j &&
             y.i - e.i > b.n;
    }
    case FamilyTag::TauC:
      return x.elem().i > b.n || x.elem().j > b.n;
    case FamilyTag::TauS:
      if (!c.is_zero()) {
        return false;
      }
      return x.is_zero() || x.elem().j >= b.n;
    case FamilyTag::TaupOmega:
    case FamilyTag::TaupPlus: {
      auto const e = c.elem();
      auto const y = x.elem();
      return y.i == e.i && y.j >= e.j &&
             power_divides(*b.family.prime(), b.n, y.j - e.j);
    }
    case FamilyTag::TaupMinus: {
      auto const e = c.elem();
      auto const y = x.elem();
      return y.j == e.j && y.i >= e.i &&
             power_divides(*b.family.prime(), b.n, y.i - e.i);
    }
  }
  return false;
}

std::vector<ExtElem> nbhd_enumerate(BasicNbhd const& b, std::size_t count) {
  std::vector<ExtElem> out;
  if (count == 0) {
    return out;
  }
  auto const shape = shape_of(b);
  if (shape.is_cofinite()) {
    out.push_back(b.center);
    auto const start = b.family.tag() == FamilyTag::TauC ? b.n + 1 : b.n;
    for (Exp r = start; out.size() < count; ++r) {
      for (auto const& e : shell(b.family.carrier(), r)) {
        if (out.size() == count) {
          break;
        }
        if (ExtElem(e) != b.center && shape.contains(e)) {
          out.emplace_back(e);
        }
      }
    }
    return out;
  }
  for (auto const& p : shape.points) {
    if (out.size() < count) {
      out.push_back(p);
    }
  }
  if (shape.ray) {
    for (Exp t = 0; out.size() < count; ++t) {
      ExtElem const q = shape.ray->at(t);
      if (std::find(shape.points.begin(), shape.points.end(), q) ==
          shape.points.end()) {
        out.push_back(q);
      }
    }
  }
  return out;
}

CofinitenessVerdict nbhd_is_cofinite(BasicNbhd const& b) {
  auto const shape = shape_of(b);
  if (shape.is_cofinite()) {
    return Cofinite{*shape.complement};
  }
  auto const p = b.family.prime();
  if (b.family.tag() == FamilyTag::TaupOmega && b.n == 0) {
    Cofinite out;
    for (Exp t = 0; t < b.center.elem().j; ++t) {
      out.complement.emplace_back(BicyclicElem{0, t});
    }
    return out;
  }

  std::string reason;
  std::vector<ExtElem> candidates;
  switch (b.family.tag()) {
    case FamilyTag::Tau2: {
      auto const e = b.center.elem();
      reason = "misses the infinite set {b^i a^(j+1+l) : l >= 0}";
      for (Exp l = 0; l < 3; ++l) {
        candidates.emplace_back(BicyclicElem{e.i, e.j + 1 + l});
      }
      break;
    }
    case FamilyTag::TaupPlus: {
      auto const e = b.center.elem();
      reason = "basics fix the b-exponent; the next row is missed entirely";
      for (Exp l = 0; l < 3; ++l) {
        candidates.emplace_back(BicyclicElem{e.i + 1, e.i + 1 + l});
      }
      break;
    }
    case FamilyTag::TaupMinus: {
      auto const e = b.center.elem();
      reason = "basics fix the a-exponent; the next column is missed entirely";
      for (Exp l = 0; l < 3; ++l) {
        candidates.emplace_back(BicyclicElem{e.j + 1 + l, e.j + 1});
      }
      break;
    }
    case FamilyTag::TaupOmega: {
      auto const e = b.center.elem();
      Exp const q = prime_power(*p, b.n);
      reason = "misses the residue class of s+1 modulo p^n";
      for (Exp l = 0; l < 3; ++l) {
        candidates.emplace_back(BicyclicElem{0, e.j + 1 + l * q});
      }
      break;
    }
    default: {
      reason = "singleton in an infinite carrier";
      walk_carrier(b.family.carrier(), 0, 3, [&](ExtElem const& x) {
        if (x != b.center) {
          candidates.push_back(x);
        }
        return candidates.size() < 3;
      });
      break;
    }
  }
  NotCofinite out{reason, {}};
  for (auto const& x : candidates) {
    if (!shape.contains(x)) {
      out.missed.push_back(x);
    }
  }
  if (out.missed.empty()) {
    throw std::logic_error("nbhd_is_cofinite: no missed point for " +
                           to_string(b));
  }
  return out;
}

// Inclusion ------------------------------------------------------------------

SubsetVerdict shape_subset(Shape const& inner, Shape const& outer) {
  if (inner.carrier != outer.carrier) {
    throw std::invalid_argument("shape_subset: carriers differ");
  }
  if (inner.is_cofinite()) {
    if (outer.is_cofinite()) {
      for (auto const& w : *outer.complement) {
        if (inner.contains(w)) {
          return NotSubset{w};
        }
      }
      return Subset{};
    }
    Exp const last = max_coordinate(*inner.complement) + outer.points.size() + 3;
    std::optional<ExtElem> witness;
    walk_carrier(inner.carrier, 0, last, [&](ExtElem const& x) {
      if (inner.contains(x) && !outer.contains(x)) {
        witness = x;
        return false;
      }
      return true;
    });
    if (!witness) {
      throw UndecidedError("cofinite set against a thin set: no witness");
    }
    return NotSubset{*witness};
  }
  for (auto const& p : inner.points) {
    if (!outer.contains(p)) {
      return NotSubset{p};
    }
  }
  if (inner.ray) {
    if (auto w = ray_escape(*inner.ray, outer)) {
      return NotSubset{*w};
    }
  }
  return Subset{};
}

SubsetVerdict nbhd_subset(BasicNbhd const& inner, BasicNbhd const& outer) {
  if (inner.family.carrier() != outer.family.carrier()) {
    throw std::invalid_argument("nbhd_subset: " + inner.family.name() +
                                " and " + outer.family.name() +
                                " live on different carriers");
  }
  try {
    return shape_subset(shape_of(inner), shape_of(outer));
  } catch (UndecidedError const& e) {
    throw UndecidedError(inner.family.name() + " inside " +
                         outer.family.name() + ": " + e.what());
  }
}

bool shapes_disjoint(Shape const& a, Shape const& b) {
  if (a.carrier != b.carrier) {
    throw std::invalid_argument("shapes_disjoint: carriers differ");
  }
  for (auto const& p : a.points) {
    if (b.contains(p)) {
      return false;
    }
  }
  for (auto const& p : b.points) {
    if (a.contains(p)) {
      return false;
    }
  }
  bool const a_inf = a.is_cofinite() || a.ray.has_value();
  bool const b_inf = b.is_cofinite() || b.ray.has_value();
  if (!a_inf || !b_inf) {
    return true;
  }
  if (a.is_cofinite() || b.is_cofinite()) {
    // Every carrier is infinite: a cofinite set meets every infinite set.
    return false;
  }
  return !rays_intersect(*a.ray, *b.ray);
}

// Separation -----------------------------------------------------------------

SeparationVerdict separate(Family const& family, ExtElem const& x,
                           ExtElem const& y, Exp param_bound) {
  require_member(family, x, "separate");
  require_member(family, y, "separate");
  if (x == y) {
    throw std::invalid_argument("separate: points must be distinct");
  }
  auto checked = [&](Exp n, Exp m) -> SeparationVerdict {
    auto bx = make_basic(family, x, n);
    auto by = make_basic(family, y, m);
    if (!shapes_disjoint(shape_of(bx), shape_of(by))) {
      throw std::logic_error("separate: closed form produced meeting basics");
    }
    return SeparatedBy{bx, by};
  };

  switch (family.tag()) {
    case FamilyTag::Discrete:
      return checked(0, 0);
    case FamilyTag::TaupOmega:
    case FamilyTag::TaupPlus:
    case FamilyTag::TaupMinus: {
      auto const ex = x.elem();
      auto const ey = y.elem();
      bool const minus = family.tag() == FamilyTag::TaupMinus;
      Exp const fixed_x = minus ? ex.j : ex.i;
      Exp const fixed_y = minus ? ey.j : ey.i;
      if (fixed_x != fixed_y) {
        return checked(0, 0);
      }
      Exp const px = minus ? ex.i : ex.j;
      Exp const py = minus ? ey.i : ey.j;
      Exp const d = px > py ? px - py : py - px;
      Exp n = 0;
      while (prime_power(*family.prime(), n) <= d) {
        ++n;
      }
      return checked(n, n);
    }
    default:
      break;
  }

  for (Exp total = 0; total <= 2 * param_bound; ++total) {
    for (Exp n = total > param_bound ? total - param_bound : 0;
         n <= std::min(total, param_bound); ++n) {
      auto bx = make_basic(family, x, n);
      auto by = make_basic(family, y, total - n);
      if (shapes_disjoint(shape_of(bx), shape_of(by))) {
        return SeparatedBy{bx, by};
      }
    }
  }
  std::string reason = "no disjoint basics with parameters <= bound";
  if (family.tag() == FamilyTag::TauC) {
    reason = "cofinite basics always meet";
  } else if (family.tag() == FamilyTag::Tau2) {
    auto const ex = x.elem();
    auto const ey = y.elem();
    if (static_cast<i128>(ex.i) - ex.j == static_cast<i128>(ey.i) - ey.j) {
      reason = "co-diagonal points: the diagonal rays meet";
    }
  }
  return NotSeparatedWithinBound{param_bound, reason};
}

std::optional<Exp> excluding_param(Family const& family, ExtElem const& x,
                                   ExtElem const& y) {
  require_member(family, x, "excluding_param");
  require_member(family, y, "excluding_param");
  if (x == y) {
    return std::nullopt;
  }
  std::optional<Exp> n;
  switch (family.tag()) {
    case FamilyTag::Discrete:
      n = 0;
      break;
    case FamilyTag::Tau2: {
      auto const ex = x.elem();
      auto const ey = y.elem();
      bool const on_ray =
          ey.i > ex.i && ey.j > ex.j && ey.i - ex.i == ey.j - ex.j;
      n = on_ray ? ey.i - ex.i : 0;
      break;
    }
    case FamilyTag::TauC:
      n = std::max(y.elem().i, y.elem().j);
      break;
    case FamilyTag::TauS:
      n = x.is_zero() ? y.elem().j + 1 : 0;
      break;
    case FamilyTag::TaupOmega:
    case FamilyTag::TaupPlus:
    case FamilyTag::TaupMinus: {
      bool const minus = family.tag() == FamilyTag::TaupMinus;
      auto const ex = x.elem();
      auto const ey = y.elem();
      Exp const fx = minus ? ex.j : ex.i;
      Exp const fy = minus ? ey.j : ey.i;
      Exp const px = minus ? ex.i : ex.j;
      Exp const py = minus ? ey.i : ey.j;
      if (fx != fy || py < px) {
        n = 0;
      } else {
        n = valuation(*family.prime(), py - px) + 1;
      }
      break;
    }
  }
  if (n && nbhd_member(make_basic(family, x, *n), y)) {
    throw std::logic_error("excluding_param: closed form is wrong for " +
                           family.name());
  }
  return n;
}

bool t1_check(Family const& family, ExtElem const& x, ExtElem const& y) {
  if (x == y) {
    throw std::invalid_argument("t1_check: points must be distinct");
  }
  return excluding_param(family, x, y).has_value() &&
         excluding_param(family, y, x).has_value();
}

// Compactness ----------------------------------------------------------------

CompactnessVerdict compactness_certificate(Family const& family, Exp trunc) {
  switch (family.tag()) {
    case FamilyTag::TauS: {
      for (Exp n = 0; n <= trunc; ++n) {
        auto const v = nbhd_is_cofinite(make_basic(family, ExtElem::zero(), n));
        auto const* cof = std::get_if<Cofinite>(&v);
        if (!cof || cof->complement.size() != n * (n + 1) / 2) {
          return NoCertificate{"a basic at 0 is not cofinite"};
        }
      }
      for (auto const& e : box(Carrier::CPlus, trunc)) {
        if (nbhd_enumerate(make_basic(family, e, 0), 2).size() != 1) {
          return NoCertificate{"a point of CPLUS is not isolated"};
        }
      }
      return CompactByCofinite{"0", "|S \\ U_n(0)| = n(n+1)/2", trunc};
    }
    case FamilyTag::TauC: {
      bool const plus = family.carrier() == Carrier::CPlus;
      for (auto const& e : box(family.carrier(), trunc)) {
        for (Exp n = 0; n <= trunc; ++n) {
          auto const v = nbhd_is_cofinite(make_basic(family, e, n));
          auto const* cof = std::get_if<Cofinite>(&v);
          Exp const grid = plus ? (n + 1) * (n + 2) / 2 : (n + 1) * (n + 1);
          Exp const inside = (e.i <= n && e.j <= n) ? 1 : 0;
          if (!cof || cof->complement.size() != grid - inside) {
            return NoCertificate{"a basic is not cofinite"};
          }
        }
      }
      return CompactByCofinite{
          "every point",
          plus ? "|W_n(x)^c| = (n+1)(n+2)/2 - [x in C_n]"
               : "|W_n(x)^c| = (n+1)^2 - [x in C_n]",
          trunc};
    }
    default:
      break;
  }
  auto const v = nbhd_is_cofinite(make_basic(family, kIdentity, 1));
  if (auto const* nc = std::get_if<NotCofinite>(&v)) {
    return NoCertificate{nc->reason};
  }
  return NoCertificate{"no cofinite anchor registered for " + family.name()};
}

BasicNbhd dualize_base(BasicNbhd const& b) {
  if (b.family.tag() != FamilyTag::TaupPlus) {
    throw std::invalid_argument("dualize_base: expected a TAUP_PLUS basic, got " +
                                b.family.name());
  }
  return make_basic(Family::taup_minus(*b.family.prime()), alpha(b.center),
                    b.n);
}

}  // namespace bicyclic
