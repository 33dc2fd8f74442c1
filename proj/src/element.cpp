#include "bicyclic/element.hpp"

#include <limits>
#include <stdexcept>

namespace bicyclic {

std::string_view carrier_name(Carrier c) {
  switch (c) {
    case Carrier::Full:
      return "FULL";
    case Carrier::CPlus:
      return "CPLUS";
    case Carrier::CMinus:
      return "CMINUS";
    case Carrier::Omega:
      return "OMEGA";
    case Carrier::SZero:
      return "S_ZERO";
  }
  return "?";
}

BicyclicElem const& ExtElem::elem() const {
  if (!elem_) {
    throw std::logic_error("the adjoined zero has no exponent pair");
  }
  return *elem_;
}

Exp checked_add(Exp a, Exp b) {
  if (a > std::numeric_limits<Exp>::max() - b) {
    throw std::overflow_error("exponent overflow in addition");
  }
  return a + b;
}

Exp checked_mul(Exp a, Exp b) {
  if (a != 0 && b > std::numeric_limits<Exp>::max() / a) {
    throw std::overflow_error("exponent overflow in multiplication");
  }
  return a * b;
}

BicyclicElem mul(BicyclicElem x, BicyclicElem y) {
  if (x.j < y.i) {
    return {checked_add(x.i, y.i - x.j), y.j};
  }
  if (x.j == y.i) {
    return {x.i, y.j};
  }
  return {x.i, checked_add(x.j - y.i, y.j)};
}

bool in_carrier(BicyclicElem x, Carrier c) {
  switch (c) {
    case Carrier::Full:
      return true;
    case Carrier::CPlus:
      return x.i <= x.j;
    case Carrier::CMinus:
      return x.i >= x.j;
    case Carrier::Omega:
    case Carrier::SZero:
      break;
  }
  throw std::invalid_argument("in_carrier: carrier " +
                              std::string(carrier_name(c)) +
                              " is not a submonoid of the bicyclic monoid");
}

bool belongs(ExtElem const& x, Carrier c) {
  if (x.is_zero()) {
    return c == Carrier::SZero;
  }
  auto const& e = x.elem();
  switch (c) {
    case Carrier::Omega:
      return e.i == 0;
    case Carrier::SZero:
      return e.i <= e.j;
    default:
      return in_carrier(e, c);
  }
}

BicyclicElem mul_closed(BicyclicElem x, BicyclicElem y, Carrier c) {
  if (!in_carrier(x, c) || !in_carrier(y, c)) {
    throw std::invalid_argument("mul_closed: operand outside carrier " +
                                std::string(carrier_name(c)));
  }
  auto const r = mul(x, y);
  if (!in_carrier(r, c)) {
    throw std::logic_error("mul_closed: product " + to_string(r) +
                           " escaped carrier " + std::string(carrier_name(c)));
  }
  return r;
}

ExtElem alpha(ExtElem const& x) {
  return x.is_zero() ? x : ExtElem(alpha(x.elem()));
}

ExtElem mul_s(ExtElem const& x, ExtElem const& y) {
  if (!belongs(x, Carrier::SZero) || !belongs(y, Carrier::SZero)) {
    throw std::invalid_argument("mul_s: operand outside S");
  }
  if (x.is_zero() || y.is_zero()) {
    return ExtElem::zero();
  }
  return mul_closed(x.elem(), y.elem(), Carrier::CPlus);
}

ExtElem mul_in(Carrier c, ExtElem const& x, ExtElem const& y) {
  switch (c) {
    case Carrier::SZero:
      return mul_s(x, y);
    case Carrier::Omega: {
      if (!belongs(x, c) || !belongs(y, c)) {
        throw std::invalid_argument("mul_in: operand outside OMEGA");
      }
      return BicyclicElem{0, checked_add(x.elem().j, y.elem().j)};
    }
    case Carrier::Full:
      return mul(x.elem(), y.elem());
    default:
      return mul_closed(x.elem(), y.elem(), c);
  }
}

BicyclicElem iota(Exp k, Exp s) { return {k, checked_add(k, s)}; }

Exp iota_inv(Exp k, BicyclicElem x) {
  if (x.i != k || x.j < k) {
    throw std::invalid_argument("iota_inv: " + to_string(x) +
                                " is not in the row R_" + std::to_string(k));
  }
  return x.j - k;
}

std::vector<BicyclicElem> box(Carrier c, Exp bound) {
  std::vector<BicyclicElem> out;
  if (c == Carrier::Omega) {
    for (Exp s = 0; s <= bound; ++s) {
      out.push_back({0, s});
    }
    return out;
  }
  auto const base = c == Carrier::SZero ? Carrier::CPlus : c;
  for (Exp i = 0; i <= bound; ++i) {
    for (Exp j = 0; j <= bound; ++j) {
      if (in_carrier({i, j}, base)) {
        out.push_back({i, j});
      }
    }
  }
  return out;
}

std::vector<ExtElem> box_ext(Carrier c, Exp bound) {
  std::vector<ExtElem> out;
  if (c == Carrier::SZero) {
    out.push_back(ExtElem::zero());
  }
  for (auto const& e : box(c, bound)) {
    out.emplace_back(e);
  }
  return out;
}

std::vector<BicyclicElem> shell(Carrier c, Exp r) {
  std::vector<BicyclicElem> out;
  if (c == Carrier::Omega) {
    out.push_back({0, r});
    return out;
  }
  auto const base = c == Carrier::SZero ? Carrier::CPlus : c;
  for (Exp i = 0; i < r; ++i) {
    if (in_carrier({i, r}, base)) {
      out.push_back({i, r});
    }
  }
  for (Exp j = 0; j <= r; ++j) {
    if (in_carrier({r, j}, base)) {
      out.push_back({r, j});
    }
  }
  return out;
}

std::string to_string(BicyclicElem x) {
  if (x == kIdentity) {
    return "1";
  }
  auto power = [](char g, Exp e) {
    std::string s(1, g);
    if (e != 1) {
      s += '^' + std::to_string(e);
    }
    return s;
  };
  std::string out;
  if (x.i > 0) {
    out = power('b', x.i);
  }
  if (x.j > 0) {
    if (!out.empty()) {
      out += ' ';
    }
    out += power('a', x.j);
  }
  return out;
}

std::string to_string(ExtElem const& x) {
  return x.is_zero() ? std::string("0") : to_string(x.elem());
}

}  // namespace bicyclic
