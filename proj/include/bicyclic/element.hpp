#pragma once

// Elements of the bicyclic monoid C(a,b) = <a, b | ab = 1> in the normal
// form b^i a^j, together with the carriers (submonoids and relatives) that
// every other module computes in.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bicyclic {

using Exp = std::uint64_t;

// b^i a^j. Equality is componentwise.
struct BicyclicElem {
  Exp i = 0;  // exponent of b
  Exp j = 0;  // exponent of a

  friend constexpr auto operator<=>(BicyclicElem const&,
                                    BicyclicElem const&) = default;
};

inline constexpr BicyclicElem kIdentity{0, 0};

enum class Carrier {
  Full,    // the whole bicyclic monoid
  CPlus,   // i <= j
  CMinus,  // i >= j
  Omega,   // (0, s) standing for s in (omega, +)
  SZero    // CPlus with an adjoined absorbing zero
};

std::string_view carrier_name(Carrier c);

// An element of a carrier that may contain the adjoined zero.
class ExtElem {
 public:
  constexpr ExtElem() : elem_(kIdentity) {}
  constexpr ExtElem(BicyclicElem e) : elem_(e) {}  // NOLINT: implicit by intent

  static constexpr ExtElem zero() {
    ExtElem z;
    z.elem_.reset();
    return z;
  }

  constexpr bool is_zero() const { return !elem_.has_value(); }

  // Throws std::logic_error on the zero.
  BicyclicElem const& elem() const;

  // Zero sorts before every element.
  friend constexpr auto operator<=>(ExtElem const&, ExtElem const&) = default;

 private:
  std::optional<BicyclicElem> elem_;
};

// Overflow-checked natural arithmetic. Throws std::overflow_error.
Exp checked_add(Exp a, Exp b);
Exp checked_mul(Exp a, Exp b);

// Three-case product b^k a^l * b^m a^n.
BicyclicElem mul(BicyclicElem x, BicyclicElem y);

// Membership for the three bicyclic carriers. Omega and SZero live in a
// different element universe and are rejected with std::invalid_argument.
bool in_carrier(BicyclicElem x, Carrier c);

// Membership for every carrier, zero included.
bool belongs(ExtElem const& x, Carrier c);

// Product inside a submonoid. Non-members are a precondition violation
// (std::invalid_argument); a product escaping the carrier is a logic_error.
BicyclicElem mul_closed(BicyclicElem x, BicyclicElem y, Carrier c);

// b^i a^j -> b^j a^i. Anti-isomorphism CPlus <-> CMinus, involution on Full.
constexpr BicyclicElem alpha(BicyclicElem x) { return {x.j, x.i}; }
ExtElem alpha(ExtElem const& x);

// Multiplication in S = CPlus + {0}; zero is absorbing.
ExtElem mul_s(ExtElem const& x, ExtElem const& y);

// Multiplication in whichever carrier `c` names.
ExtElem mul_in(Carrier c, ExtElem const& x, ExtElem const& y);

// iota_k(s) = b^k a^(k+s), an isomorphism of (omega, +) onto the row R_k.
BicyclicElem iota(Exp k, Exp s);
// Inverse of iota_k; throws std::invalid_argument outside R_k.
Exp iota_inv(Exp k, BicyclicElem x);

// All carrier elements with both exponents <= bound, in lexicographic order.
// For SZero the zero is not included; see box_ext.
std::vector<BicyclicElem> box(Carrier c, Exp bound);
std::vector<ExtElem> box_ext(Carrier c, Exp bound);

// Carrier elements with max(i, j) == r, in lexicographic order.
std::vector<BicyclicElem> shell(Carrier c, Exp r);

// "1" for the identity, otherwise "b^i a^j" with zero powers omitted and
// unit powers written bare ("b a" for (1,1)). The zero prints as "0".
std::string to_string(BicyclicElem x);
std::string to_string(ExtElem const& x);

}  // namespace bicyclic
