#include <doctest.h>

#include <limits>
#include <set>

#include "bicyclic/division.hpp"
#include "bicyclic/element.hpp"
#include "bicyclic/green.hpp"
#include "bicyclic/ideals.hpp"
#include "support.hpp"

using namespace bicyclic;
using BE = BicyclicElem;

TEST_CASE("word oracle agrees with itself on the defining relation") {
  CHECK(oracle::reduce("ab") == oracle::Pair{0, 0});
  CHECK(oracle::reduce("ba") == oracle::Pair{1, 1});
  CHECK(oracle::reduce("aabbb") == oracle::Pair{1, 0});
}

TEST_CASE("mul examples") {
  CHECK(mul({0, 0}, {3, 5}) == BE{3, 5});
  CHECK(mul({2, 3}, {1, 2}) == BE{2, 4});
  CHECK(mul({1, 1}, {3, 4}) == BE{3, 4});
}

TEST_CASE("mul matches word rewriting") {
  for (auto x : box(Carrier::Full, 9)) {
    for (auto y : box(Carrier::Full, 9)) {
      REQUIRE(P(mul(x, y)) == oracle::mul(P(x), P(y)));
    }
  }
}

TEST_CASE("associativity up to 12") {
  auto const xs = box(Carrier::Full, 12);
  for (auto x : xs) {
    for (auto y : xs) {
      auto const xy = mul(x, y);
      for (auto z : xs) {
        if (mul(xy, z) != mul(x, mul(y, z))) {
          FAIL("associativity fails at " << to_string(x) << ", " << to_string(y) << ", "
                                         << to_string(z));
        }
      }
    }
  }
}

TEST_CASE("overflow is reported, not wrapped") {
  Exp const big = std::numeric_limits<Exp>::max();
  CHECK_THROWS_AS(mul({0, big}, {0, 1}), std::overflow_error);
  CHECK_THROWS_AS(mul({big, 0}, {1, 1}), std::overflow_error);
}

TEST_CASE("in_carrier") {
  CHECK(in_carrier({1, 3}, Carrier::CPlus));
  CHECK_FALSE(in_carrier({3, 1}, Carrier::CPlus));
  CHECK(in_carrier({2, 2}, Carrier::CMinus));
  CHECK(in_carrier({7, 2}, Carrier::Full));
  CHECK_THROWS_AS(in_carrier({0, 1}, Carrier::Omega), std::invalid_argument);
  CHECK_THROWS_AS(in_carrier({0, 1}, Carrier::SZero), std::invalid_argument);
}

TEST_CASE("mul_closed examples and preconditions") {
  CHECK(mul_closed({1, 2}, {1, 3}, Carrier::CPlus) == BE{1, 4});
  CHECK(mul_closed({0, 1}, {1, 1}, Carrier::CPlus) == BE{0, 1});
  CHECK(mul_closed({0, 0}, {4, 9}, Carrier::CPlus) == BE{4, 9});
  CHECK_THROWS_AS(mul_closed({3, 1}, {0, 0}, Carrier::CPlus), std::invalid_argument);
}

TEST_CASE("closure of both submonoids up to 30") {
  for (auto c : {Carrier::CPlus, Carrier::CMinus}) {
    auto const xs = box(c, 30);
    for (auto x : xs) {
      for (auto y : xs) {
        REQUIRE(oracle::in(oracle::mul(P(x), P(y)), S(c)));
      }
    }
  }
}

TEST_CASE("alpha") {
  CHECK(alpha(BE{1, 3}) == BE{3, 1});
  CHECK(alpha(BE{0, 0}) == BE{0, 0});
  CHECK(alpha(mul({1, 2}, {1, 3})) == BE{4, 1});
  CHECK(mul({3, 1}, {2, 1}) == BE{4, 1});
  CHECK(alpha(ExtElem::zero()).is_zero());
  std::set<BE> image;
  for (auto x : box(Carrier::Full, 30)) {
    REQUIRE(alpha(alpha(x)) == x);
    image.insert(alpha(x));
    if (in_carrier(x, Carrier::CPlus)) REQUIRE(in_carrier(alpha(x), Carrier::CMinus));
  }
  CHECK(image.size() == 31 * 31);
}

TEST_CASE("alpha is an anti-homomorphism up to 30") {
  auto const xs = box(Carrier::Full, 30);
  for (auto x : xs) {
    for (auto y : xs) {
      auto const xy = oracle::mul(P(x), P(y));
      REQUIRE(P(mul(alpha(y), alpha(x))) == oracle::Pair{xy.second, xy.first});
    }
  }
}

TEST_CASE("solve_right_div examples") {
  CHECK(solve_right_div({1, 2}, {1, 3}, Carrier::CPlus) ==
        std::vector<BE>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(solve_right_div({1, 2}, {1, 3}, Carrier::CPlus) ==
        E(oracle::right_div({1, 2}, {1, 3}, oracle::Set::Plus, 10)));
  CHECK(solve_right_div({0, 0}, {2, 5}, Carrier::CPlus) == std::vector<BE>{{2, 5}});
  CHECK(solve_right_div({0, 1}, {3, 2}, Carrier::CPlus).empty());
  CHECK(oracle::right_div({0, 1}, {3, 2}, oracle::Set::Plus, 10).empty());
}

TEST_CASE("solve_left_div examples") {
  // Frozen from the oracle: no u in CPLUS has u * (1,2) = (0,1).
  auto const frozen = oracle::left_div({1, 2}, {0, 1}, oracle::Set::Plus, 10);
  CHECK(frozen.empty());
  CHECK(solve_left_div({1, 2}, {0, 1}, Carrier::CPlus) == E(frozen));
  CHECK(solve_left_div({0, 0}, {1, 4}, Carrier::CPlus) == std::vector<BE>{{1, 4}});
}

TEST_CASE("division equals brute force") {
  for (auto c : {Carrier::CPlus, Carrier::CMinus}) {
    auto const xs = box(c, 10);
    for (auto v : xs) {
      for (auto w : xs) {
        Exp const reach = std::max({v.i, v.j, w.i, w.j}) + 5;
        REQUIRE(solve_right_div(v, w, c) == E(oracle::right_div(P(v), P(w), S(c), reach)));
        REQUIRE(solve_left_div(v, w, c) == E(oracle::left_div(P(v), P(w), S(c), reach)));
      }
    }
  }
  // The full monoid needs twice the exponents: (k,0) * (0,k) style pairs.
  auto const xs = box(Carrier::Full, 5);
  for (auto v : xs) {
    for (auto w : xs) {
      Exp const reach = 2 * std::max({v.i, v.j, w.i, w.j}) + 1;
      REQUIRE(solve_right_div(v, w, Carrier::Full) ==
              E(oracle::right_div(P(v), P(w), oracle::Set::Full, reach)));
      REQUIRE(solve_left_div(v, w, Carrier::Full) ==
              E(oracle::left_div(P(v), P(w), oracle::Set::Full, reach)));
    }
  }
}

TEST_CASE("left division is dual to right division") {
  for (auto v : box(Carrier::CPlus, 8)) {
    for (auto w : box(Carrier::CPlus, 8)) {
      std::vector<BE> dual;
      for (auto u : solve_right_div(alpha(v), alpha(w), Carrier::CMinus)) {
        dual.push_back(alpha(u));
      }
      std::sort(dual.begin(), dual.end());
      REQUIRE(solve_left_div(v, w, Carrier::CPlus) == dual);
    }
  }
}

TEST_CASE("division rejects a divisor outside the carrier") {
  CHECK_THROWS_AS(solve_right_div({3, 1}, {0, 0}, Carrier::CPlus), std::invalid_argument);
  CHECK_THROWS_AS(solve_left_div({3, 1}, {0, 0}, Carrier::CPlus), std::invalid_argument);
}

TEST_CASE("green_related examples") {
  auto const refl = green_related(GreenRelation::L, {1, 2}, {1, 2}, Carrier::CPlus, 10);
  CHECK(refl.related());
  CHECK(refl.exact);
  auto const r = green_related(GreenRelation::R, {0, 1}, {1, 2}, Carrier::CPlus, 10);
  CHECK_FALSE(r.related());
  CHECK(r.exact);
  auto const j = green_related(GreenRelation::J, {0, 0}, {1, 1}, Carrier::CPlus, 10);
  CHECK_FALSE(j.related());
  CHECK_FALSE(j.exact);
  CHECK(j.bound == 10);
}

TEST_CASE("green relations against principal ideals") {
  // u R v iff uS = vS; in a monoid membership of each in the other's ideal
  // suffices. Multipliers up to 20 cover every solution at this scale.
  for (auto c : {Carrier::CPlus, Carrier::CMinus}) {
    auto const xs = box(c, 5);
    for (auto u : xs) {
      auto const ru = oracle::right_principal(P(u), S(c), 20);
      auto const lu = oracle::left_principal(P(u), S(c), 20);
      for (auto v : xs) {
        auto const rv = oracle::right_principal(P(v), S(c), 20);
        auto const lv = oracle::left_principal(P(v), S(c), 20);
        bool const r = ru.count(P(v)) && rv.count(P(u));
        bool const l = lu.count(P(v)) && lv.count(P(u));
        REQUIRE(green_related(GreenRelation::R, u, v, c, 16).related() == r);
        REQUIRE(green_related(GreenRelation::L, u, v, c, 16).related() == l);
        REQUIRE(green_related(GreenRelation::H, u, v, c, 16).related() == (r && l));
      }
    }
  }
}

TEST_CASE("green triviality up to 8 with witness bound 16") {
  for (auto c : {Carrier::CPlus, Carrier::CMinus}) {
    auto const xs = box(c, 8);
    for (auto rel : kAllRelations) {
      for (auto u : xs) {
        REQUIRE(green_related(rel, u, u, c, 16).related());
      }
      auto const classes = green_classes(rel, c, 8, 16);
      REQUIRE(classes.size() == xs.size());
      for (auto const& k : classes) REQUIRE(k.size() == 1);
    }
    for (auto u : xs) {
      for (auto v : xs) {
        auto const d = green_related(GreenRelation::D, u, v, c, 16);
        REQUIRE(d.compositions_agree);
        REQUIRE(d.related() == (u == v));
      }
    }
  }
}

TEST_CASE("green_classes examples") {
  auto const l = green_classes(GreenRelation::L, Carrier::CPlus, 3, 10);
  CHECK(l.size() == 10);
  CHECK(green_classes(GreenRelation::H, Carrier::CPlus, 0, 5) ==
        std::vector<std::vector<BE>>{{{0, 0}}});
  auto const r = green_classes(GreenRelation::R, Carrier::CMinus, 2, 10);
  CHECK(r.size() == 6);
  for (auto const& k : r) CHECK(k.size() == 1);
  CHECK_THROWS_AS(green_classes(GreenRelation::R, Carrier::Full, 2, 10),
                  std::invalid_argument);
}

TEST_CASE("right_ideal examples") {
  CHECK(right_ideal(2, Carrier::CPlus, 3) ==
        std::vector<BE>{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}});
  CHECK(right_ideal(0, Carrier::CPlus, 2) == box(Carrier::CPlus, 2));
  auto const big = right_ideal(3, Carrier::CPlus, 5);
  CHECK(std::find(big.begin(), big.end(), BE{1, 5}) != big.end());
  CHECK_THROWS_AS(right_ideal(1, Carrier::CMinus, 3), std::invalid_argument);
}

TEST_CASE("right_ideal equals truncated products") {
  Exp const trunc = 12;
  for (Exp i = 0; i <= 6; ++i) {
    std::set<oracle::Pair> products;
    for (auto x : oracle::grid(oracle::Set::Plus, 2 * trunc)) {
      auto const w = oracle::mul(x, {i, i});
      if (w.first <= trunc && w.second <= trunc) products.insert(w);
    }
    REQUIRE(right_ideal(i, Carrier::CPlus, trunc) ==
            E(std::vector<oracle::Pair>(products.begin(), products.end())));
  }
}

TEST_CASE("finite_open_nbhd") {
  CHECK(finite_open_nbhd({1, 2}) ==
        std::vector<BE>{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}});
  CHECK(finite_open_nbhd({0, 0}) == std::vector<BE>{{0, 0}});
  CHECK(finite_open_nbhd({0, 4}).size() == 15);
  CHECK_THROWS_AS(finite_open_nbhd({2, 1}), std::invalid_argument);
  for (auto x : box(Carrier::CPlus, 20)) {
    auto const u = finite_open_nbhd(x);
    REQUIRE(u.size() == (x.j + 1) * (x.j + 2) / 2);
    REQUIRE(std::find(u.begin(), u.end(), x) != u.end());
    for (Exp trunc : {x.j, x.j + 3, Exp{25}}) {
      for (auto y : right_ideal(x.j + 1, Carrier::CPlus, trunc)) {
        REQUIRE(std::find(u.begin(), u.end(), y) == u.end());
      }
    }
  }
}

TEST_CASE("mul_s") {
  auto const z = ExtElem::zero();
  CHECK(mul_s(z, BE{1, 2}).is_zero());
  CHECK(mul_s(BE{0, 0}, z).is_zero());
  CHECK(mul_s(BE{1, 2}, BE{1, 3}) == ExtElem(BE{1, 4}));
  CHECK_THROWS_AS(mul_s(BE{2, 1}, z), std::invalid_argument);
  auto const xs = box_ext(Carrier::SZero, 8);
  CHECK(xs.front().is_zero());
  for (auto const& x : xs) {
    for (auto const& y : xs) {
      auto const xy = mul_s(x, y);
      if (!x.is_zero() && !y.is_zero()) {
        REQUIRE(xy == ExtElem(E(oracle::mul(P(x.elem()), P(y.elem())))));
      } else {
        REQUIRE(xy.is_zero());
      }
      for (auto const& w : xs) {
        REQUIRE(mul_s(xy, w) == mul_s(x, mul_s(y, w)));
      }
    }
  }
}

TEST_CASE("iota") {
  CHECK(iota(2, 3) == BE{2, 5});
  CHECK(iota(0, 0) == BE{0, 0});
  CHECK(mul(iota(1, 2), iota(1, 3)) == BE{1, 6});
  CHECK(iota(1, 5) == BE{1, 6});
  CHECK_THROWS_AS(iota_inv(1, BE{2, 5}), std::invalid_argument);
  CHECK_THROWS_AS(iota_inv(2, BE{2, 1}), std::invalid_argument);
  for (Exp k = 0; k <= 20; ++k) {
    for (Exp a = 0; a <= 20; ++a) {
      REQUIRE(iota_inv(k, iota(k, a)) == a);
      for (Exp b = 0; b <= 20; ++b) {
        REQUIRE(P(iota(k, a + b)) == oracle::mul(P(iota(k, a)), P(iota(k, b))));
      }
    }
  }
}

TEST_CASE("string forms") {
  CHECK(to_string(BE{0, 0}) == "1");
  CHECK(to_string(BE{2, 4}) == "b^2 a^4");
  CHECK(to_string(BE{1, 1}) == "b a");
  CHECK(to_string(BE{0, 4}) == "a^4");
  CHECK(to_string(ExtElem::zero()) == "0");
}

TEST_CASE("enumeration order is componentwise") {
  auto const xs = box(Carrier::CPlus, 4);
  CHECK(std::is_sorted(xs.begin(), xs.end()));
  CHECK(xs.size() == 15);
  CHECK(shell(Carrier::Full, 2).size() == 5);
}
