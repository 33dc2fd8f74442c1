#include "bicyclic/explore.hpp"

#include <cctype>
#include <charconv>

#include "bicyclic/serialize.hpp"

namespace bicyclic {

ParseError::ParseError(std::string const& msg, std::size_t column)
    : std::invalid_argument("parse error at column " + std::to_string(column) + ": " + msg),
      column_(column) {}

namespace {

constexpr Carrier kAllCarriers[] = {Carrier::Full, Carrier::CPlus, Carrier::CMinus,
                                    Carrier::Omega, Carrier::SZero};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expression run() {
    Expression e;
    skip();
    e.factors.push_back(element());
    skip();
    while (peek() == '*') {
      ++pos_;
      skip();
      e.factors.push_back(element());
      skip();
    }
    if (at_word("in")) {
      pos_ += 2;
      skip();
      e.query = carrier();
      skip();
    }
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(std::string const& msg) const { throw ParseError(msg, pos_ + 1); }

  bool at_word(std::string_view w) const {
    if (text_.substr(pos_, w.size()) != w) return false;
    auto const next = pos_ + w.size();
    return next == text_.size() || !std::isalnum(static_cast<unsigned char>(text_[next]));
  }

  Exp exponent() {
    if (peek() != '^') return 1;
    ++pos_;
    skip();
    auto const start = pos_;
    Exp value = 0;
    auto const* first = text_.data() + pos_;
    auto const [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), value);
    if (ec == std::errc::result_out_of_range) fail("exponent too large");
    if (ec != std::errc() || ptr == first) fail("expected a number after '^'");
    pos_ = start + static_cast<std::size_t>(ptr - first);
    return value;
  }

  ExtElem element() {
    char const c = peek();
    if (c == '1' || c == '0') {
      ++pos_;
      if (std::isdigit(static_cast<unsigned char>(peek()))) fail("only 1 and 0 are literals");
      return c == '1' ? ExtElem(kIdentity) : ExtElem::zero();
    }
    BicyclicElem x{0, 0};
    bool any = false;
    if (c == 'b') {
      ++pos_;
      skip();
      x.i = exponent();
      skip();
      any = true;
    }
    if (peek() == 'a') {
      ++pos_;
      skip();
      x.j = exponent();
      any = true;
    }
    if (!any) fail(pos_ < text_.size() ? "expected an element" : "unexpected end of input");
    return x;
  }

  Carrier carrier() {
    for (auto const& [word, c] : {std::pair{"full", Carrier::Full},
                                  std::pair{"cplus", Carrier::CPlus},
                                  std::pair{"cminus", Carrier::CMinus},
                                  std::pair{"omega", Carrier::Omega},
                                  std::pair{"s", Carrier::SZero}}) {
      if (at_word(word)) {
        pos_ += std::string_view(word).size();
        return c;
      }
    }
    fail("expected a carrier (full, cplus, cminus, omega, s)");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression parse_expression(std::string_view text) { return Parser(text).run(); }

Evaluation evaluate(Expression const& e) {
  Evaluation ev;
  ev.factors = e.factors;
  ev.query = e.query;
  for (auto const& f : e.factors) {
    ev.uses_zero = ev.uses_zero || f.is_zero();
  }
  if (ev.uses_zero) {
    for (auto const& f : e.factors) {
      if (!belongs(f, Carrier::SZero)) {
        throw CarrierMismatch("carrier mismatch: " + to_string(f) +
                              " is not in S (products with 0 are taken in S)");
      }
    }
  }
  ev.value = e.factors.front();
  for (std::size_t k = 1; k < e.factors.size(); ++k) {
    ev.value = ev.uses_zero ? mul_s(ev.value, e.factors[k])
                            : ExtElem(mul(ev.value.elem(), e.factors[k].elem()));
  }
  for (auto c : kAllCarriers) {
    ev.membership.emplace_back(c, belongs(ev.value, c));
  }
  return ev;
}

std::string render_text(Evaluation const& ev) {
  std::string out = to_string(ev.value) + "\n";
  for (auto const& [c, in] : ev.membership) {
    out += "  " + std::string(carrier_name(c)) + ": " + (in ? "yes" : "no") + "\n";
  }
  if (ev.query) {
    bool const in = belongs(ev.value, *ev.query);
    out += "in " + std::string(carrier_name(*ev.query)) + ": " + (in ? "true" : "false") + "\n";
  }
  return out;
}

nlohmann::json to_json(Evaluation const& ev) {
  nlohmann::json members = nlohmann::json::object();
  for (auto const& [c, in] : ev.membership) {
    members[std::string(carrier_name(c))] = in;
  }
  nlohmann::json j = {{"factors", ev.factors},
                      {"value", ev.value},
                      {"normal_form", to_string(ev.value)},
                      {"semantics", ev.uses_zero ? "S" : "FULL"},
                      {"membership", members}};
  if (ev.query) {
    j["query"] = {{"carrier", carrier_name(*ev.query)},
                  {"member", belongs(ev.value, *ev.query)}};
  }
  return j;
}

}  // namespace bicyclic
