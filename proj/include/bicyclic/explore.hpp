#pragma once

// Tiny expression language for the `explore` subcommand:
//   expr    := product [ "in" carrier ]
//   product := element ( "*" element )*
//   element := "1" | "0" | "b" [ "^" N ] [ "a" [ "^" N ] ] | "a" [ "^" N ]
//   carrier := full | cplus | cminus | omega | s

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bicyclic/element.hpp"

namespace bicyclic {

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::string const& msg, std::size_t column);
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;  // 1-based
};

class CarrierMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Expression {
  std::vector<ExtElem> factors;
  std::optional<Carrier> query;
};

Expression parse_expression(std::string_view text);

struct Evaluation {
  std::vector<ExtElem> factors;
  ExtElem value;
  bool uses_zero = false;  // evaluated in S
  std::optional<Carrier> query;
  // Membership of the value in each carrier, in the order full, cplus,
  // cminus, omega, s.
  std::vector<std::pair<Carrier, bool>> membership;
};

// Throws CarrierMismatch when a factor of a product involving 0 is outside S.
Evaluation evaluate(Expression const& e);

std::string render_text(Evaluation const& ev);
nlohmann::json to_json(Evaluation const& ev);

}  // namespace bicyclic
