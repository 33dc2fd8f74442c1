#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bicyclic/element.hpp"

namespace bicyclic {

enum class Format { Text, Json };

struct RunConfig {
  Exp prime = 2;
  Exp elem_bound = 12;
  Exp param_bound = 8;
  Exp witness_bound = 16;
  Format format = Format::Text;
  std::optional<std::string> out;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws ConfigError: p must be prime, param and witness bounds >= 1.
// elem_bound may be 0 (the one-element box).
void validate(RunConfig const& cfg);

struct ClaimReport {
  std::string claim;
  std::string section;
  std::string quote;
  std::string prediction;
  std::string verdict;
  bool matches_prediction = false;
  nlohmann::json bounds = nlohmann::json::object();
  nlohmann::json witnesses = nlohmann::json::array();
  double runtime_ms = 0;
};

nlohmann::json to_json(ClaimReport const& r);

// Claim groups accepted by `verify`, without "all".
std::vector<std::string_view> const& claim_groups();

// Operations of the algebra, topology and continuity modules that a group
// exercises. The union over all groups is checked by the test suite.
std::vector<std::string_view> const& group_operations(std::string_view group);
std::vector<std::string_view> const& all_operations();

// Runs one group, or every group for "all" (concurrently). Reports are
// sorted by claim id. Throws ConfigError for an unknown group.
std::vector<ClaimReport> run_claims(std::string_view group, RunConfig const& cfg);

// {"schema": 1, "reports": [...]}
nlohmann::json report_document(std::vector<ClaimReport> const& reports);
std::string render_text(std::vector<ClaimReport> const& reports);

// Claims whose verdict does not match the prediction, one line each.
std::vector<std::string> prediction_diff(std::vector<ClaimReport> const& reports);

// Semantic comparison of two report documents (object form or bare array),
// ignoring durations. Empty when equal. Throws std::invalid_argument on
// malformed input.
std::vector<std::string> diff_reports(nlohmann::json const& golden,
                                      nlohmann::json const& fresh);

}  // namespace bicyclic
