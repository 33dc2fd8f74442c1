// Command-line front end: verify claims, explore expressions, diff reports.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bicyclic/explore.hpp"
#include "bicyclic/report.hpp"

namespace {

constexpr int kMismatch = 1;
constexpr int kUsage = 2;

void emit(std::string const& text, bicyclic::RunConfig const& cfg) {
  if (!cfg.out) {
    std::cout << text;
    return;
  }
  std::ofstream f(*cfg.out);
  if (!f) throw bicyclic::ConfigError("cannot write " + *cfg.out);
  f << text;
}

nlohmann::json load(std::string const& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot read " + path);
  try {
    return nlohmann::json::parse(f);
  } catch (nlohmann::json::parse_error const& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

int verify(std::string const& claim, bicyclic::RunConfig const& cfg) {
  auto const reports = bicyclic::run_claims(claim, cfg);
  if (cfg.format == bicyclic::Format::Json) {
    emit(bicyclic::report_document(reports).dump(2) + "\n", cfg);
  } else {
    emit(bicyclic::render_text(reports), cfg);
  }
  auto const diff = bicyclic::prediction_diff(reports);
  for (auto const& line : diff) std::cerr << line << "\n";
  return diff.empty() ? 0 : kMismatch;
}

int explore(std::string const& expr, bicyclic::RunConfig const& cfg) {
  auto const ev = bicyclic::evaluate(bicyclic::parse_expression(expr));
  if (cfg.format == bicyclic::Format::Json) {
    emit(bicyclic::to_json(ev).dump(2) + "\n", cfg);
  } else {
    emit(bicyclic::render_text(ev), cfg);
  }
  return 0;
}

int diff(std::string const& golden, std::string const& fresh) {
  auto const lines = bicyclic::diff_reports(load(golden), load(fresh));
  for (auto const& l : lines) std::cout << l << "\n";
  return lines.empty() ? 0 : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bicyclic monoid workbench"};
  app.require_subcommand(1);

  bicyclic::RunConfig cfg;
  std::string out;
  app.add_option("--prime", cfg.prime, "prime p")->envname("BICYCLIC_PRIME");
  app.add_option("--elem-bound", cfg.elem_bound, "element exponent bound")
      ->envname("BICYCLIC_ELEM_BOUND");
  app.add_option("--param-bound", cfg.param_bound, "neighbourhood parameter bound")
      ->envname("BICYCLIC_PARAM_BOUND");
  app.add_option("--witness-bound", cfg.witness_bound, "witness search bound")
      ->envname("BICYCLIC_WITNESS_BOUND");
  app.add_option("--format", cfg.format, "output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, bicyclic::Format>{{"text", bicyclic::Format::Text},
                                                  {"json", bicyclic::Format::Json}}))
      ->envname("BICYCLIC_FORMAT");
  app.add_option("--out", out, "write the output to PATH")->envname("BICYCLIC_OUT");
  app.fallthrough();

  std::string claim;
  auto* v = app.add_subcommand("verify", "check a claim group against its prediction");
  v->add_option("claim", claim, "prop3 | prop4 | green | eq29 | lemma10 | thm6 | taus | "
                                "tau2 | tauc | prop15 | remark16 | prop17 | all")
      ->required();

  std::string expr;
  auto* e = app.add_subcommand("explore", "evaluate a product expression");
  e->add_option("expr", expr, "e.g. \"b^2 a^3 * b a^2 in cplus\"")->required();

  std::string golden, fresh;
  auto* d = app.add_subcommand("diff", "compare two report files, ignoring durations");
  d->add_option("golden", golden)->required();
  d->add_option("fresh", fresh)->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& err) {
    int const code = app.exit(err);
    return code == 0 ? 0 : kUsage;
  }
  if (!out.empty()) cfg.out = out;

  try {
    if (v->parsed()) return verify(claim, cfg);
    if (e->parsed()) return explore(expr, cfg);
    return diff(golden, fresh);
  } catch (bicyclic::ParseError const& err) {
    std::cerr << expr << "\n" << std::string(err.column() - 1, ' ') << "^\n"
              << err.what() << "\n";
    return kUsage;
  } catch (std::invalid_argument const& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  }
}
