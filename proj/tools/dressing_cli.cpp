// Command line front end for the verification harness.
//
//   dressing verify <suite> [--seed N] [--trials N] [--points N]
//                   [--tol id=val ...] [--fixture path] [--report path]
//   dressing explain <property-id>
//
// Exit codes: 0 every selected property passed, 1 at least one residual
// exceeded its tolerance, 2 usage / fixture / configuration error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dressing/harness.hpp"

namespace hn = dressing::harness;

namespace {

int run_verify(const std::string& suite, uint64_t seed, int trials, int points,
               const std::vector<std::string>& tol_kv,
               const std::string& fixture_path, const std::string& report_path) {
  hn::SuiteConfig cfg;
  cfg.suite = suite;
  cfg.seed = seed;
  cfg.trials = trials;
  cfg.points = points;

  for (const auto& kv : tol_kv) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == kv.size()) {
      std::cerr << "bad --tol argument (want id=value): " << kv << "\n";
      return 2;
    }
    std::string id = kv.substr(0, eq);
    char* end = nullptr;
    double val = std::strtod(kv.c_str() + eq + 1, &end);
    if (end == nullptr || *end != '\0' || !(val > 0.0)) {
      std::cerr << "bad --tol value for " << id << ": " << kv.substr(eq + 1)
                << "\n";
      return 2;
    }
    cfg.tol_overrides[id] = val;
  }

  nlohmann::json fixture;
  if (!fixture_path.empty()) {
    std::ifstream in(fixture_path);
    if (!in) {
      std::cerr << "cannot open fixture file: " << fixture_path << "\n";
      return 2;
    }
    try {
      in >> fixture;
    } catch (const std::exception& e) {
      std::cerr << "cannot parse fixture file: " << e.what() << "\n";
      return 2;
    }
    cfg.fixture = &fixture;
  }

  hn::Report rep;
  try {
    hn::check_coverage();
    rep = hn::run_suite(cfg);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  std::cout << rep.text();
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) {
      std::cerr << "cannot write report file: " << report_path << "\n";
      return 2;
    }
    out << rep.to_json().dump(2) << "\n";
  }
  if (rep.had_error) return 2;
  return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dressing field method verification harness"};
  app.require_subcommand(1);

  std::string suite = "all";
  uint64_t seed = 42;
  int trials = 20;
  int points = 20;
  std::vector<std::string> tol_kv;
  std::string fixture_path, report_path;

  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("suite", suite, "core | brst | ew | gr | conformal | all")
      ->required()
      ->check([](const std::string& s) {
        return hn::known_suite(s) ? std::string{}
                                  : "unknown suite: " + s;
      });
  verify->add_option("--seed", seed, "base seed for the trial streams");
  verify->add_option("--trials", trials, "trials per property")
      ->check(CLI::PositiveNumber);
  verify->add_option("--points", points, "chart sample points per trial")
      ->check(CLI::PositiveNumber);
  verify->add_option("--tol", tol_kv, "tolerance override, id=value");
  verify->add_option("--fixture", fixture_path, "fixture json file");
  verify->add_option("--report", report_path, "write the json report here");

  std::string property_id;
  auto* explain = app.add_subcommand("explain", "describe one property");
  explain->add_option("id", property_id, "property id, e.g. core.cocycle")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems are configuration errors
  }

  if (verify->parsed())
    return run_verify(suite, seed, trials, points, tol_kv, fixture_path,
                      report_path);

  try {
    std::cout << hn::explain(property_id);
  } catch (const std::out_of_range& e) {
    std::cerr << e.what();
    return 2;
  }
  return 0;
}
