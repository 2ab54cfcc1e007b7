#pragma once

// Batch verification front end. A static registry maps property ids to
// runnable checks; run_suite executes the selected ones with deterministic
// per-trial seeding and collects residuals into a report whose body is
// byte-identical across runs with the same (seed, config).

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace dressing::harness {

struct SuiteConfig {
  std::string suite = "all";  // core | brst | ew | gr | conformal | all
  uint64_t seed = 42;
  int trials = 20;
  int points = 20;
  std::map<std::string, double> tol_overrides;  // property id -> tolerance
  const nlohmann::json* fixture = nullptr;      // optional, schema-dispatched
};

struct RunContext {
  uint64_t seed = 0;
  int trials = 1;
  int points = 5;
  double tol = 0.0;
  const nlohmann::json* fixture = nullptr;
};

struct Property {
  std::string id;         // "<suite>.<name>"
  std::string suite;
  std::vector<std::string> covers;  // statement tags, see kRequiredCoverage
  double tolerance = 0.0;           // default, overridable per run
  std::string statement;            // one-line mathematical statement
  std::string fixtures;             // fixture family description
  std::function<double(const RunContext&)> run;  // max residual over trials
};

struct PropertyRecord {
  std::string id;
  std::string statement;
  int trials = 0;
  double max_residual = 0.0;  // rounded to 6 significant digits
  double tolerance = 0.0;
  bool pass = false;
  std::string error;  // nonempty: the property could not be evaluated
};

struct Report {
  std::string suite;
  uint64_t seed = 0;
  int trials = 0;
  int points = 0;
  std::vector<PropertyRecord> records;
  bool pass = false;
  bool had_error = false;   // fixture/config failures, distinct from residual
  double wall_seconds = 0;  // excluded from the deterministic body

  nlohmann::json body_json() const;  // deterministic part only
  nlohmann::json to_json() const;    // body + timing
  std::string text() const;          // human-readable table
};

// Statement tags every registry build must cover, checked at startup.
const std::vector<std::string>& required_coverage();
const std::vector<Property>& registry();
void check_coverage();  // throws std::logic_error on a gap

bool known_suite(const std::string& name);
Report run_suite(const SuiteConfig& cfg);

// Multi-line description of one property; throws std::out_of_range with a
// message listing valid ids when the id is unknown.
std::string explain(const std::string& property_id);
std::vector<std::string> known_ids();

// x rounded to 6 significant digits, the report's residual resolution.
double round6(double x);

}  // namespace dressing::harness
