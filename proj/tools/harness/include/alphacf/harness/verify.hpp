#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "alphacf/harness/config.hpp"

namespace alphacf::harness {

// A reported number and its basis: "computed" (by the library), "closed-form"
// (independent formula), "published" (literature values), "empirical" (a
// measured sup or gap) or "configured" (a run parameter).
struct Constant {
  std::string name;
  nlohmann::ordered_json value;
  std::string basis;
};

struct CriterionResult {
  std::string id;
  std::string suite;
  std::string title;
  bool pass = false;
  std::string summary;
  std::vector<Constant> constants;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  double limit_seconds = 0;
  double seconds = 0;  // wall time, kept out of the report
  std::vector<std::string> ops;  // operations exercised
};

struct Criterion {
  std::string id;     // "AC1" .. "AC10", "COV"
  std::string suite;  // name accepted by --suite
  std::string title;
  double limit_seconds = 0;
  std::function<CriterionResult(const RunConfig&)> run;
};

const std::vector<Criterion>& criteria();

// "all", a suite name or a criterion id. InvalidArgument for anything else.
std::vector<const Criterion*> select_suite(const std::string& name);

// Runs one criterion and fails it if it overran its time limit. A thrown
// Error becomes a failing result carrying the message.
CriterionResult run_criterion(const Criterion& c, const RunConfig& cfg);

// Deterministic for fixed (config, seed): no timings, stable key order.
nlohmann::ordered_json report_json(const std::vector<CriterionResult>& results, const RunConfig& cfg);

std::string table_line(const CriterionResult& r);

}  // namespace alphacf::harness
