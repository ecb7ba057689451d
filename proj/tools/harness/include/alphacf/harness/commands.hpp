#pragma once

#include <cstddef>
#include <ostream>
#include <string>

#include "alphacf/errors.hpp"
#include "alphacf/harness/config.hpp"

namespace alphacf::harness {

enum ExitCode : int { kExitOk = 0, kExitCriterion = 1, kExitUsage = 2, kExitDomain = 3 };

// ParseError and InvalidArgument are usage errors, everything else is a
// domain error.
int exit_code_for(Errc code);

struct ExpandArgs {
  std::string x;
  std::string alpha = "1";
  std::size_t steps = 64;
};

struct EvalArgs {
  std::string fn;  // brjuno, wilton, brjuno-finite, wilton-finite, proxy, Fk
  std::string x;
  std::string alpha = "1";
  int k = 1;
  std::size_t n = 10;  // proxy depth / Fk terms
  bool alternating = false;
  std::string grid;    // "a:b:count"
};

struct ScanArgs {
  std::string fn = "wilton";
  std::string alpha = "1";
  int k = 1;
  std::string blowup;          // comma-separated n list
  int depth = -1;
  std::string window = "0:1";  // "a:b" rationals
  std::size_t leaf_samples = 16;
  std::size_t quad_points = 100000;
};

struct CompareArgs {
  std::string alpha;
  std::size_t samples = 500;
  std::size_t depth = 40;
  std::string trace;  // JSON-lines path, optional
};

struct VerifyArgs {
  std::string suite = "all";
  std::string report;  // JSON report path, optional
};

// Each command writes its artifact to `out` and diagnostics to `err`, and
// returns an ExitCode. Errors are reported on `err` naming the flag at fault.
int cmd_expand(const ExpandArgs& args, const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_eval(const EvalArgs& args, const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_scan(const ScanArgs& args, const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_compare(const CompareArgs& args, const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyArgs& args, const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace alphacf::harness
