#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "alphacf/real.hpp"

namespace alphacf::harness {

enum class OutputFormat { Json, Csv };

struct RunConfig {
  Precision precision_bits = kDefaultPrecision;
  double tol = 1e-30;
  std::size_t terms = 10000;
  std::uint64_t seed = 42;
  std::optional<OutputFormat> format;  // unset = the command's natural format
  std::string output;  // empty = standard output
  unsigned jobs = 1;
};

// One source of settings; unset fields fall through to the next layer.
struct ConfigLayer {
  std::optional<long> precision_bits;
  std::optional<double> tol;
  std::optional<long> terms;
  std::optional<std::uint64_t> seed;
  std::optional<OutputFormat> format;
  std::optional<std::string> output;
  std::optional<long> jobs;
};

inline constexpr const char* kPrecisionEnv = "ALPHACF_PRECISION";

// key=value lines; '#' starts a comment. Keys: precision, tol, terms, seed,
// format, output, jobs. ParseError on unknown keys or bad values.
ConfigLayer parse_config_text(const std::string& text, const std::string& origin);
ConfigLayer load_config_file(const std::string& path);
// Reads kPrecisionEnv if set.
ConfigLayer environment_layer();

// flags > environment > file > built-in defaults. InvalidArgument when the
// result breaks precision >= 64, terms >= 1 or jobs >= 1.
RunConfig resolve_config(const ConfigLayer& flags, const ConfigLayer& env, const ConfigLayer& file);

OutputFormat parse_format(const std::string& text);
std::string to_string(OutputFormat f);

}  // namespace alphacf::harness
