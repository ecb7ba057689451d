#include "alphacf/harness/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "alphacf/errors.hpp"

namespace alphacf::harness {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long parse_long(const std::string& v, const std::string& what) {
  std::size_t used = 0;
  try {
    const long out = std::stol(v, &used);
    if (used == v.size()) return out;
  } catch (const std::exception&) {
  }
  fail(Errc::ParseError, what + ": expected an integer, got '" + v + "'");
}

double parse_double(const std::string& v, const std::string& what) {
  std::size_t used = 0;
  try {
    const double out = std::stod(v, &used);
    if (used == v.size()) return out;
  } catch (const std::exception&) {
  }
  fail(Errc::ParseError, what + ": expected a number, got '" + v + "'");
}

}  // namespace

OutputFormat parse_format(const std::string& text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  fail(Errc::ParseError, "format must be json or csv, got '" + text + "'");
}

std::string to_string(OutputFormat f) { return f == OutputFormat::Json ? "json" : "csv"; }

ConfigLayer parse_config_text(const std::string& text, const std::string& origin) {
  ConfigLayer layer;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = origin + ":" + std::to_string(lineno);
    if (eq == std::string::npos) fail(Errc::ParseError, where + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "precision") {
      layer.precision_bits = parse_long(value, where);
    } else if (key == "tol") {
      layer.tol = parse_double(value, where);
    } else if (key == "terms") {
      layer.terms = parse_long(value, where);
    } else if (key == "seed") {
      layer.seed = static_cast<std::uint64_t>(parse_long(value, where));
    } else if (key == "format") {
      layer.format = parse_format(value);
    } else if (key == "output") {
      layer.output = value;
    } else if (key == "jobs") {
      layer.jobs = parse_long(value, where);
    } else {
      fail(Errc::ParseError, where + ": unknown key '" + key + "'");
    }
  }
  return layer;
}

ConfigLayer load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config_text(text.str(), path);
}

ConfigLayer environment_layer() {
  ConfigLayer layer;
  if (const char* v = std::getenv(kPrecisionEnv); v != nullptr && *v != '\0') {
    layer.precision_bits = parse_long(v, kPrecisionEnv);
  }
  return layer;
}

RunConfig resolve_config(const ConfigLayer& flags, const ConfigLayer& env, const ConfigLayer& file) {
  RunConfig cfg;
  auto pick = [](const auto& a, const auto& b, const auto& c) {
    return a ? a : (b ? b : c);
  };
  if (const auto v = pick(flags.precision_bits, env.precision_bits, file.precision_bits)) {
    if (*v < 64) fail(Errc::InvalidArgument, "precision must be >= 64 bits, got " + std::to_string(*v));
    cfg.precision_bits = static_cast<Precision>(*v);
  }
  if (const auto v = pick(flags.tol, env.tol, file.tol)) {
    if (!(*v > 0)) fail(Errc::InvalidArgument, "tol must be positive");
    cfg.tol = *v;
  }
  if (const auto v = pick(flags.terms, env.terms, file.terms)) {
    if (*v < 1) fail(Errc::InvalidArgument, "terms must be >= 1, got " + std::to_string(*v));
    cfg.terms = static_cast<std::size_t>(*v);
  }
  if (const auto v = pick(flags.seed, env.seed, file.seed)) cfg.seed = *v;
  if (const auto v = pick(flags.format, env.format, file.format)) cfg.format = *v;
  if (const auto v = pick(flags.output, env.output, file.output)) cfg.output = *v;
  if (const auto v = pick(flags.jobs, env.jobs, file.jobs)) {
    if (*v < 1) fail(Errc::InvalidArgument, "jobs must be >= 1, got " + std::to_string(*v));
    cfg.jobs = static_cast<unsigned>(*v);
  }
  return cfg;
}

}  // namespace alphacf::harness
