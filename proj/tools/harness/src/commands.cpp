#include "alphacf/harness/commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "alphacf/bmo_lab.hpp"
#include "alphacf/cf_core.hpp"
#include "alphacf/modular_series.hpp"
#include "alphacf/numkit.hpp"
#include "alphacf/orbit_compare.hpp"
#include "alphacf/series_eval.hpp"
#include "alphacf/harness/csv.hpp"
#include "alphacf/harness/pool.hpp"
#include "alphacf/harness/sampling.hpp"
#include "alphacf/harness/verify.hpp"

namespace alphacf::harness {

using json = nlohmann::ordered_json;

int exit_code_for(Errc code) {
  return code == Errc::ParseError || code == Errc::InvalidArgument ? kExitUsage : kExitDomain;
}

namespace {

// Re-raises a library error with the flag that supplied the value.
template <class F>
auto flagged(const std::string& flag, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.code(), flag + ": " + e.message());
  }
}

template <class F>
int guarded(std::ostream& err, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}

template <class F>
void emit(const RunConfig& cfg, std::ostream& out, F&& f) {
  if (cfg.output.empty()) {
    f(out);
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) fail(Errc::InvalidArgument, "--output: cannot write '" + cfg.output + "'");
  f(file);
}

int digits_for(Precision prec) { return std::max(17, static_cast<int>(static_cast<double>(prec) * 0.30103)); }

std::string ld_text(long double v) {
  std::ostringstream s;
  s << std::setprecision(std::numeric_limits<long double>::max_digits10) << v;
  return s.str();
}

std::string tol_text(double v) {
  std::ostringstream s;
  s << std::setprecision(15) << v;
  return s.str();
}

json meta_json(long precision_bits, std::size_t terms, double tol) {
  json m;
  m["precision_bits"] = precision_bits;
  m["terms"] = terms;
  m["tol"] = tol;
  return m;
}

json meta_json(const RunConfig& cfg) { return meta_json(cfg.precision_bits, cfg.terms, cfg.tol); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

long parse_count(const std::string& text, const std::string& flag) {
  std::size_t used = 0;
  try {
    const long v = std::stol(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  fail(Errc::ParseError, flag + ": expected an integer, got '" + text + "'");
}

Alpha parse_alpha(const std::string& text) {
  return flagged("--alpha", [&] { return Alpha(ExactNumber::parse(text)); });
}

// ---------------------------------------------------------------- eval

struct EvalRow {
  std::string x;
  std::string value;
  std::string n_terms;
  std::string tail_estimate;
  bool rigorous_tail = false;
  std::string status = "ok";
  double value_double = std::numeric_limits<double>::quiet_NaN();
};

enum class EvalFn { Brjuno, Wilton, BrjunoFinite, WiltonFinite, Proxy, Fk };

EvalFn parse_fn(const std::string& s) {
  static const std::map<std::string, EvalFn> names = {
      {"brjuno", EvalFn::Brjuno},   {"wilton", EvalFn::Wilton}, {"brjuno-finite", EvalFn::BrjunoFinite},
      {"wilton-finite", EvalFn::WiltonFinite}, {"proxy", EvalFn::Proxy}, {"Fk", EvalFn::Fk},
  };
  const auto it = names.find(s);
  if (it == names.end()) {
    fail(Errc::ParseError, "--fn: expected brjuno, wilton, brjuno-finite, wilton-finite, proxy or Fk, got '" + s + "'");
  }
  return it->second;
}

bool wants_rational_grid(EvalFn fn) {
  return fn == EvalFn::BrjunoFinite || fn == EvalFn::WiltonFinite || fn == EvalFn::Fk;
}

EvalRow eval_point(EvalFn fn, const ExactNumber& x, const Alpha& alpha, const EvalArgs& args, const RunConfig& cfg) {
  EvalRow row;
  row.x = x.to_string();
  const Precision prec = cfg.precision_bits;
  const int digits = digits_for(prec);
  auto set_value = [&](const Real& v) {
    row.value = v.to_string(digits);
    row.value_double = v.to_double();
  };
  switch (fn) {
    case EvalFn::Brjuno:
    case EvalFn::Wilton: {
      const SeriesMode mode = fn == EvalFn::Wilton ? SeriesMode::wilton() : SeriesMode::brjuno(args.k);
      const SeriesOptions opts{cfg.terms, cfg.tol, prec};
      const SeriesValue v = flagged("--x", [&] { return evaluate_completed(x, alpha, mode, opts); });
      set_value(v.value);
      row.n_terms = std::to_string(v.n_terms);
      row.tail_estimate = v.tail_estimate.to_string(6);
      row.rigorous_tail = v.rigorous_tail;
      break;
    }
    case EvalFn::BrjunoFinite:
    case EvalFn::WiltonFinite: {
      if (!x.is_rational()) fail(Errc::InvalidArgument, "--x: " + args.fn + " needs a rational input");
      const Rational& r = x.rational();
      set_value(fn == EvalFn::BrjunoFinite ? brjuno_finite_rational(r, args.k, prec) : wilton_finite_rational(r, prec));
      const Rational frac = r - Rational(mpq_class(floor_of(x)));
      const std::size_t len = frac == Rational(0) ? 0 : expand(frac, Alpha::one(), std::numeric_limits<std::size_t>::max()).length();
      row.n_terms = std::to_string(len);
      row.tail_estimate = "0";
      row.rigorous_tail = true;
      break;
    }
    case EvalFn::Proxy: {
      set_value(proxy_sum(x, alpha, args.k, args.n, args.alternating, prec));
      row.n_terms = std::to_string(args.n);
      break;
    }
    case EvalFn::Fk: {
      const FourierPartial f = fourier_Fk_partial(x, args.k, args.n);
      row.value = ld_text(f.value);
      row.value_double = static_cast<double>(f.value);
      row.n_terms = std::to_string(f.terms);
      row.tail_estimate = ld_text(f.tail_bound);
      row.rigorous_tail = true;
      break;
    }
  }
  return row;
}

json row_json(const EvalRow& r) {
  json j;
  j["x"] = r.x;
  if (std::isfinite(r.value_double)) {
    j["value"] = r.value_double;
  } else {
    j["value"] = nullptr;
  }
  j["value_text"] = r.value;
  j["n_terms"] = r.n_terms.empty() ? json(nullptr) : json(std::stoull(r.n_terms));
  j["tail_estimate"] = r.tail_estimate.empty() ? json(nullptr) : json(r.tail_estimate);
  j["rigorous_tail"] = r.rigorous_tail;
  j["status"] = r.status;
  return j;
}

// a + (b - a) (i + theta)/count, theta the fractional golden ratio, keeps
// every sample point away from rationals with small denominators.
std::vector<ExactNumber> float_grid(const ExactNumber& a, const ExactNumber& b, long count, Precision prec) {
  std::vector<ExactNumber> xs;
  const Real lo = approx(a, prec);
  const Real width = approx(b, prec) - lo;
  const Real theta = approx(golden_conjugate(), prec);
  for (long i = 0; i < count; ++i) {
    const Real t = (Real::from_int(i, prec) + theta) / Real::from_int(count, prec);
    xs.emplace_back(Float::point(lo + width * t));
  }
  return xs;
}

// a + (b - a) i/(count - 1), endpoints included.
std::vector<ExactNumber> rational_grid(const Rational& a, const Rational& b, long count) {
  std::vector<ExactNumber> xs;
  for (long i = 0; i < count; ++i) {
    xs.emplace_back(count == 1 ? a : a + (b - a) * Rational(i) / Rational(count - 1));
  }
  return xs;
}

std::vector<ExactNumber> parse_grid(const std::string& spec, EvalFn fn, Precision prec) {
  const auto parts = split(spec, ':');
  if (parts.size() != 3) fail(Errc::ParseError, "--grid: expected a:b:count, got '" + spec + "'");
  const ExactNumber a = flagged("--grid", [&] { return ExactNumber::parse(parts[0], prec); });
  const ExactNumber b = flagged("--grid", [&] { return ExactNumber::parse(parts[1], prec); });
  const long count = parse_count(parts[2], "--grid");
  if (count < 1) fail(Errc::InvalidArgument, "--grid: count must be >= 1");
  if (flagged("--grid", [&] { return compare(a, b); }) != std::strong_ordering::less) {
    fail(Errc::InvalidArgument, "--grid: need a < b");
  }
  if (wants_rational_grid(fn)) {
    if (!a.is_rational() || !b.is_rational()) fail(Errc::InvalidArgument, "--grid: endpoints must be rational here");
    return rational_grid(a.rational(), b.rational(), count);
  }
  return float_grid(a, b, count, prec);
}

const std::vector<std::string> kEvalColumns = {"x",      "value",          "n_terms", "tail_estimate",
                                               "rigorous_tail", "status", "precision_bits", "terms", "tol"};

std::vector<std::string> csv_fields(const EvalRow& r, const RunConfig& cfg) {
  return {r.x,      r.value, r.n_terms, r.tail_estimate, r.rigorous_tail ? "true" : "false", r.status,
          std::to_string(cfg.precision_bits), std::to_string(cfg.terms), tol_text(cfg.tol)};
}

// ---------------------------------------------------------------- scan

std::vector<long> parse_n_list(const std::string& text) {
  std::vector<long> ns;
  for (const auto& part : split(text, ',')) {
    const long n = parse_count(part, "--blowup");
    if (n < 2) fail(Errc::InvalidArgument, "--blowup: every n must be >= 2, got " + part);
    ns.push_back(n);
  }
  if (ns.empty()) fail(Errc::ParseError, "--blowup: empty list");
  return ns;
}

RationalInterval parse_window(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) fail(Errc::ParseError, "--window: expected a:b, got '" + text + "'");
  return flagged("--window", [&] { return RationalInterval(Rational::parse(parts[0]), Rational::parse(parts[1])); });
}

int scan_blowup(const ScanArgs& args, const RunConfig& cfg, std::ostream& out) {
  if (args.fn != "wilton") fail(Errc::InvalidArgument, "--blowup: only --fn wilton has a blow-up experiment");
  if (!parse_alpha(args.alpha).is_one()) fail(Errc::InvalidArgument, "--blowup: the experiment runs at --alpha 1");
  const auto ns = parse_n_list(args.blowup);
  QuadratureOptions opts;
  opts.n_samples = args.quad_points;
  const long double cutoff = 1e-13L;
  const int max_terms = 200;
  const auto rows = parallel_map(ns.size(), cfg.jobs, [&](std::size_t i) {
    return wilton_blowup_experiment({ns[i]}, opts, cutoff, max_terms).rows.front();
  });
  // The evaluator is long double: its mantissa, term cap and cutoff are the metadata.
  const long ld_bits = std::numeric_limits<long double>::digits;
  if (cfg.format.value_or(OutputFormat::Csv) == OutputFormat::Csv) {
    emit(cfg, out, [&](std::ostream& o) {
      CsvWriter w(o);
      w.row({"n", "mean_plus", "mean_minus", "oscillation", "log_n_plus_1", "samples", "quad_error", "precision_bits",
             "terms", "tol"});
      for (const auto& r : rows) {
        w.row({std::to_string(r.n), ld_text(r.mean_plus), ld_text(r.mean_minus), ld_text(r.oscillation),
               ld_text(std::log(static_cast<long double>(r.n)) + 1), std::to_string(r.samples), ld_text(r.quad_error),
               std::to_string(ld_bits), std::to_string(max_terms), tol_text(static_cast<double>(cutoff))});
      }
    });
  } else {
    json j;
    j["fn"] = "wilton";
    j["alpha"] = "1";
    auto arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"n", r.n},
                     {"mean_plus", static_cast<double>(r.mean_plus)},
                     {"mean_minus", static_cast<double>(r.mean_minus)},
                     {"oscillation", static_cast<double>(r.oscillation)},
                     {"log_n_plus_1", std::log(static_cast<double>(r.n)) + 1},
                     {"samples", r.samples},
                     {"quad_error", static_cast<double>(r.quad_error)}});
    }
    j["rows"] = std::move(arr);
    j["meta"] = meta_json(ld_bits, max_terms, static_cast<double>(cutoff));
    emit(cfg, out, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
  }
  return kExitOk;
}

int scan_depth(const ScanArgs& args, const RunConfig& cfg, std::ostream& out) {
  const Alpha alpha = parse_alpha(args.alpha);
  SeriesMode mode;
  if (args.fn == "wilton") {
    mode = SeriesMode::wilton();
  } else if (args.fn == "brjuno") {
    mode = flagged("--k", [&] { return SeriesMode::brjuno(args.k); });
  } else {
    fail(Errc::ParseError, "--fn: scan supports wilton or brjuno, got '" + args.fn + "'");
  }
  if (args.depth < 0 || args.depth > 24) fail(Errc::InvalidArgument, "--depth: expected 0..24");
  if (args.leaf_samples < 1) fail(Errc::InvalidArgument, "--leaf-samples: must be >= 1");
  const RationalInterval window = parse_window(args.window);
  const FastSeries f(alpha.approx(), mode);
  const ScanResult s = bmo_seminorm_scan([&f](long double y) { return f(y); }, window, args.depth, args.leaf_samples);
  const long ld_bits = std::numeric_limits<long double>::digits;
  if (cfg.format.value_or(OutputFormat::Json) == OutputFormat::Csv) {
    emit(cfg, out, [&](std::ostream& o) {
      CsvWriter w(o);
      w.row({"level", "level_sup", "precision_bits", "terms", "tol"});
      for (std::size_t i = 0; i < s.level_sup.size(); ++i) {
        w.row({std::to_string(i), ld_text(s.level_sup[i]), std::to_string(ld_bits), std::to_string(f.max_terms()),
               tol_text(static_cast<double>(f.cutoff()))});
      }
    });
    return kExitOk;
  }
  json j;
  j["fn"] = mode.to_string();
  j["alpha"] = alpha.to_string();
  j["window"] = window.to_string();
  j["depth"] = args.depth;
  j["leaf_samples"] = args.leaf_samples;
  j["sup_estimate"] = static_cast<double>(s.sup_estimate);
  j["argmax"] = s.argmax.to_string();
  auto levels = json::array();
  for (const long double v : s.level_sup) levels.push_back(static_cast<double>(v));
  j["level_sup"] = std::move(levels);
  j["leaves"] = s.leaves;
  j["samples"] = s.samples;
  j["meta"] = meta_json(ld_bits, static_cast<std::size_t>(f.max_terms()), static_cast<double>(f.cutoff()));
  emit(cfg, out, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
  return kExitOk;
}

}  // namespace

// ---------------------------------------------------------------- commands

int cmd_expand(const ExpandArgs& args, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Alpha alpha = parse_alpha(args.alpha);
    const ExactNumber y = flagged("--x", [&] { return ExactNumber::parse(args.x, cfg.precision_bits); });
    if (args.steps < 1) fail(Errc::InvalidArgument, "--steps: must be >= 1");
    // Inputs already in [0, alpha] are taken as given; others are reduced.
    const bool in_range = flagged("--x", [&] {
      return y.sign() >= 0 && compare(y, alpha.value()) != std::strong_ordering::greater;
    });
    const Normalized n = in_range ? Normalized{y, false} : flagged("--x", [&] { return normalize(y, alpha); });
    const CFExpansion e =
        flagged("--x", [&] { return expand(n.x, alpha, args.steps, OnAmbiguity::Truncate); });
    json j;
    j["input"] = args.x;
    j["reflected"] = n.reflected;
    const json body = to_json(e);
    for (const auto& [key, value] : body.items()) j[key] = value;
    j["precision_exhausted"] = e.precision_exhausted;
    j["meta"] = meta_json(cfg);
    emit(cfg, out, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
    return static_cast<int>(kExitOk);
  });
}

int cmd_eval(const EvalArgs& args, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const EvalFn fn = parse_fn(args.fn);
    const Alpha alpha = parse_alpha(args.alpha);
    if (fn == EvalFn::Fk && (args.k < 2 || args.k % 2 != 0)) fail(Errc::InvalidArgument, "--k: Fk needs an even k >= 2");
    if (args.k < 1) fail(Errc::InvalidArgument, "--k: must be >= 1");

    if (args.grid.empty()) {
      if (args.x.empty()) fail(Errc::ParseError, "--x: required without --grid");
      const ExactNumber x = flagged("--x", [&] { return ExactNumber::parse(args.x, cfg.precision_bits); });
      const EvalRow row = eval_point(fn, x, alpha, args, cfg);
      if (cfg.format.value_or(OutputFormat::Json) == OutputFormat::Csv) {
        emit(cfg, out, [&](std::ostream& o) {
          CsvWriter w(o);
          w.row(kEvalColumns);
          w.row(csv_fields(row, cfg));
        });
      } else {
        json j;
        j["fn"] = args.fn;
        j["alpha"] = alpha.to_string();
        j["k"] = fn == EvalFn::Wilton || fn == EvalFn::WiltonFinite ? 1 : args.k;
        const json body = row_json(row);
        for (const auto& [key, value] : body.items()) j[key] = value;
        j["meta"] = meta_json(cfg);
        emit(cfg, out, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
      }
      return static_cast<int>(kExitOk);
    }

    const auto xs = parse_grid(args.grid, fn, cfg.precision_bits);
    // Per-point domain failures are recorded in the status column.
    const auto rows = parallel_map(xs.size(), cfg.jobs, [&](std::size_t i) {
      try {
        return eval_point(fn, xs[i], alpha, args, cfg);
      } catch (const Error& e) {
        if (exit_code_for(e.code()) == kExitUsage) throw;
        EvalRow r;
        r.x = xs[i].to_string();
        r.status = std::string(to_string(e.code()));
        return r;
      }
    });
    if (cfg.format.value_or(OutputFormat::Csv) == OutputFormat::Csv) {
      emit(cfg, out, [&](std::ostream& o) {
        CsvWriter w(o);
        w.row(kEvalColumns);
        for (const auto& r : rows) w.row(csv_fields(r, cfg));
      });
    } else {
      json j;
      j["fn"] = args.fn;
      j["alpha"] = alpha.to_string();
      j["k"] = args.k;
      j["grid"] = args.grid;
      auto arr = json::array();
      for (const auto& r : rows) arr.push_back(row_json(r));
      j["rows"] = std::move(arr);
      j["meta"] = meta_json(cfg);
      emit(cfg, out, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
    }
    return static_cast<int>(kExitOk);
  });
}

int cmd_scan(const ScanArgs& args, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!args.blowup.empty()) return scan_blowup(args, cfg, out);
    if (args.depth < 0) fail(Errc::InvalidArgument, "--depth: give --depth or --blowup");
    return scan_depth(args, cfg, out);
  });
}

int cmd_compare(const CompareArgs& args, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Alpha alpha = parse_alpha(args.alpha);
    if (compare(alpha.value(), golden_conjugate()) == std::strong_ordering::greater) {
      fail(Errc::OutOfRange, "--alpha: orbit comparison needs alpha <= (sqrt(5)-1)/2, got " + alpha.to_string());
    }
    if (args.samples < 1) fail(Errc::InvalidArgument, "--samples: must be >= 1");
    if (args.depth < 1) fail(Errc::InvalidArgument, "--depth: must be >= 1");

    // Drawn up front so the sample set does not depend on --jobs.
    Rng rng(cfg.seed);
    std::vector<ExactNumber> xs;
    xs.reserve(args.samples);
    for (std::size_t i = 0; i < args.samples; ++i) {
      xs.push_back(i % 2 == 0 ? random_rational_half(rng) : random_surd(rng, Alpha::half()));
    }
    struct Outcome {
      MatchedTrace trace;
      QClassification cls;
    };
    const auto outcomes = parallel_map(xs.size(), cfg.jobs, [&](std::size_t i) {
      Outcome o{matched_orbits(xs[i], alpha, args.depth), {}};
      o.cls = q_difference_classify(o.trace);
      return o;
    });

    std::map<std::string, std::size_t> violations = {{"class", 0}, {"digit", 0}, {"log_gap", 0}, {"ordering", 0}};
    std::size_t coincide = 0, reflected = 0, shifted = 0, zero = 0, qprev = 0, other = 0, terminated = 0;
    double max_log_gap = 0;
    auto first = json::array();
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      const auto& o = outcomes[i];
      terminated += o.trace.terminated ? 1 : 0;
      for (const auto& s : o.trace.steps) {
        coincide += s.event == StepEvent::Coincide;
        reflected += s.event == StepEvent::Reflected;
        shifted += s.event == StepEvent::Shifted;
      }
      for (const QClass c : o.cls.classes) {
        zero += c == QClass::Zero;
        qprev += c == QClass::QPrev;
        other += c == QClass::Other;
      }
      for (const auto& v : o.cls.violations) {
        ++violations[v.kind];
        if (first.size() < 10) first.push_back({{"sample", i}, {"x", o.trace.x.to_string()}, {"j", v.j}, {"kind", v.kind}, {"detail", v.detail}});
      }
      max_log_gap = std::max(max_log_gap, o.cls.max_log_gap);
    }
    std::size_t total = 0;
    for (const auto& [kind, n] : violations) total += n;

    if (!args.trace.empty()) {
      std::ofstream tf(args.trace, std::ios::binary);
      if (!tf) fail(Errc::InvalidArgument, "--trace: cannot write '" + args.trace + "'");
      for (std::size_t i = 0; i < outcomes.size(); ++i) {
        json line;
        line["sample"] = i;
        line["x"] = outcomes[i].trace.x.to_string();
        auto steps = json::array();
        for (const auto& s : outcomes[i].trace.steps) steps.push_back(to_json(s));
        line["steps"] = std::move(steps);
        line["divergences"] = outcomes[i].trace.divergences;
        tf << line.dump() << '\n';
      }
    }

    json j;
    j["alpha"] = alpha.to_string();
    j["samples"] = args.samples;
    j["depth"] = args.depth;
    j["seed"] = cfg.seed;
    j["terminated"] = terminated;
    j["violations"] = violations;
    j["total_violations"] = total;
    j["events"] = {{"coincide", coincide}, {"reflected", reflected}, {"shifted", shifted}};
    j["classes"] = {{"zero", zero}, {"q_prev", qprev}, {"other", other}};
    j["max_log_gap"] = max_log_gap;
    j["log_2"] = std::log(2.0);
    j["first_violations"] = std::move(first);
    j["meta"] = meta_json(cfg);
    emit(cfg, out, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
    return static_cast<int>(kExitOk);
  });
}

int cmd_verify(const VerifyArgs& args, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto selected = flagged("--suite", [&] { return select_suite(args.suite); });
    std::vector<CriterionResult> results;
    bool all_pass = true;
    for (const Criterion* c : selected) {
      CriterionResult r = run_criterion(*c, cfg);
      out << table_line(r) << '\n' << std::flush;
      err << "timing " << r.id << ' ' << std::fixed << std::setprecision(2) << r.seconds << "s (limit "
          << r.limit_seconds << "s)\n";
      all_pass = all_pass && r.pass;
      results.push_back(std::move(r));
    }
    const std::string path = args.report.empty() ? cfg.output : args.report;
    if (!path.empty()) {
      std::ofstream f(path, std::ios::binary);
      if (!f) fail(Errc::InvalidArgument, "--report: cannot write '" + path + "'");
      f << report_json(results, cfg).dump(2) << '\n';
    }
    return static_cast<int>(all_pass ? kExitOk : kExitCriterion);
  });
}

}  // namespace alphacf::harness
