#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "alphacf/errors.hpp"
#include "alphacf/harness/commands.hpp"
#include "alphacf/harness/config.hpp"

using namespace alphacf;
using namespace alphacf::harness;

int main(int argc, char** argv) {
  CLI::App app{"alpha-continued fractions, Brjuno and Wilton functions"};
  app.require_subcommand(1);
  app.fallthrough();

  ConfigLayer flags;
  std::string config_path;
  std::string format_text;
  app.add_option("--precision", flags.precision_bits, "working precision in bits (>= 64)");
  app.add_option("--tol", flags.tol, "series tolerance on beta^k");
  app.add_option("--terms", flags.terms, "series term cap");
  app.add_option("--seed", flags.seed, "random seed");
  app.add_option("--format", format_text, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output", flags.output, "write the artifact here instead of stdout");
  app.add_option("--jobs", flags.jobs, "worker threads");
  app.add_option("--config", config_path, "key=value config file");

  ExpandArgs ex;
  auto* expand = app.add_subcommand("expand", "alpha-continued fraction expansion as JSON");
  expand->add_option("--x", ex.x, "number to expand")->required();
  expand->add_option("--alpha", ex.alpha, "alpha in [1/2, 1]");
  expand->add_option("--steps", ex.steps, "maximum digits");

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "evaluate a series, finite sum, proxy or F_k");
  eval->add_option("--fn", ev.fn, "brjuno, wilton, brjuno-finite, wilton-finite, proxy, Fk")->required();
  eval->add_option("--x", ev.x, "argument");
  eval->add_option("--alpha", ev.alpha, "alpha in [1/2, 1]");
  eval->add_option("--k", ev.k, "exponent k");
  eval->add_option("--n", ev.n, "proxy depth or F_k terms");
  eval->add_flag("--alternating", ev.alternating, "alternating proxy sum");
  eval->add_option("--grid", ev.grid, "a:b:count sweep");

  ScanArgs sc;
  auto* scan = app.add_subcommand("scan", "blow-up experiment or dyadic oscillation scan");
  scan->add_option("--fn", sc.fn, "wilton or brjuno");
  scan->add_option("--alpha", sc.alpha, "alpha in [1/2, 1]");
  scan->add_option("--k", sc.k, "Brjuno exponent");
  scan->add_option("--blowup", sc.blowup, "comma-separated n list");
  scan->add_option("--depth", sc.depth, "dyadic depth (0..24)");
  scan->add_option("--window", sc.window, "a:b rational window");
  scan->add_option("--leaf-samples", sc.leaf_samples, "two-point cells per leaf");
  scan->add_option("--quad-points", sc.quad_points, "quadrature points per blow-up interval");

  CompareArgs cp;
  auto* cmp = app.add_subcommand("compare", "matched 1/2 and alpha orbits");
  cmp->add_option("--alpha", cp.alpha, "alpha in [1/2, g]")->required();
  cmp->add_option("--samples", cp.samples, "random x values");
  cmp->add_option("--depth", cp.depth, "steps per orbit");
  cmp->add_option("--trace", cp.trace, "JSON-lines trace file");

  VerifyArgs vf;
  auto* verify = app.add_subcommand("verify", "run the acceptance suites");
  verify->add_option("--suite", vf.suite, "all, a suite name or a criterion id");
  verify->add_option("--report", vf.report, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  RunConfig cfg;
  try {
    if (!format_text.empty()) flags.format = parse_format(format_text);
    const ConfigLayer file = config_path.empty() ? ConfigLayer{} : load_config_file(config_path);
    cfg = resolve_config(flags, environment_layer(), file);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }

  if (*expand) return cmd_expand(ex, cfg, std::cout, std::cerr);
  if (*eval) return cmd_eval(ev, cfg, std::cout, std::cerr);
  if (*scan) return cmd_scan(sc, cfg, std::cout, std::cerr);
  if (*cmp) return cmd_compare(cp, cfg, std::cout, std::cerr);
  return cmd_verify(vf, cfg, std::cout, std::cerr);
}
