#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "alphacf/harness/commands.hpp"
#include "alphacf/harness/config.hpp"
#include "alphacf/harness/csv.hpp"
#include "alphacf/harness/pool.hpp"
#include "alphacf/harness/sampling.hpp"
#include "alphacf/harness/verify.hpp"

using namespace alphacf;
using namespace alphacf::harness;
using json = nlohmann::ordered_json;

TEST_CASE("config text parsing") {
  const ConfigLayer l = parse_config_text("# comment\nprecision = 512\ntol=1e-40\nformat=csv\n\njobs=2\n", "t");
  CHECK(*l.precision_bits == 512);
  CHECK(*l.tol == doctest::Approx(1e-40));
  CHECK(*l.format == OutputFormat::Csv);
  CHECK(*l.jobs == 2);
  CHECK_FALSE(l.seed.has_value());
  CHECK_THROWS_AS(parse_config_text("colour=blue\n", "t"), Error);
  CHECK_THROWS_AS(parse_config_text("precision=lots\n", "t"), Error);
  CHECK_THROWS_AS(parse_format("xml"), Error);
  CHECK(to_string(OutputFormat::Json) == "json");
}

TEST_CASE("config precedence") {
  ConfigLayer flags, env, file;
  file.precision_bits = 128;
  file.seed = 7;
  env.precision_bits = 192;
  CHECK(resolve_config(flags, env, file).precision_bits == 192);
  CHECK(resolve_config(flags, env, file).seed == 7);
  flags.precision_bits = 320;
  CHECK(resolve_config(flags, env, file).precision_bits == 320);
  const RunConfig d = resolve_config({}, {}, {});
  CHECK(d.precision_bits == kDefaultPrecision);
  CHECK_FALSE(d.format.has_value());
  ConfigLayer bad;
  bad.precision_bits = 32;
  CHECK_THROWS_AS(resolve_config(bad, {}, {}), Error);
  bad = {};
  bad.jobs = 0;
  CHECK_THROWS_AS(resolve_config(bad, {}, {}), Error);
}

TEST_CASE("environment layer") {
  ::setenv(kPrecisionEnv, "384", 1);
  CHECK(*environment_layer().precision_bits == 384);
  ::unsetenv(kPrecisionEnv);
  CHECK_FALSE(environment_layer().precision_bits.has_value());
}

TEST_CASE("csv escaping") {
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_escape("two\nlines") == "\"two\nlines\"");
  std::ostringstream os;
  CsvWriter w(os);
  w.row({"x", "1,2"});
  CHECK(os.str() == "x,\"1,2\"\r\n");
}

TEST_CASE("parallel_map is index-ordered and rethrows the lowest failure") {
  const auto a = parallel_map(200, 1, [](std::size_t i) { return i * i; });
  const auto b = parallel_map(200, 4, [](std::size_t i) { return i * i; });
  CHECK(a == b);
  try {
    parallel_map(50, 4, [](std::size_t i) -> int {
      if (i == 17 || i == 30) fail(Errc::InvalidArgument, std::to_string(i));
      return 0;
    });
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.message() == "17");
  }
}

TEST_CASE("samplers stay in their domains") {
  Rng rng(5);
  const Alpha a(ExactNumber(Rational(3, 5)));
  for (int i = 0; i < 50; ++i) {
    const ExactNumber s = random_surd(rng, a);
    CHECK(s.is_surd());
    CHECK(compare(s, ExactNumber(0)) > 0);
    CHECK(compare(s, a.value()) <= 0);
    const ExactNumber f = random_float(rng, a, 256);
    CHECK(f.is_float());
    const ExactNumber r = random_rational_half(rng);
    CHECK(compare(r, ExactNumber(0)) >= 0);
    CHECK(compare(r, ExactNumber(Rational(1, 2))) <= 0);
  }
  Rng r1(9), r2(9);
  CHECK(random_surd(r1, a) == random_surd(r2, a));
}

TEST_CASE("exit code mapping") {
  CHECK(exit_code_for(Errc::ParseError) == kExitUsage);
  CHECK(exit_code_for(Errc::InvalidArgument) == kExitUsage);
  CHECK(exit_code_for(Errc::DivergesAtRational) == kExitDomain);
  CHECK(exit_code_for(Errc::OutOfRange) == kExitDomain);
}

TEST_CASE("cmd_expand") {
  RunConfig cfg;
  std::ostringstream out, err;
  ExpandArgs a;
  a.x = "2/5";
  a.alpha = "1/2";
  REQUIRE(cmd_expand(a, cfg, out, err) == kExitOk);
  const json j = json::parse(out.str());
  CHECK(j["digits"] == json::parse("[[3,-1],[2,1]]"));
  CHECK(j["reflected"] == false);

  std::ostringstream o2, e2;
  a.x = "two fifths";
  CHECK(cmd_expand(a, cfg, o2, e2) == kExitUsage);
  CHECK(e2.str().find("--x") != std::string::npos);
}

TEST_CASE("cmd_eval") {
  RunConfig cfg;
  EvalArgs a;
  a.fn = "wilton";
  a.x = "2/5";
  std::ostringstream out, err;
  CHECK(cmd_eval(a, cfg, out, err) == kExitDomain);
  CHECK(err.str().find("DivergesAtRational") != std::string::npos);

  a.fn = "wilton-finite";
  std::ostringstream o2, e2;
  REQUIRE(cmd_eval(a, cfg, o2, e2) == kExitOk);
  CHECK(json::parse(o2.str())["value"].get<double>() == doctest::Approx(0.6390319).epsilon(1e-6));

  a.fn = "brjuno";
  a.x = "";
  a.grid = "0.1:0.4:4";
  std::ostringstream o3, e3;
  REQUIRE(cmd_eval(a, cfg, o3, e3) == kExitOk);
  std::istringstream lines(o3.str());
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 5);

  a.fn = "zeta";
  std::ostringstream o4, e4;
  CHECK(cmd_eval(a, cfg, o4, e4) == kExitUsage);
}

TEST_CASE("cmd_scan and cmd_compare") {
  RunConfig cfg;
  ScanArgs s;
  std::ostringstream o1, e1;
  CHECK(cmd_scan(s, cfg, o1, e1) == kExitUsage);
  s.depth = 4;
  s.window = "0:1/4";
  std::ostringstream o2, e2;
  REQUIRE(cmd_scan(s, cfg, o2, e2) == kExitOk);
  CHECK(json::parse(o2.str())["depth"] == 4);

  CompareArgs c;
  c.alpha = "7/10";
  std::ostringstream o3, e3;
  CHECK(cmd_compare(c, cfg, o3, e3) == kExitDomain);
  c.alpha = "29/50";
  c.samples = 20;
  std::ostringstream o4, e4;
  REQUIRE(cmd_compare(c, cfg, o4, e4) == kExitOk);
  CHECK(json::parse(o4.str())["total_violations"] == 0);
}

TEST_CASE("verify suite selection") {
  CHECK(select_suite("all").size() == criteria().size());
  CHECK(select_suite("ladders").size() == 1);
  CHECK(select_suite("AC7").size() == 1);
  CHECK_THROWS_AS(select_suite("nope"), Error);
  const CriterionResult r = run_criterion(*select_suite("AC7").front(), RunConfig{});
  CHECK(r.pass);
  CHECK(table_line(r).find("PASS") != std::string::npos);
}
