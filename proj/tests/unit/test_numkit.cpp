#include <doctest.h>

#include <random>

#include "alphacf/numkit.hpp"

using namespace alphacf;

namespace {

ExactNumber q(long p, long d) { return Rational(p, d); }
const ExactNumber kPhi = make_quadratic(1, 1, 2, 5);

}  // namespace

TEST_CASE("floor_of on rationals and surds") {
  CHECK(floor_of(q(7, 2)) == 3);
  CHECK(floor_of(q(-7, 2)) == -4);
  CHECK(floor_of(golden_conjugate()) == 0);
  CHECK(floor_of(kPhi) == 1);
  CHECK(floor_of(make_quadratic(0, 1, 1, 1000001)) == 1000);
}

TEST_CASE("floor_of refuses an interval straddling an integer") {
  const Float f(Real::from_string("0.999"), Real::from_string("1.001"));
  CHECK_THROWS_AS(floor_of(f), Error);
  try {
    floor_of(f);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::AmbiguousFloor);
  }
}

TEST_CASE("reciprocal") {
  CHECK(reciprocal(q(2, 5)) == q(5, 2));
  CHECK(reciprocal(golden_conjugate()) == kPhi);
  const Real eps = Real::from_string("1e-30");
  try {
    reciprocal(Float(-eps, eps));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DivisionByZero);
  }
  CHECK_THROWS_AS(reciprocal(q(0, 1)), Error);
}

TEST_CASE("compare") {
  CHECK(compare(q(2, 5), q(1, 2)) == std::strong_ordering::less);
  CHECK(compare(golden_conjugate(), q(3, 5)) == std::strong_ordering::greater);
  CHECK(compare(q(1, 3), q(1, 3)) == std::strong_ordering::equal);
  // sqrt(2) vs sqrt(3): different radicals are separated, never equal.
  CHECK(compare(make_quadratic(0, 1, 1, 2), make_quadratic(0, 1, 1, 3)) == std::strong_ordering::less);
}

TEST_CASE("make_quadratic canonicalizes") {
  CHECK(make_quadratic(2, 2, 4, 8).to_string() == make_quadratic(1, 2, 2, 2).to_string());
  CHECK(make_quadratic(3, 0, 6, 5) == q(1, 2));
  CHECK(make_quadratic(1, 1, 1, 4) == ExactNumber(3));
}

TEST_CASE("parse accepts the three number forms") {
  CHECK(ExactNumber::parse("2/5") == q(2, 5));
  CHECK(ExactNumber::parse("(-1+1*sqrt(5))/2") == golden_conjugate());
  CHECK(ExactNumber::parse("sqrt(2)-1") == make_quadratic(-1, 1, 1, 2));
  CHECK(ExactNumber::parse("0.25").is_float());
  CHECK_THROWS_AS(ExactNumber::parse("(0+1*sqrt(5))/2-..."), Error);
  CHECK_THROWS_AS(ExactNumber::parse(""), Error);
}

TEST_CASE("surd arithmetic agrees with MPFR") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> small(-30, 30), pos(1, 30), rad(2, 40);
  for (int i = 0; i < 300; ++i) {
    const long d = rad(rng);
    const ExactNumber u = make_quadratic(small(rng), pos(rng), pos(rng), d);
    const ExactNumber v = make_quadratic(small(rng), small(rng), pos(rng), d);
    const Real tol = Real::from_string("1e-60");
    const Real au = approx(u, 256), av = approx(v, 256);
    CHECK(abs(approx(u + v, 256) - (au + av)) < tol);
    CHECK(abs(approx(u * v, 256) - au * av) < tol * (abs(au * av) + Real::from_int(1)));
    if (!v.is_zero()) CHECK(abs(approx(u / v, 256) - au / av) < tol * (abs(au / av) + Real::from_int(1)));
  }
}

TEST_CASE("surd approximation does not cancel") {
  // |F_31 g - F_30| is about 1e-13 relative to terms near 1e6.
  ExactNumber p = 832040, qq = 1346269;
  const ExactNumber beta = abs(qq * golden_conjugate() - p);
  const Real want = pow(approx(golden_conjugate(), 512), 31);
  CHECK(abs(approx(beta, 64) - want) / want < Real::from_string("1e-15"));
  const Float f = enclose(beta, 64);
  CHECK(f.lo() <= want);
  CHECK(f.hi() >= want);
}

TEST_CASE("Float enclosures contain the exact value") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(1, 1000), den(1, 1000);
  for (int i = 0; i < 200; ++i) {
    const mpq_class x(num(rng), den(rng));
    mpq_class xc = x;
    xc.canonicalize();
    const Float f = Float::enclose(xc, 80);
    const Float g = Float::enclose(mpq_class(1, 3), 80);
    const Float s = f + g;
    const Real exact = Real::from_mpq(mpq_class(xc + mpq_class(1, 3)), 400);
    CHECK(s.lo() <= exact);
    CHECK(s.hi() >= exact);
    const Float pr = f * g;
    const Real exact_pr = Real::from_mpq(mpq_class(xc / 3), 400);
    CHECK(pr.lo() <= exact_pr);
    CHECK(pr.hi() >= exact_pr);
  }
}

TEST_CASE("Float parse is a point") {
  const Float f = Float::parse("0.39", 128);
  CHECK(f.is_point());
  CHECK(f.precision() == 128);
}
