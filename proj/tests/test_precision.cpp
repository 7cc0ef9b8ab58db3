#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flinthills/precision.hpp"

using namespace flinthills;

namespace {

Real tol(const PrecisionContext& ctx, long e) { return ctx.pow10(e); }

}  // namespace

TEST_CASE("context rejects too few digits") {
  CHECK_THROWS_AS(PrecisionContext(9), usage_error);
  CHECK_NOTHROW(PrecisionContext(10));
}

TEST_CASE("working precision is digits plus guard") {
  PrecisionContext ctx(30, 15);
  CHECK(ctx.decimal_digits() == 30);
  CHECK(ctx.guard_digits() == 15);
  CHECK(ctx.working_digits() == 45);
}

TEST_CASE("pi to 35 digits") {
  PrecisionContext ctx(40);
  Real ref = ctx.make("3.1415926535897932384626433832795029");
  CHECK(abs(ctx.pi() - ref) < tol(ctx, -34));
}

TEST_CASE("zeta(3) to 35 digits") {
  PrecisionContext ctx(40);
  Real ref = ctx.make("1.2020569031595942853997381615114500");
  CHECK(abs(ctx.zeta3() - ref) < tol(ctx, -34));
  CHECK(abs(zeta3_euler_maclaurin(40) - ref) < tol(ctx, -34));
}

TEST_CASE("L(3, chi_{-3}) closed form") {
  PrecisionContext ctx(40);
  Real ref = ctx.make("0.88402381175007985674305791687101181");
  CHECK(abs(ctx.L3_chi3() - ref) < tol(ctx, -34));
  // 4 pi^3 / (81 sqrt 3) recomputed independently.
  Real again = 4 * pow(ctx.pi(), 3) / (81 * sqrt(ctx.make(3)));
  CHECK(abs(ctx.L3_chi3() - again) < tol(ctx, -40));
}

TEST_CASE("constants sharpen with requested digits") {
  PrecisionContext lo(15), hi(60);
  precision_scope scope(80);
  CHECK(abs(lo.pi() - hi.pi()) < Real("1e-25"));
  CHECK(abs(lo.pi() - hi.pi()) > Real("1e-75"));  // lo really is coarser
}

TEST_CASE("bernoulli numbers") {
  auto b = bernoulli_numbers(13);
  CHECK(b[0] == Rational(1));
  CHECK(b[1] == Rational(-1, 2));
  CHECK(b[2] == Rational(1, 6));
  CHECK(b[3] == Rational(0));
  CHECK(b[4] == Rational(-1, 30));
  CHECK(b[12] == Rational(-691, 2730));
}

TEST_CASE("precision scope restores") {
  unsigned before = Real::default_precision();
  {
    precision_scope scope(77);
    CHECK(Real::default_precision() == 77);
  }
  CHECK(Real::default_precision() == before);
}

TEST_CASE("make and pow10") {
  PrecisionContext ctx(30);
  CHECK(ctx.make() == 0);
  CHECK(ctx.make(7) == 7);
  CHECK(ctx.pow10(3) == 1000);
  {
    auto guard = ctx.scope();
    CHECK(abs(ctx.pow10(-2) - Real("0.01")) < tol(ctx, -40));
  }
  CHECK(ctx.from_rational(Rational(1, 3)) * 3 - 1 < tol(ctx, -40));
}

TEST_CASE("complex arithmetic") {
  PrecisionContext ctx(30);
  auto guard = ctx.scope();
  Complex a(Real(1), Real(2)), b(Real(3), Real(4));
  Complex p = a * b;
  CHECK(p.re == -5);
  CHECK(p.im == 10);
  Complex q = p / b;
  CHECK(abs(q.re - 1) < tol(ctx, -40));
  CHECK(abs(q.im - 2) < tol(ctx, -40));
  CHECK(abs(a.abs() - sqrt(ctx.make(5))) < tol(ctx, -40));
  Complex r = Real(1) / b;
  CHECK(abs((r * b).re - 1) < tol(ctx, -40));
  CHECK(abs((r * b).im) < tol(ctx, -40));
}
