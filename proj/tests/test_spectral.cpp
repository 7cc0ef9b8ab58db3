#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flinthills/spectral.hpp"

using namespace flinthills;

TEST_CASE("gauss-legendre quadrature") {
  PrecisionContext ctx(30);
  auto guard = ctx.scope();
  std::vector<Real> x, w;
  gauss_legendre(16, ctx, x, w);
  REQUIRE(x.size() == 16);
  Real wsum(0), x2(0), c(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    wsum += w[i];
    x2 += w[i] * x[i] * x[i];
    c += w[i] * cos(x[i]);
  }
  CHECK(abs(wsum - 2) < ctx.pow10(-40));
  CHECK(abs(x2 - Real(2) / 3) < ctx.pow10(-40));
  CHECK(abs(c - 2 * sin(ctx.make(1))) < ctx.pow10(-40));
  // Nodes come out symmetric about 0.
  for (std::size_t i = 0; i < x.size(); ++i)
    CHECK(abs(x[i] + x[x.size() - 1 - i]) < ctx.pow10(-40));
  CHECK_THROWS_AS(gauss_legendre(1, ctx, x, w), usage_error);
}

TEST_CASE("comb weights") {
  PrecisionContext ctx(30);
  auto guard = ctx.scope();
  auto weights = comb_weights(3, ctx);
  REQUIRE(weights.size() == 7);
  CHECK(weights[3].k == 0);
  CHECK(weights[3].location == 0);
  CHECK(abs(weights[3].coefficient + 8 * ctx.pi()) < ctx.pow10(-40));
  CHECK(weights[5].k == 2);
  CHECK(weights[5].location == 4);
  CHECK(abs(weights[5].coefficient + 24 * ctx.pi()) < ctx.pow10(-40));
  CHECK(weights[0].k == -3);
  CHECK(abs(weights[0].coefficient - weights[6].coefficient) < ctx.pow10(-40));
}

TEST_CASE("comb pairing tail control") {
  PrecisionContext ctx(30);
  auto guard = ctx.scope();
  // Wide test function with too few comb terms: the tail bound trips.
  CHECK_THROWS_AS(pair_comb_gaussian(ctx.make(2), 1, ctx), precision_error);
  CHECK_NOTHROW(pair_comb_gaussian(ctx.make(2), 20, ctx));
  CHECK_THROWS_AS(pair_comb_gaussian(ctx.make(0), 5, ctx), usage_error);
  // Narrow test function: only k = 0 contributes and the value is -8 pi.
  Real narrow = pair_comb_gaussian(Real(1) / 5, 8, ctx);
  CHECK(abs(narrow + 8 * ctx.pi()) < Real("1e-18"));
}

TEST_CASE("both pairings agree") {
  PrecisionContext ctx(30);
  auto guard = ctx.scope();
  std::vector<Real> sigmas = {Real(3) / 10, Real(1) / 2, Real(1)};
  ParsevalReport rep = parseval_check(sigmas, ctx);
  REQUIRE(rep.rows.size() == 3);
  CHECK(rep.pass);
  CHECK(rep.max_relative_error < ctx.pow10(-6));
  // Far tighter than the gate in practice.
  CHECK(rep.max_relative_error < ctx.pow10(-15));
  std::string json = parseval_report_to_json(rep);
  CHECK(json.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("empty sigma list passes vacuously") {
  PrecisionContext ctx(30);
  ParsevalReport rep = parseval_check({}, ctx);
  CHECK(rep.pass);
  CHECK(rep.rows.empty());
}

TEST_CASE("sigma domain enforced") {
  PrecisionContext ctx(30);
  CHECK_THROWS_AS(parseval_check({ctx.make(3)}, ctx), usage_error);
  CHECK_THROWS_AS(parseval_check({Real(1) / 10}, ctx), usage_error);
}

TEST_CASE("cut-off radius invariance") {
  PrecisionContext ctx(30);
  auto guard = ctx.scope();
  Real sigma = Real(1) / 2;
  std::vector<Real> values;
  for (double r : {0.3, 0.5, 0.8}) {
    FinitePartQuadrature quad;
    quad.pole_radius = Real(r);
    values.push_back(pair_kernel_finitepart(sigma, quad, ctx).value);
  }
  CHECK(abs(values[0] - values[1]) < ctx.pow10(-12));
  CHECK(abs(values[1] - values[2]) < ctx.pow10(-12));
  FinitePartQuadrature bad;
  bad.pole_radius = Real(2);
  CHECK_THROWS_AS(pair_kernel_finitepart(sigma, bad, ctx), usage_error);
}

TEST_CASE("error estimate is honest") {
  PrecisionContext ctx(30);
  auto guard = ctx.scope();
  FinitePartQuadrature quad;
  PairingResult res = pair_kernel_finitepart(Real(1) / 2, quad, ctx);
  Real comb = pair_comb_gaussian(Real(1) / 2, 10, ctx);
  CHECK(abs(res.value - comb) < res.error_estimate + ctx.pow10(-15));
}

TEST_CASE("non-resonance scan") {
  PrecisionContext ctx(30);
  auto [minval, argk] = non_resonance_minimum(1000, ctx);
  CHECK(argk == 113);
  CHECK(minval > 0);
  auto guard = ctx.scope();
  CHECK(abs(minval - Real("0.0362096")) < Real("1e-6"));
  CHECK_THROWS_AS(non_resonance_minimum(0, ctx), usage_error);
}
