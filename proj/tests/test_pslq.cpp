#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "flinthills/pslq.hpp"

using namespace flinthills;

namespace {

// a and b proportional over the integers, up to sign.
bool proportional(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

}  // namespace

TEST_CASE("recovers a trivial dependency") {
  PrecisionContext ctx(30);
  auto guard = ctx.scope();
  RelationResult r = pslq({ctx.pi(), 2 * ctx.pi(), ctx.make(1)}, 10, 15, ctx);
  REQUIRE(r.found);
  CHECK(proportional(r.coefficients, {BigInt(2), BigInt(-1), BigInt(0)}));
  CHECK(r.residual < r.threshold);
}

TEST_CASE("recovers a constructed dependency") {
  PrecisionContext ctx(30);
  auto guard = ctx.scope();
  RelationResult r =
      pslq({ctx.zeta3(), 3 * ctx.zeta3() + 1, ctx.make(1)}, 10, 15, ctx);
  REQUIRE(r.found);
  CHECK(proportional(r.coefficients, {BigInt(3), BigInt(-1), BigInt(1)}));
}

TEST_CASE("zero entry reported as explicit trivial relation") {
  PrecisionContext ctx(30);
  RelationResult r = pslq({ctx.pi(), ctx.make(0), ctx.zeta3()}, 10, 15, ctx);
  REQUIRE(r.found);
  CHECK(r.coefficients[0] == 0);
  CHECK(r.coefficients[1] == 1);
  CHECK(r.coefficients[2] == 0);
}

TEST_CASE("input validation") {
  PrecisionContext ctx(30);
  CHECK_THROWS_AS(pslq({ctx.pi()}, 10, 15, ctx), usage_error);
  CHECK_THROWS_AS(pslq({ctx.pi(), ctx.zeta3()}, 10, 11, ctx), usage_error);
  CHECK_THROWS_AS(pslq({ctx.pi(), ctx.zeta3()}, 0, 15, ctx), usage_error);
  CHECK_THROWS_AS(pslq({ctx.pi(), ctx.zeta3()}, 10, 45, ctx), precision_error);
}

TEST_CASE("independent values yield an absence certificate") {
  PrecisionContext ctx(30);
  auto guard = ctx.scope();
  RelationResult r =
      pslq({ctx.pi(), ctx.zeta3(), sqrt(ctx.make(2))}, 100, 15, ctx);
  CHECK_FALSE(r.found);
  CHECK(r.norm_bound > 100);
}

TEST_CASE("planted relations are recovered 100 out of 100") {
  PrecisionContext ctx(30);
  auto guard = ctx.scope();
  std::mt19937_64 rng(424243);
  std::uniform_int_distribution<int> coeff(-50, 50);
  std::uniform_real_distribution<double> val(0.5, 1.5);
  int recovered = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<BigInt> a(4);
    do {
      for (auto& c : a) c = coeff(rng);
    } while (a[3] == 0);
    std::vector<Real> v(4);
    Real acc(0);
    for (int i = 0; i < 3; ++i) {
      v[i] = Real(val(rng));
      acc += Real(a[i]) * v[i];
    }
    v[3] = -acc / Real(a[3]);  // a . v = 0 to working accuracy
    RelationResult r = pslq(v, 100, 15, ctx);
    if (r.found && proportional(r.coefficients, a)) ++recovered;
  }
  CHECK(recovered == 100);
}

TEST_CASE("detection is scale invariant") {
  PrecisionContext ctx(30);
  auto guard = ctx.scope();
  std::vector<Real> v = {ctx.pi(), 2 * ctx.pi(), ctx.make(1)};
  RelationResult r1 = pslq(v, 10, 15, ctx);
  for (auto& x : v) x *= Real("7.3");
  RelationResult r2 = pslq(v, 10, 15, ctx);
  REQUIRE(r1.found);
  REQUIRE(r2.found);
  CHECK(proportional(r1.coefficients, r2.coefficients));
}

TEST_CASE("basis scans") {
  PrecisionContext ctx(30);
  RelationScanReport cl3 = scan_relations(RelationBasis::Cl3, 100, 15, ctx);
  CHECK_FALSE(cl3.result.found);
  CHECK(cl3.truncation_N == 0);
  CHECK(cl3.labels.size() == 3);
  std::string json = relation_report_to_json(cl3);
  CHECK(json.find("\"outcome\": \"absence\"") != std::string::npos);
  CHECK(json.find("norm_lower_bound") != std::string::npos);

  RelationScanReport fcot =
      scan_relations(RelationBasis::FCot, 1000, 15, ctx, 200000);
  CHECK_FALSE(fcot.result.found);
  CHECK(fcot.truncation_N == 200000);
  auto guard = ctx.scope();
  CHECK(abs(fcot.values[0] + Real("1.87444803")) < Real("1e-7"));
}
