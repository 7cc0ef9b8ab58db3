#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flinthills/series.hpp"

using namespace flinthills;

TEST_CASE("series names round-trip") {
  for (SeriesId id : {SeriesId::S, SeriesId::R1Star, SeriesId::A, SeriesId::B,
                      SeriesId::C, SeriesId::D, SeriesId::FCot, SeriesId::FTan,
                      SeriesId::GCot, SeriesId::GTan, SeriesId::H3})
    CHECK(series_from_name(series_name(id)) == id);
  CHECK_THROWS_AS(series_from_name("nope"), usage_error);
}

TEST_CASE("H3 partial sum") {
  PrecisionContext ctx(30);
  auto guard = ctx.scope();
  Real h10 = partial_sum(SeriesId::H3, 10, ctx).real_acc;
  CHECK(abs(h10 - Real("1.1975319856741933")) < Real("1e-15"));
  Real h = partial_sum(SeriesId::H3, 10000, ctx).real_acc;
  CHECK(abs(h - Real("1.20205689816009426040")) < Real("1e-19"));
}

TEST_CASE("the n = 355 spike") {
  PrecisionContext ctx(30);
  auto guard = ctx.scope();
  Real t = series_term(SeriesId::R1Star, 355, ctx).re;
  CHECK(abs(t - Real("73.79454357")) < Real("1e-7"));
  CHECK(abs(series_term(SeriesId::S, 355, ctx).re - Real("24.598181")) <
        Real("1e-5"));
}

TEST_CASE("partial sums match reference values at N = 10^4") {
  PrecisionContext ctx(30);
  auto guard = ctx.scope();
  Real s = partial_sum(SeriesId::S, 10000, ctx).real_acc;
  Real r = partial_sum(SeriesId::R1Star, 10000, ctx).real_acc;
  CHECK(abs(s - Real("30.314510833014")) < Real("1e-12"));
  CHECK(abs(r - Real("86.135304906401")) < Real("1e-12"));
}

TEST_CASE("cotangent-series sign contract") {
  PrecisionContext ctx(30);
  auto guard = ctx.scope();
  // term(F_COT, n) = -cot(n/2)/n^3 = 2 Im [1/(n^3 (e^{in} - 1))]: the C
  // summand.  Termwise to full precision.
  for (std::uint64_t n = 1; n <= 50; ++n) {
    Real fc = series_term(SeriesId::FCot, n, ctx).re;
    Real n3 = Real(n) * Real(n) * Real(n);
    Real direct = -cos(Real(n) / 2) / sin(Real(n) / 2) / n3;
    CHECK(abs(fc - direct) < ctx.pow10(-38));
    Real imc = series_term(SeriesId::C, n, ctx).im;
    CHECK(abs(fc - 2 * imc) < ctx.pow10(-38));
  }
  Real fcot = partial_sum(SeriesId::FCot, 50000, ctx).real_acc;
  CHECK(abs(fcot + Real("1.8744480282")) < Real("1e-9"));
  Real ftan = partial_sum(SeriesId::FTan, 50000, ctx).real_acc;
  CHECK(abs(ftan - Real("1.2044730524")) < Real("1e-9"));
}

TEST_CASE("squared half-angle sums") {
  PrecisionContext ctx(30);
  auto guard = ctx.scope();
  Real gcot = partial_sum(SeriesId::GCot, 50000, ctx).real_acc;
  Real gtan = partial_sum(SeriesId::GTan, 50000, ctx).real_acc;
  CHECK(abs(gcot - Real("7.0822428100")) < Real("1e-8"));
  CHECK(abs(gtan - Real("111.7717262898")) < Real("1e-8"));
  Real combo = -Real(5) / 2 * ctx.zeta3() + Real(3) / 4 * (gcot + gtan);
  CHECK(abs(combo - Real("86.1353345670")) < Real("1e-9"));
}

TEST_CASE("lerch-type sums at N = 5 * 10^4") {
  PrecisionContext ctx(40);
  auto guard = ctx.scope();
  auto sum_of = [&](SeriesId id) {
    SeriesState st = partial_sum(id, 50000, ctx);
    return Complex(st.real_acc, st.imag_acc);
  };
  Complex a = sum_of(SeriesId::A), b = sum_of(SeriesId::B);
  Complex c = sum_of(SeriesId::C), d = sum_of(SeriesId::D);
  Real tol("1e-14");
  CHECK(abs(a.re - Real("0.601028451479799")) < tol);
  CHECK(abs(a.im + Real("0.602236526202106")) < tol);
  CHECK(abs(b.re + Real("27.642417346714341")) < tol);
  CHECK(abs(b.im + Real("0.602236526202106")) < tol);
  CHECK(abs(c.re + Real("0.601028451479799")) < tol);
  CHECK(abs(c.im + Real("0.937224014082626")) < tol);
  CHECK(abs(d.re + Real("1.470046476759999")) < tol);
  CHECK(abs(d.im - Real("0.937224014082626")) < tol);
}

TEST_CASE("termwise identities") {
  PrecisionContext ctx(30);
  auto guard = ctx.scope();
  ReductionCheck rc = verify_reduction(2000, ctx);
  CHECK(rc.termwise_residual < ctx.pow10(-25));
  ExplicitFormCheck ec = verify_explicit(2000, ctx);
  CHECK(ec.termwise_residual < ctx.pow10(-25));
  PartialFractionCheck pc = verify_partial_fraction(2000, ctx);
  CHECK(pc.residual < ctx.pow10(-25));
  CHECK(abs(pc.imaginary_part) < ctx.pow10(-25));
}

TEST_CASE("resume equals fresh digit for digit") {
  PrecisionContext ctx(30);
  SeriesState half = partial_sum(SeriesId::R1Star, 10000, ctx);
  SeriesState resumed = partial_sum(SeriesId::R1Star, 20000, ctx, half);
  SeriesState fresh = partial_sum(SeriesId::R1Star, 20000, ctx);
  CHECK(resumed.real_acc.str(0, std::ios_base::scientific) ==
        fresh.real_acc.str(0, std::ios_base::scientific));
  CHECK(resumed.content_hash() == fresh.content_hash());
  CHECK(resumed.spikes.size() == fresh.spikes.size());
}

TEST_CASE("resume refuses mismatches") {
  PrecisionContext ctx(30);
  SeriesState st = partial_sum(SeriesId::S, 1000, ctx);
  CHECK_THROWS_AS(partial_sum(SeriesId::R1Star, 2000, ctx, st),
                  checkpoint_error);
  PrecisionContext other(35);
  CHECK_THROWS_AS(partial_sum(SeriesId::S, 2000, other, st), checkpoint_error);
  CHECK_THROWS_AS(partial_sum(SeriesId::S, 500, ctx, st), usage_error);
}

TEST_CASE("spike ledger") {
  PrecisionContext ctx(30);
  auto spikes = spike_ledger(SeriesId::S, 1000, Real(1), ctx);
  bool found = false;
  for (const auto& s : spikes)
    if (s.n == 355) {
      found = true;
      CHECK(s.regime == Regime::R);
      auto guard = ctx.scope();
      CHECK(abs(s.abs_delta - Real("3.0144e-5")) < Real("1e-9"));
    }
  CHECK(found);
  CHECK_THROWS_AS(spike_ledger(SeriesId::S, 100, Real(0), ctx), usage_error);
}

TEST_CASE("richardson eliminates a sqrt tail") {
  PrecisionContext ctx(30);
  auto guard = ctx.scope();
  // s(N) = L - c/sqrt(N) is reconstructed exactly.
  Real L("2.5"), c("0.7");
  Real s1 = L - c / sqrt(Real(10000));
  Real s2 = L - c / sqrt(Real(40000));
  CHECK(abs(richardson_half(s1, 10000, s2, 40000, ctx) - L) < ctx.pow10(-38));
  CHECK_THROWS_AS(richardson_half(s1, 100, s2, 100, ctx), usage_error);
}

TEST_CASE("acceleration fails loudly on the spiked series") {
  PrecisionContext ctx(30);
  AccelerationDemo demo = acceleration_failure_demo(ctx);
  auto guard = ctx.scope();
  CHECK(demo.flagged_inconsistent);
  CHECK(demo.discrepancy > 50);
  CHECK(abs(demo.direct_sum - Real("86.135332")) < Real("1e-5"));
  CHECK(abs(demo.accelerated_without_spike - Real("12.340791")) < Real("1e-4"));
  // The same accelerator is fine on the smooth benchmark series.
  CHECK(abs(demo.h3_accelerated - demo.h3_reference) < Real("1e-10"));
}

TEST_CASE("table emission") {
  PrecisionContext ctx(30);
  auto rows = partial_sum_table({10000, 1000}, ctx);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].N == 1000);   // ascending regardless of input order
  CHECK(rows[1].N == 10000);
  auto guard = ctx.scope();
  CHECK(abs(rows[1].s - Real("30.314510833014")) < Real("1e-12"));
  std::string csv = table_to_csv(rows);
  CHECK(csv.find("N,R1STAR,S,zeta_residual") == 0);
  CHECK(csv.find("10000,86.1353049,30.3145108,") != std::string::npos);
}

TEST_CASE("pole guard on terms") {
  PrecisionContext ctx(30);
  // No integer is close enough to a pole to trigger at this precision;
  // the guard itself is exercised through the kernel suite.  Here: the
  // term magnitudes stay finite over a range crossing all four spikes.
  auto guard = ctx.scope();
  for (std::uint64_t n : {1ull, 3ull, 22ull, 355ull})
    CHECK(abs(series_term(SeriesId::S, n, ctx).re) < Real("1e6"));
}
