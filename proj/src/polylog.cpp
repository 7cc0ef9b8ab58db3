#include "flinthills/polylog.hpp"

#include "flinthills/series.hpp"

namespace flinthills {

namespace {

void check_order(int s) {
  if (s != 2 && s != 3) throw usage_error("polylog order must be 2 or 3");
}

// The zeta-expansion terms shrink like (theta/2pi)^{2m}; pick the order
// that pushes the truncation below the working precision.
std::size_t expansion_order(const Real& theta, const PrecisionContext& ctx) {
  double th = theta.convert_to<double>();
  double decay = 2 * std::log(6.283185307179586 / th);
  std::size_t m =
      static_cast<std::size_t>(ctx.working_digits() * 2.3026 / decay) + 10;
  if (m > 5000)
    throw precision_error("zeta expansion impractical this close to 2 pi");
  return m;
}

}  // namespace

TailBounded clausen_cos(int s, const Real& theta, std::uint64_t N,
                        const PrecisionContext& ctx) {
  check_order(s);
  if (N < 10) throw usage_error("truncation N must be >= 10");
  auto guard = ctx.scope();
  Real sum = ctx.make();
  for (std::uint64_t n = 1; n <= N; ++n) {
    Real nn(n);
    Real p = (s == 2) ? nn * nn : nn * nn * nn;
    sum += cos(nn * theta) / p;
  }
  TailBounded out;
  out.value = sum;
  out.tail_bound = pow(Real(N), 1 - s) / (s - 1);
  return out;
}

TailBounded glaisher_sin(int s, const Real& theta, std::uint64_t N,
                         const PrecisionContext& ctx) {
  check_order(s);
  if (N < 10) throw usage_error("truncation N must be >= 10");
  auto guard = ctx.scope();
  Real sum = ctx.make();
  for (std::uint64_t n = 1; n <= N; ++n) {
    Real nn(n);
    Real p = (s == 2) ? nn * nn : nn * nn * nn;
    sum += sin(nn * theta) / p;
  }
  TailBounded out;
  out.value = sum;
  out.tail_bound = pow(Real(N), 1 - s) / (s - 1);
  return out;
}

UnitCirclePolylogValue li_unit_circle(int s, const Real& theta,
                                      std::uint64_t N,
                                      const PrecisionContext& ctx) {
  auto guard = ctx.scope();
  TailBounded re = clausen_cos(s, theta, N, ctx);
  TailBounded im = glaisher_sin(s, theta, N, ctx);
  UnitCirclePolylogValue v;
  v.order = s;
  v.theta = theta;
  v.value = Complex(re.value, im.value);
  v.tail_bound = re.tail_bound;
  return v;
}

TailBounded L_chi3_series(std::uint64_t N, const PrecisionContext& ctx) {
  if (N < 3) throw usage_error("truncation N must be >= 3");
  auto guard = ctx.scope();
  Real sum = ctx.make();
  for (std::uint64_t n = 1; n <= N; ++n) {
    int chi = (n % 3 == 1) ? 1 : (n % 3 == 2) ? -1 : 0;
    if (chi == 0) continue;
    Real nn(n);
    sum += Real(chi) / (nn * nn * nn);
  }
  TailBounded out;
  out.value = sum;
  // Dirichlet test: character partial sums are bounded by 1 and n^{-3}
  // decreases, so |tail| <= 2 (N+1)^{-3}.
  Real np1(N + 1);
  out.tail_bound = 2 / (np1 * np1 * np1);
  return out;
}

Complex li3_unit_circle_accurate(const Real& theta,
                                 const PrecisionContext& ctx) {
  auto guard = ctx.scope();
  if (theta <= 0 || theta >= 2 * ctx.pi())
    throw usage_error("accurate Li_3 expansion requires 0 < theta < 2 pi");
  // Li_3(e^{i t}) = zeta(3) + i zeta(2) t - (t^2/2)(3/2 - log t + i pi/2)
  //                 + i t^3/12
  //                 + sum_{m>=1} (-1)^{m+1} zeta(1-2m) t^{2m+2}/(2m+2)!
  // with zeta(1-2m) = -B_{2m}/(2m); convergence radius 2 pi.
  const Real& pi = ctx.pi();
  Real t2 = theta * theta;
  Real re = ctx.zeta3() - t2 / 2 * (Real(3) / 2 - log(theta));
  Real im = pi * pi * theta / 6 - pi * t2 / 4 + t2 * theta / 12;
  std::size_t mmax = expansion_order(theta, ctx);
  auto bern = bernoulli_numbers(2 * mmax + 2);
  Real target = ctx.pow10(-static_cast<long>(ctx.working_digits()) - 5);
  Rational fact(24);  // (2m+2)! with m starting at 1
  Real tpow = t2 * t2;
  for (std::size_t m = 1; m <= mmax; ++m) {
    Rational zeta_neg = -bern[2 * m] / Rational(2 * m);
    Rational coeff = zeta_neg / fact;
    int sign = (m % 2 == 1) ? 1 : -1;
    Real term = Real(sign) * ctx.from_rational(coeff) * tpow;
    re += term;
    if (abs(term) < target) break;
    tpow *= t2;
    fact *= Rational((2 * m + 3) * (2 * m + 4));
  }
  return {re, im};
}

namespace {

// Cl_2(theta) = Im Li_2(e^{i theta}) for 0 < theta < 2 pi, same
// expansion route as li3_unit_circle_accurate.
Real cl2_accurate(const Real& theta, const PrecisionContext& ctx) {
  Real sum = theta * (1 - log(theta));
  std::size_t mmax = expansion_order(theta, ctx);
  auto bern = bernoulli_numbers(2 * mmax + 2);
  Real target = ctx.pow10(-static_cast<long>(ctx.working_digits()) - 5);
  Rational fact(6);  // (2m+1)!
  Real tpow = theta * theta * theta;
  for (std::size_t m = 1; m <= mmax; ++m) {
    Rational zeta_neg = -bern[2 * m] / Rational(2 * m);
    int sign = (m % 2 == 1) ? -1 : 1;
    Real term = Real(sign) * ctx.from_rational(zeta_neg / fact) * tpow;
    sum += term;
    if (abs(term) < target) break;
    tpow *= theta * theta;
    fact *= Rational((2 * m + 2) * (2 * m + 3));
  }
  return sum;
}

}  // namespace

ClausenReductionReport test_clausen_reduction(std::uint64_t N,
                                              const PrecisionContext& ctx) {
  if (N < 1000) throw usage_error("clausen reduction test needs N >= 1000");
  auto guard = ctx.scope();
  ClausenReductionReport rep;
  rep.f_cot = partial_sum(SeriesId::FCot, N, ctx).real_acc;
  Real one = ctx.make(1);
  rep.two_cl3_1 = 2 * clausen_cos(3, one, N, ctx).value;
  const Real& pi = ctx.pi();
  Real zeta2 = pi * pi / 6;
  rep.rhs_with_zeta2 = rep.two_cl3_1 - pi * zeta2;
  rep.rhs_precise =
      rep.two_cl3_1 - pi * pi * log(Real(2)) / 3 + cl2_accurate(one, ctx);
  rep.gap_leading = abs(rep.f_cot - rep.two_cl3_1);
  rep.gap_with_zeta2 = abs(rep.f_cot - rep.rhs_with_zeta2);
  rep.gap_precise = abs(rep.f_cot - rep.rhs_precise);
  return rep;
}

}  // namespace flinthills
