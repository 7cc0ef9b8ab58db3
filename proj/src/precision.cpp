#include "flinthills/precision.hpp"

#include <boost/math/constants/constants.hpp>

namespace flinthills {

std::vector<Rational> bernoulli_numbers(std::size_t count) {
  // Row recurrence: sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1.
  std::vector<Rational> b;
  b.reserve(count);
  if (count == 0) return b;
  b.emplace_back(1);
  for (std::size_t m = 1; m < count; ++m) {
    // binomials C(m+1, j), j = 0..m
    std::vector<BigInt> row(m + 2);
    row[0] = 1;
    BigInt c = 1;
    for (std::size_t j = 1; j <= m + 1; ++j) {
      c = c * BigInt(m + 2 - j) / BigInt(j);
      row[j] = c;
    }
    Rational acc = 0;
    for (std::size_t j = 0; j < m; ++j) acc += Rational(row[j]) * b[j];
    b.push_back(-acc / Rational(row[m]));
  }
  return b;
}

Real zeta3_euler_maclaurin(unsigned digits10) {
  precision_scope guard(digits10 + 10);
  const long N = std::max<long>(40, digits10);
  Real sum = 0;
  for (long n = 1; n <= N; ++n) {
    Real nn(n);
    sum += 1 / (nn * nn * nn);
  }
  Real Nr(N);
  // tail: sum_{n>N} n^{-3} = 1/(2N^2) - 1/(2N^3)
  //       + sum_k B_{2k}/(2k)! * (3)(4)...(2k+1) * N^{-2k-2}
  sum += 1 / (2 * Nr * Nr) - 1 / (2 * Nr * Nr * Nr);
  const std::size_t kmax = digits10 / 2 + 8;
  auto bern = bernoulli_numbers(2 * kmax + 2);
  Real target = pow(Real(10), -static_cast<long>(digits10) - 6);
  Rational factorial(1);  // (2k)!
  Rational poch(1);       // (3)(4)...(2k+1) = (2k+1)!/2
  Real Npow = Nr * Nr;    // N^{2k} running
  Real prev_term = 0;
  for (std::size_t k = 1; k <= kmax; ++k) {
    factorial *= Rational((2 * k - 1) * 2 * k);
    poch *= Rational(2 * k * (2 * k + 1));
    Npow *= Nr * Nr;
    Rational coeff = bern[2 * k] / factorial * poch / 2;
    Real term = Real(numerator(coeff)) / Real(denominator(coeff)) / Npow;
    sum += term;
    if (abs(term) < target) break;
  }
  return sum;
}

PrecisionContext::PrecisionContext(unsigned decimal_digits, unsigned guard_digits)
    : decimal_digits_(decimal_digits), guard_digits_(guard_digits) {
  if (decimal_digits < 10)
    throw usage_error("decimal_digits must be >= 10 (got " +
                      std::to_string(decimal_digits) + ")");
  if (guard_digits == 0) throw usage_error("guard_digits must be positive");
  precision_scope guard(working_digits());
  pi_ = boost::math::constants::pi<Real>();
  zeta3_ = zeta3_euler_maclaurin(working_digits());
  zeta3_.precision(working_digits());
  L3_ = 4 * pi_ * pi_ * pi_ / (81 * sqrt(Real(3)));
}

Real PrecisionContext::make() const {
  Real r(0);
  r.precision(working_digits());
  return r;
}

Real PrecisionContext::make(long v) const {
  Real r = make();
  r = v;
  return r;
}

Real PrecisionContext::make(const std::string& decimal) const {
  Real r = make();
  r.assign(decimal);
  return r;
}

Real PrecisionContext::from_rational(const Rational& q) const {
  precision_scope guard(working_digits());
  return Real(numerator(q)) / Real(denominator(q));
}

Real PrecisionContext::pow10(long e) const {
  precision_scope guard(working_digits());
  return pow(Real(10), e);
}

}  // namespace flinthills
