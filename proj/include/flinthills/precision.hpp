#ifndef FLINTHILLS_PRECISION_HPP
#define FLINTHILLS_PRECISION_HPP

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

#include "flinthills/errors.hpp"

namespace flinthills {

// Arbitrary-precision real.  MPFR backend, round-to-nearest; every
// arithmetic operation is correctly rounded at the precision of its
// result, which inherits the largest operand precision.
using Real =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                  boost::multiprecision::et_off>;
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Sets the thread-default decimal precision for the lifetime of the
// scope.  All Real temporaries created inside pick it up.
class precision_scope {
 public:
  explicit precision_scope(unsigned digits10)
      : saved_(Real::default_precision()) {
    Real::default_precision(digits10);
  }
  ~precision_scope() { Real::default_precision(saved_); }
  precision_scope(const precision_scope&) = delete;
  precision_scope& operator=(const precision_scope&) = delete;

 private:
  unsigned saved_;
};

// Minimal arbitrary-precision complex value: a pair of Reals.
struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(Real r) : re(std::move(r)), im(0) {}

  Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
  Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
  Complex operator*(const Complex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Complex operator/(const Complex& o) const {
    Real d = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
  }
  Complex operator+(const Real& x) const { return {re + x, im}; }
  Complex operator-(const Real& x) const { return {re - x, im}; }
  Complex operator*(const Real& x) const { return {re * x, im * x}; }
  Complex operator/(const Real& x) const { return {re / x, im / x}; }
  Complex operator-() const { return {-re, -im}; }
  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Real norm() const { return re * re + im * im; }
  Real abs() const { return sqrt(norm()); }
};

inline Complex operator/(const Real& x, const Complex& z) {
  Real d = z.norm();
  return {x * z.re / d, -x * z.im / d};
}

// Owns the working precision and the fundamental constants.  Immutable
// after creation; safe to share across threads.
class PrecisionContext {
 public:
  // decimal_digits: target output digits (>= 10).  Working precision is
  // decimal_digits + guard_digits decimal digits, fixed at creation.
  explicit PrecisionContext(unsigned decimal_digits, unsigned guard_digits = 15);

  unsigned decimal_digits() const { return decimal_digits_; }
  unsigned guard_digits() const { return guard_digits_; }
  unsigned working_digits() const { return decimal_digits_ + guard_digits_; }

  const Real& pi() const { return pi_; }
  const Real& zeta3() const { return zeta3_; }
  // L(3, chi_{-3}) = 4 pi^3 / (81 sqrt 3).
  const Real& L3_chi3() const { return L3_; }

  // A zero-initialised Real at working precision.
  Real make() const;
  Real make(long v) const;
  Real make(const std::string& decimal) const;
  Real from_rational(const Rational& q) const;
  // 10^e at working precision.
  Real pow10(long e) const;

  precision_scope scope() const { return precision_scope(working_digits()); }

 private:
  unsigned decimal_digits_;
  unsigned guard_digits_;
  Real pi_;
  Real zeta3_;
  Real L3_;
};

// Exact Bernoulli numbers B_0 .. B_{count-1} (B_1 = -1/2 convention).
std::vector<Rational> bernoulli_numbers(std::size_t count);

// zeta(3) by direct summation with Euler--Maclaurin tail corrections,
// accurate to roughly `digits10` decimal digits.
Real zeta3_euler_maclaurin(unsigned digits10);

}  // namespace flinthills

#endif
