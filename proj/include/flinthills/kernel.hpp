#ifndef FLINTHILLS_KERNEL_HPP
#define FLINTHILLS_KERNEL_HPP

#include <array>
#include <vector>

#include "flinthills/precision.hpp"

namespace flinthills {

// Laurent data of K at its poles: pole order 2, exact rational
// coefficients for powers u^{-2} .. u^{max}.
struct LaurentExpansion {
  int pole_order = 2;
  // coefficients[i] is the coefficient of u^{i-2}.
  std::vector<Rational> coefficients;
};

// The five summands of the partial-fraction form of K at q = e^{ix}:
// -4, 3/(q+1), -3/(q+1)^2, -3/(q-1), -3/(q-1)^2.
struct QFormTerms {
  std::array<Complex, 5> terms;
  Complex sum() const {
    Complex s = terms[0];
    for (int i = 1; i < 5; ++i) s += terms[i];
    return s;
  }
};

struct LaurentFit {
  std::vector<Real> coefficients;  // fitted, powers u^{-2} .. u^{4}
  Real residual_norm;
};

// Distance from x to the nearest multiple of pi.  Throws
// pole_proximity_error when below 10^{-working_digits/2}.
Real pole_distance(const Real& x, const PrecisionContext& ctx);

// K(x) = sin(3x) / sin^3(x).
Real kernel_trig(const Real& x, const PrecisionContext& ctx);

// K(x) = 3 csc^2(x) - 4 (same function, cosecant route).
Real kernel_csc(const Real& x, const PrecisionContext& ctx);

// Partial-fraction form at q = e^{ix}; terms returned individually.
QFormTerms kernel_qform(const Real& x, const PrecisionContext& ctx);

// Exact coefficients through u^{max_power}; max_power in [-2, 4].
LaurentExpansion laurent_coefficients(int max_power);

// Least-squares confirmation of the expansion: fits K(u) sampled at the
// given radii against powers u^{-2} .. u^{4}.  Needs at least 7 distinct
// radii in (0, 0.3].
LaurentFit laurent_fit(const std::vector<Real>& radii,
                       const PrecisionContext& ctx);

}  // namespace flinthills

#endif
