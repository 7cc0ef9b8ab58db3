#ifndef FLINTHILLS_POLYLOG_HPP
#define FLINTHILLS_POLYLOG_HPP

#include <cstdint>

#include "flinthills/precision.hpp"

namespace flinthills {

// Truncated sum with a rigorous bound on the neglected tail.
struct TailBounded {
  Real value;
  Real tail_bound;
};

// Li_s(e^{i theta}) with real part the cosine sum and imaginary part the
// sine sum, each carrying the shared tail bound.
struct UnitCirclePolylogValue {
  int order;
  Real theta;
  Complex value;
  Real tail_bound;
};

// sum_{n<=N} cos(n theta)/n^s with integral tail bound N^{1-s}/(s-1).
TailBounded clausen_cos(int s, const Real& theta, std::uint64_t N,
                        const PrecisionContext& ctx);

// Sine counterpart (Glaisher S_s).
TailBounded glaisher_sin(int s, const Real& theta, std::uint64_t N,
                         const PrecisionContext& ctx);

UnitCirclePolylogValue li_unit_circle(int s, const Real& theta,
                                      std::uint64_t N,
                                      const PrecisionContext& ctx);

// sum_{n<=N} chi_{-3}(n)/n^3 with chi_{-3} = +1, -1, 0 for
// n = 1, 2, 0 mod 3.  Tail bound 2/(N+1)^3 by the Dirichlet test.
TailBounded L_chi3_series(std::uint64_t N, const PrecisionContext& ctx);

// Li_3(e^{i theta}) to full working precision for 0 < theta < 2 pi via
// the zeta-series expansion around theta = 0 (Bernoulli coefficients).
// Used where truncated sums cannot reach the requested digits.
Complex li3_unit_circle_accurate(const Real& theta, const PrecisionContext& ctx);

// Measures the gaps between F_cot(N) and the claimed Clausen-reduction
// right sides; nothing here is used as ground truth elsewhere.
struct ClausenReductionReport {
  Real f_cot;              // series-engine value at truncation N
  Real two_cl3_1;          // 2 Cl_3(1)
  Real rhs_with_zeta2;     // 2 Cl_3(1) - pi zeta(2)
  Real rhs_precise;        // 2 Cl_3(1) - (1/3) pi^2 log 2 + Im Li_2(e^i)
  Real gap_leading;        // |f_cot - 2 Cl_3(1)|
  Real gap_with_zeta2;
  Real gap_precise;
};

ClausenReductionReport test_clausen_reduction(std::uint64_t N,
                                              const PrecisionContext& ctx);

}  // namespace flinthills

#endif
