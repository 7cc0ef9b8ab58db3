#ifndef FLINTHILLS_DIOPHANTINE_HPP
#define FLINTHILLS_DIOPHANTINE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "flinthills/precision.hpp"

namespace flinthills {

// One continued-fraction convergent p/q of pi with its error |pi - p/q|.
struct Convergent {
  BigInt p;
  BigInt q;
  Real error;
};

// Signed near-distance delta(n) = n - round(n/pi) * pi in (-pi/2, pi/2].
struct NearDistance {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  Real delta;
};

enum class Regime { G, I, R };

const char* regime_name(Regime r);

struct CensusRow {
  std::uint64_t n;
  std::uint64_t m;
  Real delta;
  Real abs_sin;
  Regime regime;
};

// Counts and member lists of the G/I/R partition up to N.
struct RegimeCensus {
  std::uint64_t N = 0;
  std::uint64_t count_G = 0;
  std::uint64_t count_I = 0;
  std::uint64_t count_R = 0;
  std::vector<CensusRow> members_R;           // stored exhaustively
  std::vector<CensusRow> members_I;           // capped
  std::uint64_t intermediate_cap = 100000;
  Real min_delta_scaled;                      // min |delta(n)| n^{3/2}
  std::uint64_t min_delta_scaled_at = 0;
};

// First `count` continued-fraction convergents of pi.  Trustworthy while
// q^2 < 10^{working_digits - 10}; a precision_error is raised past that.
std::vector<Convergent> pi_convergents(unsigned count,
                                       const PrecisionContext& ctx);

// Requires guard_digits >= ceil(log10 n) + 5: the subtraction n - m*pi
// cancels about log10(n) digits.
NearDistance signed_near_distance(std::uint64_t n, const PrecisionContext& ctx);

// sin(n) = (-1)^m sin(delta(n)).
Real sin_integer(std::uint64_t n, const PrecisionContext& ctx);

// |sin n| against the thresholds n^{-1/2} (G closed below) and n^{-3/2}
// (R strict).  Raises precision_error when the comparison is within
// 10^{-working_digits + 5} of a threshold.
Regime classify(std::uint64_t n, const PrecisionContext& ctx);

RegimeCensus regime_census(std::uint64_t N, const PrecisionContext& ctx,
                           std::uint64_t intermediate_cap = 100000);

// |sum_{n=1}^{N} e^{2 pi i h n / pi}| by direct summation.
Real weyl_sum_magnitude(std::uint64_t h, std::uint64_t N,
                        const PrecisionContext& ctx);

// Closed form |sin(N h) / sin(h)| of the same geometric sum.
Real weyl_sum_closed_form(std::uint64_t h, std::uint64_t N,
                          const PrecisionContext& ctx);

// Census exports (External Interfaces).
std::string census_to_csv(const RegimeCensus& census);
std::string census_to_json(const RegimeCensus& census,
                           const std::vector<std::pair<std::uint64_t, Real>>&
                               sparsity_ratios = {});

}  // namespace flinthills

#endif
