#ifndef FLINTHILLS_SPECTRAL_HPP
#define FLINTHILLS_SPECTRAL_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "flinthills/precision.hpp"

namespace flinthills {

// One delta mass of the transform of K: location 2k with coefficient
// -8 pi at k = 0 and -12 pi |k| otherwise.
struct CombWeight {
  long k;
  long location;  // 2k
  Real coefficient;
};

// Finite-part quadrature configuration: integrate over |x| <= M pi + pi/2
// with the singular part subtracted on |u| <= r around each pole.
struct FinitePartQuadrature {
  unsigned periods = 40;       // M
  Real pole_radius = Real(1) / 2;  // r, in (0, pi/2)
  unsigned nodes = 48;         // Gauss-Legendre nodes per sub-interval
};

struct PairingResult {
  Real value;
  Real error_estimate;  // Gaussian truncation beyond the last period
};

struct ParsevalRow {
  Real sigma;
  Real comb_side;
  Real kernel_side;
  Real relative_error;
};

struct ParsevalReport {
  std::vector<ParsevalRow> rows;
  Real max_relative_error;
  bool pass;  // max relative error < 1e-6 (vacuous pass when empty)
};

std::vector<CombWeight> comb_weights(unsigned kmax,
                                     const PrecisionContext& ctx);

// <K^, phi> with phi(xi) = e^{-xi^2/(2 sigma^2)}:
// -8 pi - 24 pi sum_{k<=kmax} k e^{-2k^2/sigma^2}.  Raises when the
// neglected k-tail exceeds `tail_tolerance`.
Real pair_comb_gaussian(const Real& sigma, unsigned kmax,
                        const PrecisionContext& ctx,
                        const Real& tail_tolerance = Real(1e-10));

// <K, phi^> with phi^(x) = sigma sqrt(2 pi) e^{-sigma^2 x^2 / 2},
// evaluated by Hadamard finite-part quadrature around each pole.
PairingResult pair_kernel_finitepart(const Real& sigma,
                                     const FinitePartQuadrature& quad,
                                     const PrecisionContext& ctx);

ParsevalReport parseval_check(const std::vector<Real>& sigmas,
                              const PrecisionContext& ctx);

// min over k = 1..kmax of dist(pi k, Z) * k^{3/2} and its argmin.
std::pair<Real, std::uint64_t> non_resonance_minimum(std::uint64_t kmax,
                                                     const PrecisionContext& ctx);

// Gauss-Legendre nodes and weights on [-1, 1] at working precision.
void gauss_legendre(unsigned n, const PrecisionContext& ctx,
                    std::vector<Real>& nodes, std::vector<Real>& weights);

std::string parseval_report_to_json(const ParsevalReport& report);

}  // namespace flinthills

#endif
