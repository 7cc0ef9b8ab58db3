#ifndef FLINTHILLS_PSLQ_HPP
#define FLINTHILLS_PSLQ_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "flinthills/precision.hpp"

namespace flinthills {

struct RelationQuery {
  std::vector<std::string> labels;
  std::vector<Real> values;
  std::uint64_t bound = 1000;   // max |a_i| accepted
  unsigned digits = 15;         // detection threshold 10^{-digits+3}
};

// Either a nonzero integer vector a with |a . v| below the detection
// threshold and max |a_i| <= bound, or an absence certificate carrying
// the coefficient-norm lower bound reached before termination.
struct RelationResult {
  bool found = false;
  std::vector<BigInt> coefficients;
  Real residual;        // |a . v| re-checked at doubled precision
  Real norm_bound;      // no relation with euclidean norm below this
  Real threshold;
  unsigned iterations = 0;
};

RelationResult pslq(const std::vector<Real>& values, std::uint64_t bound,
                    unsigned digits, const PrecisionContext& ctx);

enum class RelationBasis { FCot, FTan, Cl3 };

struct RelationScanReport {
  RelationBasis basis;
  std::vector<std::string> labels;
  std::vector<Real> values;
  std::uint64_t truncation_N = 0;  // series truncation behind value[0], 0 if exact
  std::uint64_t bound;
  unsigned digits;
  RelationResult result;
};

// FCot:  {F_cot, zeta(3), pi^2, 1}
// FTan:  {F_tan, zeta(3), pi^2, 1}
// Cl3:   {Cl_3(1), zeta(3), L(3, chi_{-3})}
// The F_cot / F_tan constants come from the series engine at the
// truncation recorded in the report; Cl3 entries are exact-method values.
RelationScanReport scan_relations(RelationBasis basis, std::uint64_t bound,
                                  unsigned digits, const PrecisionContext& ctx,
                                  std::uint64_t series_truncation = 1000000);

std::string relation_report_to_json(const RelationScanReport& report);

}  // namespace flinthills

#endif
