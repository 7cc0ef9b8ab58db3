#ifndef FLINTHILLS_SERIES_HPP
#define FLINTHILLS_SERIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flinthills/diophantine.hpp"
#include "flinthills/precision.hpp"

namespace flinthills {

// Every series summed by the engine.  One term formula each:
//   S      1 / (n^3 sin^2 n)
//   R1Star sin(3n) / (n^3 sin^3 n)
//   A..D   1 / (n^3 (e^{in} +- 1)^{1,2})
//   FCot   -cot(n/2) / n^3      (sign fixed so that F_cot = 2 Im C)
//   FTan   tan(n/2) / n^3
//   GCot   cot^2(n/2) / n^3
//   GTan   tan^2(n/2) / n^3
//   H3     1 / n^3
enum class SeriesId { S, R1Star, A, B, C, D, FCot, FTan, GCot, GTan, H3 };

const char* series_name(SeriesId id);
SeriesId series_from_name(const std::string& name);
bool series_is_real(SeriesId id);

struct SpikeRecord {
  std::uint64_t n;
  Real term;        // |term| for complex series, signed value for real ones
  Real abs_delta;
  Regime regime;
};

// Resumable partial-sum state.  A value type: resuming from a saved
// state and summing fresh to the same N give identical digit strings.
// real_acc/imag_acc hold the rounded grand total; completed_* hold the
// fold of finished chunks and chunk_* the partial current chunk, kept
// separately so a mid-chunk resume replays the exact same merge tree.
struct SeriesState {
  SeriesId id = SeriesId::S;
  std::uint64_t last_n = 0;
  Real real_acc;
  Real imag_acc;
  Real completed_re;
  Real completed_im;
  Real chunk_re;
  Real chunk_im;
  unsigned decimal_digits = 0;
  unsigned guard_digits = 0;
  Real spike_threshold;
  std::vector<SpikeRecord> spikes;

  std::string content_hash() const;
};

struct ReductionCheck {
  Real termwise_residual;   // |R1*(N) - 3 S(N) + 4 H3(N)|
  Real zeta_residual;       // |R1*(N) - (3 S(N) - 4 zeta(3))|
};

struct ExplicitFormCheck {
  Real termwise_residual;   // |R1*(N) + (5/2) H3(N) - (3/4)(Gcot + Gtan)|
  Real combination;         // -(5/2) zeta(3) + (3/4)(Gcot(N) + Gtan(N))
  Real g_cot;
  Real g_tan;
};

struct PartialFractionCheck {
  Real residual;            // |R1*(N) - (-4 H3 + 3A - 3B - 3C - 3D)|
  Real imaginary_part;
  Complex a, b, c, d;
};

struct AccelerationDemo {
  std::uint64_t N;
  Real direct_sum;                 // R1*(N), spike included
  Real accelerated_without_spike;  // naive smooth-tail estimate, n=355 dropped
  Real discrepancy;
  bool flagged_inconsistent;
  Real h3_accelerated;             // same accelerator on the smooth series H3
  Real h3_reference;               // cached zeta(3)
};

// n-th term at working precision.  Real series come back with imaginary
// part exactly 0.
Complex series_term(SeriesId id, std::uint64_t n, const PrecisionContext& ctx);

// Sum of terms 1..N in ascending order within fixed-size chunks
// (bit-reproducible merge order).  `resume_from` must match id and
// precision stamp.
SeriesState partial_sum(SeriesId id, std::uint64_t N,
                        const PrecisionContext& ctx,
                        const std::optional<SeriesState>& resume_from = {},
                        const Real& spike_threshold = Real(1),
                        std::uint64_t chunk_size = 65536);

ReductionCheck verify_reduction(std::uint64_t N, const PrecisionContext& ctx);
ExplicitFormCheck verify_explicit(std::uint64_t N, const PrecisionContext& ctx);
PartialFractionCheck verify_partial_fraction(std::uint64_t N,
                                             const PrecisionContext& ctx);

// One-step eliminator for error proportional to N^{-1/2}:
// s2 + (s2 - s1) / ((N2/N1)^{1/2} - 1).
Real richardson_half(const Real& s1, std::uint64_t N1, const Real& s2,
                     std::uint64_t N2, const PrecisionContext& ctx);

std::vector<SpikeRecord> spike_ledger(SeriesId id, std::uint64_t N,
                                      const Real& threshold,
                                      const PrecisionContext& ctx);

AccelerationDemo acceleration_failure_demo(const PrecisionContext& ctx,
                                           std::uint64_t N = 20000);

// CSV table matching the reproduction report: N, R1*(N), S(N), residual.
struct TableRow {
  std::uint64_t N;
  Real r1star;
  Real s;
  Real zeta_residual;
};
std::vector<TableRow> partial_sum_table(const std::vector<std::uint64_t>& Ns,
                                        const PrecisionContext& ctx);
std::string table_to_csv(const std::vector<TableRow>& rows,
                         unsigned print_digits = 7);

}  // namespace flinthills

#endif
