#include "flinthills/series.hpp"

#include <array>
#include <sstream>

namespace flinthills {

const char* series_name(SeriesId id) {
  switch (id) {
    case SeriesId::S: return "S";
    case SeriesId::R1Star: return "R1STAR";
    case SeriesId::A: return "A";
    case SeriesId::B: return "B";
    case SeriesId::C: return "C";
    case SeriesId::D: return "D";
    case SeriesId::FCot: return "F_COT";
    case SeriesId::FTan: return "F_TAN";
    case SeriesId::GCot: return "G_COT";
    case SeriesId::GTan: return "G_TAN";
    case SeriesId::H3: return "H3";
  }
  return "?";
}

SeriesId series_from_name(const std::string& name) {
  static const std::array<SeriesId, 11> all = {
      SeriesId::S,    SeriesId::R1Star, SeriesId::A,    SeriesId::B,
      SeriesId::C,    SeriesId::D,      SeriesId::FCot, SeriesId::FTan,
      SeriesId::GCot, SeriesId::GTan,   SeriesId::H3};
  for (SeriesId id : all)
    if (name == series_name(id)) return id;
  throw usage_error("unknown series id: " + name);
}

bool series_is_real(SeriesId id) {
  switch (id) {
    case SeriesId::A:
    case SeriesId::B:
    case SeriesId::C:
    case SeriesId::D:
      return false;
    default:
      return true;
  }
}

namespace {

// Per-n trig data shared by all term formulas: delta(n), parity of m,
// and the pi-reduced half angle n/2 - round(n/(2 pi)) pi.
struct TermTrig {
  Real delta;
  bool m_odd;
  Real half_reduced;
};

TermTrig term_trig(std::uint64_t n, const PrecisionContext& ctx) {
  NearDistance d = signed_near_distance(n, ctx);
  TermTrig t;
  t.delta = d.delta;
  t.m_odd = (d.m % 2) != 0;
  // tan has period pi: reduce n/2 by round(n/(2 pi)) pi.
  Real half = Real(n) / 2;
  Real k = round(half / ctx.pi());
  t.half_reduced = half - k * ctx.pi();
  return t;
}

Real check_pole(const Real& v, SeriesId id, std::uint64_t n,
                const PrecisionContext& ctx) {
  Real threshold = ctx.pow10(-static_cast<long>(ctx.working_digits() / 2));
  if (abs(v) <= threshold)
    throw pole_proximity_error("term(" + std::string(series_name(id)) + ", " +
                                   std::to_string(n) + ") too close to a pole",
                               abs(v).str(12));
  return v;
}

Complex term_from_trig(SeriesId id, std::uint64_t n, const TermTrig& t,
                       const PrecisionContext& ctx) {
  Real n3 = Real(n) * Real(n) * Real(n);
  switch (id) {
    case SeriesId::H3:
      return Complex(1 / n3);
    case SeriesId::S: {
      Real s = check_pole(sin(t.delta), id, n, ctx);
      return Complex(1 / (n3 * s * s));
    }
    case SeriesId::R1Star: {
      Real s = check_pole(sin(t.delta), id, n, ctx);
      Real s2 = s * s;
      // sin(3n)/sin^3(n) = (3 s - 4 s^3)/s^3; the (-1)^m parity cancels.
      return Complex((3 * s - 4 * s * s2) / (n3 * s2 * s));
    }
    case SeriesId::FCot: {
      Real tn = check_pole(tan(t.half_reduced), id, n, ctx);
      return Complex(-1 / (tn * n3));
    }
    case SeriesId::FTan:
      return Complex(tan(t.half_reduced) / n3);
    case SeriesId::GCot: {
      Real tn = check_pole(tan(t.half_reduced), id, n, ctx);
      return Complex(1 / (tn * tn * n3));
    }
    case SeriesId::GTan: {
      Real tn = tan(t.half_reduced);
      return Complex(tn * tn / n3);
    }
    case SeriesId::A:
    case SeriesId::B:
    case SeriesId::C:
    case SeriesId::D: {
      Real sign = t.m_odd ? Real(-1) : Real(1);
      Complex q(sign * cos(t.delta), sign * sin(t.delta));
      bool plus = (id == SeriesId::A || id == SeriesId::B);
      Complex base = plus ? q + Real(1) : q - Real(1);
      check_pole(base.abs(), id, n, ctx);
      bool squared = (id == SeriesId::B || id == SeriesId::D);
      Complex den = squared ? base * base : base;
      return Real(1) / (den * n3);
    }
  }
  throw usage_error("unknown series id");
}

}  // namespace

Complex series_term(SeriesId id, std::uint64_t n, const PrecisionContext& ctx) {
  auto guard = ctx.scope();
  return term_from_trig(id, n, term_trig(n, ctx), ctx);
}

std::string SeriesState::content_hash() const {
  // FNV-1a 64 over the canonical field serialization.
  std::ostringstream os;
  os << series_name(id) << '|' << last_n << '|' << decimal_digits << '|'
     << guard_digits << '|' << real_acc.str(0, std::ios_base::scientific) << '|'
     << imag_acc.str(0, std::ios_base::scientific) << '|'
     << completed_re.str(0, std::ios_base::scientific) << '|'
     << completed_im.str(0, std::ios_base::scientific) << '|'
     << chunk_re.str(0, std::ios_base::scientific) << '|'
     << chunk_im.str(0, std::ios_base::scientific) << '|'
     << spike_threshold.str(0, std::ios_base::scientific);
  for (const auto& s : spikes)
    os << '|' << s.n << ':' << s.term.str(0, std::ios_base::scientific) << ':'
       << s.abs_delta.str(0, std::ios_base::scientific) << ':'
       << regime_name(s.regime);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : os.str()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream hex;
  hex << std::hex << h;
  return hex.str();
}

SeriesState partial_sum(SeriesId id, std::uint64_t N,
                        const PrecisionContext& ctx,
                        const std::optional<SeriesState>& resume_from,
                        const Real& spike_threshold, std::uint64_t chunk_size) {
  if (N == 0) throw usage_error("N must be positive");
  if (chunk_size == 0) throw usage_error("chunk_size must be positive");
  auto guard = ctx.scope();
  SeriesState state;
  if (resume_from) {
    if (resume_from->id != id)
      throw checkpoint_error("checkpoint series id mismatch: have " +
                             std::string(series_name(resume_from->id)) +
                             ", want " + series_name(id));
    if (resume_from->decimal_digits != ctx.decimal_digits() ||
        resume_from->guard_digits != ctx.guard_digits())
      throw checkpoint_error("checkpoint precision stamp mismatch");
    if (resume_from->last_n > N)
      throw usage_error("checkpoint is already past N");
    state = *resume_from;
  } else {
    state.id = id;
    state.decimal_digits = ctx.decimal_digits();
    state.guard_digits = ctx.guard_digits();
    state.completed_re = ctx.make();
    state.completed_im = ctx.make();
    state.chunk_re = ctx.make();
    state.chunk_im = ctx.make();
    state.spike_threshold = spike_threshold;
    state.spike_threshold.precision(ctx.working_digits());
  }

  std::uint64_t n = state.last_n + 1;
  while (n <= N) {
    // Chunk-local accumulators folded in ascending order: the merge tree
    // is fixed by the absolute chunk boundaries, and a partial chunk is
    // carried in the state so that a resume continues the very same
    // accumulator instead of opening a new one.
    std::uint64_t chunk_start = ((n - 1) / chunk_size) * chunk_size + 1;
    std::uint64_t chunk_end = std::min<std::uint64_t>(chunk_start + chunk_size - 1, N);
    bool chunk_complete = (chunk_end == chunk_start + chunk_size - 1);
    for (; n <= chunk_end; ++n) {
      TermTrig t = term_trig(n, ctx);
      Complex term = term_from_trig(id, n, t, ctx);
      state.chunk_re += term.re;
      state.chunk_im += term.im;
      Real mag = series_is_real(id) ? abs(term.re) : term.abs();
      if (mag >= state.spike_threshold) {
        SpikeRecord rec;
        rec.n = n;
        rec.term = series_is_real(id) ? term.re : term.abs();
        rec.abs_delta = abs(t.delta);
        rec.regime = classify(n, ctx);
        state.spikes.push_back(std::move(rec));
      }
    }
    if (chunk_complete) {
      state.completed_re += state.chunk_re;
      state.completed_im += state.chunk_im;
      state.chunk_re = ctx.make();
      state.chunk_im = ctx.make();
    }
  }
  state.last_n = N;
  state.real_acc = state.completed_re + state.chunk_re;
  state.imag_acc = state.completed_im + state.chunk_im;
  return state;
}

ReductionCheck verify_reduction(std::uint64_t N, const PrecisionContext& ctx) {
  auto guard = ctx.scope();
  Real r1 = partial_sum(SeriesId::R1Star, N, ctx).real_acc;
  Real s = partial_sum(SeriesId::S, N, ctx).real_acc;
  Real h3 = partial_sum(SeriesId::H3, N, ctx).real_acc;
  ReductionCheck out;
  out.termwise_residual = abs(r1 - 3 * s + 4 * h3);
  out.zeta_residual = abs(r1 - (3 * s - 4 * ctx.zeta3()));
  return out;
}

ExplicitFormCheck verify_explicit(std::uint64_t N, const PrecisionContext& ctx) {
  auto guard = ctx.scope();
  Real r1 = partial_sum(SeriesId::R1Star, N, ctx).real_acc;
  Real h3 = partial_sum(SeriesId::H3, N, ctx).real_acc;
  Real gcot = partial_sum(SeriesId::GCot, N, ctx).real_acc;
  Real gtan = partial_sum(SeriesId::GTan, N, ctx).real_acc;
  ExplicitFormCheck out;
  out.g_cot = gcot;
  out.g_tan = gtan;
  out.termwise_residual =
      abs(r1 + Real(5) / 2 * h3 - Real(3) / 4 * (gcot + gtan));
  out.combination =
      -Real(5) / 2 * ctx.zeta3() + Real(3) / 4 * (gcot + gtan);
  return out;
}

PartialFractionCheck verify_partial_fraction(std::uint64_t N,
                                             const PrecisionContext& ctx) {
  auto guard = ctx.scope();
  Real r1 = partial_sum(SeriesId::R1Star, N, ctx).real_acc;
  Real h3 = partial_sum(SeriesId::H3, N, ctx).real_acc;
  auto sum_of = [&](SeriesId id) {
    SeriesState st = partial_sum(id, N, ctx);
    return Complex(st.real_acc, st.imag_acc);
  };
  PartialFractionCheck out;
  out.a = sum_of(SeriesId::A);
  out.b = sum_of(SeriesId::B);
  out.c = sum_of(SeriesId::C);
  out.d = sum_of(SeriesId::D);
  Complex rhs(3 * (out.a.re - out.b.re - out.c.re - out.d.re) - 4 * h3,
              3 * (out.a.im - out.b.im - out.c.im - out.d.im));
  out.residual = abs(r1 - rhs.re);
  out.imaginary_part = rhs.im;
  return out;
}

Real richardson_half(const Real& s1, std::uint64_t N1, const Real& s2,
                     std::uint64_t N2, const PrecisionContext& ctx) {
  if (N2 <= N1) throw usage_error("richardson_half requires N2 > N1");
  auto guard = ctx.scope();
  return s2 + (s2 - s1) / (sqrt(Real(N2) / Real(N1)) - 1);
}

std::vector<SpikeRecord> spike_ledger(SeriesId id, std::uint64_t N,
                                      const Real& threshold,
                                      const PrecisionContext& ctx) {
  if (threshold <= 0) throw usage_error("spike threshold must be positive");
  return partial_sum(id, N, ctx, {}, threshold).spikes;
}

namespace {

// Aitken delta-squared on three truncations; exact on a pure power-law
// tail, which is exactly the assumption that fails on a spiked series.
Real aitken(const Real& s1, const Real& s2, const Real& s3) {
  Real d1 = s2 - s1;
  Real d2 = s3 - s2;
  Real den = d2 - d1;
  if (abs(den) < Real(1e-30)) return s3;
  return s3 - d2 * d2 / den;
}

}  // namespace

AccelerationDemo acceleration_failure_demo(const PrecisionContext& ctx,
                                           std::uint64_t N) {
  auto guard = ctx.scope();
  AccelerationDemo demo;
  demo.N = N;
  Real spike = series_term(SeriesId::R1Star, 355, ctx).re;
  std::array<std::uint64_t, 3> Ns = {N / 4, N / 2, N};
  std::array<Real, 3> nospike, h3s;
  SeriesState st;
  std::optional<SeriesState> resume;
  for (int i = 0; i < 3; ++i) {
    st = partial_sum(SeriesId::R1Star, Ns[i], ctx, resume);
    resume = st;
    nospike[i] = st.real_acc - (Ns[i] >= 355 ? spike : ctx.make());
  }
  demo.direct_sum = st.real_acc;
  resume.reset();
  for (int i = 0; i < 3; ++i) {
    SeriesState h = partial_sum(SeriesId::H3, Ns[i], ctx, resume);
    resume = h;
    h3s[i] = h.real_acc;
  }
  demo.accelerated_without_spike = aitken(nospike[0], nospike[1], nospike[2]);
  demo.discrepancy = abs(demo.direct_sum - demo.accelerated_without_spike);
  demo.flagged_inconsistent = demo.discrepancy > 1;
  demo.h3_accelerated = aitken(h3s[0], h3s[1], h3s[2]);
  demo.h3_reference = ctx.zeta3();
  return demo;
}

std::vector<TableRow> partial_sum_table(const std::vector<std::uint64_t>& Ns,
                                        const PrecisionContext& ctx) {
  auto guard = ctx.scope();
  std::vector<std::uint64_t> sorted = Ns;
  std::sort(sorted.begin(), sorted.end());
  std::vector<TableRow> rows;
  std::optional<SeriesState> r1_state, s_state;
  for (std::uint64_t N : sorted) {
    SeriesState r1 = partial_sum(SeriesId::R1Star, N, ctx, r1_state);
    SeriesState s = partial_sum(SeriesId::S, N, ctx, s_state);
    r1_state = r1;
    s_state = s;
    TableRow row;
    row.N = N;
    row.r1star = r1.real_acc;
    row.s = s.real_acc;
    row.zeta_residual = abs(r1.real_acc - (3 * s.real_acc - 4 * ctx.zeta3()));
    rows.push_back(std::move(row));
  }
  return rows;
}

// print_digits: decimal places after the point for the sum columns.
std::string table_to_csv(const std::vector<TableRow>& rows,
                         unsigned print_digits) {
  std::ostringstream os;
  os << "N,R1STAR,S,zeta_residual\n";
  for (const auto& r : rows)
    os << r.N << ',' << r.r1star.str(print_digits, std::ios_base::fixed) << ','
       << r.s.str(print_digits, std::ios_base::fixed) << ','
       << r.zeta_residual.str(3) << '\n';
  return os.str();
}

}  // namespace flinthills
