#include "flinthills/diophantine.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace flinthills {

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::G: return "G";
    case Regime::I: return "I";
    case Regime::R: return "R";
  }
  return "?";
}

std::vector<Convergent> pi_convergents(unsigned count,
                                       const PrecisionContext& ctx) {
  if (count == 0) throw usage_error("count must be positive");
  auto guard = ctx.scope();
  // Trust rule: a convergent p/q is only emitted while
  // q^2 < 10^{working_digits - 10}, otherwise the continued-fraction
  // digits of pi are no longer certain at this precision.
  Real qbound = ctx.pow10((static_cast<long>(ctx.working_digits()) - 10) / 2);
  std::vector<Convergent> out;
  Real x = ctx.pi();
  BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (unsigned k = 0; k < count; ++k) {
    BigInt a = floor(x).convert_to<BigInt>();
    BigInt p = a * p1 + p0;
    BigInt q = a * q1 + q0;
    if (Real(q) >= qbound)
      throw precision_error(
          "continued-fraction expansion of pi exhausted at working precision "
          "(denominator " + q.str() + ")");
    Convergent c;
    c.p = p;
    c.q = q;
    c.error = abs(ctx.pi() - Real(p) / Real(q));
    out.push_back(std::move(c));
    Real frac = x - Real(a);
    if (frac == 0)
      throw precision_error("continued-fraction remainder vanished");
    x = 1 / frac;
    p0 = p1; q0 = q1; p1 = p; q1 = q;
  }
  return out;
}

namespace {

unsigned ceil_log10(std::uint64_t n) {
  unsigned d = 0;
  std::uint64_t p = 1;
  while (p < n) {
    p = (p > UINT64_MAX / 10) ? UINT64_MAX : p * 10;
    ++d;
  }
  return d;  // smallest d with 10^d >= n
}

void require_reduction_precision(std::uint64_t n, const PrecisionContext& ctx) {
  if (n == 0) throw usage_error("n must be positive");
  if (ctx.guard_digits() < ceil_log10(n) + 5)
    throw precision_error(
        "guard digits insufficient for delta(" + std::to_string(n) +
        "): need ceil(log10 n) + 5 = " + std::to_string(ceil_log10(n) + 5));
}

}  // namespace

NearDistance signed_near_distance(std::uint64_t n, const PrecisionContext& ctx) {
  require_reduction_precision(n, ctx);
  auto guard = ctx.scope();
  Real rn(n);
  Real m = round(rn / ctx.pi());
  NearDistance d;
  d.n = n;
  d.m = m.convert_to<std::uint64_t>();
  d.delta = rn - m * ctx.pi();
  return d;
}

Real sin_integer(std::uint64_t n, const PrecisionContext& ctx) {
  NearDistance d = signed_near_distance(n, ctx);
  auto guard = ctx.scope();
  Real s = sin(d.delta);
  return (d.m % 2 == 0) ? s : -s;
}

namespace {

Regime classify_from(const Real& abs_sin, std::uint64_t n,
                     const PrecisionContext& ctx) {
  Real t1 = 1 / sqrt(Real(n));  // n^{-1/2}
  Real t2 = t1 * t1 * t1;       // n^{-3/2}
  Real margin = ctx.pow10(-(static_cast<long>(ctx.working_digits()) - 5));
  if (abs(abs_sin - t1) < margin || abs(abs_sin - t2) < margin)
    throw precision_error("regime of n = " + std::to_string(n) +
                          " undecidable at this precision");
  if (abs_sin >= t1) return Regime::G;
  if (abs_sin >= t2) return Regime::I;
  return Regime::R;
}

}  // namespace

Regime classify(std::uint64_t n, const PrecisionContext& ctx) {
  auto guard = ctx.scope();
  Real s = abs(sin_integer(n, ctx));
  return classify_from(s, n, ctx);
}

RegimeCensus regime_census(std::uint64_t N, const PrecisionContext& ctx,
                           std::uint64_t intermediate_cap) {
  if (N == 0) throw usage_error("N must be positive");
  require_reduction_precision(N, ctx);
  auto guard = ctx.scope();
  RegimeCensus census;
  census.N = N;
  census.intermediate_cap = intermediate_cap;
  const Real& pi = ctx.pi();
  Real inv_pi = 1 / pi;
  for (std::uint64_t n = 1; n <= N; ++n) {
    Real rn(n);
    Real m = round(rn * inv_pi);
    Real delta = rn - m * pi;
    Real abs_sin = sin(abs(delta));
    Regime reg = classify_from(abs_sin, n, ctx);
    Real scaled = abs(delta) * rn * sqrt(rn);
    if (census.min_delta_scaled_at == 0 || scaled < census.min_delta_scaled) {
      census.min_delta_scaled = scaled;
      census.min_delta_scaled_at = n;
    }
    if (reg == Regime::G) {
      ++census.count_G;
      continue;
    }
    CensusRow row{n, m.convert_to<std::uint64_t>(), delta, abs_sin, reg};
    if (reg == Regime::R) {
      ++census.count_R;
      census.members_R.push_back(std::move(row));
    } else {
      ++census.count_I;
      if (census.members_I.size() < intermediate_cap)
        census.members_I.push_back(std::move(row));
    }
  }
  return census;
}

Real weyl_sum_magnitude(std::uint64_t h, std::uint64_t N,
                        const PrecisionContext& ctx) {
  if (h == 0 || N == 0) throw usage_error("h and N must be positive");
  auto guard = ctx.scope();
  // e^{2 pi i h n / pi} = e^{2 i h n}
  Real re = ctx.make(), im = ctx.make();
  for (std::uint64_t n = 1; n <= N; ++n) {
    Real phase = Real(2) * Real(h) * Real(n);
    re += cos(phase);
    im += sin(phase);
  }
  return sqrt(re * re + im * im);
}

Real weyl_sum_closed_form(std::uint64_t h, std::uint64_t N,
                          const PrecisionContext& ctx) {
  if (h == 0 || N == 0) throw usage_error("h and N must be positive");
  auto guard = ctx.scope();
  return abs(sin(Real(N) * Real(h)) / sin(Real(h)));
}

std::string census_to_csv(const RegimeCensus& census) {
  std::ostringstream os;
  os << "n,m,delta,abs_sin,regime\n";
  std::vector<const CensusRow*> rows;
  for (const auto& r : census.members_R) rows.push_back(&r);
  for (const auto& r : census.members_I) rows.push_back(&r);
  std::sort(rows.begin(), rows.end(),
            [](const CensusRow* a, const CensusRow* b) { return a->n < b->n; });
  for (const CensusRow* r : rows)
    os << r->n << ',' << r->m << ',' << r->delta.str(20) << ','
       << r->abs_sin.str(20) << ',' << regime_name(r->regime) << '\n';
  return os.str();
}

std::string census_to_json(
    const RegimeCensus& census,
    const std::vector<std::pair<std::uint64_t, Real>>& sparsity_ratios) {
  nlohmann::json j;
  j["N"] = census.N;
  j["counts"] = {{"G", census.count_G},
                 {"I", census.count_I},
                 {"R", census.count_R}};
  j["resonant_members"] = nlohmann::json::array();
  for (const auto& r : census.members_R)
    j["resonant_members"].push_back(
        {{"n", r.n}, {"m", r.m}, {"delta", r.delta.str(20)},
         {"abs_sin", r.abs_sin.str(20)}});
  j["intermediate_cap"] = census.intermediate_cap;
  j["intermediate_stored"] = census.members_I.size();
  j["min_delta_scaled"] = census.min_delta_scaled.str(20);
  j["min_delta_scaled_at"] = census.min_delta_scaled_at;
  auto ratios = nlohmann::json::array();
  for (const auto& [n, r] : sparsity_ratios)
    ratios.push_back({{"N", n}, {"ratio", r.str(10)}});
  j["sparsity_ratio_table"] = ratios;
  return j.dump(2);
}

}  // namespace flinthills
