#include "flinthills/spectral.hpp"

#include <json.hpp>

namespace flinthills {

void gauss_legendre(unsigned n, const PrecisionContext& ctx,
                    std::vector<Real>& nodes, std::vector<Real>& weights) {
  if (n < 2) throw usage_error("need at least 2 quadrature nodes");
  auto guard = ctx.scope();
  nodes.assign(n, ctx.make());
  weights.assign(n, ctx.make());
  Real tol = ctx.pow10(-static_cast<long>(ctx.working_digits()) + 3);
  for (unsigned i = 0; i < n; ++i) {
    // Chebyshev initial guess, then Newton on P_n.
    Real x = cos(ctx.pi() * (Real(i) + Real(3) / 4) / (Real(n) + Real(1) / 2));
    Real dp = ctx.make();
    for (int iter = 0; iter < 100; ++iter) {
      Real p0 = ctx.make(1), p1 = x;
      for (unsigned k = 2; k <= n; ++k) {
        Real p2 = ((2 * Real(k) - 1) * x * p1 - (Real(k) - 1) * p0) / Real(k);
        p0 = p1;
        p1 = p2;
      }
      dp = Real(n) * (x * p1 - p0) / (x * x - 1);
      Real dx = p1 / dp;
      x -= dx;
      if (abs(dx) < tol) break;
    }
    nodes[i] = x;
    weights[i] = 2 / ((1 - x * x) * dp * dp);
  }
}

std::vector<CombWeight> comb_weights(unsigned kmax,
                                     const PrecisionContext& ctx) {
  auto guard = ctx.scope();
  std::vector<CombWeight> out;
  for (long k = -static_cast<long>(kmax); k <= static_cast<long>(kmax); ++k) {
    CombWeight w;
    w.k = k;
    w.location = 2 * k;
    w.coefficient =
        (k == 0) ? -8 * ctx.pi() : -12 * ctx.pi() * Real(std::abs(k));
    out.push_back(std::move(w));
  }
  return out;
}

Real pair_comb_gaussian(const Real& sigma, unsigned kmax,
                        const PrecisionContext& ctx,
                        const Real& tail_tolerance) {
  if (sigma <= 0) throw usage_error("sigma must be positive");
  auto guard = ctx.scope();
  Real s2 = sigma * sigma;
  Real sum = ctx.make();
  for (unsigned k = 1; k <= kmax; ++k)
    sum += Real(k) * exp(-2 * Real(k) * Real(k) / s2);
  // Geometric domination of the k-tail: t_{k+1}/t_k < 2 e^{-2(2k+1)/s^2}.
  Real t_next = Real(kmax + 1) * exp(-2 * Real(kmax + 1) * Real(kmax + 1) / s2);
  Real rho = 2 * exp(-2 * (2 * Real(kmax) + 3) / s2);
  Real tail = (rho < 1) ? 24 * ctx.pi() * t_next / (1 - rho) : Real(1);
  if (rho >= 1 || tail > tail_tolerance)
    throw precision_error("comb k-tail bound " + tail.str(4) +
                          " exceeds tolerance; increase kmax");
  return -8 * ctx.pi() - 24 * ctx.pi() * sum;
}

namespace {

struct GaussTest {
  Real sigma;
  Real s2;
  Real norm;  // sigma sqrt(2 pi)
  Real operator()(const Real& x) const { return norm * exp(-s2 * x * x / 2); }
  Real deriv(const Real& x) const { return -s2 * x * (*this)(x); }
};

}  // namespace

PairingResult pair_kernel_finitepart(const Real& sigma,
                                     const FinitePartQuadrature& quad,
                                     const PrecisionContext& ctx) {
  if (sigma <= 0) throw usage_error("sigma must be positive");
  Real half_pi = ctx.pi() / 2;
  if (quad.pole_radius <= 0 || quad.pole_radius >= half_pi)
    throw usage_error("pole radius must lie in (0, pi/2)");
  auto guard = ctx.scope();
  GaussTest psi{sigma, sigma * sigma, sigma * sqrt(2 * ctx.pi())};

  std::vector<Real> gx, gw;
  gauss_legendre(quad.nodes, ctx, gx, gw);
  auto integrate = [&](auto&& f, const Real& a, const Real& b) {
    Real mid = (a + b) / 2, half = (b - a) / 2;
    Real acc = ctx.make();
    for (unsigned i = 0; i < gx.size(); ++i)
      acc += gw[i] * f(mid + half * gx[i]);
    return acc * half;
  };

  const Real r = quad.pole_radius;
  Real total = ctx.make();
  long M = static_cast<long>(quad.periods);
  for (long j = -M; j <= M; ++j) {
    Real x0 = Real(j) * ctx.pi();
    Real psi0 = psi(x0);
    Real dpsi0 = psi.deriv(x0);
    // Finite part of the 3/u^2 singularity against psi: the odd
    // psi'(x0) u / u^2 piece integrates to zero over the symmetric
    // panel, the constant piece contributes the -2/r term.
    auto regularised = [&](const Real& u) {
      return (psi(x0 + u) - psi0 - dpsi0 * u) / (u * u);
    };
    Real fp = 3 * (integrate(regularised, -r, r) - 2 * psi0 / r);
    // Smooth remainder of K near the pole (K is pi-periodic).
    auto remainder = [&](const Real& u) {
      Real s = sin(u);
      return (3 / (s * s) - 4 - 3 / (u * u)) * psi(x0 + u);
    };
    Real reg = integrate(remainder, -r, r);
    // Away from the pole K is evaluated directly.
    auto plain = [&](const Real& u) {
      Real s = sin(u);
      return (3 / (s * s) - 4) * psi(x0 + u);
    };
    Real outer = integrate(plain, -half_pi, -r) + integrate(plain, r, half_pi);
    total += fp + reg + outer;
  }

  PairingResult out;
  out.value = total;
  // Neglected poles start at (M+1) pi; the Gaussian mass there bounds them.
  out.error_estimate = 100 * psi(Real(M) * ctx.pi());
  return out;
}

ParsevalReport parseval_check(const std::vector<Real>& sigmas,
                              const PrecisionContext& ctx) {
  auto guard = ctx.scope();
  ParsevalReport report;
  report.max_relative_error = ctx.make();
  for (const Real& sigma : sigmas) {
    if (sigma < Real(1) / 5 || sigma > 2)
      throw usage_error("parseval check sigma must lie in [0.2, 2]");
    unsigned kmax = static_cast<unsigned>(4 * sigma.convert_to<double>()) + 6;
    FinitePartQuadrature quad;
    quad.periods =
        std::max(40u, static_cast<unsigned>(20 / sigma.convert_to<double>()));
    ParsevalRow row;
    row.sigma = sigma;
    row.comb_side = pair_comb_gaussian(sigma, kmax, ctx);
    row.kernel_side = pair_kernel_finitepart(sigma, quad, ctx).value;
    row.relative_error =
        abs(row.comb_side - row.kernel_side) / abs(row.comb_side);
    if (row.relative_error > report.max_relative_error)
      report.max_relative_error = row.relative_error;
    report.rows.push_back(std::move(row));
  }
  report.pass = report.max_relative_error < Real(1) / 1000000;
  return report;
}

std::pair<Real, std::uint64_t> non_resonance_minimum(
    std::uint64_t kmax, const PrecisionContext& ctx) {
  if (kmax == 0) throw usage_error("kmax must be positive");
  auto guard = ctx.scope();
  Real best = ctx.make();
  std::uint64_t best_k = 0;
  for (std::uint64_t k = 1; k <= kmax; ++k) {
    Real y = Real(k) * ctx.pi();
    Real d = abs(y - round(y));
    Real prod = d * Real(k) * sqrt(Real(k));
    if (best_k == 0 || prod < best) {
      best = prod;
      best_k = k;
    }
  }
  return {best, best_k};
}

std::string parseval_report_to_json(const ParsevalReport& report) {
  nlohmann::json j;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : report.rows)
    j["rows"].push_back({{"sigma", r.sigma.str(10)},
                         {"comb_side", r.comb_side.str(25)},
                         {"kernel_side", r.kernel_side.str(25)},
                         {"relative_error", r.relative_error.str(4)}});
  j["max_relative_error"] = report.max_relative_error.str(4);
  j["pass"] = report.pass;
  return j.dump(2);
}

}  // namespace flinthills
