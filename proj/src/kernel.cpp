#include "flinthills/kernel.hpp"

#include <algorithm>
#include <set>

namespace flinthills {

Real pole_distance(const Real& x, const PrecisionContext& ctx) {
  auto guard = ctx.scope();
  Real m = round(x / ctx.pi());
  Real d = abs(x - m * ctx.pi());
  Real threshold = ctx.pow10(-static_cast<long>(ctx.working_digits() / 2));
  if (d <= threshold)
    throw pole_proximity_error(
        "argument within " + d.str(6) + " of a pole of K", d.str(12));
  return d;
}

Real kernel_trig(const Real& x, const PrecisionContext& ctx) {
  auto guard = ctx.scope();
  pole_distance(x, ctx);
  Real s = sin(x);
  return sin(3 * x) / (s * s * s);
}

Real kernel_csc(const Real& x, const PrecisionContext& ctx) {
  auto guard = ctx.scope();
  pole_distance(x, ctx);
  Real s = sin(x);
  return 3 / (s * s) - 4;
}

QFormTerms kernel_qform(const Real& x, const PrecisionContext& ctx) {
  auto guard = ctx.scope();
  pole_distance(x, ctx);  // q^2 - 1 vanishes exactly at the poles of K
  Complex q(cos(x), sin(x));
  Complex qp1 = q + Real(1);
  Complex qm1 = q - Real(1);
  QFormTerms out;
  out.terms[0] = Complex(Real(-4));
  out.terms[1] = Real(3) / qp1;
  out.terms[2] = -(Real(3) / (qp1 * qp1));
  out.terms[3] = -(Real(3) / qm1);
  out.terms[4] = -(Real(3) / (qm1 * qm1));
  return out;
}

LaurentExpansion laurent_coefficients(int max_power) {
  if (max_power > 4)
    throw usage_error("Laurent coefficients certified only through u^4");
  if (max_power < -2) throw usage_error("max_power must be >= -2");
  static const Rational known[] = {
      Rational(3),  Rational(0), Rational(-3),     Rational(0),
      Rational(1, 5), Rational(0), Rational(2, 63),
  };
  LaurentExpansion e;
  for (int p = -2; p <= max_power; ++p) e.coefficients.push_back(known[p + 2]);
  return e;
}

namespace {

// Solve the dense symmetric system A c = b by Gaussian elimination with
// partial pivoting, all at working precision.
std::vector<Real> solve_dense(std::vector<std::vector<Real>> A,
                              std::vector<Real> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (abs(A[r][col]) > abs(A[piv][col])) piv = r;
    std::swap(A[col], A[piv]);
    std::swap(b[col], b[piv]);
    for (std::size_t r = col + 1; r < n; ++r) {
      Real f = A[r][col] / A[col][col];
      for (std::size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Real> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Real acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= A[i][j] * x[j];
    x[i] = acc / A[i][i];
  }
  return x;
}

}  // namespace

LaurentFit laurent_fit(const std::vector<Real>& radii,
                       const PrecisionContext& ctx) {
  // Doubled precision: the power basis on a short interval is badly
  // conditioned and the normal equations square that.
  precision_scope guard(2 * ctx.working_digits());
  std::set<std::string> distinct;
  for (const Real& r : radii) {
    if (r <= 0 || r > Real(3) / 10)
      throw usage_error("fit radii must lie in (0, 0.3]");
    distinct.insert(r.str());
  }
  if (distinct.size() < 7)
    throw usage_error("need at least 7 distinct radii for the 7-parameter fit");

  // Fit u^2 K(u) against the polynomial basis 1, u, ..., u^6: same
  // coefficients, far better conditioning than the raw u^{-2}..u^4 basis.
  // Each radius is sampled at +r and -r so that the even data cannot
  // alias onto the odd basis members.
  std::vector<Real> samples;
  for (const Real& r : radii) {
    samples.push_back(r);
    samples.push_back(-r);
  }
  const std::size_t nb = 7;
  std::vector<std::vector<Real>> ata(nb, std::vector<Real>(nb, Real(0)));
  std::vector<Real> atb(nb, Real(0));
  std::vector<std::pair<std::vector<Real>, Real>> rows;
  for (const Real& u : samples) {
    Real s = sin(u);
    Real y = sin(3 * u) / s / s / s * u * u;
    std::vector<Real> basis(nb);
    Real p(1);
    for (std::size_t j = 0; j < nb; ++j) {
      basis[j] = p;
      p *= u;
    }
    for (std::size_t i = 0; i < nb; ++i) {
      for (std::size_t j = 0; j < nb; ++j) ata[i][j] += basis[i] * basis[j];
      atb[i] += basis[i] * y;
    }
    rows.emplace_back(std::move(basis), y);
  }
  LaurentFit fit;
  fit.coefficients = solve_dense(std::move(ata), std::move(atb));
  Real rss(0);
  for (const auto& [basis, y] : rows) {
    Real pred(0);
    for (std::size_t j = 0; j < nb; ++j) pred += fit.coefficients[j] * basis[j];
    rss += (pred - y) * (pred - y);
  }
  fit.residual_norm = sqrt(rss);
  return fit;
}

}  // namespace flinthills
