#include "flinthills/pslq.hpp"

#include <json.hpp>

#include "flinthills/polylog.hpp"
#include "flinthills/series.hpp"

namespace flinthills {

namespace {

using Mat = std::vector<std::vector<Real>>;
using IMat = std::vector<std::vector<BigInt>>;

BigInt nearest_int(const Real& x) {
  return round(x).convert_to<BigInt>();
}

Real dot_at(const std::vector<BigInt>& a, const std::vector<Real>& v) {
  Real acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    acc += Real(a[i]) * v[i];
  return acc;
}

}  // namespace

RelationResult pslq(const std::vector<Real>& values, std::uint64_t bound,
                    unsigned digits, const PrecisionContext& ctx) {
  const std::size_t n = values.size();
  if (n < 2) throw usage_error("relation search needs at least 2 values");
  if (digits < 12) throw usage_error("relation search needs digits >= 12");
  if (bound < 1) throw usage_error("coefficient bound must be >= 1");
  if (digits > ctx.decimal_digits())
    throw precision_error("values carry fewer digits than requested");

  auto guard = ctx.scope();
  RelationResult out;
  out.threshold = ctx.pow10(3 - static_cast<long>(digits));

  // A zero entry is already a (trivial) relation on its own.
  for (std::size_t i = 0; i < n; ++i) {
    if (values[i] == 0) {
      out.found = true;
      out.coefficients.assign(n, BigInt(0));
      out.coefficients[i] = 1;
      out.residual = ctx.make();
      out.norm_bound = ctx.make(1);
      return out;
    }
  }

  const Real gamma = sqrt(Real(4) / 3);

  // Normalised input and the lower-trapezoidal H matrix.
  std::vector<Real> y(values);
  std::vector<Real> s(n);
  {
    Real acc = 0;
    for (std::size_t k = n; k-- > 0;) {
      acc += y[k] * y[k];
      s[k] = sqrt(acc);
    }
    Real norm = s[0];
    for (std::size_t k = 0; k < n; ++k) {
      y[k] /= norm;
      s[k] /= norm;
    }
  }
  Mat H(n, std::vector<Real>(n - 1, Real(0)));
  for (std::size_t j = 0; j + 1 < n; ++j) {
    H[j][j] = s[j + 1] / s[j];
    for (std::size_t i = j + 1; i < n; ++i)
      H[i][j] = -y[i] * y[j] / (s[j] * s[j + 1]);
  }
  IMat A(n, std::vector<BigInt>(n, BigInt(0)));
  IMat B(n, std::vector<BigInt>(n, BigInt(0)));
  for (std::size_t i = 0; i < n; ++i) A[i][i] = B[i][i] = 1;

  auto reduce_row = [&](std::size_t i, std::size_t jstart) {
    for (std::size_t j = jstart + 1; j-- > 0;) {
      if (H[j][j] == 0) continue;
      BigInt t = nearest_int(H[i][j] / H[j][j]);
      if (t == 0) continue;
      Real tr(t);
      y[j] += tr * y[i];
      for (std::size_t k = 0; k <= j; ++k) H[i][k] -= tr * H[j][k];
      for (std::size_t k = 0; k < n; ++k) {
        A[i][k] -= t * A[j][k];
        B[k][j] += t * B[k][i];
      }
    }
  };
  for (std::size_t i = 1; i < n; ++i) reduce_row(i, i - 1);

  const Real exhaustion = ctx.pow10(5 - static_cast<long>(ctx.working_digits()));
  const unsigned max_iterations = 100000;
  // Any vector with max coefficient <= bound has euclidean norm at most
  // bound * sqrt(n); run the norm bound past that before certifying.
  Real bound_r = Real(static_cast<unsigned long>(bound)) * sqrt(Real(n));

  auto finish_found = [&](std::size_t col) -> bool {
    std::vector<BigInt> a(n);
    BigInt maxabs = 0;
    for (std::size_t k = 0; k < n; ++k) {
      a[k] = B[k][col];
      if (abs(a[k]) > maxabs) maxabs = abs(a[k]);
    }
    if (maxabs == 0 || maxabs > BigInt(static_cast<unsigned long>(bound)))
      return false;
    // Re-check at doubled precision before accepting.
    Real resid, norm;
    {
      precision_scope wide(2 * ctx.working_digits());
      resid = abs(dot_at(a, values));
      Real acc = 0;
      for (const Real& v : values) acc += v * v;
      norm = sqrt(acc);
    }
    if (resid >= out.threshold * norm)
      throw verification_error(
          "candidate relation failed the doubled-precision residual check");
    out.found = true;
    out.coefficients = std::move(a);
    out.residual = resid;
    return true;
  };

  for (unsigned iter = 1; iter <= max_iterations; ++iter) {
    out.iterations = iter;

    // Pivot row: maximise gamma^i |H_ii|.
    std::size_t m = 0;
    Real best = -1, scale = ctx.make(1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      scale *= gamma;
      Real v = scale * abs(H[i][i]);
      if (v > best) {
        best = v;
        m = i;
      }
    }

    std::swap(y[m], y[m + 1]);
    std::swap(H[m], H[m + 1]);
    std::swap(A[m], A[m + 1]);
    for (std::size_t k = 0; k < n; ++k) std::swap(B[k][m], B[k][m + 1]);

    if (m + 2 < n) {
      Real t0 = sqrt(H[m][m] * H[m][m] + H[m][m + 1] * H[m][m + 1]);
      Real c = H[m][m] / t0, sn = H[m][m + 1] / t0;
      for (std::size_t i = m; i < n; ++i) {
        Real t3 = H[i][m], t4 = H[i][m + 1];
        H[i][m] = c * t3 + sn * t4;
        H[i][m + 1] = c * t4 - sn * t3;
      }
    }

    for (std::size_t i = m + 1; i < n; ++i)
      reduce_row(i, std::min(i - 1, m + 1));

    // Coefficient-norm lower bound from the diagonal.
    Real hmax = 0;
    for (std::size_t j = 0; j + 1 < n; ++j)
      if (abs(H[j][j]) > hmax) hmax = abs(H[j][j]);
    if (hmax == 0) {
      // Exact degeneration: some y entry vanished identically.
      std::size_t imin = 0;
      for (std::size_t i = 1; i < n; ++i)
        if (abs(y[i]) < abs(y[imin])) imin = i;
      if (finish_found(imin)) return out;
      out.norm_bound = bound_r;
      return out;
    }
    out.norm_bound = 1 / hmax;

    std::size_t imin = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (abs(y[i]) < abs(y[imin])) imin = i;
    if (abs(y[imin]) < out.threshold) {
      if (finish_found(imin)) return out;
      // Relation detected but outside the coefficient budget: certify
      // absence within the budget using the norm bound reached.
      return out;
    }
    if (abs(y[imin]) < exhaustion)
      throw precision_error("relation search exhausted the working precision");

    if (out.norm_bound > bound_r) return out;  // absence certified
  }
  throw precision_error("relation search failed to terminate");
}

RelationScanReport scan_relations(RelationBasis basis, std::uint64_t bound,
                                  unsigned digits, const PrecisionContext& ctx,
                                  std::uint64_t series_truncation) {
  auto guard = ctx.scope();
  RelationScanReport rep;
  rep.basis = basis;
  rep.bound = bound;
  rep.digits = digits;
  switch (basis) {
    case RelationBasis::FCot:
    case RelationBasis::FTan: {
      SeriesId id =
          (basis == RelationBasis::FCot) ? SeriesId::FCot : SeriesId::FTan;
      rep.truncation_N = series_truncation;
      rep.labels = {(basis == RelationBasis::FCot) ? "F_cot" : "F_tan",
                    "zeta3", "pi^2", "1"};
      rep.values = {partial_sum(id, series_truncation, ctx).real_acc,
                    ctx.zeta3(), ctx.pi() * ctx.pi(), ctx.make(1)};
      break;
    }
    case RelationBasis::Cl3: {
      rep.truncation_N = 0;
      rep.labels = {"Cl3(1)", "zeta3", "L3_chi3"};
      rep.values = {li3_unit_circle_accurate(ctx.make(1), ctx).re, ctx.zeta3(),
                    ctx.L3_chi3()};
      break;
    }
  }
  rep.result = pslq(rep.values, bound, digits, ctx);
  return rep;
}

std::string relation_report_to_json(const RelationScanReport& report) {
  nlohmann::json j;
  j["labels"] = report.labels;
  j["bound"] = report.bound;
  j["digits"] = report.digits;
  if (report.truncation_N) j["series_truncation"] = report.truncation_N;
  j["values"] = nlohmann::json::array();
  for (const Real& v : report.values)
    j["values"].push_back(v.str(report.digits + 5));
  j["iterations"] = report.result.iterations;
  if (report.result.found) {
    j["outcome"] = "relation";
    j["coefficients"] = nlohmann::json::array();
    for (const BigInt& c : report.result.coefficients)
      j["coefficients"].push_back(c.str());
    j["residual"] = report.result.residual.str(4);
  } else {
    j["outcome"] = "absence";
    j["certificate"] = {
        {"statement",
         "no integer relation with max coefficient <= bound is detectable at "
         "this precision"},
        {"norm_lower_bound", report.result.norm_bound.str(10)},
        {"detection_threshold", report.result.threshold.str(4)}};
  }
  return j.dump(2);
}

}  // namespace flinthills
