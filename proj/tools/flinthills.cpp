#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "flinthills/checkpoint.hpp"
#include "flinthills/diophantine.hpp"
#include "flinthills/kernel.hpp"
#include "flinthills/polylog.hpp"
#include "flinthills/precision.hpp"
#include "flinthills/pslq.hpp"
#include "flinthills/series.hpp"
#include "flinthills/spectral.hpp"

namespace fh = flinthills;

namespace {

struct RunConfig {
  unsigned digits = 30;
  unsigned guard_digits = 15;
  double regime_exponent_generic = 0.5;
  double regime_exponent_resonant = 1.5;
  std::uint64_t chunk_size = 65536;
  double spike_threshold = 1.0;
  std::string output_dir;
  std::string checkpoint_path;
};

// Config file entries override command-line flags.
void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw fh::io_error("cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw fh::usage_error(std::string("bad config file: ") + e.what());
  }
  if (j.contains("digits")) cfg.digits = j["digits"].get<unsigned>();
  if (j.contains("guard_digits"))
    cfg.guard_digits = j["guard_digits"].get<unsigned>();
  if (j.contains("regime_exponent_generic"))
    cfg.regime_exponent_generic = j["regime_exponent_generic"].get<double>();
  if (j.contains("regime_exponent_resonant"))
    cfg.regime_exponent_resonant = j["regime_exponent_resonant"].get<double>();
  if (j.contains("chunk_size"))
    cfg.chunk_size = j["chunk_size"].get<std::uint64_t>();
  if (j.contains("spike_threshold"))
    cfg.spike_threshold = j["spike_threshold"].get<double>();
  if (j.contains("output_dir"))
    cfg.output_dir = j["output_dir"].get<std::string>();
  if (j.contains("checkpoint_path"))
    cfg.checkpoint_path = j["checkpoint_path"].get<std::string>();
}

void validate(const RunConfig& cfg) {
  if (cfg.regime_exponent_generic != 0.5 ||
      cfg.regime_exponent_resonant != 1.5)
    throw fh::usage_error(
        "only the regime exponents 1/2 and 3/2 are supported");
  if (cfg.spike_threshold <= 0)
    throw fh::usage_error("spike threshold must be positive");
}

std::string resolve_out(const RunConfig& cfg, const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_absolute() || cfg.output_dir.empty()) return path;
  return (std::filesystem::path(cfg.output_dir) / p).string();
}

void write_file(const RunConfig& cfg, const std::string& path,
                const std::string& text) {
  std::string full = resolve_out(cfg, path);
  std::ofstream out(full, std::ios::trunc);
  if (!out) throw fh::io_error("cannot open for writing: " + full);
  out << text;
  if (!out.flush()) throw fh::io_error("short write: " + full);
}

int cmd_sum(const RunConfig& cfg, const std::string& series, std::uint64_t N,
            const std::string& resume, const std::string& save) {
  fh::PrecisionContext ctx(cfg.digits, cfg.guard_digits);
  fh::SeriesId id = fh::series_from_name(series);
  std::optional<fh::SeriesState> prior;
  if (!resume.empty()) prior = fh::load_checkpoint(resolve_out(cfg, resume));
  fh::SeriesState st =
      fh::partial_sum(id, N, ctx, prior, fh::Real(cfg.spike_threshold),
                      cfg.chunk_size);
  if (!save.empty()) fh::save_checkpoint(st, resolve_out(cfg, save));
  if (fh::series_is_real(id)) {
    std::cout << st.real_acc.str(cfg.digits) << '\n';
  } else {
    std::cout << st.real_acc.str(cfg.digits) << ' '
              << st.imag_acc.str(cfg.digits) << '\n';
  }
  std::cout << "spikes " << st.spikes.size() << '\n';
  return 0;
}

int cmd_classify(const RunConfig& cfg, std::uint64_t N, const std::string& csv,
                 const std::string& json) {
  fh::PrecisionContext ctx(cfg.digits, cfg.guard_digits);
  fh::RegimeCensus census = fh::regime_census(N, ctx);
  std::cout << "N " << census.N << "  G " << census.count_G << "  I "
            << census.count_I << "  R " << census.count_R << '\n';
  std::cout << "resonant n:";
  for (const auto& row : census.members_R) std::cout << ' ' << row.n;
  std::cout << '\n';
  std::cout << "min |delta| n^{3/2} = " << census.min_delta_scaled.str(6)
            << " at n = " << census.min_delta_scaled_at << '\n';
  if (!csv.empty()) write_file(cfg, csv, fh::census_to_csv(census));
  if (!json.empty()) write_file(cfg, json, fh::census_to_json(census));
  return 0;
}

int cmd_convergents(const RunConfig& cfg, unsigned count) {
  fh::PrecisionContext ctx(cfg.digits, cfg.guard_digits);
  for (const auto& c : fh::pi_convergents(count, ctx))
    std::cout << c.p.str() << '/' << c.q.str() << "  error "
              << c.error.str(4) << '\n';
  return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& identity,
               std::uint64_t N) {
  fh::PrecisionContext ctx(cfg.digits, cfg.guard_digits);
  fh::Real tol = ctx.pow10(5 - static_cast<long>(cfg.digits));
  if (identity == "reduction") {
    fh::ReductionCheck c = fh::verify_reduction(N, ctx);
    std::cout << "termwise residual " << c.termwise_residual.str(4) << '\n'
              << "zeta residual " << c.zeta_residual.str(4) << '\n';
    if (c.termwise_residual >= tol)
      throw fh::verification_error("termwise residual above tolerance");
  } else if (identity == "explicit") {
    fh::ExplicitFormCheck c = fh::verify_explicit(N, ctx);
    std::cout << "termwise residual " << c.termwise_residual.str(4) << '\n'
              << "G_cot " << c.g_cot.str(10) << "  G_tan " << c.g_tan.str(10)
              << '\n'
              << "combination " << c.combination.str(12) << '\n';
    if (c.termwise_residual >= tol)
      throw fh::verification_error("termwise residual above tolerance");
  } else if (identity == "partialfraction") {
    fh::PartialFractionCheck c = fh::verify_partial_fraction(N, ctx);
    std::cout << "residual " << c.residual.str(4) << '\n'
              << "imaginary part " << c.imaginary_part.str(4) << '\n'
              << "A " << c.a.re.str(15) << ' ' << c.a.im.str(15) << '\n'
              << "B " << c.b.re.str(15) << ' ' << c.b.im.str(15) << '\n'
              << "C " << c.c.re.str(15) << ' ' << c.c.im.str(15) << '\n'
              << "D " << c.d.re.str(15) << ' ' << c.d.im.str(15) << '\n';
    if (c.residual >= tol || abs(c.imaginary_part) >= tol)
      throw fh::verification_error("residual above tolerance");
  } else {
    throw fh::usage_error("unknown identity: " + identity);
  }
  return 0;
}

int cmd_laurent(const RunConfig& cfg, unsigned radii_count) {
  fh::PrecisionContext ctx(cfg.digits, cfg.guard_digits);
  if (radii_count < 7) throw fh::usage_error("need at least 7 radii");
  std::vector<fh::Real> radii;
  for (unsigned i = 1; i <= radii_count; ++i)
    radii.push_back(ctx.from_rational(fh::Rational(i, 20 * radii_count)));
  fh::LaurentFit fit = fh::laurent_fit(radii, ctx);
  fh::LaurentExpansion exact = fh::laurent_coefficients(4);
  for (std::size_t i = 0; i < fit.coefficients.size(); ++i) {
    std::cout << "u^" << (static_cast<int>(i) - 2) << "  fitted "
              << fit.coefficients[i].str(12);
    if (i < exact.coefficients.size())
      std::cout << "  exact " << exact.coefficients[i].str();
    std::cout << '\n';
  }
  std::cout << "residual norm " << fit.residual_norm.str(4) << '\n';
  return 0;
}

int cmd_spectral(const RunConfig& cfg, const std::vector<double>& sigmas,
                 unsigned periods, double radius, unsigned nodes,
                 std::uint64_t kmax, const std::string& json) {
  fh::PrecisionContext ctx(cfg.digits, cfg.guard_digits);
  fh::ParsevalReport rep;
  rep.max_relative_error = ctx.make();
  for (double s : sigmas) {
    fh::Real sigma(s);
    fh::FinitePartQuadrature quad;
    quad.periods = periods ? periods
                           : std::max(40u, static_cast<unsigned>(20 / s));
    quad.pole_radius = fh::Real(radius);
    quad.nodes = nodes;
    unsigned kmax = static_cast<unsigned>(4 * s) + 6;
    fh::ParsevalRow row;
    row.sigma = sigma;
    row.comb_side = fh::pair_comb_gaussian(sigma, kmax, ctx);
    row.kernel_side = fh::pair_kernel_finitepart(sigma, quad, ctx).value;
    row.relative_error =
        abs(row.comb_side - row.kernel_side) / abs(row.comb_side);
    if (row.relative_error > rep.max_relative_error)
      rep.max_relative_error = row.relative_error;
    rep.rows.push_back(std::move(row));
  }
  rep.pass = rep.max_relative_error < ctx.pow10(-6);
  for (const auto& row : rep.rows)
    std::cout << "sigma " << row.sigma.str(4) << "  comb "
              << row.comb_side.str(15) << "  kernel "
              << row.kernel_side.str(15) << "  rel err "
              << row.relative_error.str(4) << '\n';
  auto [minval, argk] = fh::non_resonance_minimum(kmax, ctx);
  std::cout << "non-resonance min dist(pi k, Z) k^{3/2} = " << minval.str(6)
            << " at k = " << argk << '\n';
  if (!json.empty()) write_file(cfg, json, fh::parseval_report_to_json(rep));
  if (!rep.pass) throw fh::verification_error("parseval pairing mismatch");
  return 0;
}

int cmd_relation(const RunConfig& cfg, const std::string& basis,
                 std::uint64_t bound, unsigned digits, std::uint64_t trunc,
                 const std::string& json) {
  fh::PrecisionContext ctx(cfg.digits, cfg.guard_digits);
  fh::RelationBasis b;
  if (basis == "FCOT")
    b = fh::RelationBasis::FCot;
  else if (basis == "FTAN")
    b = fh::RelationBasis::FTan;
  else if (basis == "CL3")
    b = fh::RelationBasis::Cl3;
  else
    throw fh::usage_error("unknown basis: " + basis);
  fh::RelationScanReport rep = fh::scan_relations(b, bound, digits, ctx, trunc);
  std::string text = fh::relation_report_to_json(rep);
  std::cout << text << '\n';
  if (!json.empty()) write_file(cfg, json, text);
  return 0;
}

int cmd_report(const RunConfig& cfg, unsigned table, const std::string& out,
               bool lerch) {
  fh::PrecisionContext ctx(cfg.digits, cfg.guard_digits);
  if (table != 72) throw fh::usage_error("only table 72 is available");
  std::vector<std::uint64_t> Ns = {10000, 50000, 100000, 200000, 500000};
  std::string csv = fh::table_to_csv(fh::partial_sum_table(Ns, ctx));
  if (out.empty())
    std::cout << csv;
  else
    write_file(cfg, out, csv);
  if (lerch) {
    fh::PartialFractionCheck c = fh::verify_partial_fraction(50000, ctx);
    nlohmann::json j;
    auto put = [&](const char* k, const fh::Complex& z) {
      j[k] = {{"re", z.re.str(15)}, {"im", z.im.str(15)}};
    };
    put("A", c.a);
    put("B", c.b);
    put("C", c.c);
    put("D", c.d);
    j["residual"] = c.residual.str(4);
    j["imaginary_part"] = c.imaginary_part.str(4);
    std::cout << j.dump(2) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flint hills series laboratory"};
  app.require_subcommand(1);

  RunConfig cfg;
  if (const char* dir = std::getenv("FLINTHILLS_OUTPUT_DIR"))
    cfg.output_dir = dir;
  std::string config_path;
  app.add_option("--config", config_path, "JSON config; overrides flags");
  app.add_option("--digits", cfg.digits, "output decimal digits");
  app.add_option("--guard", cfg.guard_digits, "guard digits");
  app.add_option("--chunk", cfg.chunk_size, "summation chunk size");
  app.add_option("--spike-threshold", cfg.spike_threshold,
                 "|term| cutoff for the spike ledger");
  app.add_option("--output-dir", cfg.output_dir, "directory for output files");

  auto* sum = app.add_subcommand("sum", "partial sum of a series");
  std::string series = "S";
  std::uint64_t N = 10000;
  std::string resume, save;
  sum->add_option("--series", series, "series id")->required();
  sum->add_option("--N", N, "truncation")->required();
  sum->add_option("--resume", resume, "checkpoint to resume from");
  sum->add_option("--checkpoint-out", save, "checkpoint to write");

  auto* classify = app.add_subcommand("classify", "regime census up to N");
  std::string census_csv, census_json;
  classify->add_option("--N", N, "census bound")->required();
  classify->add_option("--csv", census_csv, "write census CSV");
  classify->add_option("--json", census_json, "write census JSON");

  auto* conv = app.add_subcommand("convergents", "convergents of pi");
  unsigned count = 10;
  conv->add_option("--count", count, "how many");

  auto* verify = app.add_subcommand("verify", "termwise identity checks");
  std::string identity;
  verify->add_option("--identity", identity,
                     "reduction | explicit | partialfraction")
      ->required();
  verify->add_option("--N", N, "truncation")->required();

  auto* laurent = app.add_subcommand("laurent", "pole expansion fit");
  unsigned radii_count = 9;
  laurent->add_option("--radii", radii_count, "sample radius count");

  auto* spectral = app.add_subcommand("spectral", "pairing cross-check");
  std::vector<double> sigmas{0.3, 0.5, 1.0};
  unsigned periods = 0, nodes = 48;
  double radius = 0.5;
  std::uint64_t kmax = 1000;
  spectral->add_option("--sigma", sigmas, "gaussian widths");
  spectral->add_option("--periods", periods, "poles on each side (0 = auto)");
  spectral->add_option("--radius", radius, "finite-part radius");
  spectral->add_option("--nodes", nodes, "quadrature nodes");
  spectral->add_option("--kmax", kmax, "non-resonance scan bound");
  std::string spectral_json;
  spectral->add_option("--json", spectral_json, "write JSON report");

  auto* relation = app.add_subcommand("relation", "integer relation search");
  std::string basis = "FCOT";
  std::uint64_t bound = 1000, trunc = 1000000;
  unsigned rel_digits = 15;
  relation->add_option("--basis", basis, "FCOT | FTAN | CL3")->required();
  relation->add_option("--bound", bound, "max coefficient");
  relation->add_option("--rel-digits", rel_digits, "detection digits");
  relation->add_option("--N", trunc, "series truncation for F_cot/F_tan");
  std::string relation_json;
  relation->add_option("--json", relation_json, "write JSON report");

  auto* report = app.add_subcommand("report", "reproduction report");
  unsigned table = 72;
  std::string report_out;
  bool lerch = false;
  report->add_option("--table", table, "table id (72)");
  report->add_option("--out", report_out, "CSV path (stdout if omitted)");
  report->add_flag("--lerch", lerch, "also print the Lerch-sum values");

  try {
    app.parse(argc, argv);
    if (!config_path.empty()) apply_config_file(cfg, config_path);
    validate(cfg);
    if (*sum) return cmd_sum(cfg, series, N, resume, save);
    if (*classify) return cmd_classify(cfg, N, census_csv, census_json);
    if (*conv) return cmd_convergents(cfg, count);
    if (*verify) return cmd_verify(cfg, identity, N);
    if (*laurent) return cmd_laurent(cfg, radii_count);
    if (*spectral)
      return cmd_spectral(cfg, sigmas, periods, radius, nodes, kmax,
                          spectral_json);
    if (*relation)
      return cmd_relation(cfg, basis, bound, rel_digits, trunc, relation_json);
    if (*report) return cmd_report(cfg, table, report_out, lerch);
    throw fh::usage_error("no subcommand");
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(fh::exit_code::usage);
  } catch (const fh::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(fh::exit_code::io);
  }
}
