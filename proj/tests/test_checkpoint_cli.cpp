#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "flinthills/checkpoint.hpp"

using namespace flinthills;

namespace {

std::filesystem::path scratch() {
  auto dir = std::filesystem::temp_directory_path() / "flinthills-test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_cli(const std::string& args, const std::filesystem::path& out) {
  std::string cmd = std::string(FLINTHILLS_CLI_PATH) + " " + args + " > " +
                    out.string() + " 2>&1";
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST_CASE("checkpoint json round-trip") {
  PrecisionContext ctx(30);
  SeriesState st = partial_sum(SeriesId::R1Star, 10000, ctx);
  std::string text = state_to_json(st);
  SeriesState back = state_from_json(text);
  CHECK(back.content_hash() == st.content_hash());
  // Continuing from the loaded state is digit-identical to a fresh run.
  SeriesState cont = partial_sum(SeriesId::R1Star, 20000, ctx, back);
  SeriesState fresh = partial_sum(SeriesId::R1Star, 20000, ctx);
  CHECK(cont.real_acc.str(0, std::ios_base::scientific) ==
        fresh.real_acc.str(0, std::ios_base::scientific));
}

TEST_CASE("checkpoint file round-trip and tamper detection") {
  PrecisionContext ctx(30);
  auto path = scratch() / "state.json";
  SeriesState st = partial_sum(SeriesId::S, 5000, ctx);
  save_checkpoint(st, path.string());
  SeriesState back = load_checkpoint(path.string());
  CHECK(back.last_n == 5000);
  CHECK(back.content_hash() == st.content_hash());

  // Flip a digit of the accumulator: the hash no longer matches.
  std::string text = slurp(path);
  auto pos = text.find("\"last_n\": 5000");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 14, "\"last_n\": 5001");
  std::ofstream(path, std::ios::trunc) << text;
  CHECK_THROWS_AS(load_checkpoint(path.string()), checkpoint_error);

  CHECK_THROWS_AS(load_checkpoint("/nonexistent/ck.json"), io_error);
  CHECK_THROWS_AS(state_from_json("not json"), checkpoint_error);
}

TEST_CASE("cli sum and resume") {
  auto dir = scratch();
  auto out = dir / "out.txt";
  auto ck = (dir / "ck.json").string();
  CHECK(run_cli("sum --series R1STAR --N 10000 --checkpoint-out " + ck, out) ==
        0);
  CHECK(run_cli("sum --series R1STAR --N 20000 --resume " + ck, out) == 0);
  std::string resumed = slurp(out);
  CHECK(run_cli("sum --series R1STAR --N 20000", out) == 0);
  CHECK(resumed == slurp(out));  // byte-stable across resume vs fresh
}

TEST_CASE("cli exit codes") {
  auto dir = scratch();
  auto out = dir / "out.txt";
  CHECK(run_cli("sum --series NOPE --N 10", out) == 2);     // usage
  CHECK(run_cli("frobnicate", out) == 2);                   // unknown command
  CHECK(run_cli("convergents --count 40", out) == 3);       // precision
  CHECK(run_cli("sum --series S --N 100 --resume /nonexistent.json", out) ==
        5);                                                  // I/O
  // Broken quadrature budget: the pairings disagree -> verification.
  CHECK(run_cli("spectral --sigma 1.0 --nodes 4 --periods 3", out) == 4);
  CHECK(run_cli("verify --identity reduction --N 2000", out) == 0);
}

TEST_CASE("cli config file overrides flags") {
  auto dir = scratch();
  auto out = dir / "out.txt";
  auto cfgpath = dir / "cfg.json";
  std::ofstream(cfgpath, std::ios::trunc) << "{\"digits\": 12}";
  CHECK(run_cli("--config " + cfgpath.string() +
                    " --digits 30 sum --series H3 --N 100",
                out) == 0);
  std::string narrow = slurp(out);
  CHECK(run_cli("--digits 30 sum --series H3 --N 100", out) == 0);
  std::string wide = slurp(out);
  CHECK(narrow != wide);  // the config's 12 digits won

  std::ofstream(cfgpath, std::ios::trunc)
      << "{\"regime_exponent_generic\": 0.4}";
  CHECK(run_cli("--config " + cfgpath.string() + " sum --series H3 --N 100",
                out) == 2);
}

TEST_CASE("cli output directory") {
  auto dir = scratch() / "outputs";
  std::filesystem::create_directories(dir);
  auto out = scratch() / "out.txt";
  CHECK(run_cli("--output-dir " + dir.string() +
                    " classify --N 500 --csv census.csv",
                out) == 0);
  CHECK(std::filesystem::exists(dir / "census.csv"));
  std::string csv = slurp(dir / "census.csv");
  CHECK(csv.find("n,m,delta,abs_sin,regime") == 0);
}

TEST_CASE("cli report is byte-stable") {
  auto dir = scratch();
  auto a = dir / "a.csv";
  auto b = dir / "b.csv";
  auto out = dir / "out.txt";
  CHECK(run_cli("report --table 72 --out " + a.string(), out) == 0);
  CHECK(run_cli("report --table 72 --out " + b.string(), out) == 0);
  std::string csv = slurp(a);
  CHECK(csv == slurp(b));
  CHECK(csv.find("100000,86.1353350,30.3145209,") != std::string::npos);
}
