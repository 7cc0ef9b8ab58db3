#include "flinthills/checkpoint.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace flinthills {

namespace {

Regime regime_from_name(const std::string& s) {
  if (s == "G") return Regime::G;
  if (s == "I") return Regime::I;
  if (s == "R") return Regime::R;
  throw checkpoint_error("unknown regime tag in checkpoint: " + s);
}

}  // namespace

std::string state_to_json(const SeriesState& state) {
  nlohmann::json j;
  j["series"] = series_name(state.id);
  j["last_n"] = state.last_n;
  j["decimal_digits"] = state.decimal_digits;
  j["guard_digits"] = state.guard_digits;
  // str(0, scientific) prints every digit the value carries, so the
  // decimal round-trip is exact at the stamped precision.
  j["real_acc"] = state.real_acc.str(0, std::ios_base::scientific);
  j["imag_acc"] = state.imag_acc.str(0, std::ios_base::scientific);
  j["completed_re"] = state.completed_re.str(0, std::ios_base::scientific);
  j["completed_im"] = state.completed_im.str(0, std::ios_base::scientific);
  j["chunk_re"] = state.chunk_re.str(0, std::ios_base::scientific);
  j["chunk_im"] = state.chunk_im.str(0, std::ios_base::scientific);
  j["spike_threshold"] = state.spike_threshold.str(0, std::ios_base::scientific);
  j["spikes"] = nlohmann::json::array();
  for (const auto& s : state.spikes)
    j["spikes"].push_back({{"n", s.n},
                           {"term", s.term.str(0, std::ios_base::scientific)},
                           {"abs_delta", s.abs_delta.str(0, std::ios_base::scientific)},
                           {"regime", regime_name(s.regime)}});
  j["content_hash"] = state.content_hash();
  return j.dump(2);
}

SeriesState state_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw checkpoint_error(std::string("unreadable checkpoint: ") + e.what());
  }
  SeriesState state;
  try {
    state.id = series_from_name(j.at("series").get<std::string>());
    state.last_n = j.at("last_n").get<std::uint64_t>();
    state.decimal_digits = j.at("decimal_digits").get<unsigned>();
    state.guard_digits = j.at("guard_digits").get<unsigned>();
    precision_scope scope(state.decimal_digits + state.guard_digits);
    state.real_acc = Real(j.at("real_acc").get<std::string>());
    state.imag_acc = Real(j.at("imag_acc").get<std::string>());
    state.completed_re = Real(j.at("completed_re").get<std::string>());
    state.completed_im = Real(j.at("completed_im").get<std::string>());
    state.chunk_re = Real(j.at("chunk_re").get<std::string>());
    state.chunk_im = Real(j.at("chunk_im").get<std::string>());
    state.spike_threshold = Real(j.at("spike_threshold").get<std::string>());
    for (const auto& js : j.at("spikes")) {
      SpikeRecord rec;
      rec.n = js.at("n").get<std::uint64_t>();
      rec.term = Real(js.at("term").get<std::string>());
      rec.abs_delta = Real(js.at("abs_delta").get<std::string>());
      rec.regime = regime_from_name(js.at("regime").get<std::string>());
      state.spikes.push_back(std::move(rec));
    }
  } catch (const nlohmann::json::exception& e) {
    throw checkpoint_error(std::string("malformed checkpoint: ") + e.what());
  }
  std::string stored = j.value("content_hash", std::string());
  if (stored != state.content_hash())
    throw checkpoint_error("checkpoint content hash mismatch");
  return state;
}

void save_checkpoint(const SeriesState& state, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw io_error("cannot open checkpoint for writing: " + path);
  out << state_to_json(state) << '\n';
  if (!out.flush()) throw io_error("short write on checkpoint: " + path);
}

SeriesState load_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open checkpoint: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return state_from_json(buf.str());
}

}  // namespace flinthills
