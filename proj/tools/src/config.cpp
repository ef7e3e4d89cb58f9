#include "qwalk_cli/config.hpp"

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "json.hpp"

namespace qwalk_cli {

namespace {

using json = nlohmann::ordered_json;

const char* kind_name(CoinSpec::Kind kind) {
  switch (kind) {
    case CoinSpec::Kind::Hadamard: return "hadamard";
    case CoinSpec::Kind::Dirac: return "dirac";
    case CoinSpec::Kind::Params: return "params";
    case CoinSpec::Kind::Entries: return "entries";
  }
  return "?";
}

std::vector<double> parse_numbers(const std::string& text,
                                  std::size_t expected,
                                  const std::string& what) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string token =
        text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stod(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw ConfigError(what + ": cannot parse number from '" + token + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.size() != expected) {
    throw ConfigError(what + ": expected " + std::to_string(expected) +
                      " comma-separated numbers, got " +
                      std::to_string(out.size()));
  }
  return out;
}

void reject_unknown_keys(const json& j, std::vector<std::string> known,
                         const std::string& where) {
  for (const auto& item : j.items()) {
    bool ok = false;
    for (const auto& k : known) ok = ok || item.key() == k;
    if (!ok) {
      throw ConfigError("unknown key '" + item.key() + "' in " + where);
    }
  }
}

double number_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw ConfigError(std::string("coin: field '") + key +
                      "' must be a number");
  }
  return j[key].get<double>();
}

qwalk::Complex complex_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != 2 ||
      !j[key][0].is_number() || !j[key][1].is_number()) {
    throw ConfigError(std::string("coin: entry '") + key +
                      "' must be a [re, im] pair");
  }
  return {j[key][0].get<double>(), j[key][1].get<double>()};
}

CoinSpec coin_spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw ConfigError("coin: expected an object with a string 'kind'");
  }
  const std::string kind = j["kind"].get<std::string>();
  CoinSpec spec;
  if (kind == "hadamard") {
    reject_unknown_keys(j, {"kind"}, "coin");
    spec.kind = CoinSpec::Kind::Hadamard;
  } else if (kind == "dirac") {
    reject_unknown_keys(j, {"kind", "epsilon"}, "coin");
    spec.kind = CoinSpec::Kind::Dirac;
    spec.epsilon = number_field(j, "epsilon");
  } else if (kind == "params") {
    reject_unknown_keys(j, {"kind", "r", "phi", "psi", "delta"}, "coin");
    spec.kind = CoinSpec::Kind::Params;
    spec.params = {number_field(j, "r"), number_field(j, "phi"),
                   number_field(j, "psi"), number_field(j, "delta")};
  } else if (kind == "entries") {
    reject_unknown_keys(j, {"kind", "a", "b", "c", "d"}, "coin");
    spec.kind = CoinSpec::Kind::Entries;
    spec.a = complex_field(j, "a");
    spec.b = complex_field(j, "b");
    spec.c = complex_field(j, "c");
    spec.d = complex_field(j, "d");
  } else {
    throw ConfigError("coin: unknown kind '" + kind + "'");
  }
  return spec;
}

json coin_spec_to_json(const CoinSpec& spec) {
  json j;
  j["kind"] = kind_name(spec.kind);
  switch (spec.kind) {
    case CoinSpec::Kind::Hadamard:
      break;
    case CoinSpec::Kind::Dirac:
      j["epsilon"] = spec.epsilon;
      break;
    case CoinSpec::Kind::Params:
      j["r"] = spec.params.r;
      j["phi"] = spec.params.phi;
      j["psi"] = spec.params.psi;
      j["delta"] = spec.params.delta;
      break;
    case CoinSpec::Kind::Entries:
      j["a"] = {spec.a.real(), spec.a.imag()};
      j["b"] = {spec.b.real(), spec.b.imag()};
      j["c"] = {spec.c.real(), spec.c.imag()};
      j["d"] = {spec.d.real(), spec.d.imag()};
      break;
  }
  return j;
}

}  // namespace

const char* mode_name(Mode mode) {
  switch (mode) {
    case Mode::Walk: return "walk";
    case Mode::Ppm: return "ppm";
    case Mode::Limit: return "limit";
    case Mode::Spectral: return "spectral";
    case Mode::Figure2: return "figure2";
  }
  return "?";
}

CoinSpec coin_spec_from_flag(const std::string& text) {
  const std::size_t colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string tail =
      colon == std::string::npos ? std::string() : text.substr(colon + 1);
  CoinSpec spec;
  if (head == "hadamard") {
    if (colon != std::string::npos) {
      throw ConfigError("coin 'hadamard' takes no arguments");
    }
    spec.kind = CoinSpec::Kind::Hadamard;
  } else if (head == "dirac") {
    spec.kind = CoinSpec::Kind::Dirac;
    spec.epsilon = parse_numbers(tail, 1, "coin 'dirac'")[0];
  } else if (head == "params") {
    spec.kind = CoinSpec::Kind::Params;
    const auto v = parse_numbers(tail, 4, "coin 'params'");
    spec.params = {v[0], v[1], v[2], v[3]};
  } else if (head == "entries") {
    spec.kind = CoinSpec::Kind::Entries;
    const auto v = parse_numbers(tail, 8, "coin 'entries'");
    spec.a = {v[0], v[1]};
    spec.b = {v[2], v[3]};
    spec.c = {v[4], v[5]};
    spec.d = {v[6], v[7]};
  } else {
    throw ConfigError("unknown coin spec '" + head +
                      "'; expected hadamard | dirac:EPS | "
                      "params:R,PHI,PSI,DELTA | entries:8 numbers");
  }
  return spec;
}

qwalk::CoinOperator realize(const CoinSpec& spec) {
  qwalk::CoinOperator coin;
  try {
    switch (spec.kind) {
      case CoinSpec::Kind::Hadamard:
        coin = qwalk::hadamard();
        break;
      case CoinSpec::Kind::Dirac:
        coin = qwalk::dirac_coin(spec.epsilon);
        break;
      case CoinSpec::Kind::Params:
        coin = qwalk::coin_from_params(spec.params);
        break;
      case CoinSpec::Kind::Entries:
        coin = qwalk::make_coin(spec.a, spec.b, spec.c, spec.d);
        break;
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid coin: ") + e.what());
  }
  if (!coin.nontrivial()) {
    throw ConfigError(
        "coin has a zero entry; it never mixes the chiralities and no "
        "documented limit law applies");
  }
  return coin;
}

ExperimentConfig config_from_json_text(const std::string& text,
                                       Mode required_mode) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown_keys(
      j, {"mode", "t", "beta", "coin", "seed", "out_dir", "quad_points"},
      "config");

  ExperimentConfig cfg;
  cfg.mode = required_mode;
  if (j.contains("mode")) {
    if (!j["mode"].is_string() ||
        j["mode"].get<std::string>() != mode_name(required_mode)) {
      throw ConfigError("config mode does not match the subcommand '" +
                        std::string(mode_name(required_mode)) + "'");
    }
  }
  if (j.contains("t")) {
    if (!j["t"].is_number_integer()) {
      throw ConfigError("config 't' must be an integer");
    }
    cfg.t = j["t"].get<long long>();
  }
  if (j.contains("beta")) {
    if (!j["beta"].is_number()) {
      throw ConfigError("config 'beta' must be a number");
    }
    cfg.beta = j["beta"].get<double>();
  }
  if (j.contains("coin")) cfg.coin = coin_spec_from_json(j["coin"]);
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer()) {
      throw ConfigError("config 'seed' must be a nonnegative integer");
    }
    if (j["seed"].is_number_integer() && j["seed"].get<long long>() < 0) {
      throw ConfigError("config 'seed' must be a nonnegative integer");
    }
    cfg.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("out_dir")) {
    if (!j["out_dir"].is_string()) {
      throw ConfigError("config 'out_dir' must be a string");
    }
    cfg.out_dir = j["out_dir"].get<std::string>();
  }
  if (j.contains("quad_points")) {
    if (!j["quad_points"].is_number_integer()) {
      throw ConfigError("config 'quad_points' must be an integer");
    }
    cfg.quad_points = j["quad_points"].get<int>();
  }
  return cfg;
}

std::string config_to_json_text(const ExperimentConfig& cfg) {
  json j;
  j["mode"] = mode_name(cfg.mode);
  j["t"] = cfg.t;
  j["beta"] = cfg.beta;
  j["coin"] = coin_spec_to_json(cfg.coin);
  if (cfg.seed) j["seed"] = *cfg.seed;
  j["out_dir"] = cfg.out_dir;
  j["quad_points"] = cfg.quad_points;
  return j.dump(2) + "\n";
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.t < 1) throw ConfigError("t must be >= 1");
  if (cfg.t > 100000000) throw ConfigError("t must be <= 1e8");
  if (!(cfg.beta >= 0.0 && cfg.beta <= 1.0)) {
    throw ConfigError("beta must lie in [0, 1]");
  }
  if (cfg.quad_points < 16) throw ConfigError("quad_points must be >= 16");
  if (cfg.out_dir.empty()) throw ConfigError("out_dir must not be empty");
  realize(cfg.coin);  // surfaces bad coins before any computation
}

}  // namespace qwalk_cli
