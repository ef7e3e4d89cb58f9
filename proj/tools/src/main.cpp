#include <array>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qwalk_cli/config.hpp"
#include "qwalk_cli/runners.hpp"

namespace {

using qwalk_cli::ExperimentConfig;
using qwalk_cli::Mode;

struct FlagValues {
  std::string config_path;
  long long t = 0;
  double beta = 0.0;
  std::string coin;
  std::uint64_t seed = 0;
  std::string out_dir;
  int quad_points = 0;
};

void attach_flags(CLI::App* sub, FlagValues& v) {
  sub->add_option("--config", v.config_path,
                  "JSON config file; explicit flags override its fields");
  sub->add_option("--t", v.t, "target number of time steps (default 100)");
  sub->add_option("--beta", v.beta,
                  "time-scale exponent in [0, 1] (default 0.5)");
  sub->add_option("--coin", v.coin,
                  "coin spec: hadamard | dirac:EPS | params:R,PHI,PSI,DELTA "
                  "| entries:aRe,aIm,...,dIm (default hadamard)");
  sub->add_option("--seed", v.seed,
                  "RNG seed; adds a sampling cross-check to ppm stats");
  sub->add_option("--out", v.out_dir, "output directory (default .)");
  sub->add_option("--quad-points", v.quad_points,
                  "momentum grid size for quadratures (default 1024)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qwalk_cli::IoError("cannot open config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw qwalk_cli::IoError("cannot read config file " + path);
  return ss.str();
}

int execute(Mode mode, const CLI::App& sub, const FlagValues& v) {
  try {
    ExperimentConfig cfg;
    cfg.mode = mode;
    if (sub.count("--config") > 0) {
      cfg = qwalk_cli::config_from_json_text(read_file(v.config_path), mode);
    }
    if (sub.count("--t") > 0) cfg.t = v.t;
    if (sub.count("--beta") > 0) cfg.beta = v.beta;
    if (sub.count("--coin") > 0) {
      cfg.coin = qwalk_cli::coin_spec_from_flag(v.coin);
    }
    if (sub.count("--seed") > 0) cfg.seed = v.seed;
    if (sub.count("--out") > 0) cfg.out_dir = v.out_dir;
    if (sub.count("--quad-points") > 0) cfg.quad_points = v.quad_points;
    qwalk_cli::validate(cfg);
    qwalk_cli::run(cfg);
    return qwalk_cli::kExitOk;
  } catch (const qwalk_cli::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return qwalk_cli::kExitConfig;
  } catch (const qwalk_cli::NumericError& e) {
    std::fprintf(stderr, "numeric failure: %s\n", e.what());
    return qwalk_cli::kExitNumeric;
  } catch (const qwalk_cli::IoError& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return qwalk_cli::kExitIo;
  } catch (const std::invalid_argument& e) {
    // core-level rejection that slipped past validate(); still a config issue
    std::fprintf(stderr, "config error: %s\n", e.what());
    return qwalk_cli::kExitConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Discrete-time quantum walk on the line with periodic position "
      "measurements"};
  app.require_subcommand(1);

  const struct {
    Mode mode;
    const char* name;
    const char* desc;
  } kModes[] = {
      {Mode::Walk, "walk", "coherent walk distribution at time t"},
      {Mode::Ppm, "ppm",
       "walk measured every d ~ t^beta steps: distribution and stats"},
      {Mode::Limit, "limit",
       "compare the scaled position law against its limit distribution"},
      {Mode::Spectral, "spectral",
       "momentum-space variance quadrature and characteristic function "
       "checks"},
      {Mode::Figure2, "figure2",
       "balanced-coin distributions at fixed t for beta in {0, 1/2, 1}"},
  };

  int code = qwalk_cli::kExitOk;
  std::array<FlagValues, 5> values;
  for (std::size_t i = 0; i < 5; ++i) {
    CLI::App* sub = app.add_subcommand(kModes[i].name, kModes[i].desc);
    attach_flags(sub, values[i]);
    sub->callback([&code, sub, mode = kModes[i].mode, &v = values[i]] {
      code = execute(mode, *sub, v);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int parse_code = app.exit(e);
    return parse_code == 0 ? qwalk_cli::kExitOk : qwalk_cli::kExitConfig;
  }
  return code;
}
