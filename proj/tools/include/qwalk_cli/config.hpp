#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "qwalk/coin.hpp"

namespace qwalk_cli {

// Process exit codes.  Parse problems and semantic config problems share
// kExitConfig; numeric-tolerance gates and I/O each get their own code so
// scripts can tell the three apart.
constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Mode { Walk, Ppm, Limit, Spectral, Figure2 };

const char* mode_name(Mode mode);

// A coin is configured either by name, by the Dirac mass parameter, by the
// four-parameter polar form, or by its four complex entries.
struct CoinSpec {
  enum class Kind { Hadamard, Dirac, Params, Entries };

  Kind kind = Kind::Hadamard;
  double epsilon = 0.0;           // Kind::Dirac
  qwalk::CoinParams params{};     // Kind::Params
  qwalk::Complex a, b, c, d;      // Kind::Entries
};

// Flag syntax: "hadamard", "dirac:EPS", "params:R,PHI,PSI,DELTA",
// "entries:aRe,aIm,bRe,bIm,cRe,cIm,dRe,dIm".  Throws ConfigError.
CoinSpec coin_spec_from_flag(const std::string& text);

// Builds the unitary, rejecting non-unitary entries and coins with a zero
// entry (those never mix the chiralities, so no documented law applies).
// Throws ConfigError.
qwalk::CoinOperator realize(const CoinSpec& spec);

struct ExperimentConfig {
  Mode mode = Mode::Walk;
  long long t = 100;
  double beta = 0.5;
  CoinSpec coin{};
  std::optional<std::uint64_t> seed;
  std::string out_dir = ".";
  int quad_points = 1024;
};

// JSON document with keys mode, t, beta, coin, seed, out_dir, quad_points,
// all optional; unknown keys are rejected.  When the document names a mode
// it must match required_mode.  Throws ConfigError on malformed input.
ExperimentConfig config_from_json_text(const std::string& text,
                                       Mode required_mode);

// Inverse of config_from_json_text up to defaulted fields: parsing the
// emitted text reproduces the config exactly ("seed" is omitted when unset).
std::string config_to_json_text(const ExperimentConfig& cfg);

/// Semantic checks shared by every mode.  Throws ConfigError.
void validate(const ExperimentConfig& cfg);

}  // namespace qwalk_cli
