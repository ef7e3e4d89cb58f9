#pragma once

#include "qwalk_cli/config.hpp"

namespace qwalk_cli {

// Each runner validates nothing beyond its own mode logic; call validate()
// first.  All of them write their output files atomically (temp + rename)
// and throw ConfigError / NumericError / IoError on failure.
void run_walk(const ExperimentConfig& cfg);
void run_ppm(const ExperimentConfig& cfg);
void run_limit(const ExperimentConfig& cfg);
void run_spectral(const ExperimentConfig& cfg);
void run_figure2(const ExperimentConfig& cfg);

/// Dispatch on cfg.mode.
void run(const ExperimentConfig& cfg);

}  // namespace qwalk_cli
