#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "nsdecay/diagnostics.hpp"
#include "nsdecay/models.hpp"
#include "nsdecay/oracle.hpp"

// Experiment configuration: a flat YAML map with dotted keys, e.g.
//
//   grid.n: 32
//   grid.L: 25.132741228718345
//   model.kind: fcns
//   init.sigma: 0
//   run.t_end: 16
//
// Unknown keys are rejected.

namespace nsdecay {

enum class InitKind { spectrum, manufactured };

struct InitialDataSpec {
    InitKind kind = InitKind::spectrum;
    double sigma = 0.0;   ///< low-frequency exponent of the coefficient modulus
    double cutoff = 1.5;  ///< Gaussian envelope scale in rho = |2 pi xi|
    double amp_a = 1e-3;  ///< RMS of each realized component
    double amp_u = 1e-3;
    double amp_theta = 1e-3;
};

struct RunConfig {
    int grid_n = 32;
    double box_length = 8.0 * kPi;
    ModelParams params;
    InitialDataSpec init;
    std::uint64_t seed = 1;
    double dt = 0.05;
    double t_end = 1.0;
    double cadence = 0.5;
    DiagSettings diag;
    std::string out_dir = "run";

    /// Throws ConfigError on any inconsistency.
    void validate() const;
    long long total_steps() const;
    long long steps_per_sample() const;
    /// Resolved key/value listing (the manifest's config block).
    std::map<std::string, std::string> resolved() const;
};

struct OracleConfig {
    SpectrumProfile profile;
    ModelParams params;
    double t0 = 1.0;
    double t1 = 1e4;
    int n_times = 41;
    std::string out = "oracle.csv";

    void validate() const;
};

/// Parses a file into the flat key -> scalar text map. Throws ConfigError.
std::map<std::string, std::string> read_flat_config(const std::string& path);
std::map<std::string, std::string> parse_flat_config(const std::string& text);

RunConfig run_config_from(const std::map<std::string, std::string>& kv);
OracleConfig oracle_config_from(const std::map<std::string, std::string>& kv);
RunConfig load_run_config(const std::string& path);
OracleConfig load_oracle_config(const std::string& path);

}  // namespace nsdecay
