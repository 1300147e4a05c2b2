#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsdecay/config.hpp"
#include "nsdecay/errors.hpp"

namespace nsdecay {

/// Process exit codes of the nsdecay tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitError = 1,
    kExitConfig = 2,
    kExitPositivity = 3,
    kExitCfl = 4,
    kExitSchema = 5,
};

struct RunOutcome {
    int exit_code = kExitOk;
    std::vector<DiagRecord> records;
    std::optional<RunAborted::Cause> abort_cause;
    double abort_time = 0.0;
    std::string detail;
    std::size_t fallback_shells = 0;
};

std::string to_string(RunAborted::Cause cause);

/// Integrates the configured experiment, sampling a DiagRecord at t = 0, every
/// run.cadence and at t_end. With write_files, creates run.out_dir holding
/// manifest.json, series.csv and events.log; rows are written as they are
/// produced so an aborted run keeps its partial series.
RunOutcome run_experiment(const RunConfig& config, bool write_files = true);

/// Runs the oracle for a profile config and writes its CSV. Returns the rows.
std::vector<std::vector<double>> run_oracle(const OracleConfig& config, bool write_file = true);

}  // namespace nsdecay
