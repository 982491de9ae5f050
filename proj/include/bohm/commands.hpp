#pragma once

// Bodies of the CLI subcommands. Each returns the process exit code.

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "bohm/config.hpp"

namespace bohm::commands {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitPartial = 2;
inline constexpr int kExitValidation = 3;

/// Writes <out>/trajectory.csv.
int cmd_simulate(const config::RunConfig& cfg, std::ostream& log);

/// Writes <out>/strobe.csv and, with cfg.svg, <out>/strobe.svg.
int cmd_strobe(const config::RunConfig& cfg, std::ostream& log);

/// Prints `lambda_max=<value>` to log and writes <out>/lyapunov.csv.
int cmd_lyapunov(const config::RunConfig& cfg, std::ostream& log);

/// Runs every ladder point on a worker pool; writes per-point outputs and
/// <out>/manifest.csv. Exit 0 when at least one point succeeded.
int cmd_sweep(const config::RunConfig& cfg, std::ostream& log);

/// Runs the built-in check suite; exit 0 iff every check passes, 3 otherwise.
int cmd_validate(std::ostream& log);

/// Effective configuration of one ladder point. `inf` for A or a selects the
/// limit-form field of the harmonic or square-well model. Throws ConfigError.
config::RunConfig resolve_sweep_point(const config::RunConfig& base, double value);

struct SweepOutcome {
    std::size_t index = 0;
    double value = 0.0;
    config::RunConfig cfg;
    std::string status;
    std::string result;
};

std::vector<SweepOutcome> run_sweep(const config::RunConfig& base);

void write_manifest(std::ostream& os, const config::RunConfig& base, const std::vector<SweepOutcome>& outcomes);

}  // namespace bohm::commands
