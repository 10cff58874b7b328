#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "run_config.hpp"
#include "su11/table.hpp"
#include "su11/weights.hpp"

namespace su11::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitConfigError = 2;

/// Output bytes of one command and the exit code it asks for.
struct CommandOutput {
  std::string text;
  int exit_code = kExitOk;
};

WeightSpec resolve_weight(const RunConfig& cfg);

CommandOutput cmd_spectrum(const RunConfig& cfg);
CommandOutput cmd_sample(const RunConfig& cfg);
/// Exit 2 if any FD check hit a step-size failure, else 1 if any check
/// failed, else 0. Discrepancies never change the exit code.
CommandOutput cmd_verify(const RunConfig& cfg);
CommandOutput cmd_moments(const RunConfig& cfg);
CommandOutput cmd_plot(const RunConfig& cfg);
CommandOutput cmd_reweight(const RunConfig& cfg);

/// x against f_quad as a standalone SVG with one polyline. Throws
/// ConfigError for an empty table.
std::string render_density_svg(const SpectralTable& table);

/// Full front end: parses args (without the program name), applies a
/// --config file, runs the command and writes to --out or `out`.
/// Diagnostics go to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace su11::cli
