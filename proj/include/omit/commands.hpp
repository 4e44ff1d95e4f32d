#ifndef OMIT_COMMANDS_HPP
#define OMIT_COMMANDS_HPP

#include <iosfwd>
#include <string>

#include "omit/config.hpp"

namespace omit {

// Flag-level overrides shared by the subcommands (flags beat preset beats
// config file beats built-in defaults).
struct CliOverrides {
    std::optional<std::string> config_path;
    std::optional<std::string> preset;      // fig2 | fig3 | fig4
    std::optional<double> pump_power;       // [W]
    std::optional<double> gamma_m_hz;       // [Hz], converted here
    std::optional<double> fd_step;          // [rad/s]
    std::string out_path;                   // CSV destination
};

// Resolves config file + preset + flags into the final RunConfig.
RunConfig resolve_config(const CliOverrides& o, const std::string& command);

// Each command writes a CSV plus a JSON sidecar (<out>.json) recording the
// fully resolved parameter set.
void cmd_response(const RunConfig& cfg, const std::string& out_path,
                  const std::string& preset_name, std::ostream& log);
void cmd_phase(const RunConfig& cfg, const std::string& out_path,
               const std::string& preset_name, std::ostream& log);
void cmd_delay(const RunConfig& cfg, const std::string& out_path,
               const std::string& preset_name, std::ostream& log);

// Runs the invariant suite; prints one line per check with the measured
// residual. Returns the number of failed checks.
int cmd_verify(const RunConfig& cfg, std::ostream& log);

// Full CLI entry point (argument parsing, dispatch, exit-code mapping:
// 0 ok, 1 config, 2 solver, 3 io, 4 verification failure).
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace omit

#endif  // OMIT_COMMANDS_HPP
