// runner.hpp — executes a RunConfig and maps failures to process exit codes
//
// Exit codes: 0 success, 1 internal error, 2 verification failure or unusable
// readout, 3 singular clock overlap, 4 configuration parse / usage error,
// 5 configuration validation error.

#pragma once

#include "chronogen/config.hpp"
#include "chronogen/spectral.hpp"

#include <json.hpp>

#include <ostream>
#include <string>

namespace chronogen {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int internal = 1;
inline constexpr int verification = 2;
inline constexpr int singular_overlap = 3;
inline constexpr int usage = 4;
inline constexpr int validation = 5;
}  // namespace exit_code

struct RunOutcome {
    int exit_code = exit_code::ok;
    std::string summary;     // one line
    nlohmann::json report;   // machine-readable; always has "mode", "status", "exit_code"
};

// Never throws: library exceptions are converted into the outcome.
RunOutcome execute(const RunConfig& config);

// execute() plus printing: the summary line (text) or the report (json) to out,
// error messages to err. Returns the exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// The Ψ a configuration selects, and its χ₀ (defaults applied).
GlobalEigenstate resolve_state(const RunConfig& config, const HamiltonianSpec& spec);
CVector resolve_chi0(const RunConfig& config, const HamiltonianSpec& spec);

}  // namespace chronogen
