// config.hpp — run configuration: strict JSON ingestion and serialization
//
// Complex numbers are [re, im] arrays (a bare number is read as real);
// matrices are row-major nested arrays. Unknown keys are rejected.

#pragma once

#include "chronogen/hilbert.hpp"
#include "chronogen/model.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chronogen {

enum class Mode { example, verify, generate, readout };

enum class ReportFormat { text, json };

struct SpecSource {
    // "coupled_qubits", "degenerate_free", "random" or "inline"
    std::string builtin = "coupled_qubits";
    Eigen::Index d_system = 2;   // random
    Eigen::Index d_clock = 2;    // random
    double coupling = 0.5;       // random
    CMatrix h_system;            // inline
    CMatrix h_clock;             // inline
    CMatrix v_interaction;       // inline; empty means zero
};

// Either an eigenspace index (ascending energy) with coefficients, or an explicit Ψ.
struct StateSelector {
    std::size_t energy_index = 0;
    std::vector<Complex> coefficients;  // empty: first basis vector
    std::optional<CVector> psi;
};

struct GridConfig {
    double start = 0.0;
    double stop = 6.283185307179586;
    std::size_t points = 2001;
};

struct Tolerances {
    double infidelity = 1e-7;
    double tdse_residual = 1e-4;   // relative to max‖H_S + V_S‖
    double norm_drift = 1e-8;
    double eigen_residual = 1e-9;
    double degeneracy = 1e-8;      // relative to max|H|
};

struct OutputConfig {
    std::string dir;                       // empty: no files written
    std::string csv = "trajectory.csv";
    std::string json = "potentials.json";
    std::string report = "report.json";
};

struct ReadoutConfig {
    std::optional<CMatrix> observable;
    std::optional<double> observed_value;
};

struct RunConfig {
    Mode mode = Mode::example;
    SpecSource spec;
    StateSelector state;
    std::optional<CVector> chi0;
    GridConfig grid;
    Tolerances tolerances;
    OutputConfig output;
    std::uint64_t seed = 0;
    int threads = 1;
    ReportFormat report = ReportFormat::text;
    ReadoutConfig readout;
};

bool operator==(const RunConfig& a, const RunConfig& b);

// Throws ConfigParseError for malformed documents or wrong value types and
// ConfigValidationError for semantic problems (unknown keys, grid, tolerances).
// mode_override (a CLI subcommand) replaces the document's mode before validation.
RunConfig parse_config(std::string_view text, std::optional<Mode> mode_override = std::nullopt);

// Canonical JSON document; parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig& config);

// Semantic checks shared by parse_config and command-line overrides.
void validate_config(const RunConfig& config);

// CHRONOGEN_SEED, when set, overrides config.seed.
void apply_environment(RunConfig& config);

std::string_view to_string(Mode mode);
Mode mode_from_string(std::string_view name);

HamiltonianSpec build_spec(const RunConfig& config);

}  // namespace chronogen
