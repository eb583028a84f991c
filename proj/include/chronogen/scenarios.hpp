// scenarios.hpp — end-to-end runs: the coupled-qubit example with closed forms,
// the interaction-free degenerate scenario, and solvable-potential generation.

#pragma once

#include "chronogen/dynamics.hpp"
#include "chronogen/hilbert.hpp"
#include "chronogen/model.hpp"
#include "chronogen/relational.hpp"
#include "chronogen/spectral.hpp"

#include <array>
#include <vector>

namespace chronogen {

// Closed forms for coupled_qubits_spec() with global state Ψ = (1, 0, −1, −a)ᵀ,
// a = 1 + √3, energy E = −√3 and clock state χ₀ ∝ (1, 1).
class CoupledQubitsReference {
public:
    static double a();
    static double energy();
    static CVector global_state();

    // 1 / (2 √(1 + a cos²λ))
    static double normalization(double lambda);

    // normalization(λ) e^{iEλ} (e^{−iλ}, e^{iλ})
    static CVector chi(double lambda);
    static CVector chi0() { return chi(0.0); }

    // (cos 2λ + a cos²λ) / (1 + a cos²λ); equal x and z components of V_S.
    static double vs_xz(double lambda);

    // Tabulated y component −(a/2) sin 2λ / (1 + a cos²λ). The decomposition
    // V_S = (|u⟩⟨φ| + |φ⟩⟨u|)/N actually yields √3 times this value; see
    // vs_y_decomposition.
    static double vs_y(double lambda);

    // −(√3 a/2) sin 2λ / (1 + a cos²λ), the y component consistent with phi(λ).
    static double vs_y_decomposition(double lambda);

    // e^{iaλ} normalization(λ) (1, −(a e^{−2iλ} + 1))
    static CVector phi(double lambda);

    // Tabulated field B₀ + B₁ for V_S = −B·μ with μ = −σ/2, i.e. B = 2 V⃗_S:
    // B₀ = 2 vs_xz (e_x + e_z), B₁ = −a sin 2λ / (1 + a cos²λ) e_y.
    static std::array<double, 3> field(double lambda);
};

// m = v0 I + vx σx + vy σy + vz σz.
struct PauliComponents {
    double v0 = 0.0;
    double vx = 0.0;
    double vy = 0.0;
    double vz = 0.0;
};

PauliComponents pauli_components(const CMatrix& m);

struct PipelineOptions {
    int threads = 1;
    PhaseRule phase_rule = PhaseRule::log_overlap;
};

// Everything derived from one (spec, Ψ, χ₀, grid) choice.
struct PipelineResult {
    GlobalEigenstate state;
    CVector chi0;
    ClockTrajectory clock;                          // with ℰ, N and S
    std::vector<EffectivePotentialSample> samples;  // V_S on the grid
    SystemTrajectory projected;
    SystemTrajectory integrated;                    // from φ(0) via the midpoint rule
    ComparisonReport report;  // infidelity projected vs integrated, TDSE residual of the
                              // projected trajectory, norm drift of the integrated one
    double generator_norm = 0.0;               // max_k ‖H_S + V_S(λ_k)‖
    double max_decomposition_residual = 0.0;   // max_k ‖u − (V_S φ − ℰ φ)‖
    double max_hermiticity_defect = 0.0;       // max_k of V_S Hermiticity defect
};

PipelineResult run_pipeline(const HamiltonianSpec& spec, const GlobalEigenstate& state,
                            const CVector& chi0, std::vector<double> lambda_grid,
                            const PipelineOptions& options = {});

// The reference Ψ fitted by least squares onto the computed E₋ eigenbasis.
GlobalEigenstate coupled_qubits_state();

struct CoupledQubitsRun {
    PipelineResult pipeline;
    SystemTrajectory closed_form;
    ComparisonReport projected_vs_closed_form;
    double max_vs_xz_deviation = 0.0;   // vs the tabulated x/z closed form
    double max_vs_y_deviation = 0.0;    // vs the tabulated y closed form
    double max_vs_y_decomposition_deviation = 0.0;
    double psi_fit_residual = 0.0;      // ‖Ψ_fit − Ψ_reference‖ / ‖Ψ_reference‖
};

CoupledQubitsRun run_coupled_qubits_example(std::vector<double> lambda_grid,
                                            const PipelineOptions& options = {});

// H_S = σ_z, H_C = σ_z, V = 0; the E = 0 eigenspace is spanned by |↑↓⟩, |↓↑⟩.
HamiltonianSpec degenerate_free_spec();

struct DegenerateFreeRun {
    GlobalEigenstate state;                 // (|↑↓⟩ + |↓↑⟩)/√2
    CVector chi0;                           // (1, 1)/√2
    SystemTrajectory projected;             // ⟨χ_λ|Ψ⟩
    SystemTrajectory free;                  // exp(−iλH_S) φ(0)
    double max_free_deviation = 0.0;        // max ‖projected − free‖
    double max_reference_deviation = 0.0;   // vs (e^{−iλ}, e^{iλ})/2
    double max_envariance_residual = 0.0;
    double product_max_infidelity = 0.0;    // Ψ = |↑↑⟩: φ(λ) vs φ(0)
    Eigen::Index schmidt_rank = 0;
};

DegenerateFreeRun degenerate_free_scenario(std::vector<double> lambda_grid);

struct VerificationThresholds {
    double tdse_relative = 1e-4;   // residual ≤ tdse_relative · max‖H_S + V_S‖
    double infidelity = 1e-7;      // projected vs integrated
    double norm_drift = 1e-8;      // integrated trajectory
};

struct SolvableRecord {
    double lambda = 0.0;
    CMatrix v_s;
    Complex e_script;
    Complex s_phase;
    double overlap_n = 0.0;
    CVector phi;            // projected conditional state
    double infidelity = 0.0;  // projected vs integrated at this point
};

struct SolvableMetadata {
    HamiltonianSpec spec;
    CVector psi;
    CVector chi0;
    double energy = 0.0;
    double eigen_residual = 0.0;
    double grid_start = 0.0;
    double grid_stop = 0.0;
    std::size_t grid_points = 0;
    ComparisonReport report;
    double generator_norm = 0.0;
    VerificationThresholds thresholds;
    bool verified = false;
};

struct SolvableExport {
    SolvableMetadata metadata;
    std::vector<SolvableRecord> records;
};

// Potential/solution pair on a uniform grid. Throws VerificationError when the
// stamp fails (exports are never returned unverified) and SingularOverlapError
// when the clock state loses overlap with Ψ.
SolvableExport generate_solvable(const HamiltonianSpec& spec, const GlobalEigenstate& state,
                                 const CVector& chi0, std::vector<double> lambda_grid,
                                 const VerificationThresholds& thresholds = {},
                                 const PipelineOptions& options = {});

// Verification stamp and per-point records for an existing pipeline result.
// Throws VerificationError when the stamp fails or the state is not an eigenstate.
SolvableExport package_solvable(const HamiltonianSpec& spec, const PipelineResult& result,
                                const VerificationThresholds& thresholds = {});

// Whether a pipeline result satisfies the thresholds.
bool passes(const PipelineResult& result, const VerificationThresholds& thresholds);

}  // namespace chronogen
