// dynamics.hpp — emergent TDSE integration and trajectory comparison

#pragma once

#include "chronogen/hilbert.hpp"
#include "chronogen/relational.hpp"

#include <functional>
#include <span>
#include <vector>

namespace chronogen {

enum class TrajectorySource { projected, integrated, closed_form };

struct SystemTrajectory {
    std::vector<double> lambda_grid;
    std::vector<CVector> states;
    TrajectorySource source = TrajectorySource::projected;
};

struct ComparisonReport {
    double max_infidelity = 0.0;
    double max_tdse_residual = 0.0;
    double max_norm_drift = 0.0;
};

using PotentialProvider = std::function<CMatrix(double)>;

// exp(−iλ H_S) φ₀.
CVector propagate_free(const CMatrix& h_system, const CVector& phi0, double lambda);

// Exponential midpoint rule (second-order Magnus):
//   φ_{k+1} = exp(−iΔλ [H_S + V_S(λ_k + Δλ/2)]) φ_k.
// Errors thrown by the provider (e.g. SingularOverlapError) propagate.
SystemTrajectory integrate_tdse(const CMatrix& h_system, const PotentialProvider& potential,
                                const CVector& phi0, std::span<const double> lambda_grid);

// max over interior k of ‖i(φ_{k+1} − φ_{k−1})/(2Δλ) − (H_S + V_S(λ_k)) φ_k‖ on a uniform grid.
double tdse_residual(const CMatrix& h_system, std::span<const EffectivePotentialSample> samples,
                     const SystemTrajectory& trajectory);

// 1 − |⟨a|b⟩|² / (‖a‖²‖b‖²)
double infidelity(const CVector& a, const CVector& b);

// Phase-insensitive comparison on a shared grid; max_tdse_residual is left 0.
ComparisonReport compare(const SystemTrajectory& a, const SystemTrajectory& b);

// Projected trajectory φ(λ_k) = conditional_state(Ψ, clock, k).
SystemTrajectory projected_trajectory(const CVector& psi, const ClockTrajectory& clock);

// max_k ‖H_S + V_S(λ_k)‖ (spectral norm).
double max_generator_norm(const CMatrix& h_system,
                          std::span<const EffectivePotentialSample> samples);

// start, start + h, ..., stop with h = (stop − start)/(points − 1).
std::vector<double> uniform_grid(double start, double stop, std::size_t points);

}  // namespace chronogen
