// relational.hpp — conditional system states, effective potential and phase
//
// With χ_λ = exp(−iλ(H_C − E)) χ₀, φ̃(λ) = ⟨χ_λ|Ψ⟩ and u(λ) = ⟨χ_λ|V|Ψ⟩, every
// quantity here reduces to the two system vectors φ̃ and u:
//
//   N   = ⟨φ̃|φ̃⟩
//   ℰ   = ⟨u|φ̃⟩ / N
//   V_S = (|u⟩⟨φ̃| + |φ̃⟩⟨u|) / N        so that  u = V_S φ̃ − ℰ φ̃
//
// and the phased conditional state φ(λ) = exp(−iS(λ)) φ̃(λ), S' = ℰ, obeys
// i dφ/dλ = (H_S + V_S(λ)) φ.  Projectors on the global space are never formed.

#pragma once

#include "chronogen/hilbert.hpp"

#include <functional>
#include <span>
#include <vector>

namespace chronogen {

// Precomputed eigendecomposition of H_C for repeated clock evolution.
class ClockPropagator {
public:
    ClockPropagator(const CMatrix& h_clock, double energy);

    // exp(−iλ(H_C − E)) χ₀
    CVector operator()(const CVector& chi0, double lambda) const;

    Eigen::Index dim() const noexcept { return vectors_.rows(); }

private:
    RVector values_;
    CMatrix vectors_;
    double energy_;
};

struct ClockTrajectory {
    std::vector<double> lambda_grid;   // ascending
    std::vector<CVector> chi_raw;      // χ_λ without the exp(−iS) factor
    std::vector<Complex> e_script;     // ℰ(λ); empty until attached
    std::vector<double> overlap_n;     // N_λ; empty until attached
    std::vector<Complex> s_phase;      // S(λ); empty until accumulated
};

struct EffectivePotentialSample {
    double lambda = 0.0;
    CMatrix v_s;          // Hermitian d_S x d_S
    double overlap_n = 0.0;
    Complex e_script;
};

// φ̃ = ⟨χ|Ψ⟩, u = ⟨χ|V|Ψ⟩ and N = ⟨φ̃|φ̃⟩ at one clock state.
struct ClockProjection {
    CVector phi;
    CVector u;
    double overlap_n = 0.0;
};

// exp(−iλ(H_C − E)) χ₀.
CVector evolve_clock(const CVector& chi0, const CMatrix& h_clock, double energy, double lambda);

// Throws SingularOverlapError(lambda) when N ≤ 1e-12 ‖Ψ‖² ‖χ‖².
// v_psi is V·Ψ, which callers evaluating many clock states compute once.
ClockProjection project_with_interaction(const CVector& psi, const CVector& v_psi,
                                         const CVector& chi, double lambda);

Complex effective_energy(const CVector& psi, const CVector& chi_raw, const CMatrix& v,
                         double lambda = 0.0);

EffectivePotentialSample effective_potential(const CVector& psi, const CVector& chi_raw,
                                             const CMatrix& v, double lambda = 0.0);

// Same, from an already computed projection.
EffectivePotentialSample potential_from_projection(const ClockProjection& projection,
                                                   double lambda);

// ‖u − (V_S φ − ℰ φ)‖.
double verify_decomposition(const EffectivePotentialSample& sample, const CVector& u,
                            const CVector& phi);

// χ_λ on every grid point; ℰ, N and S left empty. threads > 1 splits the grid.
ClockTrajectory evolve_clock_on_grid(const CVector& chi0, const CMatrix& h_clock, double energy,
                                     std::vector<double> lambda_grid, int threads = 1);

// V_S(λ) at every grid point of the trajectory.
std::vector<EffectivePotentialSample> sample_potentials(const CVector& psi,
                                                        const ClockTrajectory& trajectory,
                                                        const CMatrix& v, int threads = 1);

// Copies ℰ and N from the samples into the trajectory (grids must match exactly).
ClockTrajectory attach_effective_energy(ClockTrajectory trajectory,
                                        std::span<const EffectivePotentialSample> samples);

enum class PhaseRule {
    // Cumulative composite trapezoid of the complex ℰ.
    trapezoid,
    // Re S by trapezoid; Im S = −½ ln(N_λ / N_0), the exact antiderivative of
    // Im ℰ when Ψ is an eigenstate. Requires overlap_n.
    log_overlap,
};

ClockTrajectory accumulate_phase(ClockTrajectory trajectory,
                                 PhaseRule rule = PhaseRule::trapezoid);

// exp(−iS(λ_k)) · ⟨χ_λk|Ψ⟩.
CVector conditional_state(const CVector& psi, const ClockTrajectory& trajectory,
                          std::size_t index);

// ‖U_S(−λ) ⟨U_C(λ)χ₀|Ψ⟩ − ⟨χ₀|Ψ⟩‖ for interaction-free global eigenstates.
double envariance_check(const CVector& psi, const CVector& chi0, const CMatrix& h_system,
                        const CMatrix& h_clock, double energy, double lambda);

// Spectral norm of [V, 1_S ⊗ |χ̂⟩⟨χ̂|], χ̂ = χ/‖χ‖.
double pointer_commutator_norm(const CMatrix& v, const CVector& chi_raw);

// d_S x d_S partial matrix element ⟨χ_bra|V|χ_ket⟩ over the clock factor.
CMatrix partial_clock_element(const CMatrix& v, const CVector& chi_bra, const CVector& chi_ket);

// Pointer-state shortcut ⟨χ|V|χ⟩/⟨χ|χ⟩ · ⟨χ|Ψ⟩ for ⟨χ|V|Ψ⟩.
CVector pointer_shortcut(const CMatrix& v, const CVector& chi, const CVector& psi);

// λ ↦ V_S(λ), re-evolving the clock state at arbitrary λ.
std::function<CMatrix(double)> make_potential_provider(const CVector& psi, const CVector& chi0,
                                                       const CMatrix& h_clock, const CMatrix& v,
                                                       double energy);

}  // namespace chronogen
