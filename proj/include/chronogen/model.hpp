// model.hpp — bipartite Hamiltonians H = H_S ⊗ 1_C + 1_S ⊗ H_C + V

#pragma once

#include "chronogen/hilbert.hpp"

#include <cstdint>

namespace chronogen {

// Immutable (H_S, H_C, V) triple. The constructor validates Hermiticity
// (1e-12 relative) and that V acts on the full d_S*d_C space.
class HamiltonianSpec {
public:
    HamiltonianSpec(CMatrix h_system, CMatrix h_clock, CMatrix v_interaction);

    // Interaction-free spec.
    HamiltonianSpec(CMatrix h_system, CMatrix h_clock);

    Eigen::Index d_system() const noexcept { return h_system_.rows(); }
    Eigen::Index d_clock() const noexcept { return h_clock_.rows(); }
    Eigen::Index d_global() const noexcept { return d_system() * d_clock(); }

    const CMatrix& h_system() const noexcept { return h_system_; }
    const CMatrix& h_clock() const noexcept { return h_clock_; }
    const CMatrix& v_interaction() const noexcept { return v_interaction_; }

    bool operator==(const HamiltonianSpec& other) const;

private:
    CMatrix h_system_;
    CMatrix h_clock_;
    CMatrix v_interaction_;
};

CMatrix assemble_global(const HamiltonianSpec& spec);

enum class Axis { x, y, z };

CMatrix pauli(Axis axis);

// a_system ⊗ b_clock, both Hermitian.
CMatrix product_interaction(const CMatrix& a_system, const CMatrix& b_clock);

// H_S = 0, H_C = σ_z, V = (σ_x + σ_z) ⊗ σ_x: two coupled two-level systems
// with unit clock splitting and unit coupling.
HamiltonianSpec coupled_qubits_spec();

// GUE-style instance: each part is a Hermitized complex Gaussian matrix scaled
// to unit spectral norm; V is additionally scaled by coupling_strength.
HamiltonianSpec random_spec(Eigen::Index d_system, Eigen::Index d_clock, double coupling_strength,
                            std::uint64_t seed);

// Hermitian matrix drawn as above (unit spectral norm), exposed for tests and scenarios.
CMatrix random_hermitian(Eigen::Index dim, std::uint64_t seed);

// Normalized complex Gaussian vector.
CVector random_state(Eigen::Index dim, std::uint64_t seed);

}  // namespace chronogen
