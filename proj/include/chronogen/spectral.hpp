// spectral.hpp — eigenspaces of the global Hamiltonian and global-state diagnostics

#pragma once

#include "chronogen/hilbert.hpp"

#include <optional>
#include <span>
#include <vector>

namespace chronogen {

// Eigenvector |Ψ⟩ (not necessarily normalized) with energy E and
// residual ‖(H − E)Ψ‖/‖Ψ‖.
struct GlobalEigenstate {
    CVector psi;
    double energy = 0.0;
    double residual = 0.0;
};

struct Eigenspace {
    double energy = 0.0;         // mean of the clustered eigenvalues
    Eigen::Index multiplicity = 0;
    CMatrix basis;               // orthonormal columns
};

// Clusters the spectrum of h by single linkage: consecutive sorted eigenvalues
// closer than degeneracy_tol share a space. Default tolerance 1e-8 * max|h|.
std::vector<Eigenspace> eigenspaces(const CMatrix& h,
                                    std::optional<double> degeneracy_tol = std::nullopt);

// Wraps psi as a GlobalEigenstate, computing its residual against h.
GlobalEigenstate make_eigenstate(const CMatrix& h, CVector psi, double energy);

// psi = basis * coefficients; residual recomputed against h.
GlobalEigenstate select_state(const CMatrix& h, const Eigenspace& space,
                              std::span<const Complex> coefficients);

// Least-squares coefficients of target in the space's basis (basis† target).
std::vector<Complex> coefficients_for(const Eigenspace& space, const CVector& target);

// ‖exp(iλ(H − E))Ψ − Ψ‖ / ‖Ψ‖.
double invariance_residual(const CMatrix& h, const GlobalEigenstate& state, double lambda);

// Number of singular values of the d_S x d_C reshape above tol * (largest).
Eigen::Index schmidt_rank(const GlobalEigenstate& state, Eigen::Index d_system, Eigen::Index d_clock,
                          double tol = 1e-10);

}  // namespace chronogen
