// spectral.cpp — eigenspaces, state selection, invariance and entanglement checks

#include "chronogen/spectral.hpp"

#include "chronogen/errors.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <string>
#include <utility>

namespace chronogen {

std::vector<Eigenspace> eigenspaces(const CMatrix& h, std::optional<double> degeneracy_tol) {
    const EighResult eig = eigh(h);
    const double tol = degeneracy_tol.value_or(1e-8 * max_abs(h));
    if (!(tol >= 0.0)) throw ValidationError("eigenspaces: degeneracy_tol must be >= 0");

    std::vector<Eigenspace> spaces;
    const Eigen::Index n = eig.values.size();
    Eigen::Index begin = 0;
    while (begin < n) {
        Eigen::Index end = begin + 1;
        while (end < n && eig.values(end) - eig.values(end - 1) <= tol) ++end;
        Eigenspace space;
        space.multiplicity = end - begin;
        space.energy = eig.values.segment(begin, space.multiplicity).mean();
        space.basis = eig.vectors.middleCols(begin, space.multiplicity);
        spaces.push_back(std::move(space));
        begin = end;
    }
    return spaces;
}

GlobalEigenstate make_eigenstate(const CMatrix& h, CVector psi, double energy) {
    if (h.rows() != h.cols() || psi.size() != h.rows()) {
        throw ValidationError("make_eigenstate: dimension mismatch");
    }
    const double norm = psi.norm();
    if (norm == 0.0 || !all_finite(psi)) {
        throw ValidationError("make_eigenstate: state must be finite and nonzero");
    }
    GlobalEigenstate state;
    state.residual = (h * psi - energy * psi).norm() / norm;
    state.energy = energy;
    state.psi = std::move(psi);
    return state;
}

GlobalEigenstate select_state(const CMatrix& h, const Eigenspace& space,
                              std::span<const Complex> coefficients) {
    if (static_cast<Eigen::Index>(coefficients.size()) != space.multiplicity) {
        throw ValidationError("select_state: expected " + std::to_string(space.multiplicity) +
                              " coefficients, got " + std::to_string(coefficients.size()));
    }
    const CVector c = Eigen::Map<const CVector>(coefficients.data(), space.multiplicity);
    if (c.norm() == 0.0) throw ValidationError("select_state: coefficients are all zero");
    return make_eigenstate(h, space.basis * c, space.energy);
}

std::vector<Complex> coefficients_for(const Eigenspace& space, const CVector& target) {
    if (target.size() != space.basis.rows()) {
        throw ValidationError("coefficients_for: dimension mismatch");
    }
    const CVector c = space.basis.adjoint() * target;
    return {c.data(), c.data() + c.size()};
}

double invariance_residual(const CMatrix& h, const GlobalEigenstate& state, double lambda) {
    // exp(iλ(H − E)) = exp(−i(−λ)H) · exp(−iλE)
    const CVector rotated =
        std::exp(Complex(0.0, -lambda * state.energy)) * (expm_hermitian(h, -lambda) * state.psi);
    return (rotated - state.psi).norm() / state.psi.norm();
}

Eigen::Index schmidt_rank(const GlobalEigenstate& state, Eigen::Index d_system, Eigen::Index d_clock,
                          double tol) {
    const CMatrix amplitudes = reshape_system_major(state.psi, d_system, d_clock);
    Eigen::JacobiSVD<CMatrix> svd(amplitudes);
    const RVector& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    Eigen::Index rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
        if (sv(k) > tol * sv(0)) ++rank;
    }
    return rank;
}

}  // namespace chronogen
