// relational.cpp — clock evolution, conditional projections, V_S(λ), ℰ(λ), S(λ)

#include "chronogen/relational.hpp"

#include "chronogen/errors.hpp"
#include "parallel.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <memory>
#include <string>
#include <utility>

namespace chronogen {

ClockPropagator::ClockPropagator(const CMatrix& h_clock, double energy) : energy_(energy) {
    EighResult eig = eigh(h_clock);
    values_ = std::move(eig.values);
    vectors_ = std::move(eig.vectors);
}

CVector ClockPropagator::operator()(const CVector& chi0, double lambda) const {
    if (chi0.size() != vectors_.rows()) {
        throw ValidationError("evolve_clock: clock state has dimension " +
                              std::to_string(chi0.size()) + ", expected " +
                              std::to_string(vectors_.rows()));
    }
    CVector coeffs = vectors_.adjoint() * chi0;
    for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
        coeffs(k) *= std::exp(Complex(0.0, -lambda * (values_(k) - energy_)));
    }
    return vectors_ * coeffs;
}

CVector evolve_clock(const CVector& chi0, const CMatrix& h_clock, double energy, double lambda) {
    if (chi0.norm() == 0.0) throw ValidationError("evolve_clock: chi0 must be nonzero");
    return ClockPropagator(h_clock, energy)(chi0, lambda);
}

ClockProjection project_with_interaction(const CVector& psi, const CVector& v_psi,
                                         const CVector& chi, double lambda) {
    ClockProjection out;
    out.phi = project_clock(chi, psi);
    out.u = project_clock(chi, v_psi);
    out.overlap_n = out.phi.squaredNorm();
    const double threshold = 1e-12 * psi.squaredNorm() * chi.squaredNorm();
    if (!(out.overlap_n > threshold)) throw SingularOverlapError(lambda, out.overlap_n);
    return out;
}

namespace {

CVector apply_interaction(const CMatrix& v, const CVector& psi) {
    if (v.rows() != psi.size() || v.cols() != psi.size()) {
        throw ValidationError("interaction has dimension " + std::to_string(v.rows()) +
                              ", global state has " + std::to_string(psi.size()));
    }
    return v * psi;
}

}  // namespace

Complex effective_energy(const CVector& psi, const CVector& chi_raw, const CMatrix& v,
                         double lambda) {
    const ClockProjection p =
        project_with_interaction(psi, apply_interaction(v, psi), chi_raw, lambda);
    return p.u.dot(p.phi) / p.overlap_n;
}

EffectivePotentialSample potential_from_projection(const ClockProjection& projection,
                                                   double lambda) {
    const CVector& u = projection.u;
    const CVector& phi = projection.phi;
    const double n = projection.overlap_n;
    EffectivePotentialSample sample;
    sample.lambda = lambda;
    sample.overlap_n = n;
    sample.e_script = u.dot(phi) / n;  // Eigen's dot conjugates the first argument
    const CMatrix outer = u * phi.adjoint();
    sample.v_s = (outer + outer.adjoint()) / n;
    return sample;
}

EffectivePotentialSample effective_potential(const CVector& psi, const CVector& chi_raw,
                                             const CMatrix& v, double lambda) {
    return potential_from_projection(
        project_with_interaction(psi, apply_interaction(v, psi), chi_raw, lambda), lambda);
}

double verify_decomposition(const EffectivePotentialSample& sample, const CVector& u,
                            const CVector& phi) {
    return (u - (sample.v_s * phi - sample.e_script * phi)).norm();
}

ClockTrajectory evolve_clock_on_grid(const CVector& chi0, const CMatrix& h_clock, double energy,
                                     std::vector<double> lambda_grid, int threads) {
    if (chi0.norm() == 0.0) throw ValidationError("evolve_clock_on_grid: chi0 must be nonzero");
    for (std::size_t k = 1; k < lambda_grid.size(); ++k) {
        if (!(lambda_grid[k] > lambda_grid[k - 1])) {
            throw ValidationError("evolve_clock_on_grid: grid must be strictly ascending");
        }
    }
    const ClockPropagator propagate(h_clock, energy);
    ClockTrajectory out;
    out.chi_raw.resize(lambda_grid.size());
    detail::parallel_for(lambda_grid.size(), threads,
                         [&](std::size_t k) { out.chi_raw[k] = propagate(chi0, lambda_grid[k]); });
    out.lambda_grid = std::move(lambda_grid);
    return out;
}

std::vector<EffectivePotentialSample> sample_potentials(const CVector& psi,
                                                        const ClockTrajectory& trajectory,
                                                        const CMatrix& v, int threads) {
    const CVector v_psi = apply_interaction(v, psi);
    std::vector<EffectivePotentialSample> samples(trajectory.lambda_grid.size());
    detail::parallel_for(samples.size(), threads, [&](std::size_t k) {
        const double lambda = trajectory.lambda_grid[k];
        samples[k] = potential_from_projection(
            project_with_interaction(psi, v_psi, trajectory.chi_raw[k], lambda), lambda);
    });
    return samples;
}

ClockTrajectory attach_effective_energy(ClockTrajectory trajectory,
                                        std::span<const EffectivePotentialSample> samples) {
    if (samples.size() != trajectory.lambda_grid.size()) {
        throw GridMismatchError("attach_effective_energy: sample count differs from grid size");
    }
    trajectory.e_script.resize(samples.size());
    trajectory.overlap_n.resize(samples.size());
    for (std::size_t k = 0; k < samples.size(); ++k) {
        if (samples[k].lambda != trajectory.lambda_grid[k]) {
            throw GridMismatchError("attach_effective_energy: sample grid differs at index " +
                                    std::to_string(k));
        }
        trajectory.e_script[k] = samples[k].e_script;
        trajectory.overlap_n[k] = samples[k].overlap_n;
    }
    return trajectory;
}

ClockTrajectory accumulate_phase(ClockTrajectory trajectory, PhaseRule rule) {
    const auto& grid = trajectory.lambda_grid;
    const auto& e = trajectory.e_script;
    if (e.size() != grid.size()) {
        throw ValidationError("accumulate_phase: effective energy not evaluated on the grid");
    }
    if (rule == PhaseRule::log_overlap && trajectory.overlap_n.size() != grid.size()) {
        throw ValidationError("accumulate_phase: log_overlap rule needs overlap_n on the grid");
    }
    auto& s = trajectory.s_phase;
    s.assign(grid.size(), Complex(0.0, 0.0));
    for (std::size_t k = 1; k < grid.size(); ++k) {
        s[k] = s[k - 1] + 0.5 * (grid[k] - grid[k - 1]) * (e[k] + e[k - 1]);
    }
    if (rule == PhaseRule::log_overlap && !grid.empty()) {
        const double n0 = trajectory.overlap_n.front();
        for (std::size_t k = 0; k < grid.size(); ++k) {
            s[k] = Complex(s[k].real(), -0.5 * std::log(trajectory.overlap_n[k] / n0));
        }
    }
    return trajectory;
}

CVector conditional_state(const CVector& psi, const ClockTrajectory& trajectory,
                          std::size_t index) {
    if (index >= trajectory.lambda_grid.size() || index >= trajectory.chi_raw.size()) {
        throw ValidationError("conditional_state: index out of range");
    }
    const CVector phi = project_clock(trajectory.chi_raw[index], psi);
    if (trajectory.s_phase.empty()) return phi;
    return std::exp(Complex(0.0, -1.0) * trajectory.s_phase.at(index)) * phi;
}

double envariance_check(const CVector& psi, const CVector& chi0, const CMatrix& h_system,
                        const CMatrix& h_clock, double energy, double lambda) {
    const CVector moved_clock = evolve_clock(chi0, h_clock, energy, lambda);
    const CVector compensated = expm_hermitian(h_system, -lambda) * project_clock(moved_clock, psi);
    return (compensated - project_clock(chi0, psi)).norm();
}

double pointer_commutator_norm(const CMatrix& v, const CVector& chi_raw) {
    const double norm = chi_raw.norm();
    if (norm == 0.0) throw ValidationError("pointer_commutator_norm: chi must be nonzero");
    const Eigen::Index d = v.rows();
    if (v.cols() != d || d % chi_raw.size() != 0) {
        throw ValidationError("pointer_commutator_norm: dimension mismatch");
    }
    const CVector chi = chi_raw / norm;
    const CMatrix clock_projector = chi * chi.adjoint();

    // Column j of [V, P] is V(P e_j) − P(V e_j).
    CMatrix commutator(d, d);
    CVector basis_vector = CVector::Zero(d);
    for (Eigen::Index j = 0; j < d; ++j) {
        basis_vector(j) = 1.0;
        commutator.col(j) =
            v * apply_on_clock(clock_projector, basis_vector) - apply_on_clock(clock_projector, v.col(j));
        basis_vector(j) = 0.0;
    }
    // i[V, P] is Hermitian; its spectral norm is the largest |eigenvalue|.
    const CMatrix hermitian = Complex(0.0, 1.0) * commutator;
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (hermitian + hermitian.adjoint()),
                                                  Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

CMatrix partial_clock_element(const CMatrix& v, const CVector& chi_bra, const CVector& chi_ket) {
    const Eigen::Index d_clock = chi_bra.size();
    if (chi_ket.size() != d_clock || v.rows() != v.cols() || d_clock == 0 ||
        v.rows() % d_clock != 0) {
        throw ValidationError("partial_clock_element: dimension mismatch");
    }
    const Eigen::Index d_system = v.rows() / d_clock;
    CMatrix out(d_system, d_system);
    for (Eigen::Index s = 0; s < d_system; ++s) {
        for (Eigen::Index t = 0; t < d_system; ++t) {
            out(s, t) = chi_bra.dot(v.block(s * d_clock, t * d_clock, d_clock, d_clock) * chi_ket);
        }
    }
    return out;
}

CVector pointer_shortcut(const CMatrix& v, const CVector& chi, const CVector& psi) {
    return partial_clock_element(v, chi, chi) * project_clock(chi, psi) / chi.squaredNorm();
}

std::function<CMatrix(double)> make_potential_provider(const CVector& psi, const CVector& chi0,
                                                       const CMatrix& h_clock, const CMatrix& v,
                                                       double energy) {
    auto propagate = std::make_shared<const ClockPropagator>(h_clock, energy);
    auto v_psi = std::make_shared<const CVector>(apply_interaction(v, psi));
    return [propagate, v_psi, psi, chi0](double lambda) {
        return potential_from_projection(
                   project_with_interaction(psi, *v_psi, (*propagate)(chi0, lambda), lambda),
                   lambda)
            .v_s;
    };
}

}  // namespace chronogen
