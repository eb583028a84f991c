// dynamics.cpp — exponential midpoint integrator, residuals and comparisons

#include "chronogen/dynamics.hpp"

#include "chronogen/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace chronogen {

CVector propagate_free(const CMatrix& h_system, const CVector& phi0, double lambda) {
    if (phi0.size() != h_system.rows()) {
        throw ValidationError("propagate_free: dimension mismatch");
    }
    return expm_hermitian(h_system, lambda) * phi0;
}

SystemTrajectory integrate_tdse(const CMatrix& h_system, const PotentialProvider& potential,
                                const CVector& phi0, std::span<const double> lambda_grid) {
    require_hermitian(h_system, "integrate_tdse.h_system");
    if (phi0.size() != h_system.rows()) {
        throw ValidationError("integrate_tdse: initial state dimension mismatch");
    }
    for (std::size_t k = 1; k < lambda_grid.size(); ++k) {
        if (!(lambda_grid[k] > lambda_grid[k - 1])) {
            throw ValidationError("integrate_tdse: grid must be strictly ascending");
        }
    }
    SystemTrajectory out;
    out.source = TrajectorySource::integrated;
    out.lambda_grid.assign(lambda_grid.begin(), lambda_grid.end());
    out.states.reserve(lambda_grid.size());
    if (lambda_grid.empty()) return out;

    out.states.push_back(phi0);
    for (std::size_t k = 0; k + 1 < lambda_grid.size(); ++k) {
        const double step = lambda_grid[k + 1] - lambda_grid[k];
        const double midpoint = lambda_grid[k] + 0.5 * step;
        CMatrix generator = h_system + potential(midpoint);
        generator = 0.5 * (generator + generator.adjoint());
        out.states.push_back(expm_hermitian(generator, step) * out.states.back());
    }
    return out;
}

namespace {

void require_same_grid(std::span<const double> a, std::span<const double> b, const char* what) {
    if (a.size() != b.size() || !std::equal(a.begin(), a.end(), b.begin())) {
        throw GridMismatchError(std::string(what) + ": grids differ");
    }
}

}  // namespace

double tdse_residual(const CMatrix& h_system, std::span<const EffectivePotentialSample> samples,
                     const SystemTrajectory& trajectory) {
    const auto& grid = trajectory.lambda_grid;
    if (samples.size() != grid.size() || trajectory.states.size() != grid.size()) {
        throw GridMismatchError("tdse_residual: samples, states and grid differ in length");
    }
    for (std::size_t k = 0; k < grid.size(); ++k) {
        if (samples[k].lambda != grid[k]) {
            throw GridMismatchError("tdse_residual: sample grid differs at index " +
                                    std::to_string(k));
        }
    }
    if (grid.size() < 3) return 0.0;
    const double step = (grid.back() - grid.front()) / static_cast<double>(grid.size() - 1);
    for (std::size_t k = 1; k < grid.size(); ++k) {
        if (std::abs((grid[k] - grid[k - 1]) - step) > 1e-9 * std::abs(step)) {
            throw ValidationError("tdse_residual: grid must be uniform");
        }
    }
    const Complex i_unit(0.0, 1.0);
    double worst = 0.0;
    for (std::size_t k = 1; k + 1 < grid.size(); ++k) {
        const CVector derivative =
            (trajectory.states[k + 1] - trajectory.states[k - 1]) / (grid[k + 1] - grid[k - 1]);
        const CVector residual =
            i_unit * derivative - (h_system + samples[k].v_s) * trajectory.states[k];
        worst = std::max(worst, residual.norm());
    }
    return worst;
}

double infidelity(const CVector& a, const CVector& b) {
    if (a.size() != b.size()) throw ValidationError("infidelity: dimension mismatch");
    const double na = a.squaredNorm();
    const double nb = b.squaredNorm();
    if (na == 0.0 || nb == 0.0) throw ValidationError("infidelity: zero state");
    return std::max(0.0, 1.0 - std::norm(a.dot(b)) / (na * nb));
}

ComparisonReport compare(const SystemTrajectory& a, const SystemTrajectory& b) {
    require_same_grid(a.lambda_grid, b.lambda_grid, "compare");
    if (a.states.size() != a.lambda_grid.size() || b.states.size() != b.lambda_grid.size()) {
        throw GridMismatchError("compare: state count differs from grid size");
    }
    ComparisonReport report;
    if (a.states.empty()) return report;
    const double norm0 = a.states.front().norm();
    for (std::size_t k = 0; k < a.states.size(); ++k) {
        report.max_infidelity = std::max(report.max_infidelity, infidelity(a.states[k], b.states[k]));
        report.max_norm_drift =
            std::max(report.max_norm_drift, std::abs(a.states[k].norm() - norm0));
    }
    return report;
}

SystemTrajectory projected_trajectory(const CVector& psi, const ClockTrajectory& clock) {
    SystemTrajectory out;
    out.source = TrajectorySource::projected;
    out.lambda_grid = clock.lambda_grid;
    out.states.reserve(clock.lambda_grid.size());
    for (std::size_t k = 0; k < clock.lambda_grid.size(); ++k) {
        out.states.push_back(conditional_state(psi, clock, k));
    }
    return out;
}

double max_generator_norm(const CMatrix& h_system,
                          std::span<const EffectivePotentialSample> samples) {
    double worst = 0.0;
    for (const auto& sample : samples) {
        worst = std::max(worst, spectral_norm(h_system + sample.v_s));
    }
    return worst;
}

std::vector<double> uniform_grid(double start, double stop, std::size_t points) {
    if (points < 2 || !(stop > start)) {
        throw ValidationError("uniform_grid: need points >= 2 and stop > start");
    }
    std::vector<double> grid(points);
    const double step = (stop - start) / static_cast<double>(points - 1);
    for (std::size_t k = 0; k < points; ++k) grid[k] = start + static_cast<double>(k) * step;
    grid.back() = stop;
    return grid;
}

}  // namespace chronogen
