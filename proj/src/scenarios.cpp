// scenarios.cpp — curated end-to-end runs and solvable-potential export

#include "chronogen/scenarios.hpp"

#include "chronogen/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace chronogen {

namespace {

const double kSqrt3 = std::sqrt(3.0);

}  // namespace

// --------------------------- coupled-qubit closed forms ---------------------------

double CoupledQubitsReference::a() { return 1.0 + kSqrt3; }

double CoupledQubitsReference::energy() { return -kSqrt3; }

CVector CoupledQubitsReference::global_state() {
    CVector psi(4);
    psi << 1.0, 0.0, -1.0, -a();
    return psi;
}

double CoupledQubitsReference::normalization(double lambda) {
    const double c = std::cos(lambda);
    return 1.0 / (2.0 * std::sqrt(1.0 + a() * c * c));
}

CVector CoupledQubitsReference::chi(double lambda) {
    const Complex prefactor = normalization(lambda) * std::exp(Complex(0.0, energy() * lambda));
    CVector out(2);
    out << prefactor * std::exp(Complex(0.0, -lambda)), prefactor * std::exp(Complex(0.0, lambda));
    return out;
}

double CoupledQubitsReference::vs_xz(double lambda) {
    const double c = std::cos(lambda);
    return (std::cos(2.0 * lambda) + a() * c * c) / (1.0 + a() * c * c);
}

double CoupledQubitsReference::vs_y(double lambda) {
    const double c = std::cos(lambda);
    return -(0.5 * a() * std::sin(2.0 * lambda)) / (1.0 + a() * c * c);
}

double CoupledQubitsReference::vs_y_decomposition(double lambda) { return kSqrt3 * vs_y(lambda); }

CVector CoupledQubitsReference::phi(double lambda) {
    const Complex prefactor = normalization(lambda) * std::exp(Complex(0.0, a() * lambda));
    CVector out(2);
    out << prefactor, -prefactor * (a() * std::exp(Complex(0.0, -2.0 * lambda)) + 1.0);
    return out;
}

std::array<double, 3> CoupledQubitsReference::field(double lambda) {
    const double c = std::cos(lambda);
    const double b0 = 2.0 * vs_xz(lambda);
    const double b1 = -a() * std::sin(2.0 * lambda) / (1.0 + a() * c * c);
    return {b0, b1, b0};
}

PauliComponents pauli_components(const CMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2) {
        throw ValidationError("pauli_components: expected a 2x2 matrix");
    }
    PauliComponents out;
    out.v0 = 0.5 * m.trace().real();
    out.vx = 0.5 * (pauli(Axis::x) * m).trace().real();
    out.vy = 0.5 * (pauli(Axis::y) * m).trace().real();
    out.vz = 0.5 * (pauli(Axis::z) * m).trace().real();
    return out;
}

// ---------------------------------- pipeline ----------------------------------

PipelineResult run_pipeline(const HamiltonianSpec& spec, const GlobalEigenstate& state,
                            const CVector& chi0, std::vector<double> lambda_grid,
                            const PipelineOptions& options) {
    if (state.psi.size() != spec.d_global()) {
        throw ValidationError("run_pipeline: global state dimension mismatch");
    }
    if (chi0.size() != spec.d_clock()) {
        throw ValidationError("run_pipeline: clock state dimension mismatch");
    }
    if (lambda_grid.empty()) throw ValidationError("run_pipeline: empty grid");

    PipelineResult out;
    out.state = state;
    out.chi0 = chi0;

    ClockTrajectory clock = evolve_clock_on_grid(chi0, spec.h_clock(), state.energy,
                                                 std::move(lambda_grid), options.threads);
    out.samples = sample_potentials(state.psi, clock, spec.v_interaction(), options.threads);
    clock = attach_effective_energy(std::move(clock), out.samples);
    out.clock = accumulate_phase(std::move(clock), options.phase_rule);

    const CVector v_psi = spec.v_interaction() * state.psi;
    for (std::size_t k = 0; k < out.samples.size(); ++k) {
        const auto& sample = out.samples[k];
        const ClockProjection p =
            project_with_interaction(state.psi, v_psi, out.clock.chi_raw[k], sample.lambda);
        out.max_decomposition_residual =
            std::max(out.max_decomposition_residual, verify_decomposition(sample, p.u, p.phi));
        out.max_hermiticity_defect =
            std::max(out.max_hermiticity_defect, hermiticity_defect(sample.v_s));
    }

    out.projected = projected_trajectory(state.psi, out.clock);
    const auto provider = make_potential_provider(state.psi, chi0, spec.h_clock(),
                                                  spec.v_interaction(), state.energy);
    out.integrated = integrate_tdse(spec.h_system(), provider, out.projected.states.front(),
                                    out.clock.lambda_grid);

    out.report.max_infidelity = compare(out.projected, out.integrated).max_infidelity;
    out.report.max_norm_drift = compare(out.integrated, out.projected).max_norm_drift;
    out.report.max_tdse_residual = tdse_residual(spec.h_system(), out.samples, out.projected);
    out.generator_norm = max_generator_norm(spec.h_system(), out.samples);
    return out;
}

bool passes(const PipelineResult& result, const VerificationThresholds& thresholds) {
    return result.report.max_infidelity <= thresholds.infidelity &&
           result.report.max_norm_drift <= thresholds.norm_drift &&
           result.report.max_tdse_residual <= thresholds.tdse_relative * result.generator_norm;
}

// ------------------------------ coupled-qubit example ------------------------------

GlobalEigenstate coupled_qubits_state() {
    const CMatrix h = assemble_global(coupled_qubits_spec());
    const auto spaces = eigenspaces(h);
    const CVector target = CoupledQubitsReference::global_state();
    const Eigenspace& lowest = spaces.front();
    const auto coefficients = coefficients_for(lowest, target);
    return select_state(h, lowest, coefficients);
}

CoupledQubitsRun run_coupled_qubits_example(std::vector<double> lambda_grid,
                                            const PipelineOptions& options) {
    using Ref = CoupledQubitsReference;
    CoupledQubitsRun out;
    const GlobalEigenstate state = coupled_qubits_state();
    const CVector target = Ref::global_state();
    out.psi_fit_residual = (state.psi - target).norm() / target.norm();

    out.pipeline =
        run_pipeline(coupled_qubits_spec(), state, Ref::chi0(), std::move(lambda_grid), options);

    out.closed_form.source = TrajectorySource::closed_form;
    out.closed_form.lambda_grid = out.pipeline.clock.lambda_grid;
    for (const auto& sample : out.pipeline.samples) {
        const double lambda = sample.lambda;
        out.closed_form.states.push_back(Ref::phi(lambda));
        const PauliComponents c = pauli_components(sample.v_s);
        const double xz = Ref::vs_xz(lambda);
        out.max_vs_xz_deviation =
            std::max({out.max_vs_xz_deviation, std::abs(c.vx - xz), std::abs(c.vz - xz)});
        out.max_vs_y_deviation = std::max(out.max_vs_y_deviation, std::abs(c.vy - Ref::vs_y(lambda)));
        out.max_vs_y_decomposition_deviation =
            std::max(out.max_vs_y_decomposition_deviation,
                     std::abs(c.vy - Ref::vs_y_decomposition(lambda)));
    }
    out.projected_vs_closed_form = compare(out.pipeline.projected, out.closed_form);
    return out;
}

// --------------------------- interaction-free scenario ---------------------------

HamiltonianSpec degenerate_free_spec() { return HamiltonianSpec(pauli(Axis::z), pauli(Axis::z)); }

DegenerateFreeRun degenerate_free_scenario(std::vector<double> lambda_grid) {
    const HamiltonianSpec spec = degenerate_free_spec();
    const CMatrix h = assemble_global(spec);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    DegenerateFreeRun out;
    CVector bell = CVector::Zero(4);
    bell(1) = inv_sqrt2;
    bell(2) = inv_sqrt2;
    out.state = make_eigenstate(h, bell, 0.0);
    out.chi0 = CVector::Constant(2, inv_sqrt2);
    out.schmidt_rank = schmidt_rank(out.state, 2, 2);

    const ClockTrajectory clock =
        evolve_clock_on_grid(out.chi0, spec.h_clock(), out.state.energy, lambda_grid);
    out.projected = projected_trajectory(out.state.psi, clock);

    out.free.source = TrajectorySource::closed_form;
    out.free.lambda_grid = clock.lambda_grid;
    const CVector phi0 = project_clock(out.chi0, out.state.psi);
    for (std::size_t k = 0; k < clock.lambda_grid.size(); ++k) {
        const double lambda = clock.lambda_grid[k];
        out.free.states.push_back(propagate_free(spec.h_system(), phi0, lambda));
        out.max_free_deviation = std::max(out.max_free_deviation,
                                          (out.projected.states[k] - out.free.states[k]).norm());
        CVector reference(2);
        reference << 0.5 * std::exp(Complex(0.0, -lambda)), 0.5 * std::exp(Complex(0.0, lambda));
        out.max_reference_deviation =
            std::max(out.max_reference_deviation, (out.projected.states[k] - reference).norm());
        out.max_envariance_residual =
            std::max(out.max_envariance_residual,
                     envariance_check(out.state.psi, out.chi0, spec.h_system(), spec.h_clock(),
                                      out.state.energy, lambda));
    }

    // Product state |↑↑⟩ (energy 2): system and clock each only pick up a phase.
    CVector product = CVector::Zero(4);
    product(0) = 1.0;
    const GlobalEigenstate product_state = make_eigenstate(h, product, 2.0);
    const ClockTrajectory product_clock =
        evolve_clock_on_grid(out.chi0, spec.h_clock(), product_state.energy, lambda_grid);
    const CVector product_phi0 = project_clock(out.chi0, product_state.psi);
    for (std::size_t k = 0; k < product_clock.lambda_grid.size(); ++k) {
        out.product_max_infidelity =
            std::max(out.product_max_infidelity,
                     infidelity(conditional_state(product_state.psi, product_clock, k), product_phi0));
    }
    return out;
}

// -------------------------------- solvable export --------------------------------

SolvableExport package_solvable(const HamiltonianSpec& spec, const PipelineResult& result,
                                const VerificationThresholds& thresholds) {
    const auto& grid = result.clock.lambda_grid;
    SolvableExport out{SolvableMetadata{spec, result.state.psi, result.chi0, result.state.energy,
                                        result.state.residual, grid.front(), grid.back(),
                                        grid.size(), result.report, result.generator_norm,
                                        thresholds, false},
                       {}};
    if (!(result.state.residual <= 1e-9)) {
        throw VerificationError("solvable export: state is not an eigenstate (residual " +
                                std::to_string(result.state.residual) + ")");
    }
    if (!passes(result, thresholds)) {
        throw VerificationError(
            "solvable export: verification failed (infidelity " +
            std::to_string(result.report.max_infidelity) + ", TDSE residual " +
            std::to_string(result.report.max_tdse_residual) + ", norm drift " +
            std::to_string(result.report.max_norm_drift) + ")");
    }
    out.metadata.verified = true;
    out.records.reserve(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const auto& sample = result.samples[k];
        out.records.push_back(SolvableRecord{
            sample.lambda, sample.v_s, sample.e_script, result.clock.s_phase[k], sample.overlap_n,
            result.projected.states[k],
            infidelity(result.projected.states[k], result.integrated.states[k])});
    }
    return out;
}

SolvableExport generate_solvable(const HamiltonianSpec& spec, const GlobalEigenstate& state,
                                 const CVector& chi0, std::vector<double> lambda_grid,
                                 const VerificationThresholds& thresholds,
                                 const PipelineOptions& options) {
    const GlobalEigenstate checked = make_eigenstate(assemble_global(spec), state.psi, state.energy);
    if (!(checked.residual <= 1e-9)) {
        throw ValidationError("generate_solvable: state is not an eigenstate (residual " +
                              std::to_string(checked.residual) + ")");
    }
    if (lambda_grid.size() < 3) throw ValidationError("generate_solvable: need at least 3 points");
    const PipelineResult result = run_pipeline(spec, checked, chi0, std::move(lambda_grid), options);
    return package_solvable(spec, result, thresholds);
}

}  // namespace chronogen
