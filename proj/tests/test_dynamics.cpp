#include "chronogen/dynamics.hpp"
#include "chronogen/errors.hpp"
#include "chronogen/scenarios.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace chronogen;

TEST_SUITE("dynamics") {

TEST_CASE("propagate_free") {
    const double r = 1.0 / std::sqrt(2.0);
    CVector phi0(2);
    phi0 << r, r;
    CHECK(propagate_free(pauli(Axis::z), phi0, 0.0) == phi0);
    const CVector out = propagate_free(pauli(Axis::z), phi0, std::numbers::pi / 2);
    CHECK(std::abs(out(0) - Complex(0, -r)) <= 1e-12);
    CHECK(std::abs(out(1) - Complex(0, r)) <= 1e-12);
}

TEST_CASE("integrate_tdse with zero potential is exact") {
    const CMatrix hs = oracle::hermitian(3, 4);
    const CVector phi0 = oracle::vector(3, 5);
    const auto grid = uniform_grid(0.0, 2.0, 41);
    const SystemTrajectory t =
        integrate_tdse(hs, [](double) { return CMatrix::Zero(3, 3); }, phi0, grid);
    CHECK(t.source == TrajectorySource::integrated);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        CHECK((t.states[k] - oracle::expm(hs, grid[k]) * phi0).norm() <= 1e-10);
    }
}

TEST_CASE("integrated coupled-qubit state matches the closed form at 2pi") {
    const CoupledQubitsRun run = run_coupled_qubits_example(uniform_grid(0.0, 2.0 * std::numbers::pi, 2001));
    CHECK(infidelity(run.pipeline.integrated.states.back(),
                     CoupledQubitsReference::phi(2.0 * std::numbers::pi)) <= 1e-8);
}

TEST_CASE("midpoint rule is second order") {
    double previous = 0.0;
    for (std::size_t points : {1001, 2001, 4001}) {
        const CoupledQubitsRun run = run_coupled_qubits_example(uniform_grid(0.0, 2.0 * std::numbers::pi, points));
        const double err = std::sqrt(run.pipeline.report.max_infidelity);
        if (previous > 0.0) {
            const double ratio = previous / err;
            CHECK(ratio >= 3.0);
            CHECK(ratio <= 5.0);
        }
        previous = err;
    }
}

TEST_CASE("tdse residual") {
    // constant φ, no generator
    SystemTrajectory t;
    t.lambda_grid = uniform_grid(0.0, 1.0, 5);
    t.states.assign(5, oracle::vector(2, 1));
    std::vector<EffectivePotentialSample> samples;
    for (double l : t.lambda_grid) samples.push_back({l, CMatrix::Zero(2, 2), 1.0, Complex(0.0)});
    CHECK(tdse_residual(CMatrix::Zero(2, 2), samples, t) == 0.0);

    // The tabulated φ(λ) carries only Im ℰ in its phase, so it obeys the TDSE with the
    // traceless part V_S − Re ℰ·1; with the full V_S it is off by exactly |Re ℰ| φ.
    const CoupledQubitsRun run = run_coupled_qubits_example(uniform_grid(0.0, 2.0 * std::numbers::pi, 2001));
    auto traceless = run.pipeline.samples;
    double max_re = 0.0;
    for (auto& s : traceless) {
        s.v_s -= s.e_script.real() * identity(2);
        max_re = std::max(max_re, std::abs(s.e_script.real()));
    }
    CHECK(tdse_residual(CMatrix::Zero(2, 2), traceless, run.closed_form) <= 1e-4 * run.pipeline.generator_norm);
    CHECK(tdse_residual(CMatrix::Zero(2, 2), run.pipeline.samples, run.closed_form) ==
          doctest::Approx(max_re).epsilon(1e-3));
    // the projected trajectory (full complex S) obeys it with the full V_S
    CHECK(run.pipeline.report.max_tdse_residual <= 1e-4 * run.pipeline.generator_norm);

    // mismatched grids are rejected
    t.lambda_grid.back() = 1.5;
    CHECK_THROWS_AS(tdse_residual(CMatrix::Zero(2, 2), samples, t), GridMismatchError);
}

TEST_CASE("tdse residual of projected trajectories on random instances") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const HamiltonianSpec spec = random_spec(2 + seed % 2, 3 + seed % 3, 0.6, seed);
        const CMatrix h = assemble_global(spec);
        const GlobalEigenstate state = select_state(h, eigenspaces(h)[0], std::vector<Complex>{1.0});
        const PipelineResult r =
            run_pipeline(spec, state, random_state(spec.d_clock(), seed + 50), uniform_grid(0.0, 1.0, 1001));
        CHECK(r.report.max_tdse_residual <= 1e-4 * r.generator_norm);
    }
}

TEST_CASE("compare is phase insensitive") {
    SystemTrajectory a;
    a.lambda_grid = uniform_grid(0.0, 1.0, 4);
    for (int k = 0; k < 4; ++k) a.states.push_back(oracle::vector(3, 10 + k).normalized());
    SystemTrajectory b = a;
    for (auto& s : b.states) s *= std::exp(Complex(0.0, 0.77));
    CHECK(compare(a, a).max_infidelity == doctest::Approx(0.0));
    CHECK(compare(a, b).max_infidelity <= 1e-15);
    b.lambda_grid[1] = 0.5;
    CHECK_THROWS_AS(compare(a, b), GridMismatchError);
}

TEST_CASE("uniform_grid") {
    const auto g = uniform_grid(0.0, 2.0, 5);
    REQUIRE(g.size() == 5);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == 2.0);
    CHECK(g[2] == doctest::Approx(1.0));
    CHECK_THROWS_AS(uniform_grid(0.0, 1.0, 1), ValidationError);
    CHECK_THROWS_AS(uniform_grid(1.0, 1.0, 5), ValidationError);
}

}  // TEST_SUITE
