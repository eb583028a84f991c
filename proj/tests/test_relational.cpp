#include "chronogen/errors.hpp"
#include "chronogen/relational.hpp"
#include "chronogen/scenarios.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace chronogen;

namespace {

using Ref = CoupledQubitsReference;

// V = A ⊗ |χ̂⟩⟨χ̂| + A' ⊗ (1 − |χ̂⟩⟨χ̂|): commutes with 1 ⊗ |χ̂⟩⟨χ̂| by construction.
CMatrix pointer_interaction(const CMatrix& a, const CMatrix& a_prime, const CVector& chi) {
    const CVector n = chi / chi.norm();
    const CMatrix p = n * n.adjoint();
    return oracle::kron(a, p) + oracle::kron(a_prime, oracle::id(chi.size()) - p);
}

}  // namespace

TEST_SUITE("relational") {

TEST_CASE("evolve_clock") {
    const CVector chi0 = oracle::vector(3, 1);
    const CMatrix hc = oracle::hermitian(3, 2);
    CHECK((evolve_clock(chi0, hc, 0.4, 0.0) - chi0).norm() <= 1e-14 * chi0.norm());
    const CVector twice = evolve_clock(evolve_clock(chi0, hc, 0.4, 0.3), hc, 0.4, 1.2);
    CHECK((twice - evolve_clock(chi0, hc, 0.4, 1.5)).norm() <= 1e-10);
    CHECK(std::abs(evolve_clock(chi0, hc, 0.4, 7.0).norm() - chi0.norm()) <= 1e-10);
    const CVector expected = std::exp(Complex(0, 0.4 * 0.9)) * (oracle::expm(hc, 0.9) * chi0);
    CHECK((evolve_clock(chi0, hc, 0.4, 0.9) - expected).norm() <= 1e-10);
}

TEST_CASE("evolve_clock reproduces the reference clock shape") {
    const double lambda = 0.8;
    const CVector chi = evolve_clock(Ref::chi0(), pauli(Axis::z), Ref::energy(), lambda);
    const double s3 = std::sqrt(3.0);
    CHECK(std::abs(chi(0) - Ref::chi0()(0) * std::exp(Complex(0, -lambda * (1 + s3)))) <= 1e-12);
    CHECK(std::abs(chi(1) - Ref::chi0()(1) * std::exp(Complex(0, -lambda * (-1 + s3)))) <= 1e-12);
    // same direction as the closed-form χ(λ); only the real normalization differs
    CHECK(std::abs(std::abs(chi.normalized().dot(Ref::chi(lambda).normalized())) - 1.0) <= 1e-12);
}

TEST_CASE("effective energy and potential against explicit projectors") {
    for (unsigned seed = 0; seed < 10; ++seed) {
        const Eigen::Index ds = 2 + seed % 3, dc = 2 + seed % 5;
        const CVector psi = oracle::vector(ds * dc, 100 + seed);
        const CVector chi = oracle::vector(dc, 200 + seed);
        const CMatrix v = oracle::hermitian(ds * dc, 300 + seed);
        const Complex e = effective_energy(psi, chi, v);
        CHECK(std::abs(e - oracle::e_script(psi, chi, v, ds)) <= 1e-10);
        const EffectivePotentialSample s = effective_potential(psi, chi, v);
        CHECK((s.v_s - oracle::v_s(psi, chi, v, ds)).norm() <= 1e-10);
        CHECK(hermiticity_defect(s.v_s) <= 1e-10);
    }
}

TEST_CASE("zero interaction gives zero potential") {
    const CVector psi = oracle::vector(6, 1), chi = oracle::vector(3, 2);
    const CMatrix v = CMatrix::Zero(6, 6);
    CHECK(effective_energy(psi, chi, v) == Complex(0.0));
    CHECK(effective_potential(psi, chi, v).v_s == CMatrix::Zero(2, 2));
}

TEST_CASE("coupled-qubit potential at 0 and pi/4") {
    const GlobalEigenstate state = coupled_qubits_state();
    const CMatrix v = coupled_qubits_spec().v_interaction();
    const auto at = [&](double lambda) {
        const CVector chi = evolve_clock(Ref::chi0(), pauli(Axis::z), state.energy, lambda);
        return pauli_components(effective_potential(state.psi, chi, v, lambda).v_s);
    };
    const PauliComponents c0 = at(0.0);
    CHECK(std::abs(c0.vx - 1.0) <= 1e-12);
    CHECK(std::abs(c0.vz - 1.0) <= 1e-12);
    CHECK(std::abs(c0.vy) <= 1e-12);

    const PauliComponents c = at(std::numbers::pi / 4);
    const double r3 = 1.0 / std::sqrt(3.0);
    CHECK(std::abs(c.vx - r3) <= 1e-12);
    CHECK(std::abs(c.vz - r3) <= 1e-12);
    // the decomposition forces −1 at π/4, i.e. √3 times the tabulated −1/√3
    CHECK(std::abs(c.vy + 1.0) <= 1e-12);
}

TEST_CASE("singular overlap is reported with its lambda") {
    CVector psi = CVector::Zero(4);
    psi(0) = 1.0;  // |↑⟩_S |↑⟩_C
    CVector chi(2);
    chi << 0.0, 1.0;
    try {
        effective_potential(psi, chi, CMatrix::Zero(4, 4), 0.25);
        FAIL("expected SingularOverlapError");
    } catch (const SingularOverlapError& e) {
        CHECK(e.lambda() == 0.25);
    }
}

TEST_CASE("decomposition identity and chi-scale invariance") {
    for (unsigned seed = 0; seed < 100; ++seed) {
        const Eigen::Index ds = 1 + seed % 4, dc = 1 + seed % 8;
        const CVector psi = oracle::vector(ds * dc, 1000 + seed);
        const CVector chi = oracle::vector(dc, 2000 + seed);
        const CMatrix v = oracle::hermitian(ds * dc, 3000 + seed);
        const ClockProjection p = project_with_interaction(psi, v * psi, chi, 0.0);
        const EffectivePotentialSample s = potential_from_projection(p, 0.0);
        CHECK(verify_decomposition(s, p.u, p.phi) <= 1e-10 * std::max(1.0, p.u.norm()));

        const Complex c(0.3 - 0.1 * static_cast<double>(seed % 7), 1.7);
        const EffectivePotentialSample scaled = effective_potential(psi, c * chi, v);
        CHECK((scaled.v_s - s.v_s).norm() <= 1e-10 * std::max(1.0, s.v_s.norm()));
        CHECK(std::abs(scaled.e_script - s.e_script) <= 1e-10 * std::max(1.0, std::abs(s.e_script)));
    }
}

TEST_CASE("accumulate_phase") {
    ClockTrajectory t;
    t.lambda_grid = {0.0, 0.5, 1.25, 3.0};
    t.chi_raw.assign(4, CVector::Ones(1));
    t.e_script.assign(4, Complex(0.0));
    t.overlap_n.assign(4, 1.0);
    for (const Complex& s : accumulate_phase(t).s_phase) CHECK(s == Complex(0.0));

    const Complex c(0.7, -0.2);
    t.e_script.assign(4, c);
    const ClockTrajectory acc = accumulate_phase(t);
    CHECK(acc.s_phase[0] == Complex(0.0));
    for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(acc.s_phase[k] - c * t.lambda_grid[k]) <= 1e-15);
}

TEST_CASE("log_overlap phase rule sets Im S from N") {
    ClockTrajectory t;
    t.lambda_grid = {0.0, 1.0, 2.0};
    t.chi_raw.assign(3, CVector::Ones(1));
    t.e_script.assign(3, Complex(1.0, 5.0));
    t.overlap_n = {2.0, 1.0, 4.0};
    const ClockTrajectory acc = accumulate_phase(t, PhaseRule::log_overlap);
    CHECK(acc.s_phase[0] == Complex(0.0));
    CHECK(acc.s_phase[2].real() == doctest::Approx(2.0));
    CHECK(acc.s_phase[1].imag() == doctest::Approx(-0.5 * std::log(0.5)));
    CHECK(acc.s_phase[2].imag() == doctest::Approx(-0.5 * std::log(2.0)));
}

TEST_CASE("conditional state at lambda = 0 and unit norm") {
    const GlobalEigenstate state = coupled_qubits_state();
    const HamiltonianSpec spec = coupled_qubits_spec();
    ClockTrajectory clock = evolve_clock_on_grid(Ref::chi0(), spec.h_clock(), state.energy,
                                                 uniform_grid(0.0, 2.0 * std::numbers::pi, 1001));
    const auto samples = sample_potentials(state.psi, clock, spec.v_interaction());
    clock = accumulate_phase(attach_effective_energy(clock, samples), PhaseRule::log_overlap);

    const double a = Ref::a();
    CVector phi0(2);
    phi0 << 1.0, -(a + 1.0);
    phi0 /= 2.0 * std::sqrt(1.0 + a);
    CHECK((conditional_state(state.psi, clock, 0) - phi0).norm() <= 1e-12);
    for (std::size_t k = 0; k < clock.lambda_grid.size(); ++k) {
        CHECK(std::abs(conditional_state(state.psi, clock, k).norm() - 1.0) <= 1e-8);
    }
}

TEST_CASE("potential does not depend on the accumulated phase") {
    const GlobalEigenstate state = coupled_qubits_state();
    const HamiltonianSpec spec = coupled_qubits_spec();
    ClockTrajectory clock =
        evolve_clock_on_grid(Ref::chi0(), spec.h_clock(), state.energy, uniform_grid(0.0, 1.0, 11));
    const auto before = sample_potentials(state.psi, clock, spec.v_interaction());
    clock = accumulate_phase(attach_effective_energy(clock, before));
    const auto after = sample_potentials(state.psi, clock, spec.v_interaction());
    for (std::size_t k = 0; k < before.size(); ++k) {
        CHECK(before[k].v_s == after[k].v_s);
        CHECK(before[k].e_script == after[k].e_script);
    }
}

TEST_CASE("threaded sampling is identical to serial") {
    const HamiltonianSpec spec = random_spec(3, 4, 0.8, 5);
    const GlobalEigenstate state = select_state(assemble_global(spec), eigenspaces(assemble_global(spec))[0],
                                                std::vector<Complex>{1.0});
    const CVector chi0 = random_state(4, 6);
    const auto grid = uniform_grid(0.0, 3.0, 101);
    const ClockTrajectory a = evolve_clock_on_grid(chi0, spec.h_clock(), state.energy, grid, 1);
    const ClockTrajectory b = evolve_clock_on_grid(chi0, spec.h_clock(), state.energy, grid, 4);
    const auto sa = sample_potentials(state.psi, a, spec.v_interaction(), 1);
    const auto sb = sample_potentials(state.psi, b, spec.v_interaction(), 4);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        CHECK(a.chi_raw[k] == b.chi_raw[k]);
        CHECK(sa[k].v_s == sb[k].v_s);
    }
}

TEST_CASE("envariance") {
    const HamiltonianSpec spec = degenerate_free_spec();
    const double r = 1.0 / std::sqrt(2.0);
    CVector bell = CVector::Zero(4);
    bell(1) = bell(2) = r;
    const CVector chi0 = CVector::Constant(2, r);
    CHECK(envariance_check(bell, chi0, spec.h_system(), spec.h_clock(), 0.0, 0.0) == 0.0);
    CHECK(envariance_check(bell, chi0, spec.h_system(), spec.h_clock(), 0.0, 0.9) <= 1e-10);

    // a non-eigenstate breaks it
    const CVector generic = oracle::vector(4, 77);
    CHECK(envariance_check(generic, chi0, spec.h_system(), spec.h_clock(), 0.0, 0.9) > 1e-3);
}

TEST_CASE("pointer diagnostics") {
    const CMatrix a = oracle::hermitian(2, 1), a_prime = oracle::hermitian(2, 2);
    const CVector chi = oracle::vector(3, 3);

    CHECK(pointer_commutator_norm(oracle::kron(a, oracle::id(3)), chi) <= 1e-12);

    const CMatrix v = pointer_interaction(a, a_prime, chi);
    CHECK(pointer_commutator_norm(v, chi) <= 1e-10);
    const CVector psi = oracle::vector(6, 4);
    CHECK(std::abs(effective_energy(psi, 2.5 * chi, v).imag()) <= 1e-10);

    const ClockProjection p = project_with_interaction(psi, v * psi, chi, 0.0);
    const EffectivePotentialSample s = potential_from_projection(p, 0.0);
    const CVector full = s.v_s * p.phi - s.e_script * p.phi;
    CHECK((pointer_shortcut(v, chi, psi) - full).norm() <= 1e-9);

    // explicit commutator oracle
    const CMatrix proj = oracle::clock_projector(chi / chi.norm(), 2);
    const CMatrix generic = oracle::hermitian(6, 9);
    const double brute = (generic * proj - proj * generic).jacobiSvd().singularValues()(0);
    CHECK(pointer_commutator_norm(generic, chi) == doctest::Approx(brute).epsilon(1e-10));

    // The coupled-qubit χ₀ ∝ (1, 1) is a σ_x eigenvector and V = (σ_x + σ_z) ⊗ σ_x, so the
    // commutator vanishes at λ = 0 (consistent with Im ℰ(0) = 0) and is nonzero elsewhere.
    const CMatrix v_cq = coupled_qubits_spec().v_interaction();
    CHECK(pointer_commutator_norm(v_cq, Ref::chi0()) <= 1e-12);
    const CVector chi_half = evolve_clock(Ref::chi0(), pauli(Axis::z), Ref::energy(), 0.5);
    CHECK(pointer_commutator_norm(v_cq, chi_half) > 0.1);
}

TEST_CASE("partial clock element") {
    const CMatrix v = oracle::hermitian(6, 12);
    const CVector bra = oracle::vector(3, 13), ket = oracle::vector(3, 14);
    const CMatrix expected = oracle::clock_bra(bra, 2) * v * oracle::clock_bra(ket, 2).adjoint();
    CHECK((partial_clock_element(v, bra, ket) - expected).norm() <= 1e-12);
}

}  // TEST_SUITE
