#include "chronogen/errors.hpp"
#include "chronogen/readout.hpp"
#include "chronogen/dynamics.hpp"
#include "chronogen/model.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace chronogen;

namespace {

ClockTrajectory qubit_clock(const CVector& chi0, std::vector<double> grid) {
    return evolve_clock_on_grid(chi0, pauli(Axis::z), 0.0, std::move(grid));
}

}  // namespace

TEST_SUITE("readout") {

TEST_CASE("expectation curves") {
    const double r = 1.0 / std::sqrt(2.0);
    CVector up(2), plus(2);
    up << 1.0, 0.0;
    plus << r, r;
    const std::vector<double> grid{0.0, std::numbers::pi / 4, std::numbers::pi / 2};

    const ReadoutCurve ones = expectation_curve(identity(2), qubit_clock(plus, grid));
    for (double v : ones.values) CHECK(v == doctest::Approx(1.0));

    for (double v : expectation_curve(pauli(Axis::x), qubit_clock(up, grid)).values) CHECK(std::abs(v) <= 1e-15);

    const ReadoutCurve c = expectation_curve(pauli(Axis::x), qubit_clock(3.0 * plus, grid));
    CHECK(c.values[0] == doctest::Approx(1.0));
    CHECK(std::abs(c.values[1]) <= 1e-12);
    CHECK(c.values[2] == doctest::Approx(-1.0));
}

TEST_CASE("shifting the grid origin shifts the curve rigidly") {
    const CVector chi0 = oracle::vector(3, 1);
    const CMatrix hc = oracle::hermitian(3, 2), obs = oracle::hermitian(3, 3);
    const double shift = 0.37;
    const auto grid = uniform_grid(0.0, 2.0, 21);
    const ReadoutCurve base = expectation_curve(obs, evolve_clock_on_grid(chi0, hc, 0.1, grid));
    const CVector moved0 = evolve_clock(chi0, hc, 0.1, shift);
    const ReadoutCurve moved = expectation_curve(obs, evolve_clock_on_grid(moved0, hc, 0.1, grid));
    const ReadoutCurve direct =
        expectation_curve(obs, evolve_clock_on_grid(chi0, hc, 0.1, uniform_grid(shift, 2.0 + shift, 21)));
    for (std::size_t k = 0; k < grid.size(); ++k) CHECK(moved.values[k] == doctest::Approx(direct.values[k]));
    CHECK(base.values.size() == 21);
}

TEST_CASE("invert_readout") {
    ReadoutCurve linear;
    for (int k = 0; k <= 10; ++k) {
        linear.lambda_grid.push_back(0.1 * k);
        linear.values.push_back(0.2 * k);
    }
    CHECK(invert_readout(linear, 0.5) == doctest::Approx(0.25));
    CHECK_THROWS_AS(invert_readout(linear, 2.5), RangeError);

    const double r = 1.0 / std::sqrt(2.0);
    CVector plus(2);
    plus << r, r;
    const auto grid = uniform_grid(0.0, std::numbers::pi / 2, 101);
    const ReadoutCurve cosine = expectation_curve(pauli(Axis::x), qubit_clock(plus, grid));
    CHECK(is_strictly_monotone(cosine));
    const double h = grid[1] - grid[0];
    CHECK(std::abs(invert_readout(cosine, 0.0) - std::numbers::pi / 4) <= h);

    const ReadoutCurve full = expectation_curve(pauli(Axis::x), qubit_clock(plus, uniform_grid(0.0, std::numbers::pi, 101)));
    CHECK_FALSE(is_strictly_monotone(full));
    CHECK_THROWS_AS(invert_readout(full, 0.0), ReadoutUnusableError);
}

TEST_CASE("resolution spectrum") {
    CVector up(2);
    up << 1.0, 0.0;
    CHECK(resolution_spectrum(up, pauli(Axis::z)).participation_ratio == doctest::Approx(1.0));

    CVector plus = CVector::Ones(2);
    CHECK(resolution_spectrum(plus, pauli(Axis::z)).participation_ratio == doctest::Approx(2.0));

    const CMatrix hc = oracle::hermitian(5, 8);
    const CVector chi0 = 1.7 * oracle::vector(5, 9);
    const ResolutionSpectrum s = resolution_spectrum(chi0, hc);
    CHECK(std::abs(s.coefficients.squaredNorm() - chi0.squaredNorm()) <= 1e-10);
    CHECK(s.participation_ratio >= 1.0);
    CHECK(s.participation_ratio <= 5.0);

    // uniform superposition of the eigenvectors
    const EighResult e = eigh(hc);
    const CVector uniform = e.vectors * CVector::Ones(5);
    CHECK(resolution_spectrum(uniform, hc).participation_ratio == doctest::Approx(5.0).epsilon(1e-12));
}

}  // TEST_SUITE
