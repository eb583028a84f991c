// model.cpp — Hamiltonian specs, building blocks, random instances

#include "chronogen/model.hpp"

#include "chronogen/errors.hpp"

#include <random>
#include <string>
#include <utility>

namespace chronogen {

HamiltonianSpec::HamiltonianSpec(CMatrix h_system, CMatrix h_clock, CMatrix v_interaction)
    : h_system_(std::move(h_system)),
      h_clock_(std::move(h_clock)),
      v_interaction_(std::move(v_interaction)) {
    require_hermitian(h_system_, "HamiltonianSpec.h_system");
    require_hermitian(h_clock_, "HamiltonianSpec.h_clock");
    const Eigen::Index d = h_system_.rows() * h_clock_.rows();
    if (d > kMaxDimension) {
        throw CapacityError("HamiltonianSpec: global dimension " + std::to_string(d) +
                            " exceeds " + std::to_string(kMaxDimension));
    }
    if (v_interaction_.rows() != d || v_interaction_.cols() != d) {
        throw ValidationError("HamiltonianSpec: v_interaction must be " + std::to_string(d) + "x" +
                              std::to_string(d));
    }
    require_hermitian(v_interaction_, "HamiltonianSpec.v_interaction");
}

HamiltonianSpec::HamiltonianSpec(CMatrix h_system, CMatrix h_clock)
    : HamiltonianSpec(h_system, h_clock,
                      CMatrix::Zero(h_system.rows() * h_clock.rows(),
                                    h_system.rows() * h_clock.rows())) {}

bool HamiltonianSpec::operator==(const HamiltonianSpec& other) const {
    return h_system_ == other.h_system_ && h_clock_ == other.h_clock_ &&
           v_interaction_ == other.v_interaction_;
}

CMatrix assemble_global(const HamiltonianSpec& spec) {
    return kron(spec.h_system(), identity(spec.d_clock())) +
           kron(identity(spec.d_system()), spec.h_clock()) + spec.v_interaction();
}

CMatrix pauli(Axis axis) {
    CMatrix m = CMatrix::Zero(2, 2);
    switch (axis) {
        case Axis::x:
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case Axis::y:
            m(0, 1) = Complex(0.0, -1.0);
            m(1, 0) = Complex(0.0, 1.0);
            break;
        case Axis::z:
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
    }
    return m;
}

CMatrix product_interaction(const CMatrix& a_system, const CMatrix& b_clock) {
    require_hermitian(a_system, "product_interaction.a_system");
    require_hermitian(b_clock, "product_interaction.b_clock");
    return kron(a_system, b_clock);
}

HamiltonianSpec coupled_qubits_spec() {
    return HamiltonianSpec(CMatrix::Zero(2, 2), pauli(Axis::z),
                           kron(pauli(Axis::x) + pauli(Axis::z), pauli(Axis::x)));
}

namespace {

CMatrix draw_hermitian(Eigen::Index dim, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix a(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        for (Eigen::Index i = 0; i < dim; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            a(i, j) = Complex(re, im);
        }
    }
    CMatrix h = 0.5 * (a + a.adjoint());
    const double norm = spectral_norm(h);
    if (norm > 0.0) h /= norm;
    return 0.5 * (h + h.adjoint());
}

}  // namespace

CMatrix random_hermitian(Eigen::Index dim, std::uint64_t seed) {
    if (dim <= 0 || dim > kMaxDimension) {
        throw CapacityError("random_hermitian: dimension out of range");
    }
    std::mt19937_64 rng(seed);
    return draw_hermitian(dim, rng);
}

CVector random_state(Eigen::Index dim, std::uint64_t seed) {
    if (dim <= 0 || dim > kMaxDimension) {
        throw CapacityError("random_state: dimension out of range");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    CVector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const double re = normal(rng);
        const double im = normal(rng);
        v(i) = Complex(re, im);
    }
    return v / v.norm();
}

HamiltonianSpec random_spec(Eigen::Index d_system, Eigen::Index d_clock, double coupling_strength,
                            std::uint64_t seed) {
    if (d_system <= 0 || d_clock <= 0 || d_system * d_clock > kMaxDimension) {
        throw CapacityError("random_spec: global dimension must be in [1, " +
                            std::to_string(kMaxDimension) + "]");
    }
    if (!(coupling_strength >= 0.0)) {
        throw ValidationError("random_spec: coupling_strength must be >= 0");
    }
    std::mt19937_64 rng(seed);
    CMatrix h_system = draw_hermitian(d_system, rng);
    CMatrix h_clock = draw_hermitian(d_clock, rng);
    const Eigen::Index d = d_system * d_clock;
    CMatrix v = CMatrix::Zero(d, d);
    if (coupling_strength > 0.0) v = coupling_strength * draw_hermitian(d, rng);
    return HamiltonianSpec(std::move(h_system), std::move(h_clock), std::move(v));
}

}  // namespace chronogen
