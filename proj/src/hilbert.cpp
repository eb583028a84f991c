// hilbert.cpp — dense complex kernel

#include "chronogen/hilbert.hpp"

#include "chronogen/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

namespace chronogen {

double max_abs(const CMatrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const CMatrix& m) {
    if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
    const double scale = max_abs(m);
    if (scale == 0.0) return 0.0;
    return max_abs(m - m.adjoint()) / scale;
}

bool is_hermitian(const CMatrix& m, double rel_tol) {
    return m.rows() == m.cols() && all_finite(m) && hermiticity_defect(m) <= rel_tol;
}

void require_hermitian(const CMatrix& m, const char* what, double rel_tol) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw ValidationError(std::string(what) + ": matrix must be square and non-empty");
    }
    if (!all_finite(m)) {
        throw ValidationError(std::string(what) + ": matrix has non-finite entries");
    }
    if (hermiticity_defect(m) > rel_tol) {
        throw ValidationError(std::string(what) + ": matrix is not Hermitian");
    }
}

bool all_finite(const CMatrix& m) {
    return m.array().real().isFinite().all() && m.array().imag().isFinite().all();
}

bool all_finite(const CVector& v) {
    return v.array().real().isFinite().all() && v.array().imag().isFinite().all();
}

CMatrix identity(Eigen::Index dim) { return CMatrix::Identity(dim, dim); }

CMatrix kron(const CMatrix& a, const CMatrix& b, Eigen::Index max_dim) {
    const Eigen::Index rows = a.rows() * b.rows();
    const Eigen::Index cols = a.cols() * b.cols();
    if (rows > max_dim || cols > max_dim) {
        throw CapacityError("kron: result " + std::to_string(rows) + "x" + std::to_string(cols) +
                            " exceeds maximum dimension " + std::to_string(max_dim));
    }
    CMatrix out(rows, cols);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

namespace {

// Rotate the column so that its largest-magnitude entry is real positive.
// Among entries of (numerically) equal magnitude the first one wins.
void fix_phase(Eigen::Ref<CVector> v) {
    const double top = v.cwiseAbs().maxCoeff();
    if (top == 0.0) return;
    Eigen::Index pivot = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) >= top * (1.0 - 1e-12)) {
            pivot = i;
            break;
        }
    }
    v *= std::conj(v(pivot)) / std::abs(v(pivot));
    v(pivot) = Complex(v(pivot).real(), 0.0);
}

bool lexicographic_less(const CVector& a, const CVector& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a(i).real() != b(i).real()) return a(i).real() < b(i).real();
        if (a(i).imag() != b(i).imag()) return a(i).imag() < b(i).imag();
    }
    return false;
}

}  // namespace

EighResult eigh(const CMatrix& m) {
    require_hermitian(m, "eigh");
    const CMatrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw Error("eigh: eigendecomposition did not converge");
    }
    const Eigen::Index n = m.rows();
    CMatrix vectors = solver.eigenvectors();
    for (Eigen::Index k = 0; k < n; ++k) fix_phase(vectors.col(k));

    // Eigen returns ascending values; runs of numerically equal values are
    // reordered lexicographically by their phase-fixed vectors.
    const RVector& raw = solver.eigenvalues();
    const double tie_tol = 1e-12 * std::max(1.0, max_abs(m));
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    auto run_begin = order.begin();
    while (run_begin != order.end()) {
        auto run_end = std::next(run_begin);
        while (run_end != order.end() && raw(*run_end) - raw(*std::prev(run_end)) <= tie_tol) {
            ++run_end;
        }
        std::sort(run_begin, run_end, [&](Eigen::Index x, Eigen::Index y) {
            return lexicographic_less(vectors.col(x), vectors.col(y));
        });
        run_begin = run_end;
    }

    EighResult out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        out.values(k) = raw(order[static_cast<std::size_t>(k)]);
        out.vectors.col(k) = vectors.col(order[static_cast<std::size_t>(k)]);
    }
    return out;
}

CMatrix expm_hermitian(const CMatrix& h, double tau) {
    const EighResult eig = eigh(h);
    CVector phases(eig.values.size());
    for (Eigen::Index k = 0; k < phases.size(); ++k) {
        phases(k) = std::exp(Complex(0.0, -tau * eig.values(k)));
    }
    return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

double spectral_norm(const CMatrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<CMatrix> svd(m);
    return svd.singularValues()(0);
}

CMatrix reshape_system_major(const CVector& psi, Eigen::Index d_system, Eigen::Index d_clock) {
    if (d_system <= 0 || d_clock <= 0 || psi.size() != d_system * d_clock) {
        throw ValidationError("reshape_system_major: length " + std::to_string(psi.size()) +
                              " incompatible with " + std::to_string(d_system) + "x" +
                              std::to_string(d_clock));
    }
    // Column-major storage of a d_clock x d_system matrix has element (c, s) at s*d_clock + c.
    return Eigen::Map<const CMatrix>(psi.data(), d_clock, d_system).transpose();
}

CVector project_clock(const CVector& chi, const CVector& psi) {
    const Eigen::Index d_clock = chi.size();
    if (d_clock == 0 || psi.size() == 0 || psi.size() % d_clock != 0) {
        throw ValidationError("project_clock: clock dimension " + std::to_string(d_clock) +
                              " does not divide global dimension " + std::to_string(psi.size()));
    }
    const Eigen::Index d_system = psi.size() / d_clock;
    return Eigen::Map<const CMatrix>(psi.data(), d_clock, d_system).transpose() * chi.conjugate();
}

CVector apply_on_clock(const CMatrix& op_clock, const CVector& psi) {
    const Eigen::Index d_clock = op_clock.cols();
    if (op_clock.rows() != d_clock || d_clock == 0 || psi.size() % d_clock != 0) {
        throw ValidationError("apply_on_clock: dimension mismatch");
    }
    const Eigen::Index d_system = psi.size() / d_clock;
    CVector out(psi.size());
    Eigen::Map<CMatrix>(out.data(), d_clock, d_system) =
        op_clock * Eigen::Map<const CMatrix>(psi.data(), d_clock, d_system);
    return out;
}

CVector apply_on_system(const CMatrix& op_system, const CVector& psi) {
    const Eigen::Index d_system = op_system.cols();
    if (op_system.rows() != d_system || d_system == 0 || psi.size() % d_system != 0) {
        throw ValidationError("apply_on_system: dimension mismatch");
    }
    const Eigen::Index d_clock = psi.size() / d_system;
    CVector out(psi.size());
    Eigen::Map<CMatrix>(out.data(), d_clock, d_system) =
        Eigen::Map<const CMatrix>(psi.data(), d_clock, d_system) * op_system.transpose();
    return out;
}

}  // namespace chronogen
