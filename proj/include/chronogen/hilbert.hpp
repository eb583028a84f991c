// hilbert.hpp — dense complex linear algebra for bipartite (system ⊗ clock) spaces
//
// Flat indexing of a global vector is system-major: index = s * d_clock + c.

#pragma once

#include <Eigen/Dense>

#include <complex>

namespace chronogen {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

inline constexpr Eigen::Index kMaxDimension = 4096;

struct EighResult {
    RVector values;   // ascending
    CMatrix vectors;  // orthonormal columns, largest-magnitude entry real positive
};

// Largest absolute entry; zero for empty matrices.
double max_abs(const CMatrix& m);

// max|M - M†| / max|M| (zero for the zero matrix). Non-square input yields +inf.
double hermiticity_defect(const CMatrix& m);

bool is_hermitian(const CMatrix& m, double rel_tol = 1e-12);

// Throws ValidationError unless m is square, finite and Hermitian within rel_tol.
void require_hermitian(const CMatrix& m, const char* what, double rel_tol = 1e-12);

bool all_finite(const CMatrix& m);
bool all_finite(const CVector& v);

CMatrix identity(Eigen::Index dim);

// Kronecker product a ⊗ b; result entry (i*b.rows()+k, j*b.cols()+l) = a(i,j) b(k,l).
CMatrix kron(const CMatrix& a, const CMatrix& b, Eigen::Index max_dim = kMaxDimension);

// Hermitian eigendecomposition with deterministic phases and ordering.
EighResult eigh(const CMatrix& m);

// exp(-i tau h) for Hermitian h.
CMatrix expm_hermitian(const CMatrix& h, double tau);

// Spectral norm (largest singular value).
double spectral_norm(const CMatrix& m);

// Views a global vector of length d_system*d_clock as a d_system x d_clock matrix.
CMatrix reshape_system_major(const CVector& psi, Eigen::Index d_system, Eigen::Index d_clock);

// (1_S ⊗ <chi|) |psi>: out_s = sum_c conj(chi_c) psi_{s*d_C + c}.
CVector project_clock(const CVector& chi, const CVector& psi);

// (1_S ⊗ op_clock) psi and (op_system ⊗ 1_C) psi without forming the Kronecker product.
CVector apply_on_clock(const CMatrix& op_clock, const CVector& psi);
CVector apply_on_system(const CMatrix& op_system, const CVector& psi);

}  // namespace chronogen
