#ifndef HB_MATCORE_HPP
#define HB_MATCORE_HPP

#include "hb/types.hpp"

namespace hb {

/// Entrywise (Schur) product of two equal-shape matrices.
Matrix hadamard(const Matrix& A, const Matrix& B);

/// Frobenius inner product tr(X* Y); conjugate-linear in X, linear in Y.
Complex trace_inner(const Matrix& X, const Matrix& Y);

/// Diagonal of a square matrix as a column vector.
Vector diag_vector(const Matrix& M);

struct EigenDecomposition {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // orthonormal columns, phase-normalized
};

/// Full Hermitian eigendecomposition H = V diag(lambda) V*.
/// Residual contract: ||H V - V diag(lambda)||_max <= 1e3 * eps * max(1, ||H||_max),
/// V* V = Id to the same tolerance, eigenvalues ascending. Each eigenvector is
/// scaled so its first non-negligible component has positive real part and
/// zero imaginary part, making the output deterministic.
EigenDecomposition hermitian_eigen(const HermitianView& H);

/// Number of singular values exceeding rank_rtol times the largest one.
/// Zero matrix has rank 0.
Index numerical_rank(const Matrix& M, const Tolerances& tol = {});

/// Certificate on X - Y: accepted iff lambda_min >= -psd_rtol * max(1, scale)
/// where scale is the largest eigenvalue magnitude of the difference.
LoewnerCertificate loewner_geq(const HermitianView& X, const HermitianView& Y,
                               const Tolerances& tol = {});

/// Certificate that X itself is PSD (loewner_geq against the zero matrix).
LoewnerCertificate certify_psd(const HermitianView& X, const Tolerances& tol = {});

/// |u^T (M o N) v  -  tr(N^T D_u M D_v)|, both sides evaluated independently.
double bilinear_trace_residual(const Matrix& M, const Matrix& N, const Vector& u,
                               const Vector& v);

/// Scale against which the trace-identity residual is judged:
/// max(1, ||u|| ||v|| ||M||_F ||N||_F).
double bilinear_trace_scale(const Matrix& M, const Matrix& N, const Vector& u,
                            const Vector& v);

/// Principal submatrix M[J, J], order-preserving. Indices are zero-based.
Matrix principal_submatrix(const Matrix& M, const IndexSet& J);

}  // namespace hb

#endif  // HB_MATCORE_HPP
