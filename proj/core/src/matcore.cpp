#include "hb/matcore.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

namespace hb {

namespace {

void require_same_shape(const Matrix& A, const Matrix& B, const char* op) {
  if (A.rows() != B.rows() || A.cols() != B.cols())
    throw DimensionError(std::string(op) + ": shape mismatch " + std::to_string(A.rows()) + "x" +
                         std::to_string(A.cols()) + " vs " + std::to_string(B.rows()) + "x" +
                         std::to_string(B.cols()));
}

}  // namespace

Matrix hadamard(const Matrix& A, const Matrix& B) {
  require_same_shape(A, B, "hadamard");
  return A.cwiseProduct(B);
}

Complex trace_inner(const Matrix& X, const Matrix& Y) {
  require_same_shape(X, Y, "trace_inner");
  return X.conjugate().cwiseProduct(Y).sum();
}

Vector diag_vector(const Matrix& M) {
  if (M.rows() != M.cols())
    throw DimensionError("diag_vector: matrix is " + std::to_string(M.rows()) + "x" +
                         std::to_string(M.cols()) + ", expected square");
  return M.diagonal();
}

EigenDecomposition hermitian_eigen(const HermitianView& H) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(H.matrix());
  if (solver.info() != Eigen::Success)
    throw NumericError("hermitian_eigen: solver did not converge on a " +
                       std::to_string(H.size()) + "x" + std::to_string(H.size()) + " matrix");
  EigenDecomposition result{solver.eigenvalues(), solver.eigenvectors()};

  // Phase convention: first component above 1e-8 of the column's max-abs is
  // made real positive. Ensures a canonical, deterministic eigenbasis.
  for (Index j = 0; j < result.eigenvectors.cols(); ++j) {
    auto col = result.eigenvectors.col(j);
    const double colmax = col.cwiseAbs().maxCoeff();
    if (colmax == 0.0) continue;
    for (Index i = 0; i < col.size(); ++i) {
      const double a = std::abs(col(i));
      if (a > 1e-8 * colmax) {
        col *= std::conj(col(i)) / a;
        break;
      }
    }
  }
  return result;
}

Index numerical_rank(const Matrix& M, const Tolerances& tol) {
  tol.validate();
  if (M.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(M);
  const RealVector& sigma = svd.singularValues();
  if (sigma.size() == 0 || sigma(0) == 0.0) return 0;
  const double cutoff = tol.rank_rtol * sigma(0);
  Index rank = 0;
  for (Index i = 0; i < sigma.size(); ++i)
    if (sigma(i) > cutoff) ++rank;
  return rank;
}

LoewnerCertificate loewner_geq(const HermitianView& X, const HermitianView& Y,
                               const Tolerances& tol) {
  tol.validate();
  if (X.size() != Y.size())
    throw DimensionError("loewner_geq: size mismatch " + std::to_string(X.size()) + " vs " +
                         std::to_string(Y.size()));
  LoewnerCertificate cert;
  cert.tol_used = tol.psd_rtol;
  if (X.size() == 0) {
    cert.accepted = true;
    return cert;
  }
  const Matrix diff = X.matrix() - Y.matrix();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(diff, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericError("loewner_geq: eigenvalue computation failed");
  const RealVector& ev = solver.eigenvalues();
  cert.lambda_min = ev(0);
  cert.scale = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  cert.accepted = cert.lambda_min >= -tol.psd_rtol * std::max(1.0, cert.scale);
  return cert;
}

LoewnerCertificate certify_psd(const HermitianView& X, const Tolerances& tol) {
  HermitianView zero(Matrix::Zero(X.size(), X.size()), tol);
  return loewner_geq(X, zero, tol);
}

double bilinear_trace_residual(const Matrix& M, const Matrix& N, const Vector& u,
                               const Vector& v) {
  const Index n = M.rows();
  if (M.cols() != n || N.rows() != n || N.cols() != n)
    throw DimensionError("bilinear_trace_residual: M, N must be square of equal size");
  if (u.size() != n || v.size() != n)
    throw DimensionError("bilinear_trace_residual: vector length does not match matrix size");

  const Complex lhs = u.transpose() * hadamard(M, N) * v;
  const Matrix inner = N.transpose() * u.asDiagonal() * M * v.asDiagonal();
  const Complex rhs = inner.trace();
  return std::abs(lhs - rhs);
}

double bilinear_trace_scale(const Matrix& M, const Matrix& N, const Vector& u,
                            const Vector& v) {
  return std::max(1.0, u.norm() * v.norm() * M.norm() * N.norm());
}

Matrix principal_submatrix(const Matrix& M, const IndexSet& J) {
  if (M.rows() != M.cols())
    throw DimensionError("principal_submatrix: matrix must be square");
  if (J.empty()) throw IndexError("principal_submatrix: empty index set");
  for (Index idx : J)
    if (idx < 0 || idx >= M.rows())
      throw IndexError("principal_submatrix: index " + std::to_string(idx) +
                       " out of range for size " + std::to_string(M.rows()));
  Matrix out(static_cast<Index>(J.size()), static_cast<Index>(J.size()));
  for (std::size_t i = 0; i < J.size(); ++i)
    for (std::size_t j = 0; j < J.size(); ++j)
      out(static_cast<Index>(i), static_cast<Index>(j)) = M(J[i], J[j]);
  return out;
}

}  // namespace hb
