#include "hb/factor.hpp"

#include <cmath>

namespace hb {

GramFactor gram_factor(const HermitianView& M, const Tolerances& tol) {
  tol.validate();
  const LoewnerCertificate psd = certify_psd(M, tol);
  if (!psd.accepted)
    throw DomainError("gram_factor: matrix is not PSD within tolerance (lambda_min " +
                          std::to_string(psd.lambda_min) + ")",
                      psd.lambda_min);

  const EigenDecomposition eig = hermitian_eigen(M);
  const Index n = M.size();
  const double lambda_max = n > 0 ? eig.eigenvalues(n - 1) : 0.0;
  const double cutoff = tol.rank_rtol * std::max(lambda_max, 0.0);

  // Retain eigenvalues above the rank cutoff, largest first; negatives
  // within tolerance were already vouched for by the certificate.
  std::vector<Index> keep;
  for (Index i = n - 1; i >= 0; --i)
    if (eig.eigenvalues(i) > cutoff && eig.eigenvalues(i) > 0.0) keep.push_back(i);

  Matrix A(n, static_cast<Index>(keep.size()));
  for (std::size_t j = 0; j < keep.size(); ++j)
    A.col(static_cast<Index>(j)) =
        eig.eigenvectors.col(keep[j]) * std::sqrt(eig.eigenvalues(keep[j]));
  return GramFactor(std::move(A));
}

HermitianView principal_sqrt(const HermitianView& M, const Tolerances& tol) {
  tol.validate();
  const LoewnerCertificate psd = certify_psd(M, tol);
  if (!psd.accepted)
    throw DomainError("principal_sqrt: matrix is not PSD within tolerance (lambda_min " +
                          std::to_string(psd.lambda_min) + ")",
                      psd.lambda_min);

  const EigenDecomposition eig = hermitian_eigen(M);
  RealVector roots(eig.eigenvalues.size());
  for (Index i = 0; i < roots.size(); ++i)
    roots(i) = eig.eigenvalues(i) > 0.0 ? std::sqrt(eig.eigenvalues(i)) : 0.0;
  Matrix H = eig.eigenvectors * roots.asDiagonal() * eig.eigenvectors.adjoint();
  // Symmetrize: V f(D) V* is Hermitian only up to rounding.
  H = ((H + H.adjoint()) / 2.0).eval();
  return HermitianView(std::move(H), tol);
}

Matrix pad_columns(const Matrix& A, Index extra) {
  if (extra < 0) throw UsageError("pad_columns: extra must be non-negative");
  if (extra == 0) return A;
  Matrix out(A.rows(), A.cols() + extra);
  out.leftCols(A.cols()) = A;
  out.rightCols(extra).setZero();
  return out;
}

std::vector<Vector> rank_one_columns(const Matrix& A) {
  std::vector<Vector> cols;
  cols.reserve(static_cast<std::size_t>(A.cols()));
  for (Index j = 0; j < A.cols(); ++j) cols.push_back(A.col(j));
  return cols;
}

std::pair<GramFactor, GramFactor> pad_to_common_width(const GramFactor& A, const GramFactor& B,
                                                      Index p) {
  if (p < 0) throw UsageError("pad_to_common_width: p must be non-negative");
  const Index width = std::max(A.cols(), B.cols()) + p;
  return {GramFactor(pad_columns(A.factor, width - A.cols())),
          GramFactor(pad_columns(B.factor, width - B.cols()))};
}

}  // namespace hb
