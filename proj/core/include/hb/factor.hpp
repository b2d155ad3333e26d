#ifndef HB_FACTOR_HPP
#define HB_FACTOR_HPP

#include "hb/matcore.hpp"
#include "hb/types.hpp"

namespace hb {

/// A matrix A realizing a PSD matrix as the Gram matrix A A*.
/// Downstream properties are stated on A A*, never on A entrywise, so the
/// right-unitary ambiguity of the factor is irrelevant.
struct GramFactor {
  Matrix factor;     // n x r
  Index target_dim;  // n

  explicit GramFactor(Matrix f) : factor(std::move(f)), target_dim(factor.rows()) {}

  Matrix gram() const { return factor * factor.adjoint(); }
  Index rows() const { return factor.rows(); }
  Index cols() const { return factor.cols(); }
  bool is_zero() const { return max_abs(factor) == 0.0; }
};

/// Factor a PSD matrix as A A* with r = numerical_rank(M) columns, built
/// from eigenvectors scaled by square roots of the retained eigenvalues.
/// Reconstruction error stays within 1e4 * eps * max(1, ||M||_max).
GramFactor gram_factor(const HermitianView& M, const Tolerances& tol = {});

/// Principal (PSD) square root: H PSD with H^2 = M within 1e4 * eps * scale.
HermitianView principal_sqrt(const HermitianView& M, const Tolerances& tol = {});

/// [A | 0_{n x extra}]. Appending zero columns never changes A A*.
Matrix pad_columns(const Matrix& A, Index extra);

/// Columns v_j of A, so that sum_j v_j v_j* = A A*.
std::vector<Vector> rank_one_columns(const Matrix& A);

/// Pad both factors with zero columns on the right to a common width
/// (plus p extra columns each); their Gram matrices are unchanged.
std::pair<GramFactor, GramFactor> pad_to_common_width(const GramFactor& A, const GramFactor& B,
                                                      Index p = 0);

}  // namespace hb

#endif  // HB_FACTOR_HPP
