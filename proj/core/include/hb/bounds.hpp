#ifndef HB_BOUNDS_HPP
#define HB_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "hb/factor.hpp"
#include "hb/matcore.hpp"
#include "hb/types.hpp"

namespace hb {

enum class BoundKind {
  main,
  compressed,
  multiplier,
  multifactor,
  fiedler,
  lambda_min,
  quad_form,
  hkv,
  upper,
  sqrt
};

std::string to_string(BoundKind kind);

/// The dominated rank-one matrix gamma * d d*.
struct RankOneLowerBound {
  double gamma = 0.0;
  Vector d;

  Matrix matrix() const { return gamma * (d * d.adjoint()); }
};

/// One certified dominance claim. For lower-bound kinds the certificate
/// refers to lhs - bound; for the upper kind, to bound - lhs.
struct BoundReport {
  BoundKind kind = BoundKind::main;
  Matrix lhs;
  Matrix bound_matrix;
  double gamma = 0.0;  // rank-one coefficient, or the scalar c of the upper bound
  Vector d;            // rank-one direction; empty when the bound is not rank-one
  LoewnerCertificate certificate;
  bool ambiguous_rank = false;
  double gamma_alt = 0.0;  // the 1/(r+1) candidate, meaningful when ambiguous_rank
  std::string note;

  RankOneLowerBound rank_one_bound() const { return {gamma, d}; }
};

/// The central inequality: A A* o B B* dominates gamma d d* with
/// gamma = 1/min(rk(A A*), rk(B B*)) and d = diag(A0 B0^T), the factors
/// zero-padded to a common column count. Near-cutoff singular values flag
/// the report ambiguous and record the alternative coefficient.
BoundReport main_lower_bound(const GramFactor& A, const GramFactor& B,
                             const Tolerances& tol = {});

/// 1/min of the J-restricted Gram ranks; the best-possible compressed
/// coefficient. Throws DomainError when a restricted Gram block vanishes.
double gamma_rank(const GramFactor& A, const GramFactor& B, const IndexSet& J,
                  const Tolerances& tol = {});

/// Composition of orthogonal projections onto the row space of A and the
/// column space of B^T. Satisfies A P B^T = A B^T and <P,P> <= min rank.
Matrix orthoprojection_P(const GramFactor& A, const GramFactor& B, const Tolerances& tol = {});

/// Compressed variant: C (A A* o B B*) C* >= gamma(A,B,J) (C d)(C d)* where
/// J indexes the columns of C with norm above rank_rtol * ||C||_max.
BoundReport compressed_lower_bound(const Matrix& C, const GramFactor& A, const GramFactor& B,
                                   const Tolerances& tol = {});

/// Diagonal-multiplier bound for k PSD factors M_j and weight vectors
/// u_j, y_j. The Hadamard product of D_{u_j} M_j D*_{u_j} o D_{y_j} conj(M_j) D*_{y_j}
/// dominates (1/rk M_{J(w)}) z z* with z = w o d_{M_1} o ... o d_{M_k},
/// w = (u_1 o y_1) o ... o (u_k o y_k). A vanishing principal submatrix
/// yields the trivial zero bound, accepted.
BoundReport multiplier_lower_bound(const std::vector<HermitianView>& Ms,
                                   const std::vector<Vector>& us, const std::vector<Vector>& ys,
                                   const Tolerances& tol = {});

/// 2l square factors: Hadamard product of all Gram matrices dominates
/// prod_j 1/min(rk M'_j, rk M'_{j+l}) * w w*, w = o_j diag(A_j A_{j+l}^T).
BoundReport multifactor_lower_bound(const std::vector<GramFactor>& factors, Index l,
                                    const Tolerances& tol = {});

struct ClassicalBounds {
  std::vector<BoundReport> reports;
  std::vector<std::string> omitted;  // one reason per inapplicable bound
};

/// The three classical comparisons: M o N >= lambda_min(N) (M o Id) for real
/// M PSD and N symmetric, M o N >= M / (e^T N^{-1} e) for invertible PSD N,
/// and Fiedler's M o M^{-1} >= Id for invertible PSD M. Inapplicable bounds
/// are omitted with a reason.
ClassicalBounds classical_bounds(const HermitianView& M, const HermitianView& N,
                                 const Tolerances& tol = {});

/// Equal-Gram corollary for real factors with A A^T = B B^T = M:
/// A A^T o B B^T >= (1/rk M) d d^T, d = diag(A B^T).
BoundReport hkv_equal_gram_bound(const Matrix& A, const Matrix& B, const Tolerances& tol = {});

/// Diagonal upper bound M o N <= c D_M D_N with c the largest product of
/// corresponding column norms of the correlation compressions of M and N.
BoundReport upper_bound(const HermitianView& M, const HermitianView& N,
                        const Tolerances& tol = {});

/// Square-root instantiation: M o N >= (1/min(rk M, rk N)) d d* with
/// d = diag(sqrt(M) sqrt(N)^T).
BoundReport sqrt_bound(const HermitianView& M, const HermitianView& N,
                       const Tolerances& tol = {});

/// Sum of (v_j o w_k)(v_j o w_k)* over all column pairs; equals
/// A A* o B B* exactly, each pair attaining rank-one equality.
Matrix rank_one_sum_exact(const GramFactor& A, const GramFactor& B);

}  // namespace hb

#endif  // HB_BOUNDS_HPP
