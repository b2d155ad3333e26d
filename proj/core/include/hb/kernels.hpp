#ifndef HB_KERNELS_HPP
#define HB_KERNELS_HPP

#include <vector>

#include "hb/bounds.hpp"
#include "hb/types.hpp"

namespace hb {

/// Finite set of points in a common Euclidean dimension, one per row.
class PointSet {
 public:
  explicit PointSet(RealMatrix coords) : coords_(std::move(coords)) {
    if (coords_.rows() == 0)
      throw DomainError("PointSet: need at least one point");
    if (!coords_.allFinite()) throw DomainError("PointSet: non-finite coordinate");
  }

  Index size() const { return coords_.rows(); }
  Index dim() const { return coords_.cols(); }
  const RealMatrix& coords() const { return coords_; }
  RealVector point(Index i) const { return coords_.row(i); }

 private:
  RealMatrix coords_;
};

enum class KernelKind { cosine, gaussian };

/// Which positive definite kernel to evaluate; lambda is the Gaussian
/// width and is ignored for the cosine kernel.
struct KernelSpec {
  KernelKind kind = KernelKind::gaussian;
  double lambda = 1.0;

  void validate() const {
    if (kind == KernelKind::gaussian && !(lambda > 0.0))
      throw DomainError("KernelSpec: gaussian width must be positive");
  }
};

/// The matrix (cos(x_i - x_j)). Trigonometry writes it as u u^T + v v^T
/// with u = (cos x_j), v = (sin x_j), so it is PSD of rank at most 2.
Matrix cosine_gram(const std::vector<double>& xs);

/// Entries prod_l cos^2(x_{li} - x_{lj}) - 1/n from k coordinate lists of
/// length n; PSD because each cos^2 factor averages two squared cosine
/// kernels and the product keeps a 1/n rank-one floor.
HermitianView novak_matrix(const std::vector<std::vector<double>>& coordinate_lists,
                           const Tolerances& tol = {});

/// Gaussian kernel Gram matrix exp(-lambda ||x_i - x_j||^2); unit diagonal.
HermitianView gaussian_gram(const PointSet& ps, double lambda = 1.0, const Tolerances& tol = {});

/// Entries prod_l exp(-||x_{li} - x_{lj}||^2) - 1/n over k point sets of
/// common cardinality n (Gaussian width fixed at 1).
HermitianView gaussian_novak_matrix(const std::vector<PointSet>& point_sets,
                                    const Tolerances& tol = {});

/// Gram matrix of the requested kernel on one point set. The cosine
/// kernel needs one-dimensional points.
HermitianView kernel_gram(const KernelSpec& spec, const PointSet& ps, const Tolerances& tol = {});

/// For PSD Grams G_l with constant diagonal ell_l > 0, certifies
/// o_l (G_l o conj(G_l)) >= (1/n) prod_l ell_l^2 E_n.
BoundReport product_kernel_lower_bound(const std::vector<HermitianView>& grams,
                                       const std::vector<double>& ells,
                                       const Tolerances& tol = {});

/// For a real correlation matrix M, certifies that the entrywise power
/// x^{2k} - 1/n preserves positivity: M^{o2k} >= (1/n) E_n.
BoundReport entrywise_power_preserver_check(const HermitianView& M, Index k,
                                            const Tolerances& tol = {});

}  // namespace hb

#endif  // HB_KERNELS_HPP
