#include "hb/random.hpp"

#include <cmath>
#include <numbers>

namespace hb {

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // u1 is shifted into (0, 1] so the logarithm stays finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

Index Rng::pick(Index lo, Index hi) {
  if (hi < lo) throw UsageError("Rng::pick: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<Index>(bits() % span);
}

Matrix random_matrix(Rng& rng, Index rows, Index cols, bool complex_entries) {
  Matrix M(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j)
      M(i, j) = complex_entries ? rng.complex_normal() : Complex(rng.normal(), 0.0);
  return M;
}

Matrix random_gram_factor(Rng& rng, Index n, Index rank, bool complex_entries) {
  if (rank < 1 || rank > n)
    throw UsageError("random_gram_factor: rank must lie in [1, n], got " + std::to_string(rank) +
                     " for n = " + std::to_string(n));
  return random_matrix(rng, n, rank, complex_entries);
}

Matrix random_psd(Rng& rng, Index n, Index rank, bool complex_entries) {
  const Matrix F = random_gram_factor(rng, n, rank, complex_entries);
  return F * F.adjoint();
}

Matrix random_correlation(Rng& rng, Index n, bool complex_entries) {
  const Matrix M = random_psd(rng, n, n, complex_entries);
  RealVector scales(n);
  for (Index i = 0; i < n; ++i) scales(i) = std::sqrt(M(i, i).real());
  Matrix C(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) C(i, j) = M(i, j) / (scales(i) * scales(j));
  // Rescaling leaves the diagonal equal to one only up to roundoff; pin it.
  for (Index i = 0; i < n; ++i) C(i, i) = Complex(1.0, 0.0);
  return C;
}

RealMatrix random_orthogonal(Rng& rng, Index n) {
  RealMatrix G(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) G(i, j) = rng.normal();
  const Eigen::HouseholderQR<RealMatrix> qr(G);
  RealMatrix Q = qr.householderQ();
  const RealMatrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fixing the signs against R's diagonal makes the distribution Haar.
  for (Index j = 0; j < n; ++j)
    if (R(j, j) < 0.0) Q.col(j) = -Q.col(j);
  return Q;
}

RealMatrix random_real_symmetric(Rng& rng, Index n) {
  RealMatrix G(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) G(i, j) = rng.normal();
  return (G + G.transpose()) / 2.0;
}

}  // namespace hb
