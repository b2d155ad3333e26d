#include "hb/kernels.hpp"

#include <cmath>

#include "hb/matcore.hpp"

namespace hb {

namespace {

// Rank-one floor report: lhs >= gamma e e*.
BoundReport all_ones_floor(Matrix lhs, double gamma, std::string note, const Tolerances& tol) {
  BoundReport report;
  report.kind = BoundKind::main;
  report.lhs = std::move(lhs);
  report.gamma = gamma;
  report.d = Vector::Ones(report.lhs.rows());
  report.bound_matrix = gamma * Matrix::Ones(report.lhs.rows(), report.lhs.cols());
  report.note = std::move(note);
  report.certificate = loewner_geq(HermitianView(report.lhs, tol),
                                   HermitianView(report.bound_matrix, tol), tol);
  return report;
}

}  // namespace

Matrix cosine_gram(const std::vector<double>& xs) {
  if (xs.empty()) throw UsageError("cosine_gram: need at least one point");
  const Index n = static_cast<Index>(xs.size());
  Matrix G(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) G(i, j) = Complex(std::cos(xs[i] - xs[j]), 0.0);
  return G;
}

HermitianView novak_matrix(const std::vector<std::vector<double>>& coordinate_lists,
                           const Tolerances& tol) {
  if (coordinate_lists.empty()) throw UsageError("novak_matrix: need at least one coordinate list");
  const std::size_t n = coordinate_lists.front().size();
  if (n == 0) throw UsageError("novak_matrix: coordinate lists must be nonempty");
  for (const auto& xs : coordinate_lists)
    if (xs.size() != n)
      throw DimensionError("novak_matrix: coordinate lists have mismatched lengths (" +
                           std::to_string(xs.size()) + " vs " + std::to_string(n) + ")");

  const Index size = static_cast<Index>(n);
  Matrix M(size, size);
  for (Index i = 0; i < size; ++i)
    for (Index j = 0; j < size; ++j) {
      double prod = 1.0;
      for (const auto& xs : coordinate_lists) {
        const double c = std::cos(xs[i] - xs[j]);
        prod *= c * c;
      }
      M(i, j) = Complex(prod - 1.0 / static_cast<double>(n), 0.0);
    }
  return HermitianView(std::move(M), tol);
}

HermitianView gaussian_gram(const PointSet& ps, double lambda, const Tolerances& tol) {
  if (!(lambda > 0.0)) throw DomainError("gaussian_gram: width lambda must be positive");
  const Index n = ps.size();
  Matrix G(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const double dist2 = (ps.coords().row(i) - ps.coords().row(j)).squaredNorm();
      G(i, j) = Complex(std::exp(-lambda * dist2), 0.0);
    }
  return HermitianView(std::move(G), tol);
}

HermitianView gaussian_novak_matrix(const std::vector<PointSet>& point_sets,
                                    const Tolerances& tol) {
  if (point_sets.empty())
    throw UsageError("gaussian_novak_matrix: need at least one point set");
  const Index n = point_sets.front().size();
  for (const PointSet& ps : point_sets)
    if (ps.size() != n)
      throw DimensionError("gaussian_novak_matrix: point sets have " + std::to_string(n) +
                           " and " + std::to_string(ps.size()) + " points, expected equal");

  Matrix M(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      double prod = 1.0;
      for (const PointSet& ps : point_sets) {
        const double dist2 = (ps.coords().row(i) - ps.coords().row(j)).squaredNorm();
        prod *= std::exp(-dist2);
      }
      M(i, j) = Complex(prod - 1.0 / static_cast<double>(n), 0.0);
    }
  return HermitianView(std::move(M), tol);
}

HermitianView kernel_gram(const KernelSpec& spec, const PointSet& ps, const Tolerances& tol) {
  spec.validate();
  if (spec.kind == KernelKind::gaussian) return gaussian_gram(ps, spec.lambda, tol);
  if (ps.dim() != 1)
    throw DimensionError("kernel_gram: the cosine kernel needs one-dimensional points, got dim " +
                         std::to_string(ps.dim()));
  std::vector<double> xs(static_cast<std::size_t>(ps.size()));
  for (Index i = 0; i < ps.size(); ++i) xs[static_cast<std::size_t>(i)] = ps.coords()(i, 0);
  return HermitianView(cosine_gram(xs), tol);
}

BoundReport product_kernel_lower_bound(const std::vector<HermitianView>& grams,
                                       const std::vector<double>& ells, const Tolerances& tol) {
  tol.validate();
  if (grams.empty()) throw UsageError("product_kernel_lower_bound: need at least one Gram matrix");
  if (ells.size() != grams.size())
    throw DimensionError("product_kernel_lower_bound: got " + std::to_string(grams.size()) +
                         " Gram matrices but " + std::to_string(ells.size()) +
                         " diagonal values");

  const Index n = grams.front().size();
  double coefficient = 1.0 / static_cast<double>(n);
  Matrix lhs = Matrix::Ones(n, n);
  for (std::size_t l = 0; l < grams.size(); ++l) {
    const HermitianView& G = grams[l];
    if (G.size() != n)
      throw DimensionError("product_kernel_lower_bound: Gram " + std::to_string(l + 1) + " is " +
                           std::to_string(G.size()) + "x" + std::to_string(G.size()) +
                           ", expected " + std::to_string(n) + "x" + std::to_string(n));
    if (!(ells[l] > 0.0))
      throw DomainError("product_kernel_lower_bound: diagonal value " + std::to_string(l + 1) +
                        " must be positive");
    const double slack = tol.psd_rtol * std::max(1.0, ells[l]);
    for (Index i = 0; i < n; ++i)
      if (std::abs(G.matrix()(i, i).real() - ells[l]) > slack ||
          std::abs(G.matrix()(i, i).imag()) > slack)
        throw DomainError("product_kernel_lower_bound: Gram " + std::to_string(l + 1) +
                          " does not have constant diagonal " + std::to_string(ells[l]));
    const LoewnerCertificate psd = certify_psd(G, tol);
    if (!psd.accepted)
      throw DomainError("product_kernel_lower_bound: Gram " + std::to_string(l + 1) +
                        " is not PSD", psd.lambda_min);
    lhs = hadamard(lhs, hadamard(G.matrix(), G.matrix().conjugate()));
    coefficient *= ells[l] * ells[l];
  }

  return all_ones_floor(std::move(lhs), coefficient, "product kernel floor", tol);
}

BoundReport entrywise_power_preserver_check(const HermitianView& M, Index k,
                                            const Tolerances& tol) {
  tol.validate();
  if (k < 1) throw UsageError("entrywise_power_preserver_check: power index k must be >= 1");
  if (!nearly_real(M.matrix(), tol))
    throw DomainError("entrywise_power_preserver_check: correlation matrix must be real");
  const Index n = M.size();
  for (Index i = 0; i < n; ++i)
    if (std::abs(M.matrix()(i, i).real() - 1.0) > tol.psd_rtol)
      throw DomainError("entrywise_power_preserver_check: diagonal entry " + std::to_string(i + 1) +
                        " is not 1; input is not a correlation matrix");
  const LoewnerCertificate psd = certify_psd(M, tol);
  if (!psd.accepted)
    throw DomainError("entrywise_power_preserver_check: input is not PSD", psd.lambda_min);

  Matrix powered(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      powered(i, j) =
          Complex(std::pow(M.matrix()(i, j).real(), static_cast<double>(2 * k)), 0.0);

  return all_ones_floor(std::move(powered), 1.0 / static_cast<double>(n),
                        "entrywise power preserver", tol);
}

}  // namespace hb
