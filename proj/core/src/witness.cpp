#include "hb/witness.hpp"

#include <cmath>
#include <limits>

#include "hb/matcore.hpp"
#include "hb/random.hpp"

namespace hb {

TightWitness tight_example(Index n, Index a, Index r, Index s, std::uint64_t seed,
                           const Tolerances& tol) {
  tol.validate();
  if (n < 1 || a < 1) throw UsageError("tight_example: need n >= 1 and a >= 1");
  const Index cap = std::min(n, a);
  if (r < 1 || r > cap || s < 1 || s > cap)
    throw UsageError("tight_example: block sizes must lie in [1, min(n, a)] = [1, " +
                     std::to_string(cap) + "], got r = " + std::to_string(r) +
                     ", s = " + std::to_string(s));

  Rng rng(seed);
  Matrix A = Matrix::Zero(n, a);
  Matrix B = Matrix::Zero(n, a);
  for (Index i = 0; i < r; ++i) A(i, i) = Complex(rng.uniform(0.5, 1.5), 0.0);
  for (Index i = 0; i < s; ++i) B(i, i) = Complex(rng.uniform(0.5, 1.5), 0.0);

  TightWitness witness;
  witness.A = A;
  witness.B = B;
  witness.r = r;
  witness.s = s;
  const BoundReport report = main_lower_bound(GramFactor(A), GramFactor(B), tol);
  witness.achieved_margin = report.certificate.lambda_min;
  return witness;
}

DnnCounterexample dnn_counterexample(double a, double b, double c, const Tolerances& tol) {
  tol.validate();
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c))
    throw DomainError("dnn_counterexample: parameters must be finite");
  if (!(a > 0.0) || !(b > 0.0))
    throw DomainError("dnn_counterexample: need a > 0 and b > 0");
  // The region c in [sqrt(ab/2), sqrt(ab)) is checked through its
  // equivalent algebraic form so the forced entry d = 2c^2/b - a is
  // non-negative for exactly the parameters we accept.
  const double d = 2.0 * c * c / b - a;
  if (!(c > 0.0) || d < 0.0 || c * c >= a * b)
    throw DomainError("dnn_counterexample: need c in [sqrt(ab/2), sqrt(ab)) = [" +
                      std::to_string(std::sqrt(a * b / 2.0)) + ", " +
                      std::to_string(std::sqrt(a * b)) + "), got c = " + std::to_string(c));

  DnnCounterexample out;
  out.a = a;
  out.b = b;
  out.c = c;
  out.d = d;

  RealMatrix A(3, 3);
  A << a, c, d, c, b, c, d, c, a;
  out.matrix = A.cast<Complex>();

  // Doubly non-negative: entries are non-negative by the region check;
  // positivity holds because (1, -2c/b, 1) spans the kernel and every
  // principal minor is non-negative. Certify rather than trust.
  const LoewnerCertificate psd = certify_psd(HermitianView(out.matrix, tol), tol);
  if (!psd.accepted)
    throw NumericError("dnn_counterexample: the matrix failed its PSD certificate (lambda_min " +
                       std::to_string(psd.lambda_min) + ")");

  RealVector root_diag(3);
  root_diag << std::sqrt(a), std::sqrt(b), std::sqrt(a);
  const RealMatrix defect = A - (root_diag * root_diag.transpose()) / 3.0;
  out.defect = defect.cast<Complex>();
  out.defect_det = defect.determinant();

  const double closed_form =
      (-2.0 / 3.0) * (a - d) * std::pow(std::sqrt(a * b) - c, 2);
  const double entry_scale = std::max({1.0, std::abs(a), std::abs(b), std::abs(c)});
  const double det_scale = std::max(1.0, entry_scale * entry_scale * entry_scale);
  const double allowed = 1e4 * std::numeric_limits<double>::epsilon() * det_scale;
  if (std::abs(out.defect_det - closed_form) > allowed)
    throw NumericError("dnn_counterexample: defect determinant " +
                       std::to_string(out.defect_det) + " disagrees with the closed form " +
                       std::to_string(closed_form));

  out.defect_certificate = certify_psd(HermitianView(out.defect, tol), tol);
  return out;
}

std::pair<GramFactor, GramFactor> dimension_embedding(const GramFactor& A, const GramFactor& B,
                                                      Index m) {
  if (A.rows() != B.rows())
    throw DimensionError("dimension_embedding: factors have " + std::to_string(A.rows()) +
                         " and " + std::to_string(B.rows()) + " rows, expected equal");
  const Index n = A.rows();
  if (m < n)
    throw UsageError("dimension_embedding: target dimension " + std::to_string(m) +
                     " is below the current " + std::to_string(n));

  Matrix A2 = Matrix::Zero(m, A.cols());
  Matrix B2 = Matrix::Zero(m, B.cols());
  A2.topRows(n) = A.factor;
  B2.topRows(n) = B.factor;
  return {GramFactor(std::move(A2)), GramFactor(std::move(B2))};
}

}  // namespace hb
