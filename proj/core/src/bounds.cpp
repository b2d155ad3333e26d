#include "hb/bounds.hpp"

#include <cmath>
#include <utility>

namespace hb {

namespace {

struct RankProbe {
  Index rank = 0;
  bool ambiguous = false;
};

// Numerical rank plus a flag raised when a singular value sits close
// enough to the cutoff (within a factor of two) that a tiny perturbation
// could change the count, and with it the coefficient 1/rank.
RankProbe probe_rank(const Matrix& M, const Tolerances& tol) {
  if (M.size() == 0 || max_abs(M) == 0.0) return {0, false};
  Eigen::JacobiSVD<Matrix> svd(M);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double cutoff = tol.rank_rtol * sv(0);
  RankProbe probe;
  for (Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++probe.rank;
    if (sv(i) > cutoff / 2.0 && sv(i) < cutoff * 2.0) probe.ambiguous = true;
  }
  return probe;
}

void require_rows_match(const GramFactor& A, const GramFactor& B, const char* who) {
  if (A.rows() != B.rows())
    throw DimensionError(std::string(who) + ": factors have " + std::to_string(A.rows()) +
                         " and " + std::to_string(B.rows()) + " rows, expected equal");
}

// Fill in the rank-one bound gamma d d* and certify lhs >= bound.
void finish_rank_one_report(BoundReport& report, const Tolerances& tol) {
  report.bound_matrix = report.gamma * (report.d * report.d.adjoint());
  report.certificate = loewner_geq(HermitianView(report.lhs, tol),
                                   HermitianView(report.bound_matrix, tol), tol);
}

}  // namespace

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::main:
      return "main";
    case BoundKind::compressed:
      return "compressed";
    case BoundKind::multiplier:
      return "multiplier";
    case BoundKind::multifactor:
      return "multifactor";
    case BoundKind::fiedler:
      return "fiedler";
    case BoundKind::lambda_min:
      return "lambda_min";
    case BoundKind::quad_form:
      return "quad_form";
    case BoundKind::hkv:
      return "hkv";
    case BoundKind::upper:
      return "upper";
    case BoundKind::sqrt:
      return "sqrt";
  }
  return "unknown";
}

BoundReport main_lower_bound(const GramFactor& A, const GramFactor& B, const Tolerances& tol) {
  tol.validate();
  require_rows_match(A, B, "main_lower_bound");
  if (A.is_zero() || B.is_zero())
    throw DomainError("main_lower_bound: zero factor gives no rank-one bound");

  const auto [A0, B0] = pad_to_common_width(A, B);
  const Matrix GA = A0.gram();
  const Matrix GB = B0.gram();
  const RankProbe pa = probe_rank(GA, tol);
  const RankProbe pb = probe_rank(GB, tol);
  const Index r = std::min(pa.rank, pb.rank);

  BoundReport report;
  report.kind = BoundKind::main;
  report.lhs = hadamard(GA, GB);
  report.gamma = 1.0 / static_cast<double>(r);
  report.gamma_alt = 1.0 / static_cast<double>(r + 1);
  report.ambiguous_rank = pa.ambiguous || pb.ambiguous;
  report.d = diag_vector(A0.factor * B0.factor.transpose());
  finish_rank_one_report(report, tol);
  return report;
}

double gamma_rank(const GramFactor& A, const GramFactor& B, const IndexSet& J,
                  const Tolerances& tol) {
  tol.validate();
  require_rows_match(A, B, "gamma_rank");
  const Index ra = numerical_rank(principal_submatrix(A.gram(), J), tol);
  const Index rb = numerical_rank(principal_submatrix(B.gram(), J), tol);
  const Index r = std::min(ra, rb);
  if (r == 0)
    throw DomainError("gamma_rank: a restricted Gram block vanishes on the given index set");
  return 1.0 / static_cast<double>(r);
}

Matrix orthoprojection_P(const GramFactor& A, const GramFactor& B, const Tolerances& tol) {
  tol.validate();
  require_rows_match(A, B, "orthoprojection_P");
  if (A.cols() != B.cols())
    throw DimensionError("orthoprojection_P: factors have " + std::to_string(A.cols()) + " and " +
                         std::to_string(B.cols()) + " columns; pad to a common width first");
  const Index a = A.cols();

  // Orthonormal basis of the dominant singular subspace, as a projector.
  const auto projector_from = [&](const Matrix& basis_source) {
    return (basis_source * basis_source.adjoint()).eval();
  };
  const auto top_columns = [&](const Matrix& M, bool right_vectors) {
    Eigen::JacobiSVD<Matrix> svd(M, right_vectors ? Eigen::ComputeThinV : Eigen::ComputeThinU);
    const Eigen::VectorXd& sv = svd.singularValues();
    Index r = 0;
    if (sv.size() > 0 && sv(0) > 0.0) {
      const double cutoff = tol.rank_rtol * sv(0);
      for (Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++r;
    }
    return right_vectors ? Matrix(svd.matrixV().leftCols(r)) : Matrix(svd.matrixU().leftCols(r));
  };

  // (ker A)-orthocomplement is the span of the top right singular vectors
  // of A; the image of B^T is the span of the top left singular vectors
  // of B^T. Both live in the common a-dimensional column space.
  const Matrix row_space = top_columns(A.factor, true);
  const Matrix image_bt = top_columns(B.factor.transpose(), false);
  const Matrix P = projector_from(row_space) * projector_from(image_bt);
  if (P.rows() != a || P.cols() != a) throw NumericError("orthoprojection_P: shape drift");
  return P;
}

BoundReport compressed_lower_bound(const Matrix& C, const GramFactor& A, const GramFactor& B,
                                   const Tolerances& tol) {
  tol.validate();
  require_rows_match(A, B, "compressed_lower_bound");
  if (C.cols() != A.rows())
    throw DimensionError("compressed_lower_bound: C has " + std::to_string(C.cols()) +
                         " columns but the factors have " + std::to_string(A.rows()) + " rows");
  if (!all_finite(C)) throw DomainError("compressed_lower_bound: non-finite entries in C");

  // Columns of C that matter. A column counts as nonzero when it clears
  // the same relative threshold used for rank decisions.
  const double threshold = tol.rank_rtol * max_abs(C);
  IndexSet J;
  for (Index j = 0; j < C.cols(); ++j)
    if (C.col(j).cwiseAbs().maxCoeff() > threshold) J.push_back(j);
  if (J.empty()) throw DomainError("compressed_lower_bound: C has no nonzero columns");

  const auto [A0, B0] = pad_to_common_width(A, B);
  const Matrix GA = A0.gram();
  const Matrix GB = B0.gram();
  const RankProbe pa = probe_rank(principal_submatrix(GA, J), tol);
  const RankProbe pb = probe_rank(principal_submatrix(GB, J), tol);
  const Index r = std::min(pa.rank, pb.rank);
  if (r == 0)
    throw DomainError(
        "compressed_lower_bound: a restricted Gram block vanishes on the selected columns");

  const Vector d = diag_vector(A0.factor * B0.factor.transpose());
  BoundReport report;
  report.kind = BoundKind::compressed;
  report.lhs = C * hadamard(GA, GB) * C.adjoint();
  report.gamma = 1.0 / static_cast<double>(r);
  report.gamma_alt = 1.0 / static_cast<double>(r + 1);
  report.ambiguous_rank = pa.ambiguous || pb.ambiguous;
  report.d = C * d;
  finish_rank_one_report(report, tol);
  return report;
}

BoundReport multiplier_lower_bound(const std::vector<HermitianView>& Ms,
                                   const std::vector<Vector>& us, const std::vector<Vector>& ys,
                                   const Tolerances& tol) {
  tol.validate();
  if (Ms.empty()) throw UsageError("multiplier_lower_bound: need at least one factor");
  if (us.size() != Ms.size() || ys.size() != Ms.size())
    throw DimensionError("multiplier_lower_bound: need one u and one y per factor (got " +
                         std::to_string(Ms.size()) + " factors, " + std::to_string(us.size()) +
                         " u's, " + std::to_string(ys.size()) + " y's)");

  const Index n = Ms.front().size();
  for (std::size_t j = 0; j < Ms.size(); ++j) {
    if (Ms[j].size() != n)
      throw DimensionError("multiplier_lower_bound: factor " + std::to_string(j + 1) + " is " +
                           std::to_string(Ms[j].size()) + "x" + std::to_string(Ms[j].size()) +
                           ", expected " + std::to_string(n) + "x" + std::to_string(n));
    if (us[j].size() != n || ys[j].size() != n)
      throw DimensionError("multiplier_lower_bound: multiplier " + std::to_string(j + 1) +
                           " has the wrong length");
    const LoewnerCertificate psd = certify_psd(Ms[j], tol);
    if (!psd.accepted)
      throw DomainError(
          "multiplier_lower_bound: factor " + std::to_string(j + 1) + " is not PSD",
          psd.lambda_min);
  }

  // w collects every multiplier entrywise; its support J(w) is exact.
  Vector w = Vector::Ones(n);
  Matrix product = Matrix::Ones(n, n);
  Matrix lhs = Matrix::Ones(n, n);
  for (std::size_t j = 0; j < Ms.size(); ++j) {
    w = w.cwiseProduct(us[j]).cwiseProduct(ys[j]);
    product = hadamard(product, Ms[j].matrix());
    const Matrix scaled = us[j].asDiagonal() * Ms[j].matrix() * us[j].conjugate().asDiagonal();
    const Matrix conj_scaled =
        ys[j].asDiagonal() * Ms[j].matrix().conjugate() * ys[j].conjugate().asDiagonal();
    lhs = hadamard(lhs, hadamard(scaled, conj_scaled));
  }

  IndexSet Jw;
  for (Index i = 0; i < n; ++i)
    if (w(i) != Complex(0.0, 0.0)) Jw.push_back(i);
  if (Jw.empty())
    throw DomainError("multiplier_lower_bound: the combined multiplier w vanishes identically");

  BoundReport report;
  report.kind = BoundKind::multiplier;
  report.lhs = lhs;

  const Matrix restricted = principal_submatrix(product, Jw);
  if (max_abs(restricted) == 0.0) {
    // Nothing to bound against: the restricted Hadamard product is zero,
    // so the zero matrix is already the sharpest rank-one lower bound.
    report.gamma = 0.0;
    report.d = Vector::Zero(n);
    report.note = "restricted Hadamard product vanishes; trivial zero bound";
    finish_rank_one_report(report, tol);
    return report;
  }

  const RankProbe probe = probe_rank(restricted, tol);
  Vector z = w;
  for (const HermitianView& M : Ms) z = z.cwiseProduct(diag_vector(M.matrix()));

  report.gamma = 1.0 / static_cast<double>(probe.rank);
  report.gamma_alt = 1.0 / static_cast<double>(probe.rank + 1);
  report.ambiguous_rank = probe.ambiguous;
  report.d = z;
  finish_rank_one_report(report, tol);
  return report;
}

BoundReport multifactor_lower_bound(const std::vector<GramFactor>& factors, Index l,
                                    const Tolerances& tol) {
  tol.validate();
  if (l < 1 || static_cast<Index>(factors.size()) != 2 * l)
    throw UsageError("multifactor_lower_bound: need exactly 2*l factors (got " +
                     std::to_string(factors.size()) + " for l = " + std::to_string(l) + ")");

  const Index n = factors.front().rows();
  for (const GramFactor& F : factors) {
    if (F.rows() != F.cols())
      throw DimensionError("multifactor_lower_bound: factors must be square");
    if (F.rows() != n)
      throw DimensionError("multifactor_lower_bound: factors must share one size");
    if (F.is_zero()) throw DomainError("multifactor_lower_bound: zero factor");
  }

  Matrix lhs = Matrix::Ones(n, n);
  std::vector<RankProbe> probes;
  probes.reserve(factors.size());
  for (const GramFactor& F : factors) {
    const Matrix G = F.gram();
    probes.push_back(probe_rank(G, tol));
    lhs = hadamard(lhs, G);
  }

  double gamma = 1.0;
  double gamma_alt = 1.0;
  bool ambiguous = false;
  Vector w = Vector::Ones(n);
  for (Index j = 0; j < l; ++j) {
    const Index r = std::min(probes[j].rank, probes[j + l].rank);
    const bool pair_ambiguous = probes[j].ambiguous || probes[j + l].ambiguous;
    gamma /= static_cast<double>(r);
    gamma_alt /= static_cast<double>(pair_ambiguous ? r + 1 : r);
    ambiguous = ambiguous || pair_ambiguous;
    w = w.cwiseProduct(diag_vector(factors[j].factor * factors[j + l].factor.transpose()));
  }

  BoundReport report;
  report.kind = BoundKind::multifactor;
  report.lhs = lhs;
  report.gamma = gamma;
  report.gamma_alt = gamma_alt;
  report.ambiguous_rank = ambiguous;
  report.d = w;
  finish_rank_one_report(report, tol);
  return report;
}

ClassicalBounds classical_bounds(const HermitianView& M, const HermitianView& N,
                                 const Tolerances& tol) {
  tol.validate();
  if (M.size() != N.size())
    throw DimensionError("classical_bounds: inputs are " + std::to_string(M.size()) + "x" +
                         std::to_string(M.size()) + " and " + std::to_string(N.size()) + "x" +
                         std::to_string(N.size()));

  ClassicalBounds out;
  const Index n = M.size();
  const LoewnerCertificate m_psd = certify_psd(M, tol);
  const EigenDecomposition en = hermitian_eigen(N);
  const double n_min = en.eigenvalues(0);

  // (i) M o N >= lambda_min(N) (M o Id), stated for real symmetric data.
  if (!m_psd.accepted) {
    out.omitted.push_back("lambda_min bound omitted: M is not PSD (lambda_min " +
                          std::to_string(m_psd.lambda_min) + ")");
  } else if (!nearly_real(M.matrix(), tol) || !nearly_real(N.matrix(), tol)) {
    out.omitted.push_back("lambda_min bound omitted: stated for real matrices only");
  } else {
    BoundReport rep;
    rep.kind = BoundKind::lambda_min;
    rep.lhs = hadamard(M.matrix(), N.matrix());
    rep.gamma = n_min;
    rep.bound_matrix = n_min * Matrix(diag_vector(M.matrix()).asDiagonal());
    rep.certificate =
        loewner_geq(HermitianView(rep.lhs, tol), HermitianView(rep.bound_matrix, tol), tol);
    out.reports.push_back(std::move(rep));
  }

  // (ii) M o N >= M / (e^T N^{-1} e), needs N positive definite.
  if (!m_psd.accepted) {
    out.omitted.push_back("quad_form bound omitted: M is not PSD");
  } else if (n_min <= 0.0) {
    out.omitted.push_back("quad_form bound omitted: N is not positive definite (lambda_min " +
                          std::to_string(n_min) + ")");
  } else {
    const Vector e = Vector::Ones(n);
    const Vector coeffs = en.eigenvectors.adjoint() * e;
    const Vector solved =
        en.eigenvectors * coeffs.cwiseQuotient(en.eigenvalues.cast<Complex>());
    const double quad = e.dot(solved).real();
    BoundReport rep;
    rep.kind = BoundKind::quad_form;
    rep.lhs = hadamard(M.matrix(), N.matrix());
    rep.gamma = 1.0 / quad;
    rep.bound_matrix = rep.gamma * M.matrix();
    rep.certificate =
        loewner_geq(HermitianView(rep.lhs, tol), HermitianView(rep.bound_matrix, tol), tol);
    out.reports.push_back(std::move(rep));
  }

  // (iii) Fiedler: M o M^{-1} >= Id for invertible PSD M.
  const EigenDecomposition em = hermitian_eigen(M);
  if (!m_psd.accepted) {
    out.omitted.push_back("fiedler bound omitted: M is not PSD");
  } else if (em.eigenvalues(0) <= 0.0 || numerical_rank(M.matrix(), tol) < n) {
    out.omitted.push_back("fiedler bound omitted: M is singular");
  } else {
    const Matrix inverse =
        em.eigenvectors *
        em.eigenvalues.cwiseInverse().cast<Complex>().asDiagonal() * em.eigenvectors.adjoint();
    BoundReport rep;
    rep.kind = BoundKind::fiedler;
    rep.lhs = hadamard(M.matrix(), inverse);
    rep.gamma = 1.0;
    rep.bound_matrix = Matrix::Identity(n, n);
    rep.certificate =
        loewner_geq(HermitianView(rep.lhs, tol), HermitianView(rep.bound_matrix, tol), tol);
    out.reports.push_back(std::move(rep));
  }

  return out;
}

BoundReport hkv_equal_gram_bound(const Matrix& A, const Matrix& B, const Tolerances& tol) {
  tol.validate();
  if (A.rows() != B.rows())
    throw DimensionError("hkv_equal_gram_bound: factors have " + std::to_string(A.rows()) +
                         " and " + std::to_string(B.rows()) + " rows, expected equal");
  if (!all_finite(A) || !all_finite(B))
    throw DomainError("hkv_equal_gram_bound: non-finite entries");
  if (!nearly_real(A, tol) || !nearly_real(B, tol))
    throw DomainError("hkv_equal_gram_bound: factors must be real");
  if (max_abs(A) == 0.0 || max_abs(B) == 0.0)
    throw DomainError("hkv_equal_gram_bound: zero factor");

  const auto [A0, B0] = pad_to_common_width(GramFactor(A), GramFactor(B));
  const Matrix GA = A0.gram();
  const Matrix GB = B0.gram();
  const double defect = max_abs(GA - GB);
  const double allowed = tol.hermitian_tol * std::max(1.0, max_abs(GA));
  if (defect > allowed)
    throw DomainError("hkv_equal_gram_bound: A A^T and B B^T differ beyond tolerance (defect " +
                      std::to_string(defect) + ")");

  const RankProbe probe = probe_rank(GA, tol);
  BoundReport report;
  report.kind = BoundKind::hkv;
  report.lhs = hadamard(GA, GB);
  report.gamma = 1.0 / static_cast<double>(probe.rank);
  report.gamma_alt = 1.0 / static_cast<double>(probe.rank + 1);
  report.ambiguous_rank = probe.ambiguous;
  report.d = diag_vector(A0.factor * B0.factor.transpose());
  finish_rank_one_report(report, tol);
  return report;
}

BoundReport upper_bound(const HermitianView& M, const HermitianView& N, const Tolerances& tol) {
  tol.validate();
  if (M.size() != N.size())
    throw DimensionError("upper_bound: inputs are " + std::to_string(M.size()) + "x" +
                         std::to_string(M.size()) + " and " + std::to_string(N.size()) + "x" +
                         std::to_string(N.size()));

  const Index n = M.size();
  const RealVector dm = diag_vector(M.matrix()).real();
  const RealVector dn = diag_vector(N.matrix()).real();

  // Joint support of the diagonals; rows outside it vanish for PSD input.
  IndexSet J;
  for (Index j = 0; j < n; ++j)
    if (dm(j) > 0.0 && dn(j) > 0.0) J.push_back(j);

  double c = 0.0;
  if (!J.empty()) {
    const Index k = static_cast<Index>(J.size());
    Matrix CM(k, k), CN(k, k);
    for (Index p = 0; p < k; ++p)
      for (Index q = 0; q < k; ++q) {
        CM(p, q) = M.matrix()(J[p], J[q]) / std::sqrt(dm(J[p]) * dm(J[q]));
        CN(p, q) = N.matrix()(J[p], J[q]) / std::sqrt(dn(J[p]) * dn(J[q]));
      }
    for (Index q = 0; q < k; ++q) c = std::max(c, CM.col(q).norm() * CN.col(q).norm());
  }

  BoundReport report;
  report.kind = BoundKind::upper;
  report.lhs = hadamard(M.matrix(), N.matrix());
  report.gamma = c;
  report.bound_matrix = (c * dm.cwiseProduct(dn)).cast<Complex>().asDiagonal();
  report.certificate =
      loewner_geq(HermitianView(report.bound_matrix, tol), HermitianView(report.lhs, tol), tol);
  return report;
}

BoundReport sqrt_bound(const HermitianView& M, const HermitianView& N, const Tolerances& tol) {
  tol.validate();
  if (M.size() != N.size())
    throw DimensionError("sqrt_bound: inputs are " + std::to_string(M.size()) + "x" +
                         std::to_string(M.size()) + " and " + std::to_string(N.size()) + "x" +
                         std::to_string(N.size()));
  if (max_abs(M.matrix()) == 0.0 || max_abs(N.matrix()) == 0.0)
    throw DomainError("sqrt_bound: zero input gives no rank-one bound");

  const HermitianView root_m = principal_sqrt(M, tol);
  const HermitianView root_n = principal_sqrt(N, tol);
  BoundReport report = main_lower_bound(GramFactor(root_m.matrix()), GramFactor(root_n.matrix()), tol);
  report.kind = BoundKind::sqrt;
  // Certify against the given matrices, not their reconstructions from
  // the square roots; those agree only up to roundoff.
  report.lhs = hadamard(M.matrix(), N.matrix());
  report.certificate = loewner_geq(HermitianView(report.lhs, tol),
                                   HermitianView(report.bound_matrix, tol), tol);
  return report;
}

Matrix rank_one_sum_exact(const GramFactor& A, const GramFactor& B) {
  require_rows_match(A, B, "rank_one_sum_exact");
  const Index n = A.rows();
  Matrix sum = Matrix::Zero(n, n);
  for (Index j = 0; j < A.cols(); ++j)
    for (Index k = 0; k < B.cols(); ++k) {
      const Vector pair = A.factor.col(j).cwiseProduct(B.factor.col(k));
      sum += pair * pair.adjoint();
    }
  return sum;
}

}  // namespace hb
