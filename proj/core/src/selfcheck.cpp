#include "hb/selfcheck.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "hb/bounds.hpp"
#include "hb/kernels.hpp"
#include "hb/matcore.hpp"
#include "hb/random.hpp"
#include "hb/witness.hpp"

namespace hb {

namespace {

// Runs one property `trials` times; the check returns an empty string on
// success and a description of the violation otherwise.
PropertyResult run_property(const std::string& name, int trials,
                            const std::function<std::string(int)>& check) {
  PropertyResult result;
  result.name = name;
  result.trials = trials;
  for (int t = 0; t < trials; ++t) {
    std::string verdict;
    try {
      verdict = check(t);
    } catch (const Error& e) {
      verdict = std::string("unexpected error: ") + e.what();
    }
    if (!verdict.empty()) {
      ++result.failures;
      if (result.detail.empty())
        result.detail = "trial " + std::to_string(t) + ": " + verdict;
    }
  }
  return result;
}

std::string check_main_dominance(Rng& rng, Index n_max, bool complex_entries,
                                 const Tolerances& tol) {
  const Index n = rng.pick(2, n_max);
  const GramFactor A(random_gram_factor(rng, n, rng.pick(1, n), complex_entries));
  const GramFactor B(random_gram_factor(rng, n, rng.pick(1, n), complex_entries));
  const BoundReport report = main_lower_bound(A, B, tol);
  if (!report.certificate.accepted)
    return "dominance certificate rejected (lambda_min " +
           std::to_string(report.certificate.lambda_min) + ")";
  return "";
}

std::string check_tightness(Rng& rng, Index n_max, const Tolerances& tol) {
  const Index n = rng.pick(1, std::min<Index>(n_max, 6));
  const Index r = rng.pick(1, n);
  const Index s = rng.pick(1, n);
  const std::uint64_t seed = rng.bits();
  const TightWitness witness = tight_example(n, n, r, s, seed, tol);

  const BoundReport report =
      main_lower_bound(GramFactor(witness.A), GramFactor(witness.B), tol);
  const double slack = tol.psd_rtol * std::max(1.0, report.certificate.scale);
  if (!report.certificate.accepted)
    return "witness certificate rejected (lambda_min " +
           std::to_string(report.certificate.lambda_min) + ")";
  if (std::abs(report.certificate.lambda_min) > slack)
    return "witness margin " + std::to_string(report.certificate.lambda_min) +
           " is not zero within " + std::to_string(slack);

  const Matrix inflated = (1.001 * report.gamma) * (report.d * report.d.adjoint());
  const LoewnerCertificate pushed =
      loewner_geq(HermitianView(report.lhs, tol), HermitianView(inflated, tol), tol);
  if (pushed.accepted)
    return "inflated coefficient " + std::to_string(1.001 * report.gamma) +
           " was not rejected";
  return "";
}

std::string check_rank_one_equality(Rng& rng, Index n_max, bool complex_entries,
                                    const Tolerances& tol) {
  const Index n = rng.pick(1, n_max);
  const GramFactor A(random_gram_factor(rng, n, 1, complex_entries));
  const GramFactor B(random_gram_factor(rng, n, 1, complex_entries));
  const BoundReport report = main_lower_bound(A, B, tol);
  const double gap = (report.lhs - report.bound_matrix).norm();
  const double scale = std::max(1.0, report.lhs.norm());
  if (gap > 1e-10 * scale)
    return "rank-one difference has Frobenius norm " + std::to_string(gap) + " at scale " +
           std::to_string(scale);
  return "";
}

std::string check_trace_identity(Rng& rng, Index n_max) {
  const Index n = rng.pick(1, n_max);
  const Matrix M = random_matrix(rng, n, n);
  const Matrix N = random_matrix(rng, n, n);
  const Vector u = random_matrix(rng, n, 1).col(0);
  const Vector v = random_matrix(rng, n, 1).col(0);
  const double residual = bilinear_trace_residual(M, N, u, v);
  const double allowed =
      1e3 * std::numeric_limits<double>::epsilon() * bilinear_trace_scale(M, N, u, v);
  if (residual > allowed)
    return "trace identity residual " + std::to_string(residual) + " exceeds " +
           std::to_string(allowed);
  return "";
}

std::string check_dnn_counterexample(Rng& rng, const Tolerances& tol) {
  const double a = rng.uniform(0.2, 3.0);
  const double b = rng.uniform(0.2, 3.0);
  // Keep c away from sqrt(ab), where the defect's negative eigenvalue
  // sinks below what a certificate can resolve.
  const double c = rng.uniform(std::sqrt(a * b / 2.0), 0.99 * std::sqrt(a * b));
  const DnnCounterexample example = dnn_counterexample(a, b, c, tol);
  if (example.defect_det >= 0.0)
    return "defect determinant " + std::to_string(example.defect_det) + " is not negative";
  if (example.defect_certificate.accepted)
    return "defect unexpectedly passed its PSD certificate";
  return "";
}

std::string check_kernel_psd(Rng& rng, Index n_max, const Tolerances& tol) {
  const Index n = rng.pick(2, std::min<Index>(n_max, 8));
  const Index k = rng.pick(1, 3);

  std::vector<std::vector<double>> lists(static_cast<std::size_t>(k));
  for (auto& xs : lists) {
    xs.resize(static_cast<std::size_t>(n));
    for (double& x : xs) x = rng.uniform(-3.0, 3.0);
  }
  const LoewnerCertificate novak = certify_psd(novak_matrix(lists, tol), tol);
  if (!novak.accepted)
    return "novak matrix rejected (lambda_min " + std::to_string(novak.lambda_min) + ")";

  std::vector<PointSet> sets;
  std::vector<HermitianView> grams;
  std::vector<double> ells;
  for (Index l = 0; l < k; ++l) {
    RealMatrix coords(n, 2);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < 2; ++j) coords(i, j) = rng.uniform(-1.0, 1.0);
    sets.emplace_back(coords);
    grams.push_back(gaussian_gram(sets.back(), 1.0, tol));
    ells.push_back(1.0);
  }
  const LoewnerCertificate gauss = certify_psd(gaussian_novak_matrix(sets, tol), tol);
  if (!gauss.accepted)
    return "gaussian novak matrix rejected (lambda_min " + std::to_string(gauss.lambda_min) +
           ")";

  const BoundReport product = product_kernel_lower_bound(grams, ells, tol);
  if (!product.certificate.accepted)
    return "product kernel floor rejected (lambda_min " +
           std::to_string(product.certificate.lambda_min) + ")";

  const Matrix C = random_correlation(rng, n, false);
  const BoundReport power =
      entrywise_power_preserver_check(HermitianView(C, tol), rng.pick(1, 3), tol);
  if (!power.certificate.accepted)
    return "entrywise power floor rejected (lambda_min " +
           std::to_string(power.certificate.lambda_min) + ")";
  return "";
}

}  // namespace

SelfcheckReport selfcheck(std::uint64_t seed, Index n_max, int trials, const Tolerances& tol) {
  tol.validate();
  if (n_max < 2) throw UsageError("selfcheck: n_max must be at least 2");
  if (trials < 1) throw UsageError("selfcheck: need at least one trial");

  Rng rng(seed);
  SelfcheckReport report;
  report.properties.push_back(run_property("main dominance", trials, [&](int t) {
    return check_main_dominance(rng, n_max, t % 2 == 0, tol);
  }));
  report.properties.push_back(run_property(
      "tightness with inflation failure", trials,
      [&](int) { return check_tightness(rng, n_max, tol); }));
  report.properties.push_back(run_property("rank-one equality", trials, [&](int t) {
    return check_rank_one_equality(rng, n_max, t % 2 == 0, tol);
  }));
  report.properties.push_back(run_property(
      "bilinear trace identity", trials, [&](int) { return check_trace_identity(rng, n_max); }));
  report.properties.push_back(run_property(
      "doubly non-negative counterexample", trials,
      [&](int) { return check_dnn_counterexample(rng, tol); }));
  report.properties.push_back(run_property(
      "kernel positivity", trials, [&](int) { return check_kernel_psd(rng, n_max, tol); }));
  return report;
}

}  // namespace hb
