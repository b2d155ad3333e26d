#ifndef HB_TYPES_HPP
#define HB_TYPES_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace hb {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;
using IndexSet = std::vector<Index>;

// Error taxonomy. CLI maps DimensionError/IndexError/UsageError/ParseError
// to exit code 2 (bad input), DomainError to exit 2 (precondition violated),
// and a rejected certificate to exit 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// A mathematical precondition failed (e.g. input not PSD). Carries the
// offending smallest eigenvalue when one is available.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg,
                       double lambda_min = std::numeric_limits<double>::quiet_NaN())
      : Error(msg), lambda_min_(lambda_min) {}
  double lambda_min() const { return lambda_min_; }

 private:
  double lambda_min_;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Relative thresholds used throughout: rank truncation, PSD acceptance,
/// and the Hermitian symmetry slack. All must lie strictly in (0, 1).
struct Tolerances {
  double rank_rtol = 1e-9;
  double psd_rtol = 1e-8;
  double hermitian_tol = 1e-10;

  void validate() const {
    auto ok = [](double t) { return t > 0.0 && t < 1.0; };
    if (!ok(rank_rtol) || !ok(psd_rtol) || !ok(hermitian_tol))
      throw UsageError("tolerances must be strictly positive and < 1");
  }
};

/// Evidence about X - Y being PSD: the smallest eigenvalue of the
/// difference, the largest eigenvalue magnitude (the scale), and the
/// acceptance verdict lambda_min >= -tol_used * max(1, scale).
struct LoewnerCertificate {
  double lambda_min = 0.0;
  double scale = 0.0;
  bool accepted = false;
  double tol_used = 0.0;
};

/// Entrywise max-abs norm.
inline double max_abs(const Matrix& M) {
  return M.size() == 0 ? 0.0 : M.cwiseAbs().maxCoeff();
}

inline bool all_finite(const Matrix& M) {
  return M.allFinite();
}

/// True when every imaginary part is negligible at the matrix's own scale.
inline bool nearly_real(const Matrix& M, const Tolerances& tol = {}) {
  if (M.size() == 0) return true;
  return M.imag().cwiseAbs().maxCoeff() <= tol.hermitian_tol * std::max(1.0, max_abs(M));
}

/// A square matrix certified Hermitian at construction:
/// ||M - M*||_max <= hermitian_tol * max(1, ||M||_max).
class HermitianView {
 public:
  explicit HermitianView(Matrix base, const Tolerances& tol = {}) : base_(std::move(base)) {
    if (base_.rows() != base_.cols())
      throw DimensionError("HermitianView: matrix is " + std::to_string(base_.rows()) + "x" +
                           std::to_string(base_.cols()) + ", expected square");
    if (!all_finite(base_)) throw DomainError("HermitianView: non-finite entries");
    const double asym = max_abs(base_ - base_.adjoint());
    const double allowed = tol.hermitian_tol * std::max(1.0, max_abs(base_));
    if (asym > allowed)
      throw DomainError("HermitianView: matrix is not Hermitian within tolerance (defect " +
                        std::to_string(asym) + ")");
  }

  const Matrix& matrix() const { return base_; }
  Index size() const { return base_.rows(); }
  bool certified() const { return true; }

 private:
  Matrix base_;
};

}  // namespace hb

#endif  // HB_TYPES_HPP
