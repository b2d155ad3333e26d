#ifndef HB_WITNESS_HPP
#define HB_WITNESS_HPP

#include <cstdint>
#include <utility>

#include "hb/bounds.hpp"
#include "hb/factor.hpp"
#include "hb/types.hpp"

namespace hb {

/// Factor pair on which the rank-one lower bound is attained with zero
/// margin, so the coefficient 1/min(r,s) cannot be inflated.
struct TightWitness {
  Matrix A;  // n x a, nonsingular diagonal r-block then zeros
  Matrix B;  // n x a, nonsingular diagonal s-block then zeros
  Index r = 0;
  Index s = 0;
  double achieved_margin = 0.0;  // lambda_min of lhs - gamma d d*
};

/// Diagonal-block factors with seeded entries in [0.5, 1.5]. The main
/// bound's certificate accepts with |margin| <= psd_rtol * scale, while
/// the same bound with gamma inflated by 1.001 must fail.
TightWitness tight_example(Index n, Index a, Index r, Index s, std::uint64_t seed,
                           const Tolerances& tol = {});

/// A 3x3 doubly non-negative matrix violating the rank-one floor
/// A >= (1/3) d_A^{o1/2} (d_A^{o1/2})^T that holds for Hadamard squares:
/// the defect has strictly negative determinant.
struct DnnCounterexample {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;           // 2c^2/b - a, the forced corner entry
  Matrix matrix;            // [[a,c,d],[c,b,c],[d,c,a]]
  Matrix defect;            // matrix - (1/3) sqrt-diag outer product
  double defect_det = 0.0;  // numeric determinant, equals (-2/3)(a-d)(sqrt(ab)-c)^2
  LoewnerCertificate defect_certificate;  // rejected except vanishingly close to c = sqrt(ab)
};

/// Valid region: a, b > 0 and c in [sqrt(ab/2), sqrt(ab)). Checks double
/// non-negativity, matches the determinant against its closed form, and
/// certifies (non-)positivity of the defect.
DnnCounterexample dnn_counterexample(double a, double b, double c, const Tolerances& tol = {});

/// Appends m - n zero rows to both factors. Ranks, hence the coefficient
/// gamma, are exactly unchanged; d gains trailing zeros.
std::pair<GramFactor, GramFactor> dimension_embedding(const GramFactor& A, const GramFactor& B,
                                                      Index m);

}  // namespace hb

#endif  // HB_WITNESS_HPP
