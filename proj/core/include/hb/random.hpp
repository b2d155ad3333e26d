#ifndef HB_RANDOM_HPP
#define HB_RANDOM_HPP

#include <cstdint>
#include <random>

#include "hb/types.hpp"

namespace hb {

/// Seeded generator with hand-rolled variate transforms. The standard
/// distribution classes are implementation-defined, so drawing through
/// them would make witnesses differ between standard libraries; the
/// mt19937_64 stream itself is pinned by the standard.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }

  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller; the paired variate is cached.
  double normal();

  /// Standard complex normal (independent real and imaginary parts).
  Complex complex_normal() { return {normal(), normal()}; }

  /// Uniform integer in [lo, hi], both ends included.
  Index pick(Index lo, Index hi);

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Dense matrix with independent standard (complex) normal entries.
Matrix random_matrix(Rng& rng, Index rows, Index cols, bool complex_entries = true);

/// n x rank factor with normal entries; its Gram matrix has the given
/// rank with probability one.
Matrix random_gram_factor(Rng& rng, Index n, Index rank, bool complex_entries = true);

/// PSD matrix of the given rank, built as F F* from a random factor.
Matrix random_psd(Rng& rng, Index n, Index rank, bool complex_entries = true);

/// Full-rank PSD matrix rescaled to exact unit diagonal.
Matrix random_correlation(Rng& rng, Index n, bool complex_entries = false);

/// Haar-distributed real orthogonal matrix (QR with sign correction).
RealMatrix random_orthogonal(Rng& rng, Index n);

/// Symmetric matrix (G + G^T)/2 with normal G; generally indefinite.
RealMatrix random_real_symmetric(Rng& rng, Index n);

}  // namespace hb

#endif  // HB_RANDOM_HPP
