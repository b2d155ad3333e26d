#ifndef HB_SELFCHECK_HPP
#define HB_SELFCHECK_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hb/types.hpp"

namespace hb {

struct PropertyResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  std::string detail;  // first failure, empty when clean

  bool passed() const { return failures == 0; }
};

struct SelfcheckReport {
  std::vector<PropertyResult> properties;

  bool all_passed() const {
    for (const PropertyResult& p : properties)
      if (!p.passed()) return false;
    return true;
  }
};

/// Seeded property battery: main dominance, tightness with inflation
/// failure, rank-one equality, the bilinear trace identity, the 3x3
/// doubly-non-negative counterexample, and kernel PSD-ness. Each
/// property runs `trials` instances with sizes up to n_max.
SelfcheckReport selfcheck(std::uint64_t seed, Index n_max, int trials,
                          const Tolerances& tol = {});

}  // namespace hb

#endif  // HB_SELFCHECK_HPP
