#pragma once

// Hurwitz class numbers H(D) by reduced-form enumeration.

#include "etaq/series.hpp"

#include <cstdint>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

namespace etaq {

/// H(D) for a single D >= 0: weighted count of reduced forms (a, b, c) with b^2 - 4ac = -D.
/// H(0) = -1/12, and H(D) = 0 when -D is not a discriminant.
Rational hurwitz(std::int64_t D);

/// Memoized H(D). A dense table filled by `tabulate` answers D up to its limit; other
/// values are enumerated on demand. Safe for concurrent use; values never depend on
/// fill order.
class HurwitzCache {
 public:
  HurwitzCache() = default;
  HurwitzCache(const HurwitzCache&) = delete;
  HurwitzCache& operator=(const HurwitzCache&) = delete;

  /// Fills the dense table for 0 <= D <= limit by one sweep over all reduced forms.
  void tabulate(std::int64_t limit);
  std::int64_t tabulated_limit() const;

  Rational operator()(std::int64_t D) const;

  /// H at a rational argument num/den: zero unless it is a nonnegative integer.
  Rational at_ratio(std::int64_t num, std::int64_t den) const;

 private:
  mutable std::shared_mutex mutex_;
  // 6 H(D) for D >= 1 (weights 1, 1/2, 1/3 become 6, 3, 2).
  std::vector<std::int32_t> sixfold_;
  mutable std::unordered_map<std::int64_t, Rational> sparse_;
};

/// S_D(f) = sum_{d | f} mu(d) chi_{-D}(d) sigma(f/d); -D must be a fundamental discriminant.
Integer s_d_factor(std::int64_t D, std::int64_t f);

/// sum_{D=0}^{T} H(D) q^D.
CoeffSeries hurwitz_series(std::int64_t truncation, const HurwitzCache& cache);
CoeffSeries hurwitz_series(std::int64_t truncation);

/// Coefficients H(l1 l2 n) - l2 H(l1 n / l2); needs gcd(l1, l2) = 1 and l2 squarefree.
CoeffSeries hurwitz_sieved(std::int64_t l1, std::int64_t l2, std::int64_t truncation, const HurwitzCache& cache);
CoeffSeries hurwitz_sieved(std::int64_t l1, std::int64_t l2, std::int64_t truncation);

}  // namespace etaq
