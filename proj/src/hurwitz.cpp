#include "etaq/hurwitz.hpp"

#include "etaq/arithmetic.hpp"
#include "etaq/characters.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>

namespace etaq {

namespace {

// 6 H(D) for D >= 1, enumerating b = D (mod 2), 0 <= b <= sqrt(D/3), and a | (b^2 + D)/4.
std::int64_t hurwitz_sixfold(std::int64_t D) {
  if (D % 4 == 1 || D % 4 == 2) return 0;
  std::int64_t total = 0;
  for (std::int64_t b = D % 2; 3 * b * b <= D; b += 2) {
    const std::int64_t ac = (b * b + D) / 4;
    for (std::int64_t a = std::max<std::int64_t>(b, 1); a * a <= ac; ++a) {
      if (ac % a != 0) continue;
      const std::int64_t c = ac / a;
      if (b == 0)
        total += (a == c) ? 3 : 6;
      else if (b == a || a == c)
        total += (a == b && b == c) ? 2 : 6;
      else
        total += 12;  // (a, b, c) and (a, -b, c)
    }
  }
  return total;
}

Rational from_sixfold(std::int64_t v) {
  Rational r(to_integer(v), Integer(6));
  r.canonicalize();
  return r;
}

}  // namespace

Rational hurwitz(std::int64_t D) {
  if (D < 0) throw std::invalid_argument("hurwitz: D must be nonnegative");
  if (D == 0) return make_rational(-1, 12);
  return from_sixfold(hurwitz_sixfold(D));
}

void HurwitzCache::tabulate(std::int64_t limit) {
  if (limit < 0) throw std::invalid_argument("HurwitzCache::tabulate: negative limit");
  {
    std::shared_lock lock(mutex_);
    if (static_cast<std::int64_t>(sixfold_.size()) > limit) return;
  }
  std::vector<std::int32_t> table(static_cast<std::size_t>(limit + 1), 0);
  // Reduced forms: |b| <= a <= c, and b >= 0 whenever |b| = a or a = c. D = 4ac - b^2 >= 3a^2.
  for (std::int64_t a = 1; 3 * a * a <= limit; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      const std::int64_t b2 = b * b;
      std::int64_t c = a;
      if (b < 0) ++c;  // a = c needs b >= 0
      for (std::int64_t D = 4 * a * c - b2; D <= limit; D += 4 * a, ++c) {
        std::int32_t w = 6;
        if (a == c && b == 0)
          w = 3;
        else if (a == c && a == b)
          w = 2;
        table[static_cast<std::size_t>(D)] += w;
      }
    }
  }
  std::unique_lock lock(mutex_);
  if (table.size() > sixfold_.size()) sixfold_ = std::move(table);
}

std::int64_t HurwitzCache::tabulated_limit() const {
  std::shared_lock lock(mutex_);
  return static_cast<std::int64_t>(sixfold_.size()) - 1;
}

Rational HurwitzCache::operator()(std::int64_t D) const {
  if (D < 0) throw std::invalid_argument("hurwitz: D must be nonnegative");
  if (D == 0) return make_rational(-1, 12);
  {
    std::shared_lock lock(mutex_);
    if (D < static_cast<std::int64_t>(sixfold_.size())) return from_sixfold(sixfold_[D]);
    if (const auto it = sparse_.find(D); it != sparse_.end()) return it->second;
  }
  Rational value = hurwitz(D);
  std::unique_lock lock(mutex_);
  sparse_.emplace(D, value);
  return value;
}

Rational HurwitzCache::at_ratio(std::int64_t num, std::int64_t den) const {
  if (den == 0) throw std::invalid_argument("HurwitzCache::at_ratio: zero denominator");
  if (num % den != 0) return 0;
  const std::int64_t D = num / den;
  if (D < 0) return 0;
  return (*this)(D);
}

Integer s_d_factor(std::int64_t D, std::int64_t f) {
  if (!is_fundamental_discriminant(-D))
    throw std::invalid_argument("s_d_factor: -" + std::to_string(D) + " is not a fundamental discriminant");
  if (f < 1) throw std::invalid_argument("s_d_factor: f must be positive");
  Integer total = 0;
  for (const auto d : divisors(f)) {
    const int c = mobius(d) * kronecker(-D, d);
    if (c == 0) continue;
    total += c * to_integer(sigma(f / d));
  }
  return total;
}

CoeffSeries hurwitz_series(std::int64_t truncation, const HurwitzCache& cache) {
  if (truncation < 0) throw std::invalid_argument("hurwitz_series: negative truncation");
  std::vector<Rational> out(static_cast<std::size_t>(truncation + 1));
  for (std::int64_t D = 0; D <= truncation; ++D) out[D] = cache(D);
  return CoeffSeries(std::move(out));
}

CoeffSeries hurwitz_series(std::int64_t truncation) {
  HurwitzCache cache;
  cache.tabulate(truncation);
  return hurwitz_series(truncation, cache);
}

CoeffSeries hurwitz_sieved(std::int64_t l1, std::int64_t l2, std::int64_t truncation, const HurwitzCache& cache) {
  if (l1 < 1 || l2 < 1) throw std::invalid_argument("hurwitz_sieved: l1 and l2 must be positive");
  if (std::gcd(l1, l2) != 1) throw std::invalid_argument("hurwitz_sieved: gcd(l1, l2) must be 1");
  if (!factorize(l2).squarefree()) throw std::invalid_argument("hurwitz_sieved: l2 must be squarefree");
  if (truncation < 0) throw std::invalid_argument("hurwitz_sieved: negative truncation");
  std::vector<Rational> out(static_cast<std::size_t>(truncation + 1));
  for (std::int64_t n = 0; n <= truncation; ++n)
    out[n] = cache(l1 * l2 * n) - Rational(to_integer(l2)) * cache.at_ratio(l1 * n, l2);
  return CoeffSeries(std::move(out));
}

CoeffSeries hurwitz_sieved(std::int64_t l1, std::int64_t l2, std::int64_t truncation) {
  HurwitzCache cache;
  cache.tabulate(l1 * l2 * truncation);
  return hurwitz_sieved(l1, l2, truncation, cache);
}

}  // namespace etaq
