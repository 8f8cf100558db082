#include "etaq/arithmetic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace etaq {

namespace {

std::int64_t isqrt(std::int64_t n) {
  if (n <= 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Jacobi symbol (a/n) for odd n > 0.
int jacobi(std::int64_t a, std::int64_t n) {
  a %= n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

}  // namespace

Factorization::Factorization(std::vector<PrimePower> terms) : terms_(std::move(terms)) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!is_prime(terms_[i].prime) || terms_[i].exponent < 1)
      throw std::invalid_argument("Factorization: bases must be prime and exponents >= 1");
    if (i > 0 && terms_[i - 1].prime >= terms_[i].prime)
      throw std::invalid_argument("Factorization: primes must be strictly increasing");
  }
}

std::int64_t Factorization::value() const {
  std::int64_t v = 1;
  for (const auto& [p, e] : terms_)
    for (int i = 0; i < e; ++i) v *= p;
  return v;
}

int Factorization::ord(std::int64_t p) const {
  for (const auto& t : terms_)
    if (t.prime == p) return t.exponent;
  return 0;
}

std::int64_t Factorization::radical() const {
  std::int64_t r = 1;
  for (const auto& t : terms_) r *= t.prime;
  return r;
}

bool Factorization::squarefree() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const PrimePower& t) { return t.exponent == 1; });
}

Factorization factorize(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
  std::vector<PrimePower> terms;
  auto take = [&](std::int64_t p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) terms.push_back({p, e});
  };
  take(2);
  take(3);
  for (std::int64_t p = 5; p * p <= n; p += 6) {
    take(p);
    take(p + 2);
  }
  if (n > 1) terms.push_back({n, 1});
  return Factorization(std::move(terms));
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::int64_t p = 5; p * p <= n; p += 6)
    if (n % p == 0 || n % (p + 2) == 0) return false;
  return true;
}

int ord(std::int64_t n, std::int64_t p) {
  if (n == 0) throw std::invalid_argument("ord: n must be nonzero");
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

std::int64_t remove_factor(std::int64_t n, std::int64_t p) {
  if (n == 0) throw std::invalid_argument("remove_factor: n must be nonzero");
  while (n % p == 0) n /= p;
  return n;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::int64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int kronecker(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  int twos = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++twos;
  }
  if (twos > 0) {
    if (a % 2 == 0) return 0;
    std::int64_t r = a % 8;
    if (r < 0) r += 8;
    if ((r == 3 || r == 5) && (twos % 2 == 1)) result = -result;
  }
  if (n == 1) return result;
  return result * jacobi(a, n);
}

int mobius(std::int64_t n) {
  const auto f = factorize(n);
  if (!f.squarefree()) return 0;
  return f.size() % 2 == 0 ? 1 : -1;
}

std::int64_t divisor_count(std::int64_t n) {
  std::int64_t d = 1;
  for (const auto& t : factorize(n)) d *= t.exponent + 1;
  return d;
}

std::int64_t sigma(std::int64_t n) {
  std::int64_t s = 1;
  for (const auto& [p, e] : factorize(n)) {
    std::int64_t term = 1, pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      term += pk;
    }
    s *= term;
  }
  return s;
}

std::vector<std::int64_t> sigma_table(std::int64_t limit) {
  std::vector<std::int64_t> s(static_cast<std::size_t>(std::max<std::int64_t>(limit, 0) + 1), 0);
  for (std::int64_t d = 1; d <= limit; ++d)
    for (std::int64_t m = d; m <= limit; m += d) s[m] += d;
  return s;
}

Integer twisted_divisor_sum(std::int64_t n, std::int64_t D, unsigned k) {
  Integer total = 0;
  for (const auto d : divisors(n)) {
    const int chi = kronecker(D, d);
    if (chi == 0) continue;
    const Integer term = ipow(d, k);
    if (chi > 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

std::int64_t signed_prime_discriminant(std::int64_t p) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("signed_prime_discriminant: p must be an odd prime");
  return p % 4 == 1 ? p : -p;
}

int sign_of_twisted_sum(std::int64_t n, std::int64_t p, unsigned k) {
  if (k < 1) throw std::invalid_argument("sign_of_twisted_sum: k must be >= 1");
  return sign(twisted_divisor_sum(n, signed_prime_discriminant(p), k));
}

std::int64_t rep_count_quadratic(std::span<const std::int64_t> coefficients, std::int64_t n) {
  if (coefficients.empty()) throw std::invalid_argument("rep_count_quadratic: empty coefficient vector");
  if (n < 0) return 0;
  std::int64_t count = 0;
  std::function<void(std::size_t, std::int64_t)> walk = [&](std::size_t i, std::int64_t value) {
    if (i == coefficients.size()) {
      if (value == n) ++count;
      return;
    }
    const std::int64_t a = coefficients[i];
    const std::int64_t r = isqrt(n / a);
    for (std::int64_t x = -r; x <= r; ++x) {
      const std::int64_t v = value + a * x * x;
      if (v <= n) walk(i + 1, v);
    }
  };
  walk(0, 0);
  return count;
}

std::vector<std::int64_t> rep_count_table(std::span<const std::int64_t> coefficients, std::int64_t limit) {
  if (coefficients.empty()) throw std::invalid_argument("rep_count_table: empty coefficient vector");
  std::vector<std::int64_t> table(static_cast<std::size_t>(limit + 1), 0);
  const std::size_t last = coefficients.size() - 1;
  std::function<void(std::size_t, std::int64_t)> walk = [&](std::size_t i, std::int64_t value) {
    const std::int64_t a = coefficients[i];
    const std::int64_t r = isqrt((limit - value) / a);
    if (i == last) {
      ++table[value];
      for (std::int64_t x = 1; x <= r; ++x) table[value + a * x * x] += 2;
      return;
    }
    walk(i + 1, value);
    for (std::int64_t x = 1; x <= r; ++x) {
      const std::int64_t v = value + a * x * x;
      walk(i + 1, v);
      walk(i + 1, v);
    }
  };
  for (const auto a : coefficients)
    if (a < 1) throw std::invalid_argument("rep_count_table: coefficients must be positive");
  if (limit >= 0) walk(0, 0);
  return table;
}

std::int64_t triangular_rep_count(std::int64_t n) {
  if (n < 0) return 0;
  std::int64_t count = 0;
  for (std::int64_t a = 0; a * (a + 1) / 2 <= n; ++a)
    for (std::int64_t b = 0; a * (a + 1) / 2 + b * (b + 1) / 2 <= n; ++b)
      for (std::int64_t c = 0; a * (a + 1) / 2 + b * (b + 1) / 2 + c * (c + 1) <= n; ++c)
        if (a * (a + 1) / 2 + b * (b + 1) / 2 + c * (c + 1) == n) ++count;
  return count;
}

std::vector<std::int64_t> triangular_rep_table(std::int64_t limit) {
  std::vector<std::int64_t> table(static_cast<std::size_t>(limit + 1), 0);
  for (std::int64_t a = 0; a * (a + 1) / 2 <= limit; ++a)
    for (std::int64_t b = 0; a * (a + 1) / 2 + b * (b + 1) / 2 <= limit; ++b)
      for (std::int64_t c = 0; a * (a + 1) / 2 + b * (b + 1) / 2 + c * (c + 1) <= limit; ++c)
        ++table[a * (a + 1) / 2 + b * (b + 1) / 2 + c * (c + 1)];
  return table;
}

}  // namespace etaq
