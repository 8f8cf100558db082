#pragma once

// Elementary multiplicative number theory on machine integers: factorization,
// Kronecker symbols, divisor sums, and brute-force representation counts.

#include "etaq/rational.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace etaq {

struct PrimePower {
  std::int64_t prime;
  int exponent;
  bool operator==(const PrimePower&) const = default;
};

/// Prime-exponent list sorted by strictly increasing prime. 1 factors as [].
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<PrimePower> terms);

  const std::vector<PrimePower>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  std::int64_t value() const;
  /// Exponent of p in the factored integer (0 if p does not divide it).
  int ord(std::int64_t p) const;
  std::int64_t radical() const;
  bool squarefree() const;

  bool operator==(const Factorization&) const = default;

 private:
  std::vector<PrimePower> terms_;
};

Factorization factorize(std::int64_t n);

bool is_prime(std::int64_t n);

/// Exponent of the prime p in n, n != 0.
int ord(std::int64_t n, std::int64_t p);

/// n with every factor p removed.
std::int64_t remove_factor(std::int64_t n, std::int64_t p);

/// All positive divisors of n >= 1, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Kronecker symbol (a/n) for arbitrary integers.
int kronecker(std::int64_t a, std::int64_t n);

int mobius(std::int64_t n);
std::int64_t divisor_count(std::int64_t n);
std::int64_t sigma(std::int64_t n);

/// sigma(n) for 0 <= n <= limit, with sigma(0) = 0.
std::vector<std::int64_t> sigma_table(std::int64_t limit);

/// sum over d | n of chi_D(d) d^k, with chi_D(d) = (D/d).
Integer twisted_divisor_sum(std::int64_t n, std::int64_t D, unsigned k);

/// Sign of sum over d | n of (d/p) d^k, with (d/p) the Legendre symbol modulo the odd prime p.
int sign_of_twisted_sum(std::int64_t n, std::int64_t p, unsigned k);

/// (-1/p) p, the discriminant whose Kronecker character is the Legendre symbol mod p.
std::int64_t signed_prime_discriminant(std::int64_t p);

/// #{x in Z^l : sum a_j x_j^2 = n} by exhaustive enumeration of |x_j| <= sqrt(n / a_j).
std::int64_t rep_count_quadratic(std::span<const std::int64_t> coefficients, std::int64_t n);

/// Representation counts for every 0 <= n <= limit, one enumeration of all vectors with
/// form value <= limit.
std::vector<std::int64_t> rep_count_table(std::span<const std::int64_t> coefficients,
                                          std::int64_t limit);

/// #{(n1, n2, n3) in N_0^3 : T(n1) + T(n2) + 2 T(n3) = n}, T(m) = m(m+1)/2.
std::int64_t triangular_rep_count(std::int64_t n);
std::vector<std::int64_t> triangular_rep_table(std::int64_t limit);

}  // namespace etaq
