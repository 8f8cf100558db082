#pragma once

// Truncated q-series with exact rational coefficients, and eta-quotient expansion.

#include "etaq/rational.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace etaq {

/// Thrown when a computation would need coefficients past a series' truncation.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coefficients c(0), ..., c(T) of a q-series known up to q^T. Coefficients past T are
/// unknown, not zero; nothing here reads them.
class CoeffSeries {
 public:
  /// The series 0 + O(q^{T+1}).
  static CoeffSeries zero(std::int64_t truncation);
  /// The constant c + O(q^{T+1}).
  static CoeffSeries constant(const Rational& c, std::int64_t truncation);

  explicit CoeffSeries(std::vector<Rational> coeffs);
  CoeffSeries(std::initializer_list<Rational> coeffs);
  static CoeffSeries from_integers(std::span<const std::int64_t> values);
  static CoeffSeries from_integers(std::span<const Integer> values);

  std::int64_t truncation() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }

  /// Coefficient of q^n; throws TruncationError past the truncation.
  const Rational& at(std::int64_t n) const;
  const Rational& operator[](std::int64_t n) const { return coeffs_[static_cast<std::size_t>(n)]; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  /// Leading part up to q^t, t <= truncation().
  CoeffSeries truncated(std::int64_t t) const;

  bool all_integral() const;

  bool operator==(const CoeffSeries&) const = default;

  CoeffSeries& operator+=(const CoeffSeries& rhs);
  CoeffSeries& operator-=(const CoeffSeries& rhs);
  CoeffSeries& operator*=(const Rational& scalar);

 private:
  std::vector<Rational> coeffs_;
};

CoeffSeries operator+(CoeffSeries a, const CoeffSeries& b);
CoeffSeries operator-(CoeffSeries a, const CoeffSeries& b);
CoeffSeries operator-(CoeffSeries a);
CoeffSeries operator*(const Rational& scalar, CoeffSeries a);

/// Cauchy product, truncated at min(a.T, b.T).
CoeffSeries series_mul(const CoeffSeries& a, const CoeffSeries& b);
CoeffSeries operator*(const CoeffSeries& a, const CoeffSeries& b);

/// Multiplicative inverse; throws std::domain_error when the constant term is zero.
CoeffSeries series_inverse(const CoeffSeries& a);

/// a^e by binary exponentiation; negative e goes through series_inverse.
CoeffSeries series_pow(const CoeffSeries& a, std::int64_t e);

/// (q^j; q^j)_infinity up to q^T, from the pentagonal-number support.
CoeffSeries pochhammer_series(std::int64_t j, std::int64_t truncation);

struct EtaFactor {
  std::int64_t dilation;  // j in eta(jz)
  std::int64_t exponent;  // delta_j
  bool operator==(const EtaFactor&) const = default;
};

/// prod_j eta(jz)^{delta_j}: nonempty, distinct dilations, nonzero exponents.
class EtaQuotientSpec {
 public:
  explicit EtaQuotientSpec(std::vector<EtaFactor> factors);
  EtaQuotientSpec(std::initializer_list<EtaFactor> factors);

  /// Parses whitespace-separated "j^d" tokens, e.g. "1^-2 2^3 4^2"; "j" alone means j^1.
  static EtaQuotientSpec parse(std::string_view text);

  const std::vector<EtaFactor>& factors() const { return factors_; }

  /// sum delta_j (twice the weight).
  std::int64_t weight_numerator() const;
  /// sum j delta_j: the expansion carries the prefactor q^{exponent24 / 24}.
  std::int64_t exponent24() const;
  /// gcd of all dilations.
  std::int64_t dilation_gcd() const;

  std::string to_string() const;

  bool operator==(const EtaQuotientSpec&) const = default;

 private:
  std::vector<EtaFactor> factors_;  // sorted by dilation
};

/// Replaces every eta(jz) by eta(c j z).
EtaQuotientSpec dilate_spec(const EtaQuotientSpec& spec, std::int64_t c);

struct EtaExpansion {
  std::int64_t exponent24;
  CoeffSeries coeffs;  // coefficients of prod (q^j; q^j)^{delta_j}
};

/// Integer coefficients C(0..T) of prod (q^j; q^j)_infinity^{delta_j}.
std::vector<Integer> eta_product_integers(const EtaQuotientSpec& spec, std::int64_t truncation);

EtaExpansion eta_quotient_series(const EtaQuotientSpec& spec, std::int64_t truncation);

/// The full Fourier expansion q^{exponent24/24} prod (q^j;q^j)^{delta_j} up to q^T. Requires
/// exponent24 to be a nonnegative multiple of 24.
CoeffSeries eta_quotient_fourier(const EtaQuotientSpec& spec, std::int64_t truncation);

}  // namespace etaq
