#pragma once

// Kronecker characters, Bernoulli numbers and polynomials, and the special values
// L(1 - k, chi_D) with their normalizing reciprocals.

#include "etaq/rational.hpp"

#include <cstdint>
#include <string>

namespace etaq {

/// The trivial character or a Kronecker character chi_D(n) = (D/n).
class CharacterSpec {
 public:
  static CharacterSpec trivial() { return CharacterSpec(1); }
  /// D must be 1 or congruent to 0 or 1 mod 4.
  static CharacterSpec kronecker(std::int64_t D) { return CharacterSpec(D); }

  bool is_trivial() const { return discriminant_ == 1; }
  std::int64_t discriminant() const { return discriminant_; }
  /// |D|; 1 for the trivial character.
  std::int64_t modulus() const;
  int operator()(std::int64_t n) const;
  /// chi(-1).
  int parity() const { return (*this)(-1); }

  std::string to_string() const;

  bool operator==(const CharacterSpec&) const = default;

 private:
  explicit CharacterSpec(std::int64_t D);
  std::int64_t discriminant_;
};

bool is_fundamental_discriminant(std::int64_t D);

/// B_k with B_1 = -1/2.
Rational bernoulli_number(unsigned k);

/// B_k(x) = sum_j C(k, j) B_j x^{k-j}.
Rational bernoulli_poly_eval(unsigned k, const Rational& x);

/// L(1 - k, chi_D) for k >= 1, from the finite Bernoulli-polynomial character sum.
Rational l_value(unsigned k, std::int64_t D);

/// 1 / L(1 - k, chi_{p*}) with p* = (-1/p) p; throws std::domain_error when the L-value
/// vanishes (k and (p-1)/2 of different parity).
Rational l_norm_const(unsigned k, std::int64_t p);

/// Closed-form sign (-1)^{floor(k/2) + floor((p-1)/4)} (-2/p) of l_norm_const(k, p).
int predicted_l_norm_sign(unsigned k, std::int64_t p);

/// Whether the computed sign of l_norm_const(k, p) matches predicted_l_norm_sign.
bool l_sign_check(unsigned k, std::int64_t p);

}  // namespace etaq
