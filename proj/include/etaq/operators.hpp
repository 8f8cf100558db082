#pragma once

// Coefficient-level operators on q-series. Each returns the largest truncation it can
// guarantee; U and T_p shrink it, V grows it.

#include "etaq/characters.hpp"
#include "etaq/series.hpp"

#include <optional>
#include <span>

namespace etaq {

/// out(n) = s(l n), truncation floor(T / l).
CoeffSeries op_U(const CoeffSeries& s, std::int64_t l);

/// out(l n) = s(n), zero elsewhere; truncation l T, or `cap` if that is smaller.
CoeffSeries op_V(const CoeffSeries& s, std::int64_t l, std::optional<std::int64_t> cap = std::nullopt);

/// Keeps the coefficients at n = m (mod M).
CoeffSeries op_sieve(const CoeffSeries& s, std::int64_t M, std::int64_t m);

/// out(n) = chi(n) s(n).
CoeffSeries op_twist(const CoeffSeries& s, const CharacterSpec& chi);

/// Weight-k Hecke operator with nebentypus chi: out(n) = s(p n) + chi(p) p^{k-1} s(n/p),
/// the second term only when p | n. Truncation floor(T / p).
CoeffSeries hecke_Tp(const CoeffSeries& s, std::int64_t p, unsigned k, const CharacterSpec& chi);

/// a + b sqrt(-3), the coefficient ring of the newforms checked against Deligne's bound.
struct EisensteinInteger {
  std::int64_t real;
  std::int64_t sqrt3;  // coefficient of sqrt(3) i
  Integer norm() const;
};

/// |c(n)|^2 <= d(n)^2 n^{k-1} for every listed n >= 1 (index 0 is ignored).
bool deligne_bound_check(const CoeffSeries& coeffs, unsigned k);
bool deligne_bound_check(std::span<const EisensteinInteger> coeffs, unsigned k);

}  // namespace etaq
