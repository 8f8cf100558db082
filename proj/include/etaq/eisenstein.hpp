#pragma once

#include "etaq/characters.hpp"
#include "etaq/series.hpp"

namespace etaq {

/// E_{k, chi, psi}: constant term L(1-k, psi) when chi is trivial (else 0), and
/// 2 sum_{d | n} chi(n/d) psi(d) d^{k-1} at q^n.
struct EisensteinSpec {
  unsigned weight;
  CharacterSpec chi;
  CharacterSpec psi;

  /// Rejects weight < 2, and weight 2 with both characters trivial (use e2_coeffs).
  EisensteinSpec(unsigned weight, CharacterSpec chi, CharacterSpec psi);

  std::string to_string() const;
};

CoeffSeries eisenstein_coeffs(const EisensteinSpec& spec, std::int64_t truncation);

/// Quasimodular E_2 = 1 - 24 sum sigma(n) q^n.
CoeffSeries e2_coeffs(std::int64_t truncation);

/// L_{k,p} E_{k, chi_1, chi_{p*}}, p* = (-1/p) p; constant term exactly 1.
CoeffSeries normalized_eisenstein(unsigned k, std::int64_t p, std::int64_t truncation);

}  // namespace etaq
