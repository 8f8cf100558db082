#pragma once

// Symbolic descriptions of q-series built from eta-quotients, Eisenstein series and the
// Hurwitz series through operators and rational linear combinations. Evaluation pulls the
// truncation each leaf needs backwards through the operators, so a result is either
// exact to the requested bound or an error; it is never zero-filled.

#include "etaq/eisenstein.hpp"
#include "etaq/hurwitz.hpp"
#include "etaq/operators.hpp"
#include "etaq/series.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace etaq {

struct LeafDemand {
  std::string leaf;
  std::int64_t truncation;
};

class IdentityPipeline {
 public:
  struct Node;

  /// Full Fourier expansion of the eta-quotient (its q-power must be an integer).
  static IdentityPipeline eta(const EtaQuotientSpec& spec);
  /// Coefficients of prod (q^j; q^j)^{delta_j} alone, without the q-power prefactor.
  static IdentityPipeline eta_product(const EtaQuotientSpec& spec);
  static IdentityPipeline eisenstein(const EisensteinSpec& spec);
  static IdentityPipeline e2();
  static IdentityPipeline normalized_eisenstein(unsigned k, std::int64_t p);
  static IdentityPipeline hurwitz(std::shared_ptr<HurwitzCache> cache);
  static IdentityPipeline hurwitz_sieved(std::int64_t l1, std::int64_t l2, std::shared_ptr<HurwitzCache> cache);
  /// A fixed, finite list of coefficients. Asking for more than it holds is an error.
  static IdentityPipeline fixed(CoeffSeries coeffs, std::string label);
  /// Coefficients from a closed formula n -> c(n).
  static IdentityPipeline generator(std::function<Rational(std::int64_t)> coeff, std::string label);

  IdentityPipeline U(std::int64_t l) const;
  IdentityPipeline V(std::int64_t l) const;
  IdentityPipeline sieve(std::int64_t M, std::int64_t m) const;
  IdentityPipeline twist(const CharacterSpec& chi) const;
  IdentityPipeline hecke(std::int64_t p, unsigned k, const CharacterSpec& chi) const;

  friend IdentityPipeline operator+(const IdentityPipeline& a, const IdentityPipeline& b);
  friend IdentityPipeline operator-(const IdentityPipeline& a, const IdentityPipeline& b);
  friend IdentityPipeline operator-(const IdentityPipeline& a);
  friend IdentityPipeline operator*(const Rational& c, const IdentityPipeline& a);

  /// Coefficients 0..bound.
  CoeffSeries evaluate(std::int64_t bound) const;

  /// Truncation every leaf must be generated to for evaluate(bound).
  std::vector<LeafDemand> leaf_demands(std::int64_t bound) const;
  std::int64_t required_truncation(std::int64_t bound) const;

  std::string describe() const;

 private:
  explicit IdentityPipeline(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace etaq
