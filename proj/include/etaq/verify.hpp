#pragma once

// Sturm bounds, identity comparison, and the sign-pattern verifiers.

#include "etaq/pipeline.hpp"
#include "etaq/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace etaq {

/// floor(N (k/12) prod_{p | N} (1 + 1/p)) with the weight given as 2k.
std::int64_t sturm_bound(std::int64_t k_times_2, std::int64_t N);

/// Exact comparison of coefficients 0..bound. Every mismatch is listed in increasing n;
/// throws TruncationError if a side cannot reach the bound.
VerificationReport verify_identity(const IdentityPipeline& lhs, const IdentityPipeline& rhs, std::int64_t bound,
                                   std::string id = "identity");

enum class Theorem { M1, M2, M3, M8a, M8b, CONJ99a, CONJ99b, CLASSNUM };

std::optional<Theorem> parse_theorem(std::string_view name);
std::string to_string(Theorem t);
EtaQuotientSpec theorem_spec(Theorem t);

struct VerifyOptions {
  unsigned jobs = 1;
  /// For the a >= 3 case of CLASSNUM: compare against n' = (n - 1) / step. The stated law
  /// uses 3; 9 is the variant that maps 8n + 1 to (8n + 1) / 9.
  int classnum_step = 3;
};

/// Expands the eta-quotient of `t` to `bound` and checks its sign pattern pointwise.
VerificationReport verify_theorem(Theorem t, std::int64_t bound, const VerifyOptions& options = {});

/// b2(n) = C_{1^3 2^-2 3^3}(n) against its three-case divisor-sum formula, the sign law
/// sgn sum_{d | m} (3/d) d = (3/m) for m <= 3 bound + 1 coprime to 6, and the weight-2
/// Eisenstein decomposition of eta(3z)^3 eta(9z)^3 / eta(6z)^2.
VerificationReport verify_lemma_b2(std::int64_t bound);

/// For n = 1 (mod 4): sum_{d | n} (-1/d) d^2 + 6 sum_{d | n/3} (-1/d) d^2 > 0; the operator
/// form of the weight-3 Eisenstein combination matches its divisor-sum display; and its
/// coefficient signs at n = 1 (mod 4) are +1 for n = 1 (mod 12), -1 otherwise.
VerificationReport verify_eisenstein_sign(std::int64_t bound);

/// x^{2l+2} - 1 - 6 (l + 1) x^l (x^2 + 1).
Integer f_ell(const Integer& x, unsigned l);

/// The two ratio ladders (p^{2l+2} - 1) / (p^l (p^2 + 1)) >= c (l + 1), f_l positivity at
/// the base cases, and the induction rearrangement of f_{l+1}.
VerificationReport verify_claim_cases();

/// C_{1^4 2^4 4^-3}(n) against the sieved combination of r_{(1,1,2,2,2)}(n), n <= bound <= 2000.
VerificationReport verify_lemma_r_counts(std::int64_t bound);

enum class QPFamily { Q, P };

/// Signs of Q_p = eta^{p^2} / eta(pz)^p or P_p = eta^p / eta(pz) at n = p^a m against
/// (2/p)(m/p), respectively (-2/p)(m/p). `threshold` is the largest violating m; status is
/// pass-with-threshold when violations exist and stop by bound / 2.
VerificationReport scan_qp_threshold(std::int64_t p, QPFamily which, std::int64_t bound, unsigned jobs = 1);

/// The Hurwitz decomposition of eta(8z)^2 eta(16z)^2 / eta(24z) to q^{max(192, 8 bound + 1)},
/// the Hurwitz closed forms of C_{1^2 2^2 3^-1}(n) in each class mod 3, and the four-case
/// sign law for C_{1^2 2^2 3^-1}(n), 0 <= n <= bound.
VerificationReport verify_classnum(std::int64_t bound, const VerifyOptions& options = {});

}  // namespace etaq
