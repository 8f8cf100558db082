#include "etaq/verify.hpp"

#include "etaq/arithmetic.hpp"
#include "etaq/characters.hpp"
#include "etaq/eisenstein.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace etaq {

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
 public:
  std::chrono::milliseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_);
  }

 private:
  Clock::time_point start_ = Clock::now();
};

// Runs check(n) for lo <= n <= hi on up to `jobs` threads. The result is ordered by n no
// matter how the range is split.
template <class Check>
std::vector<Violation> scan_range(std::int64_t lo, std::int64_t hi, unsigned jobs, const Check& check) {
  if (hi < lo) return {};
  const std::int64_t count = hi - lo + 1;
  const auto workers = static_cast<std::int64_t>(std::clamp<unsigned>(jobs, 1, 64));
  const std::int64_t chunks = std::min(workers, count);
  std::vector<std::vector<Violation>> parts(static_cast<std::size_t>(chunks));
  auto run = [&](std::int64_t c) {
    const std::int64_t a = lo + count * c / chunks;
    const std::int64_t b = lo + count * (c + 1) / chunks;
    for (std::int64_t n = a; n < b; ++n)
      if (auto v = check(n)) parts[c].push_back(std::move(*v));
  };
  if (chunks == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::int64_t c = 0; c < chunks; ++c) pool.emplace_back(run, c);
    for (auto& t : pool) t.join();
  }
  std::vector<Violation> out;
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  return out;
}

std::string signed_str(int s) { return s > 0 ? "+1" : (s < 0 ? "-1" : "0"); }

std::string sign_with_value(const Integer& c) { return signed_str(sgn(c)) + " (" + c.get_str() + ")"; }

// Appends `part`'s violations to `into`, tagging them so merged reports stay readable.
void absorb(VerificationReport& into, const std::vector<Violation>& part, const std::string& tag) {
  for (const auto& v : part) into.violations.push_back({v.n, "[" + tag + "] " + v.expected, v.actual});
}

std::vector<Violation> compare_series(const CoeffSeries& lhs, const CoeffSeries& rhs, std::int64_t bound) {
  std::vector<Violation> out;
  for (std::int64_t n = 0; n <= bound; ++n)
    if (lhs[n] != rhs[n]) out.push_back({n, rhs[n].get_str(), lhs[n].get_str()});
  return out;
}

Rational sum_chi_d(std::int64_t n, const std::function<int(std::int64_t)>& chi, unsigned power) {
  Integer total = 0;
  for (const auto d : divisors(n)) {
    const int c = chi(d);
    if (c != 0) total += c * ipow(d, power);
  }
  return Rational(total);
}

}  // namespace

std::int64_t sturm_bound(std::int64_t k_times_2, std::int64_t N) {
  if (k_times_2 < 1 || N < 1) throw std::invalid_argument("sturm_bound: weight and level must be positive");
  Rational value(to_integer(N) * to_integer(k_times_2), Integer(24));
  const Factorization f = factorize(N);
  for (const auto& pp : f.terms()) value *= make_rational(pp.prime + 1, pp.prime);
  value.canonicalize();
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q.get_si();
}

VerificationReport verify_identity(const IdentityPipeline& lhs, const IdentityPipeline& rhs, std::int64_t bound,
                                   std::string id) {
  if (bound < 0) throw std::invalid_argument("verify_identity: negative bound");
  Stopwatch clock;
  VerificationReport r;
  r.id = std::move(id);
  r.bound = bound;
  r.violations = compare_series(lhs.evaluate(bound), rhs.evaluate(bound), bound);
  r.settle();
  r.elapsed = clock.elapsed();
  return r;
}

std::optional<Theorem> parse_theorem(std::string_view name) {
  for (const auto t : {Theorem::M1, Theorem::M2, Theorem::M3, Theorem::M8a, Theorem::M8b, Theorem::CONJ99a,
                       Theorem::CONJ99b, Theorem::CLASSNUM})
    if (to_string(t) == name) return t;
  return std::nullopt;
}

std::string to_string(Theorem t) {
  switch (t) {
    case Theorem::M1:
      return "M1";
    case Theorem::M2:
      return "M2";
    case Theorem::M3:
      return "M3";
    case Theorem::M8a:
      return "M8a";
    case Theorem::M8b:
      return "M8b";
    case Theorem::CONJ99a:
      return "CONJ99a";
    case Theorem::CONJ99b:
      return "CONJ99b";
    case Theorem::CLASSNUM:
      return "CLASSNUM";
  }
  return "?";
}

EtaQuotientSpec theorem_spec(Theorem t) {
  switch (t) {
    case Theorem::M1:
      return {{1, -2}, {2, 3}, {4, 2}};
    case Theorem::M2:
      return {{1, 3}, {2, -2}, {3, 3}};
    case Theorem::M3:
      return {{1, 4}, {2, 4}, {3, -2}};
    case Theorem::M8a:
      return {{1, 4}, {2, 2}, {4, -2}};
    case Theorem::M8b:
      return {{1, 4}, {2, 4}, {4, -3}};
    case Theorem::CONJ99a:
      return {{1, 9}, {3, -3}};
    case Theorem::CONJ99b:
      return {{1, 5}, {5, -1}};
    case Theorem::CLASSNUM:
      return {{1, 2}, {2, 2}, {3, -1}};
  }
  throw std::invalid_argument("theorem_spec: unknown theorem");
}

VerificationReport verify_theorem(Theorem t, std::int64_t bound, const VerifyOptions& options) {
  if (bound < 1) throw std::invalid_argument("verify_theorem: bound must be positive");
  if (t == Theorem::CLASSNUM) return verify_classnum(bound, options);

  Stopwatch clock;
  VerificationReport r;
  r.id = to_string(t);
  r.bound = bound;
  const std::vector<Integer> c = eta_product_integers(theorem_spec(t), bound);

  std::function<int(std::int64_t)> expected;
  std::int64_t first = 1;
  switch (t) {
    case Theorem::M1:
      first = 0;
      expected = [](std::int64_t) { return 1; };
      break;
    case Theorem::M2:
      expected = [](std::int64_t n) { return n % 2 == 0 ? 1 : -1; };
      break;
    case Theorem::M3:
      expected = [](std::int64_t n) { return n % 3 == 0 ? 1 : -1; };
      break;
    case Theorem::M8a:
      expected = [](std::int64_t n) {
        switch (n % 8) {
          case 0:
          case 3:
          case 7:
            return 1;
          case 2:
          case 6:
            return 0;
          default:
            return -1;
        }
      };
      break;
    case Theorem::M8b:
      expected = [](std::int64_t n) {
        switch (n % 8) {
          case 0:
          case 3:
          case 6:
          case 7:
            return 1;
          default:
            return -1;
        }
      };
      break;
    case Theorem::CONJ99a:
    case Theorem::CONJ99b: {
      const std::int64_t p = t == Theorem::CONJ99a ? 3 : 5;
      expected = [p](std::int64_t n) { return -kronecker(remove_factor(n, p), p); };
      break;
    }
    case Theorem::CLASSNUM:
      break;
  }

  r.violations = scan_range(first, bound, options.jobs, [&](std::int64_t n) -> std::optional<Violation> {
    const int want = expected(n);
    if (sgn(c[n]) == want) return std::nullopt;
    return Violation{n, signed_str(want), sign_with_value(c[n])};
  });
  r.settle();
  r.elapsed = clock.elapsed();
  return r;
}

VerificationReport verify_lemma_b2(std::int64_t bound) {
  if (bound < 1) throw std::invalid_argument("verify_lemma_b2: bound must be positive");
  Stopwatch clock;
  VerificationReport r;
  r.id = "lemma-b2";
  r.bound = bound;

  const auto b2 = eta_product_integers({{1, 3}, {2, -2}, {3, 3}}, bound);
  const auto chi3 = [](std::int64_t d) { return kronecker(3, d); };
  const auto chi12 = [](std::int64_t d) { return kronecker(12, d); };
  std::vector<Violation> formula;
  for (std::int64_t n = 0; n <= bound; ++n) {
    const std::int64_t N = 3 * n + 1;
    Rational want;
    if (n % 4 == 0) {
      want = sum_chi_d(N, chi3, 1);
    } else if (n % 4 == 2) {
      want = make_rational(-1, 3) * sum_chi_d(N, chi3, 1);
    } else {
      Integer twisted = 0;
      for (const auto d : divisors(N)) twisted += kronecker(12, N / d) * to_integer(d);
      want = make_rational(-1, 3) * sum_chi_d(N, chi12, 1) - make_rational(2, 3) * Rational(twisted);
    }
    if (want != Rational(b2[n])) formula.push_back({n, want.get_str(), b2[n].get_str()});
  }
  absorb(r, formula, "divisor-sum formula");

  std::vector<Violation> law;
  for (std::int64_t m = 1; m <= 3 * bound + 1; m += 2) {
    if (m % 3 == 0) continue;
    const int s = sign(sum_chi_d(m, chi3, 1));
    if (s != kronecker(3, m)) law.push_back({m, signed_str(kronecker(3, m)), signed_str(s)});
  }
  absorb(r, law, "sign law");

  const auto E = IdentityPipeline::eisenstein({2, CharacterSpec::trivial(), CharacterSpec::kronecker(12)});
  const auto Ebar = IdentityPipeline::eisenstein({2, CharacterSpec::kronecker(12), CharacterSpec::trivial()});
  const auto rhs = make_rational(1, 2) * E.sieve(12, 1) - make_rational(1, 6) * E.sieve(12, 7) -
                   make_rational(1, 6) * E.sieve(6, 4) - make_rational(1, 3) * Ebar.sieve(6, 4);
  const auto lhs = IdentityPipeline::eta({{3, 3}, {6, -2}, {9, 3}});
  const std::int64_t reach = std::max<std::int64_t>(sturm_bound(4, 144), 3 * bound + 1);
  absorb(r, compare_series(lhs.evaluate(reach), rhs.evaluate(reach), reach), "Eisenstein decomposition");

  r.settle();
  r.elapsed = clock.elapsed();
  return r;
}

VerificationReport verify_eisenstein_sign(std::int64_t bound) {
  if (bound < 1) throw std::invalid_argument("verify_eisenstein_sign: bound must be positive");
  Stopwatch clock;
  VerificationReport r;
  r.id = "eisenstein-sign";
  r.bound = bound;

  const auto chi = [](std::int64_t d) { return kronecker(-4, d); };
  const auto positive_part = [&](std::int64_t n) {
    Rational s = sum_chi_d(n, chi, 2);
    if (n % 3 == 0) s += 6 * sum_chi_d(n / 3, chi, 2);
    return s;
  };

  std::vector<Violation> lemma;
  for (std::int64_t n = 1; n <= bound; n += 4) {
    const Rational s = positive_part(n);
    if (sgn(s) <= 0) lemma.push_back({n, "> 0", s.get_str()});
  }
  absorb(r, lemma, "positivity");

  const auto E = IdentityPipeline::eisenstein({3, CharacterSpec::trivial(), CharacterSpec::kronecker(-4)});
  const auto ops = make_rational(1, 2) * E.sieve(12, 1) - make_rational(1, 4) * E.sieve(12, 5) - E.sieve(12, 9) -
                   Rational(6) * E.V(3).sieve(4, 1);
  const auto display = IdentityPipeline::generator(
      [&](std::int64_t n) -> Rational {
        switch (n % 12) {
          case 1:
            return sum_chi_d(n, chi, 2);
          case 5:
            return make_rational(-1, 2) * sum_chi_d(n, chi, 2);
          case 9:
            return -2 * positive_part(n);
          default:
            return 0;
        }
      },
      "E-display");
  const CoeffSeries A = ops.evaluate(bound);
  absorb(r, compare_series(A, display.evaluate(bound), bound), "operator form vs display");

  std::vector<Violation> signs;
  for (std::int64_t n = 1; n <= bound; n += 4) {
    const int want = n % 12 == 1 ? 1 : -1;
    if (sgn(A[n]) != want) signs.push_back({n, signed_str(want), A[n].get_str()});
  }
  absorb(r, signs, "coefficient sign");

  r.settle();
  r.elapsed = clock.elapsed();
  return r;
}

Integer f_ell(const Integer& x, unsigned l) {
  return ipow(x, 2 * l + 2) - 1 - 6 * Integer(l + 1) * ipow(x, l) * (x * x + 1);
}

namespace {

Rational claim_ratio(std::int64_t p, unsigned l) {
  const Integer num = ipow(p, 2 * l + 2) - 1;
  const Integer den = ipow(p, l) * (to_integer(p) * p + 1);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

struct LadderRow {
  std::int64_t p;
  unsigned l;
  Rational c;
};

}  // namespace

VerificationReport verify_claim_cases() {
  Stopwatch clock;
  VerificationReport r;
  r.id = "claim-cases";
  std::int64_t index = 0;
  auto check = [&](bool ok, const std::string& what, const std::string& got) {
    ++index;
    if (!ok) r.violations.push_back({index, what, got});
  };
  auto ladder = [&](const LadderRow& row) {
    const Rational lhs = claim_ratio(row.p, row.l);
    const Rational rhs = row.c * (row.l + 1);
    check(lhs >= rhs,
          "ratio(p=" + std::to_string(row.p) + ", l=" + std::to_string(row.l) + ") >= " + rhs.get_str(),
          lhs.get_str());
  };

  std::vector<std::int64_t> primes;
  for (std::int64_t p = 5; p <= 400; ++p)
    if (is_prime(p)) primes.push_back(p);
  const unsigned max_l = 12;

  // First ladder.
  ladder({5, 1, make_rational(12, 5)});
  ladder({7, 1, make_rational(17, 5)});
  ladder({11, 1, Rational(5)});
  for (const auto p : primes)
    for (unsigned l = 1; l <= max_l; ++l)
      if (p >= 13 || l >= 2) ladder({p, l, Rational(6)});

  // Second ladder.
  const std::vector<LadderRow> second = {
      {13, 1, make_rational(32, 5)},  {5, 2, Rational(8)},           {17, 1, make_rational(42, 5)},
      {19, 1, make_rational(47, 5)},  {23, 1, make_rational(57, 5)}, {29, 1, make_rational(72, 5)},
      {31, 1, make_rational(77, 5)},  {7, 2, Rational(16)},          {37, 1, make_rational(92, 5)},
  };
  for (const auto& row : second) ladder(row);
  for (const auto p : primes)
    for (unsigned l = 1; l <= max_l; ++l)
      if (p >= 41 || (p >= 11 && p <= 37 && l >= 2) || ((p == 5 || p == 7) && l >= 3)) ladder({p, l, Rational(20)});

  // Base cases of the induction.
  const std::vector<std::pair<std::int64_t, Integer>> base = {{5, 3924}, {7, 73548}, {11, 1505844}};
  for (const auto& [x, value] : base) {
    const Integer f = f_ell(x, 2);
    check(f == value, "f_2(" + std::to_string(x) + ") = " + value.get_str(), f.get_str());
  }
  for (std::int64_t x = 13; x <= 2000; ++x) {
    const Integer f = f_ell(x, 1);
    check(sgn(f) > 0, "f_1(" + std::to_string(x) + ") > 0", f.get_str());
  }

  // Induction step: exact rearrangement, and nonnegativity of the terms after x^2 f_l(x).
  for (std::int64_t xi = 2; xi <= 60; ++xi) {
    const Integer x = xi;
    for (unsigned l = 1; l <= max_l; ++l) {
      const Integer x_l1 = ipow(x, l + 1);
      const Integer rest = 6 * Integer(l + 1) * x_l1 * (x * x + 1) * (x - 1) + x * x - 1 - 6 * x_l1 * (x * x + 1);
      const Integer step = x * x * f_ell(x, l) + rest;
      const std::string at = "(x=" + std::to_string(xi) + ", l=" + std::to_string(l) + ")";
      check(step == f_ell(x, l + 1), "f_{l+1} rearrangement " + at, step.get_str());
      check(sgn(rest) >= 0, "remaining terms >= 0 " + at, rest.get_str());
      if (xi >= 13 || ((xi == 5 || xi == 7 || xi == 11) && l >= 2))
        check(sgn(f_ell(x, l)) > 0, "f_l(x) > 0 " + at, f_ell(x, l).get_str());
    }
  }

  r.bound = index;
  r.settle();
  r.elapsed = clock.elapsed();
  return r;
}

VerificationReport verify_lemma_r_counts(std::int64_t bound) {
  if (bound < 1 || bound > 2000) throw std::invalid_argument("verify_lemma_r_counts: bound must be in [1, 2000]");
  Stopwatch clock;
  VerificationReport r;
  r.id = "lemma-r-counts";
  r.bound = bound;

  const std::vector<std::int64_t> form = {1, 1, 2, 2, 2};
  const auto rep = rep_count_table(form, bound);
  const auto C = eta_product_integers({{1, 4}, {2, 4}, {4, -3}}, bound);

  std::vector<Violation> formula;
  for (std::int64_t n = 0; n <= bound; ++n) {
    const Rational rn = to_rational(rep[n]);
    Rational want = 0;
    if (n % 4 == 1)
      want = -rn;
    else if (n % 4 == 3)
      want = rn;
    else if (n % 8 == 0)
      want = make_rational(1, 5) * (rn + 4 * to_rational(n % 4 == 0 ? rep[n / 4] : 0));
    else
      switch (n % 16) {
        case 2:
        case 4:
        case 12:
          want = make_rational(-1, 5) * rn;
          break;
        case 6:
        case 14:
          want = make_rational(1, 5) * rn;
          break;
        case 10:
          want = make_rational(-3, 7) * rn;
          break;
      }
    if (want != Rational(C[n])) formula.push_back({n, want.get_str(), C[n].get_str()});
  }
  absorb(r, formula, "r-count combination");

  // The sign argument rests on r_{(1,1,2,2)}(n) > 0.
  const std::vector<std::int64_t> four = {1, 1, 2, 2};
  const auto rep4 = rep_count_table(four, bound);
  std::vector<Violation> positive;
  for (std::int64_t n = 1; n <= bound; ++n)
    if (rep4[n] <= 0 || rep[n] < rep4[n])
      positive.push_back({n, "0 < r4(n) <= r5(n)", std::to_string(rep4[n]) + ", " + std::to_string(rep[n])});
  absorb(r, positive, "positivity");

  r.settle();
  r.elapsed = clock.elapsed();
  return r;
}

VerificationReport scan_qp_threshold(std::int64_t p, QPFamily which, std::int64_t bound, unsigned jobs) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("scan_qp_threshold: p must be an odd prime");
  if (which == QPFamily::P && p < 5) throw std::invalid_argument("scan_qp_threshold: P needs p >= 5");
  if (bound < 1) throw std::invalid_argument("scan_qp_threshold: bound must be positive");
  Stopwatch clock;
  VerificationReport r;
  r.id = std::string(which == QPFamily::Q ? "Q" : "P") + std::to_string(p);
  r.bound = bound;

  const EtaQuotientSpec spec = which == QPFamily::Q ? EtaQuotientSpec{{1, p * p}, {p, -p}}
                                                    : EtaQuotientSpec{{1, p}, {p, -1}};
  const auto C = eta_product_integers(spec, bound);
  const int unit = which == QPFamily::Q ? kronecker(8, p) : kronecker(-8, p);  // (2/p), (-2/p)
  r.violations = scan_range(1, bound, jobs, [&](std::int64_t n) -> std::optional<Violation> {
    const int want = unit * kronecker(remove_factor(n, p), p);
    if (sgn(C[n]) == want) return std::nullopt;
    return Violation{n, signed_str(want), sign_with_value(C[n])};
  });

  if (r.violations.empty()) {
    r.status = Status::pass;
  } else {
    std::int64_t worst = 0;
    for (const auto& v : r.violations) worst = std::max(worst, remove_factor(v.n, p));
    r.threshold = worst;
    r.status = 2 * worst <= bound ? Status::pass_with_threshold : Status::fail;
  }
  r.elapsed = clock.elapsed();
  return r;
}

VerificationReport verify_classnum(std::int64_t bound, const VerifyOptions& options) {
  if (bound < 1) throw std::invalid_argument("verify_classnum: bound must be positive");
  if (options.classnum_step != 3 && options.classnum_step != 9)
    throw std::invalid_argument("verify_classnum: recursion step must be 3 or 9");
  Stopwatch clock;
  VerificationReport r;
  r.id = options.classnum_step == 3 ? "CLASSNUM" : "CLASSNUM/9";
  r.bound = bound;

  // (i) Hurwitz decomposition of eta(8z)^2 eta(16z)^2 / eta(24z) = sum C(n) q^{8n+1}.
  const std::int64_t reach = std::max<std::int64_t>(sturm_bound(4, 576), 8 * bound + 1);
  auto cache = std::make_shared<HurwitzCache>();
  cache->tabulate(12 * reach);
  const auto H43 = IdentityPipeline::hurwitz_sieved(4, 3, cache);
  const auto H13 = IdentityPipeline::hurwitz_sieved(1, 3, cache);
  const auto rhs = (H43 - H13).sieve(24, 1) - make_rational(1, 2) * (H43 - H13).sieve(24, 17) -
                   (H43 + Rational(2) * H13).sieve(24, 9);
  const auto lhs = IdentityPipeline::eta({{8, 2}, {16, 2}, {24, -1}});
  absorb(r, compare_series(lhs.evaluate(reach), rhs.evaluate(reach), reach), "Hurwitz decomposition");

  // (ii) C(n) from Hurwitz values directly, v = 8n + 1: H(12v) - H(3v) for n = 0 (mod 3),
  // half its negative for n = 2 (mod 3), and -H(36w) + 3H(4w) - 2H(9w) + 6H(w), w = v/3, for
  // n = 1 (mod 3).
  const auto C = eta_product_integers(theorem_spec(Theorem::CLASSNUM), bound);
  const HurwitzCache& H = *cache;
  std::vector<Violation> closed;
  for (std::int64_t n = 0; n <= bound; ++n) {
    const std::int64_t v = 8 * n + 1;
    Rational want;
    if (n % 3 == 1) {
      const std::int64_t w = v / 3;
      want = -H(36 * w) + 3 * H(4 * w) - 2 * H(9 * w) + 6 * H(w);
    } else {
      want = H(12 * v) - H(3 * v);
      if (n % 3 == 2) want *= make_rational(-1, 2);
    }
    if (want != Rational(C[n])) closed.push_back({n, want.get_str(), C[n].get_str()});
  }
  absorb(r, closed, "Hurwitz closed forms");

  // (iii) the sign law, from the product expansion.
  const auto law = scan_range(0, bound, options.jobs, [&](std::int64_t n) -> std::optional<Violation> {
    const std::int64_t v = 8 * n + 1;
    const int a = ord(v, 3);
    const int chi = kronecker(remove_factor(v, 3), 3);
    int want = 0;
    std::string label;
    switch (a) {
      case 0:
        want = chi;
        break;
      case 1:
        want = -(chi + 1) / 2;
        break;
      case 2:
        want = -1;
        break;
      default: {
        const std::int64_t back = (n - 1) / options.classnum_step;
        want = sgn(C[back]);
        label = " = sgn C(" + std::to_string(back) + ")";
      }
    }
    if (sgn(C[n]) == want) return std::nullopt;
    return Violation{n, signed_str(want) + label, sign_with_value(C[n])};
  });
  absorb(r, law, "sign law");

  r.settle();
  r.elapsed = clock.elapsed();
  return r;
}

}  // namespace etaq
