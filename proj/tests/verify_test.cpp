#include "etaq/arithmetic.hpp"
#include "etaq/catalog.hpp"
#include "etaq/verify.hpp"

#include <doctest.h>

using namespace etaq;

TEST_SUITE("verify") {

TEST_CASE("Sturm bound examples") {
  CHECK(sturm_bound(4, 144) == 48);
  CHECK(sturm_bound(6, 144) == 72);
  CHECK(sturm_bound(4, 16) == 4);
  CHECK(sturm_bound(4, 576) == 192);
  CHECK(sturm_bound(24, 1) == 1);
  CHECK(sturm_bound(3, 4) == 0);
  CHECK_THROWS(sturm_bound(0, 4));
  CHECK_THROWS(sturm_bound(4, 0));
}

TEST_CASE("Sturm bound is monotone in weight and along level multiples") {
  for (std::int64_t k2 = 1; k2 <= 24; ++k2)
    for (std::int64_t N = 1; N <= 150; ++N) {
      CHECK(sturm_bound(k2, N) <= sturm_bound(k2 + 1, N));
      CHECK(sturm_bound(k2, N) <= sturm_bound(k2, 2 * N));
      CHECK(sturm_bound(k2, N) <= sturm_bound(k2, 3 * N));
    }
}

TEST_CASE("verify_identity passes on a true identity and pinpoints a perturbation") {
  const auto lhs = IdentityPipeline::eta({{1, 9}, {3, -3}});
  const auto rhs = IdentityPipeline::generator(
      [](std::int64_t n) { return n == 0 ? Rational(1) : Rational(-9 * twisted_divisor_sum(n, -3, 2)); }, "Q3");
  const auto ok = verify_identity(lhs, rhs, 200, "Q3");
  CHECK(ok.status == Status::pass);
  CHECK(ok.violations.empty());

  auto values = rhs.evaluate(200);
  std::vector<Rational> c(values.coeffs().begin(), values.coeffs().end());
  c[77] += 1;
  c[150] -= 1;
  const auto bad = IdentityPipeline::fixed(CoeffSeries(c), "perturbed");
  const auto r1 = verify_identity(lhs, bad, 200);
  const auto r2 = verify_identity(bad, lhs, 200);
  CHECK(r1.status == Status::fail);
  REQUIRE(r1.violations.size() == 2);
  CHECK(r1.violations.front().n == 77);
  CHECK(r2.violations.front().n == 77);
  CHECK(r1.violations.size() == r2.violations.size());
  CHECK_THROWS_AS(verify_identity(lhs, IdentityPipeline::fixed(CoeffSeries(c), "short"), 201), TruncationError);
}

TEST_CASE("divisor-sum identity for eta^4 eta(2z)^2/eta(4z)^2 to 1000") {
  CHECK(verify_catalog_identity("sigma-16", 1000).ok());
  CHECK(verify_catalog_identity("sigma-16-e2", 1000).ok());
}

TEST_CASE("theorem ids") {
  CHECK(parse_theorem("M8a") == Theorem::M8a);
  CHECK_FALSE(parse_theorem("M9").has_value());
  for (const auto t : {Theorem::M1, Theorem::M2, Theorem::M3, Theorem::M8a, Theorem::M8b, Theorem::CONJ99a,
                       Theorem::CONJ99b, Theorem::CLASSNUM})
    CHECK(parse_theorem(to_string(t)) == t);
  CHECK_THROWS(verify_theorem(Theorem::M1, 0));
}

TEST_CASE("theorem sign patterns at small bounds") {
  const auto c = eta_product_integers(theorem_spec(Theorem::M8a), 100);
  CHECK(sgn(c[2]) == 0);
  CHECK(verify_theorem(Theorem::M8a, 100).ok());
  CHECK(verify_theorem(Theorem::M1, 1000).violations.empty());
  const auto m2 = eta_product_integers(theorem_spec(Theorem::M2), 3);
  CHECK(m2[1] == -3);
  CHECK(verify_theorem(Theorem::M2, 3).ok());
}

TEST_CASE("reports do not depend on the number of workers") {
  const auto a = scan_qp_threshold(7, QPFamily::Q, 1500, 1);
  const auto b = scan_qp_threshold(7, QPFamily::Q, 1500, 4);
  REQUIRE(a.violations.size() == b.violations.size());
  for (std::size_t i = 0; i < a.violations.size(); ++i) {
    CHECK(a.violations[i].n == b.violations[i].n);
    CHECK(a.violations[i].actual == b.violations[i].actual);
  }
  CHECK(a.threshold == b.threshold);
  const auto c1 = verify_classnum(300, {1, 3});
  const auto c3 = verify_classnum(300, {3, 3});
  CHECK(c1.violations.size() == c3.violations.size());
}

TEST_CASE("b2 lemma") {
  const auto b2 = eta_product_integers(theorem_spec(Theorem::M2), 1);
  CHECK(b2[0] == 1);
  CHECK(b2[1] == -3);
  CHECK(verify_lemma_b2(500).ok());
}

TEST_CASE("Eisenstein sign lemma") {
  CHECK(twisted_divisor_sum(9, -4, 2) == 73);
  CHECK(twisted_divisor_sum(3, -4, 2) == -8);
  CHECK(verify_eisenstein_sign(2000).ok());
  CHECK_THROWS(verify_eisenstein_sign(0));
}

TEST_CASE("f_ell and the claim ladders") {
  CHECK(f_ell(5, 2) == 3924);
  CHECK(f_ell(7, 2) == 73548);
  CHECK(f_ell(11, 2) == 1505844);
  CHECK(sgn(f_ell(13, 1)) > 0);
  CHECK(sgn(f_ell(11, 1)) < 0);
  const auto r = verify_claim_cases();
  CHECK(r.ok());
  CHECK(r.bound > 100);
}

TEST_CASE("r-count lemma") {
  const std::vector<std::int64_t> five = {1, 1, 2, 2, 2};
  const auto C = eta_product_integers(theorem_spec(Theorem::M8b), 1);
  CHECK(C[0] == 1);
  CHECK(C[1] == -rep_count_quadratic(five, 1));
  CHECK(verify_lemma_r_counts(500).ok());
  CHECK_THROWS(verify_lemma_r_counts(2001));
  CHECK_THROWS(verify_lemma_r_counts(0));
}

TEST_CASE("Q_p and P_p scans") {
  CHECK(scan_qp_threshold(3, QPFamily::Q, 1000).violations.empty());
  CHECK(scan_qp_threshold(5, QPFamily::P, 1000).violations.empty());
  const auto p7 = scan_qp_threshold(7, QPFamily::P, 2000);
  CHECK(p7.status == Status::pass_with_threshold);
  REQUIRE(p7.threshold.has_value());
  for (const auto& v : p7.violations) CHECK(remove_factor(v.n, 7) <= *p7.threshold);
  CHECK_THROWS(scan_qp_threshold(3, QPFamily::P, 100));
  CHECK_THROWS(scan_qp_threshold(9, QPFamily::Q, 100));
}

TEST_CASE("class number sign law examples") {
  const auto C = eta_product_integers(theorem_spec(Theorem::CLASSNUM), 10);
  CHECK(C[0] == 1);
  CHECK(C[4] == 0);  // 33 = 3 * 11, (11/3) = -1
  CHECK(C[3] == 7);
  CHECK(C[10] == -2);  // 81 = 3^4: the step-3 recursion points at C(3) > 0
  CHECK(C[1] == -2);   // the step-9 recursion points at C(1) < 0
  const auto printed = verify_classnum(100, {1, 3});
  CHECK(printed.status == Status::fail);
  CHECK(printed.violations.front().n == 10);
  CHECK(verify_classnum(1000, {1, 9}).ok());
  CHECK_THROWS(verify_classnum(10, {1, 5}));
}

TEST_CASE("catalog") {
  CHECK_THROWS_AS(catalog_entry("nope"), std::invalid_argument);
  for (const auto& e : identity_catalog()) CHECK_MESSAGE(verify_catalog_identity(e.name, 300).ok(), e.name);
}

TEST_CASE("report JSON schema") {
  VerificationReport r;
  r.id = "x";
  r.bound = 5;
  r.violations.push_back({3, "1", "-1"});
  r.settle();
  const auto j = r.to_json();
  CHECK(j["id"] == "x");
  CHECK(j["bound"] == 5);
  CHECK(j["status"] == "fail");
  CHECK(j["threshold"].is_null());
  CHECK(j["violations"][0]["n"] == 3);
  CHECK(j["violations"][0]["expected"] == "1");
  CHECK(j["elapsed_ms"].is_number_integer());
  r.threshold = 2;
  r.status = Status::pass_with_threshold;
  CHECK(r.to_json()["status"] == "pass-with-threshold");
  CHECK(r.to_json()["threshold"] == 2);
  CHECK(exit_code({r}) == 0);
  r.settle();
  CHECK(exit_code({r}) == 1);
}

}  // TEST_SUITE
