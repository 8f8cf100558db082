// etaq: expand eta-quotients and verify their identities and sign patterns.

#include "etaq/catalog.hpp"
#include "etaq/hurwitz.hpp"
#include "etaq/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr std::int64_t kIdentityBound = 1000;
constexpr std::int64_t kTheoremBound = 10000;
constexpr std::int64_t kRepCountBound = 2000;

constexpr int kUsageError = 2;

struct Output {
  bool json = false;

  int emit(const std::vector<etaq::VerificationReport>& reports) const {
    if (json) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : reports) arr.push_back(r.to_json());
      std::cout << (reports.size() == 1 ? arr[0] : arr).dump(2) << "\n";
    } else {
      for (const auto& r : reports) std::cout << r.summary() << "\n";
    }
    return etaq::exit_code(reports);
  }
};

// Parses a weight "k" or "k/2" into 2k.
std::int64_t parse_weight_times_two(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return 2 * std::stoll(text);
  if (text.substr(slash + 1) != "2") throw std::invalid_argument("weight must be an integer or half-integer");
  return std::stoll(text.substr(0, slash));
}

std::vector<etaq::VerificationReport> full_suite(unsigned jobs) {
  using namespace etaq;
  std::vector<VerificationReport> out;
  for (const auto t : {Theorem::M1, Theorem::M2, Theorem::M3, Theorem::M8a, Theorem::M8b, Theorem::CONJ99a,
                       Theorem::CONJ99b, Theorem::CLASSNUM})
    out.push_back(verify_theorem(t, kTheoremBound, {jobs, 3}));
  out.push_back(verify_lemma_b2(kIdentityBound));
  out.push_back(verify_eisenstein_sign(kRepCountBound));
  out.push_back(verify_claim_cases());
  out.push_back(verify_lemma_r_counts(kRepCountBound));
  for (const auto& e : identity_catalog()) out.push_back(verify_catalog_identity(e.name, e.default_bound));
  for (const auto p : {3, 5, 7}) out.push_back(scan_qp_threshold(p, QPFamily::Q, kRepCountBound, jobs));
  for (const auto p : {5, 7, 11}) out.push_back(scan_qp_threshold(p, QPFamily::P, kRepCountBound, jobs));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eta-quotient expansion and sign-pattern verification"};
  app.require_subcommand(1);
  Output out;
  unsigned jobs = 1;
  app.add_flag("--json", out.json, "Print JSON instead of text")->configurable(false);
  app.add_option("--jobs", jobs, "Worker threads for index scans")->check(CLI::Range(1u, 64u));
  app.fallthrough();

  auto* expand = app.add_subcommand("expand", "Coefficients of an eta-quotient");
  std::string eta_text;
  std::int64_t terms = 20;
  expand->add_option("--eta", eta_text, "Factors as \"j^d ...\", e.g. \"1^4 2^2 4^-2\"")->required();
  expand->add_option("-t,--terms", terms, "Number of coefficients")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Check a theorem's sign pattern or a lemma");
  std::string theorem_name, lemma_name;
  std::int64_t bound = 0;
  int classnum_step = 3;
  auto* theorem_opt = verify->add_option("--theorem", theorem_name, "M1 M2 M3 M8a M8b CONJ99a CONJ99b CLASSNUM");
  auto* lemma_opt = verify->add_option("--lemma", lemma_name, "b2 eisenstein-sign claim-cases r-counts");
  theorem_opt->excludes(lemma_opt);
  verify->add_option("-b,--bound", bound, "Largest index checked")->check(CLI::PositiveNumber);
  verify->add_option("--classnum-step", classnum_step, "Recursion step for CLASSNUM with a >= 3")
      ->check(CLI::IsMember({3, 9}));

  auto* identity = app.add_subcommand("identity", "Verify a named identity");
  std::string identity_name;
  bool list = false;
  identity->add_option("name", identity_name, "Identity name");
  identity->add_flag("--list", list, "List the available identities");
  identity->add_option("-b,--bound", bound, "Largest coefficient index compared")->check(CLI::NonNegativeNumber);

  auto* hurwitz = app.add_subcommand("hurwitz", "Table of Hurwitz class numbers H(D)");
  std::int64_t hurwitz_terms = 50;
  hurwitz->add_option("-t,--terms", hurwitz_terms, "Values D = 0 .. terms - 1")->check(CLI::PositiveNumber);

  auto* sturm = app.add_subcommand("sturm", "Sturm bound for weight k and level N");
  std::string weight_text;
  std::int64_t level = 0;
  sturm->add_option("--weight", weight_text, "Weight, integer or k/2")->required();
  sturm->add_option("--level", level, "Level N")->required()->check(CLI::PositiveNumber);

  auto* scan = app.add_subcommand("scan-qp", "Empirical threshold scan for Q_p or P_p");
  std::int64_t prime = 0;
  std::string family = "Q";
  scan->add_option("-p,--prime", prime, "Odd prime p")->required();
  scan->add_option("--family", family, "Q or P")->check(CLI::IsMember({"Q", "P"}));
  scan->add_option("-b,--bound", bound, "Largest index scanned")->check(CLI::PositiveNumber);

  auto* all = app.add_subcommand("all", "Run the full verification suite at default bounds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (expand->parsed()) {
      const auto spec = etaq::EtaQuotientSpec::parse(eta_text);
      const auto coeffs = etaq::eta_product_integers(spec, terms - 1);
      if (out.json) {
        nlohmann::json j;
        j["eta"] = spec.to_string();
        j["exponent24"] = spec.exponent24();
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : coeffs) arr.push_back(c.get_str());
        j["coefficients"] = std::move(arr);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "# q^(" << spec.exponent24() << "/24) * sum c(n) q^n\n";
        for (std::size_t n = 0; n < coeffs.size(); ++n) std::cout << n << " " << coeffs[n].get_str() << "\n";
      }
      return 0;
    }

    if (verify->parsed()) {
      if (theorem_name.empty() == lemma_name.empty()) {
        std::cerr << "verify: give exactly one of --theorem or --lemma\n";
        return kUsageError;
      }
      if (!theorem_name.empty()) {
        const auto t = etaq::parse_theorem(theorem_name);
        if (!t) {
          std::cerr << "verify: unknown theorem '" << theorem_name << "'\n";
          return kUsageError;
        }
        return out.emit({etaq::verify_theorem(*t, bound ? bound : kTheoremBound,
                                              {jobs, classnum_step})});
      }
      if (lemma_name == "b2") return out.emit({etaq::verify_lemma_b2(bound ? bound : kIdentityBound)});
      if (lemma_name == "eisenstein-sign")
        return out.emit({etaq::verify_eisenstein_sign(bound ? bound : kRepCountBound)});
      if (lemma_name == "claim-cases") return out.emit({etaq::verify_claim_cases()});
      if (lemma_name == "r-counts") return out.emit({etaq::verify_lemma_r_counts(bound ? bound : kRepCountBound)});
      std::cerr << "verify: unknown lemma '" << lemma_name << "'\n";
      return kUsageError;
    }

    if (identity->parsed()) {
      if (list) {
        for (const auto& e : etaq::identity_catalog()) std::cout << e.name << "  " << e.description << "\n";
        return 0;
      }
      if (identity_name.empty()) {
        std::cerr << "identity: name required (see --list)\n";
        return kUsageError;
      }
      const auto& entry = etaq::catalog_entry(identity_name);
      return out.emit({etaq::verify_catalog_identity(entry.name, bound ? bound : entry.default_bound)});
    }

    if (hurwitz->parsed()) {
      etaq::HurwitzCache cache;
      cache.tabulate(hurwitz_terms - 1);
      if (out.json) {
        nlohmann::json arr = nlohmann::json::array();
        for (std::int64_t D = 0; D < hurwitz_terms; ++D) arr.push_back({{"D", D}, {"H", cache(D).get_str()}});
        std::cout << arr.dump(2) << "\n";
      } else {
        for (std::int64_t D = 0; D < hurwitz_terms; ++D) std::cout << D << " " << cache(D).get_str() << "\n";
      }
      return 0;
    }

    if (sturm->parsed()) {
      const auto b = etaq::sturm_bound(parse_weight_times_two(weight_text), level);
      if (out.json)
        std::cout << nlohmann::json{{"weight", weight_text}, {"level", level}, {"sturm_bound", b}}.dump() << "\n";
      else
        std::cout << b << "\n";
      return 0;
    }

    if (scan->parsed()) {
      const auto which = family == "Q" ? etaq::QPFamily::Q : etaq::QPFamily::P;
      return out.emit({etaq::scan_qp_threshold(prime, which, bound ? bound : kRepCountBound, jobs)});
    }

    if (all->parsed()) return out.emit(full_suite(jobs));
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const etaq::TruncationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
