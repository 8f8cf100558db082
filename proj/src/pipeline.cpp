#include "etaq/pipeline.hpp"

#include "etaq/arithmetic.hpp"

#include <algorithm>
#include <stdexcept>

namespace etaq {

struct IdentityPipeline::Node {
  virtual ~Node() = default;
  virtual CoeffSeries evaluate(std::int64_t bound) const = 0;
  virtual void demands(std::int64_t bound, std::vector<LeafDemand>& out) const = 0;
  virtual std::string describe() const = 0;
};

namespace {

using NodePtr = std::shared_ptr<const IdentityPipeline::Node>;

class Leaf : public IdentityPipeline::Node {
 public:
  using Producer = std::function<CoeffSeries(std::int64_t)>;
  Leaf(std::string label, Producer produce) : label_(std::move(label)), produce_(std::move(produce)) {}

  CoeffSeries evaluate(std::int64_t bound) const override {
    CoeffSeries s = produce_(bound);
    if (s.truncation() < bound)
      throw TruncationError(label_ + ": produced O(q^" + std::to_string(s.truncation() + 1) + "), need " +
                            std::to_string(bound));
    return s.truncated(bound);
  }
  void demands(std::int64_t bound, std::vector<LeafDemand>& out) const override { out.push_back({label_, bound}); }
  std::string describe() const override { return label_; }

 private:
  std::string label_;
  Producer produce_;
};

class Unary : public IdentityPipeline::Node {
 public:
  enum class Kind { U, V, sieve, twist, hecke };
  Unary(NodePtr inner, Kind kind, std::int64_t a, std::int64_t b = 0, CharacterSpec chi = CharacterSpec::trivial(),
        unsigned k = 0)
      : inner_(std::move(inner)), kind_(kind), a_(a), b_(b), chi_(chi), k_(k) {}

  std::int64_t input_bound(std::int64_t bound) const {
    switch (kind_) {
      case Kind::U:
      case Kind::hecke:
        return a_ * bound;
      case Kind::V:
        return bound / a_;
      default:
        return bound;
    }
  }

  CoeffSeries evaluate(std::int64_t bound) const override {
    const CoeffSeries in = inner_->evaluate(input_bound(bound));
    CoeffSeries out = [&] {
      switch (kind_) {
        case Kind::U:
          return op_U(in, a_);
        case Kind::V:
          return op_V(in, a_, bound);
        case Kind::sieve:
          return op_sieve(in, a_, b_);
        case Kind::twist:
          return op_twist(in, chi_);
        case Kind::hecke:
          return hecke_Tp(in, a_, k_, chi_);
      }
      throw std::logic_error("unreachable");
    }();
    // V from floor(B/l) reaches l*floor(B/l) only; the next nonzero index is past B, so pad.
    if (kind_ == Kind::V && out.truncation() < bound) {
      std::vector<Rational> c(out.coeffs().begin(), out.coeffs().end());
      c.resize(static_cast<std::size_t>(bound + 1));
      out = CoeffSeries(std::move(c));
    }
    return out.truncated(bound);
  }

  void demands(std::int64_t bound, std::vector<LeafDemand>& out) const override {
    inner_->demands(input_bound(bound), out);
  }

  std::string describe() const override {
    const std::string s = inner_->describe();
    switch (kind_) {
      case Kind::U:
        return s + "|U" + std::to_string(a_);
      case Kind::V:
        return s + "|V" + std::to_string(a_);
      case Kind::sieve:
        return s + "|S" + std::to_string(a_) + "," + std::to_string(b_);
      case Kind::twist:
        return s + "(x)" + chi_.to_string();
      case Kind::hecke:
        return s + "|T" + std::to_string(a_);
    }
    return s;
  }

 private:
  NodePtr inner_;
  Kind kind_;
  std::int64_t a_, b_;
  CharacterSpec chi_;
  unsigned k_;
};

class Linear : public IdentityPipeline::Node {
 public:
  struct Term {
    Rational scale;
    NodePtr node;
  };
  explicit Linear(std::vector<Term> terms) : terms_(std::move(terms)) {}

  CoeffSeries evaluate(std::int64_t bound) const override {
    auto total = CoeffSeries::zero(bound);
    for (const auto& t : terms_) total += t.scale * t.node->evaluate(bound);
    return total;
  }
  void demands(std::int64_t bound, std::vector<LeafDemand>& out) const override {
    for (const auto& t : terms_) t.node->demands(bound, out);
  }
  std::string describe() const override {
    std::string s;
    for (const auto& t : terms_) {
      const bool neg = sgn(t.scale) < 0;
      if (s.empty())
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      const Rational mag = abs(t.scale);
      if (mag != 1) s += mag.get_str() + "*";
      s += "(" + t.node->describe() + ")";
    }
    return s.empty() ? "0" : s;
  }
  const std::vector<Term>& terms() const { return terms_; }

 private:
  std::vector<Term> terms_;
};

std::vector<Linear::Term> as_terms(const NodePtr& n, const Rational& scale) {
  if (const auto* lin = dynamic_cast<const Linear*>(n.get())) {
    std::vector<Linear::Term> out;
    for (const auto& t : lin->terms()) out.push_back({scale * t.scale, t.node});
    return out;
  }
  return {{scale, n}};
}

}  // namespace

IdentityPipeline IdentityPipeline::eta(const EtaQuotientSpec& spec) {
  return IdentityPipeline(std::make_shared<Leaf>(
      "eta[" + spec.to_string() + "]", [spec](std::int64_t t) { return eta_quotient_fourier(spec, t); }));
}

IdentityPipeline IdentityPipeline::eta_product(const EtaQuotientSpec& spec) {
  return IdentityPipeline(std::make_shared<Leaf>("prod[" + spec.to_string() + "]", [spec](std::int64_t t) {
    return CoeffSeries::from_integers(std::span<const Integer>(eta_product_integers(spec, t)));
  }));
}

IdentityPipeline IdentityPipeline::eisenstein(const EisensteinSpec& spec) {
  return IdentityPipeline(
      std::make_shared<Leaf>(spec.to_string(), [spec](std::int64_t t) { return eisenstein_coeffs(spec, t); }));
}

IdentityPipeline IdentityPipeline::e2() {
  return IdentityPipeline(std::make_shared<Leaf>("E2", [](std::int64_t t) { return e2_coeffs(t); }));
}

IdentityPipeline IdentityPipeline::normalized_eisenstein(unsigned k, std::int64_t p) {
  return IdentityPipeline(
      std::make_shared<Leaf>("Enorm[" + std::to_string(k) + "," + std::to_string(p) + "]",
                             [k, p](std::int64_t t) { return etaq::normalized_eisenstein(k, p, t); }));
}

IdentityPipeline IdentityPipeline::hurwitz(std::shared_ptr<HurwitzCache> cache) {
  if (!cache) throw std::invalid_argument("IdentityPipeline::hurwitz: null cache");
  return IdentityPipeline(
      std::make_shared<Leaf>("H", [cache](std::int64_t t) { return hurwitz_series(t, *cache); }));
}

IdentityPipeline IdentityPipeline::hurwitz_sieved(std::int64_t l1, std::int64_t l2,
                                                  std::shared_ptr<HurwitzCache> cache) {
  if (!cache) throw std::invalid_argument("IdentityPipeline::hurwitz_sieved: null cache");
  return IdentityPipeline(std::make_shared<Leaf>(
      "H" + std::to_string(l1) + "," + std::to_string(l2),
      [l1, l2, cache](std::int64_t t) { return etaq::hurwitz_sieved(l1, l2, t, *cache); }));
}

IdentityPipeline IdentityPipeline::fixed(CoeffSeries coeffs, std::string label) {
  auto shared = std::make_shared<const CoeffSeries>(std::move(coeffs));
  return IdentityPipeline(std::make_shared<Leaf>(std::move(label), [shared](std::int64_t t) {
    return shared->truncation() >= t ? shared->truncated(t) : *shared;
  }));
}

IdentityPipeline IdentityPipeline::generator(std::function<Rational(std::int64_t)> coeff, std::string label) {
  return IdentityPipeline(std::make_shared<Leaf>(std::move(label), [coeff](std::int64_t t) {
    std::vector<Rational> c(static_cast<std::size_t>(t + 1));
    for (std::int64_t n = 0; n <= t; ++n) c[n] = coeff(n);
    return CoeffSeries(std::move(c));
  }));
}

IdentityPipeline IdentityPipeline::U(std::int64_t l) const {
  if (l < 1) throw std::invalid_argument("U: l must be positive");
  return IdentityPipeline(std::make_shared<Unary>(node_, Unary::Kind::U, l));
}

IdentityPipeline IdentityPipeline::V(std::int64_t l) const {
  if (l < 1) throw std::invalid_argument("V: l must be positive");
  return IdentityPipeline(std::make_shared<Unary>(node_, Unary::Kind::V, l));
}

IdentityPipeline IdentityPipeline::sieve(std::int64_t M, std::int64_t m) const {
  if (M < 1) throw std::invalid_argument("sieve: M must be positive");
  return IdentityPipeline(std::make_shared<Unary>(node_, Unary::Kind::sieve, M, m));
}

IdentityPipeline IdentityPipeline::twist(const CharacterSpec& chi) const {
  return IdentityPipeline(std::make_shared<Unary>(node_, Unary::Kind::twist, 1, 0, chi));
}

IdentityPipeline IdentityPipeline::hecke(std::int64_t p, unsigned k, const CharacterSpec& chi) const {
  if (!is_prime(p)) throw std::invalid_argument("hecke: p must be prime");
  return IdentityPipeline(std::make_shared<Unary>(node_, Unary::Kind::hecke, p, 0, chi, k));
}

IdentityPipeline operator+(const IdentityPipeline& a, const IdentityPipeline& b) {
  auto terms = as_terms(a.node_, 1);
  auto rest = as_terms(b.node_, 1);
  terms.insert(terms.end(), rest.begin(), rest.end());
  return IdentityPipeline(std::make_shared<Linear>(std::move(terms)));
}

IdentityPipeline operator-(const IdentityPipeline& a, const IdentityPipeline& b) {
  auto terms = as_terms(a.node_, 1);
  auto rest = as_terms(b.node_, -1);
  terms.insert(terms.end(), rest.begin(), rest.end());
  return IdentityPipeline(std::make_shared<Linear>(std::move(terms)));
}

IdentityPipeline operator-(const IdentityPipeline& a) {
  return IdentityPipeline(std::make_shared<Linear>(as_terms(a.node_, -1)));
}

IdentityPipeline operator*(const Rational& c, const IdentityPipeline& a) {
  return IdentityPipeline(std::make_shared<Linear>(as_terms(a.node_, c)));
}

CoeffSeries IdentityPipeline::evaluate(std::int64_t bound) const {
  if (bound < 0) throw std::invalid_argument("IdentityPipeline::evaluate: negative bound");
  return node_->evaluate(bound);
}

std::vector<LeafDemand> IdentityPipeline::leaf_demands(std::int64_t bound) const {
  std::vector<LeafDemand> out;
  node_->demands(bound, out);
  return out;
}

std::int64_t IdentityPipeline::required_truncation(std::int64_t bound) const {
  std::int64_t m = 0;
  for (const auto& d : leaf_demands(bound)) m = std::max(m, d.truncation);
  return m;
}

std::string IdentityPipeline::describe() const { return node_->describe(); }

}  // namespace etaq
