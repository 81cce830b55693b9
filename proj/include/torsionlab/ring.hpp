#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "torsionlab/error.hpp"
#include "torsionlab/monomial.hpp"

namespace torsionlab {

using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_to_string(const Rational& q) { return q.str(); }

/// A coefficient times a monomial; the image of a single monomial under
/// rewriting is always zero or one of these.
struct Term {
  Rational coeff;
  Monomial mono;
  friend bool operator==(const Term&, const Term&) = default;
};

/// lhs -> 0, or lhs -> coeff * monomial with deg(monomial) < deg(lhs).
struct RewriteRule {
  Monomial lhs;
  std::optional<Term> rhs;

  static RewriteRule vanishing(Monomial lhs) { return {std::move(lhs), std::nullopt}; }
  static RewriteRule to_term(Monomial lhs, Rational c, Monomial m) {
    return {std::move(lhs), Term{std::move(c), std::move(m)}};
  }

  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

class RingPresentation;
using Ring = std::shared_ptr<const RingPresentation>;

/// A truncated polynomial ring K[X_0..X_{n-1}] modulo a degree-decreasing
/// monomial rewrite system. Immutable once built.
class RingPresentation {
 public:
  static Ring make(std::size_t num_vars, std::vector<RewriteRule> rules, std::string var_name = "X") {
    auto r = std::shared_ptr<RingPresentation>(new RingPresentation());
    r->num_vars_ = num_vars;
    r->var_name_ = std::move(var_name);
    for (auto& rule : rules) r->validate(rule);
    // Rule order drives the deterministic strategy: smallest variable index
    // first, then grlex.
    std::sort(rules.begin(), rules.end(), [](const RewriteRule& a, const RewriteRule& b) {
      auto va = a.lhs.factors().front().first, vb = b.lhs.factors().front().first;
      if (va != vb) return va < vb;
      return GrlexLess{}(a.lhs, b.lhs);
    });
    std::vector<RewriteRule> unique;
    for (auto& rule : rules) {
      if (!unique.empty() && unique.back().lhs == rule.lhs) {
        if (!(unique.back() == rule))
          throw Error(ErrorKind::InvalidRule,
                      "two rules share the left-hand side " + rule.lhs.to_string(r->var_name_));
        continue;
      }
      unique.push_back(std::move(rule));
    }
    r->rules_ = std::move(unique);
    r->all_vanish_ = std::all_of(r->rules_.begin(), r->rules_.end(),
                                 [](const RewriteRule& x) { return !x.rhs.has_value(); });
    return r;
  }

  /// Polynomial ring without relations.
  static Ring free(std::size_t num_vars, std::string var_name = "X") {
    return make(num_vars, {}, std::move(var_name));
  }

  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::vector<RewriteRule>& rules() const noexcept { return rules_; }
  const std::string& var_name() const noexcept { return var_name_; }
  std::size_t confluence_checked_to() const noexcept { return checked_to_; }

  /// True when every rule rewrites to zero, i.e. the ring is a quotient by a
  /// monomial ideal.
  bool all_rules_vanish() const noexcept { return all_vanish_; }

  std::vector<Monomial> rule_lhs() const {
    std::vector<Monomial> out;
    out.reserve(rules_.size());
    for (auto& r : rules_) out.push_back(r.lhs);
    return out;
  }

  std::size_t max_lhs_degree() const noexcept {
    std::size_t d = 0;
    for (auto& r : rules_) d = std::max<std::size_t>(d, r.lhs.degree());
    return d;
  }

  Ring with_confluence_checked_to(std::size_t degree) const {
    auto copy = std::make_shared<RingPresentation>(*this);
    copy->checked_to_ = std::max(checked_to_, degree);
    return copy;
  }

  bool same_presentation(const RingPresentation& o) const {
    return num_vars_ == o.num_vars_ && rules_ == o.rules_;
  }

  void check_variables(const Monomial& m) const {
    if (auto v = m.max_var(); v && *v >= num_vars_)
      throw Error(ErrorKind::VariableOutOfRange,
                  "variable index " + std::to_string(*v) + " outside 0.." +
                      std::to_string(num_vars_ == 0 ? 0 : num_vars_ - 1));
  }

  /// Index of the first rule (in strategy order) whose lhs divides `m`.
  std::optional<std::size_t> first_applicable(const Monomial& m) const {
    for (std::size_t k = 0; k < rules_.size(); ++k)
      if (rules_[k].lhs.divides(m)) return k;
    return std::nullopt;
  }

  bool is_normal(const Monomial& m) const { return !first_applicable(m).has_value(); }

  /// One rewrite step with rule k on m (lhs must divide m).
  std::optional<Term> apply(std::size_t k, const Monomial& m) const {
    const auto& rule = rules_[k];
    if (!rule.rhs) return std::nullopt;
    return Term{rule.rhs->coeff, rule.rhs->mono * m.divided_by(rule.lhs)};
  }

  /// Normal form by the deterministic strategy, without divergence checks.
  std::optional<Term> reduce_deterministic(const Monomial& m) const {
    Term cur{Rational(1), m};
    while (auto k = first_applicable(cur.mono)) {
      auto next = apply(*k, cur.mono);
      if (!next) return std::nullopt;
      cur.coeff *= next->coeff;
      cur.mono = std::move(next->mono);
    }
    return cur;
  }

  /// Normal form of a monomial. Beyond the certified confluence degree every
  /// reduction order is explored and disagreement raises NonConfluent.
  std::optional<Term> reduce(const Monomial& m) const {
    check_variables(m);
    if (all_vanish_) {
      if (first_applicable(m)) return std::nullopt;
      return Term{Rational(1), m};
    }
    if (m.degree() <= checked_to_) return reduce_deterministic(m);
    std::unordered_map<Monomial, std::optional<Term>, MonomialHash> memo;
    return explore(m, memo);
  }

 private:
  RingPresentation() = default;

  void validate(const RewriteRule& rule) const {
    if (rule.lhs.is_one()) throw Error(ErrorKind::InvalidRule, "rule with unit left-hand side");
    check_variables(rule.lhs);
    if (rule.rhs) {
      check_variables(rule.rhs->mono);
      if (rule.rhs->coeff == 0)
        throw Error(ErrorKind::InvalidRule, "zero coefficient on a monomial right-hand side");
      if (rule.rhs->mono.degree() >= rule.lhs.degree())
        throw Error(ErrorKind::InvalidRule,
                    "rule " + rule.lhs.to_string(var_name_) + " -> " +
                        rule.rhs->mono.to_string(var_name_) + " is not degree-decreasing");
    }
  }

  std::optional<Term> explore(const Monomial& m,
                              std::unordered_map<Monomial, std::optional<Term>, MonomialHash>& memo) const {
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    std::optional<std::optional<Term>> result;
    bool any = false;
    for (std::size_t k = 0; k < rules_.size(); ++k) {
      if (!rules_[k].lhs.divides(m)) continue;
      any = true;
      std::optional<Term> nf;
      if (auto step = apply(k, m)) {
        nf = explore(step->mono, memo);
        if (nf) nf->coeff *= step->coeff;
      }
      if (!result) {
        result = nf;
      } else if (*result != nf) {
        throw Error(ErrorKind::NonConfluent,
                    "monomial " + m.to_string(var_name_) + " has distinct normal forms");
      }
    }
    std::optional<Term> out = any ? *result : std::optional<Term>(Term{Rational(1), m});
    memo.emplace(m, out);
    return out;
  }

  std::size_t num_vars_ = 0;
  std::vector<RewriteRule> rules_;
  std::string var_name_ = "X";
  std::size_t checked_to_ = 0;
  bool all_vanish_ = true;
};

inline bool same_ring(const Ring& a, const Ring& b) {
  return a == b || (a && b && a->same_presentation(*b));
}

inline void require_same_ring(const Ring& a, const Ring& b) {
  if (!same_ring(a, b)) throw Error(ErrorKind::RingMismatch, "operands live in different rings");
}

/// Normal-form linear combination of monomials with rational coefficients.
class Element {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexLess>;

  explicit Element(Ring ring) : ring_(std::move(ring)) {}

  static Element constant(Ring ring, const Rational& c) {
    return monomial(std::move(ring), Monomial{}, c);
  }
  static Element one(Ring ring) { return constant(std::move(ring), Rational(1)); }
  static Element variable(Ring ring, VarIndex v) {
    return monomial(std::move(ring), Monomial::var(v));
  }
  static Element monomial(Ring ring, const Monomial& m, const Rational& c = Rational(1)) {
    Element e(std::move(ring));
    e.add_term(m, c);
    return e;
  }

  const Ring& ring() const noexcept { return ring_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Single term with coefficient one.
  bool is_monomial() const noexcept { return terms_.size() == 1 && terms_.begin()->second == 1; }
  bool is_term() const noexcept { return terms_.size() == 1; }

  std::uint64_t degree() const noexcept {
    std::uint64_t d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  /// Adds c * normal_form(m).
  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto nf = ring_->reduce(m);
    if (!nf) return;
    add_normal(nf->mono, c * nf->coeff);
  }

  Element& operator+=(const Element& o) {
    require_same_ring(ring_, o.ring_);
    for (auto& [m, c] : o.terms_) add_normal(m, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    require_same_ring(ring_, o.ring_);
    for (auto& [m, c] : o.terms_) add_normal(m, -c);
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  Element operator-() const {
    Element r(ring_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend Element operator*(const Element& a, const Element& b) {
    require_same_ring(a.ring_, b.ring_);
    Element r(a.ring_);
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  Element scaled(const Rational& c) const {
    Element r(ring_);
    if (c == 0) return r;
    for (auto& [m, x] : terms_) r.terms_.emplace(m, x * c);
    return r;
  }

  Element times_monomial(const Monomial& u) const {
    Element r(ring_);
    for (auto& [m, c] : terms_) r.add_term(m * u, c);
    return r;
  }

  Element pow(unsigned n) const {
    Element r = one(ring_);
    for (unsigned k = 0; k < n; ++k) r = r * *this;
    return r;
  }

  friend bool operator==(const Element& a, const Element& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }

  /// Canonical text: ascending grlex, e.g. `2*X0*X1 + -1*X2^3`.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [m, c] : terms_) {
      if (!first) s += " + ";
      first = false;
      if (m.is_one()) {
        s += rational_to_string(c);
      } else if (c == 1) {
        s += m.to_string(ring_->var_name());
      } else {
        s += rational_to_string(c) + "*" + m.to_string(ring_->var_name());
      }
    }
    return s;
  }

 private:
  void add_normal(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Ring ring_;
  TermMap terms_;
};

inline Element normal_form(const Monomial& m, const Ring& ring) { return Element::monomial(ring, m); }
inline Element element_add(const Element& f, const Element& g) { return f + g; }
inline Element element_mul(const Element& f, const Element& g) { return f * g; }

struct CriticalPair {
  std::size_t rule_a = 0;
  std::size_t rule_b = 0;
  Monomial overlap;
  Element via_a;
  Element via_b;
  bool joinable = false;
};

struct ConfluenceReport {
  std::size_t degree_bound = 0;
  bool bound_covers_rules = true;
  std::vector<CriticalPair> pairs;
  bool all_joinable = true;
  /// The input ring marked as confluent up to `degree_bound`; null on failure.
  Ring certified;

  std::size_t non_joinable() const {
    return static_cast<std::size_t>(
        std::count_if(pairs.begin(), pairs.end(), [](const CriticalPair& p) { return !p.joinable; }));
  }
};

/// Checks every critical pair of overlapping left-hand sides whose overlap has
/// degree at most `degree_bound`. Both one-step reducts of the overlap are
/// brought to normal form by the deterministic strategy and compared. Pairs are
/// processed by increasing overlap degree, so a pass certifies unique normal
/// forms for all monomials up to the bound.
inline ConfluenceReport check_local_confluence(const Ring& ring, std::size_t degree_bound) {
  ConfluenceReport report;
  report.degree_bound = degree_bound;
  report.bound_covers_rules = degree_bound >= ring->max_lhs_degree();
  const auto& rules = ring->rules();

  // Reducts are normalized in a ring that trusts the deterministic strategy.
  auto trusting = ring->with_confluence_checked_to(degree_bound);
  auto normalize = [&](const std::optional<Term>& t) {
    Element e(trusting);
    if (t) {
      if (auto nf = trusting->reduce_deterministic(t->mono)) {
        e = Element::monomial(trusting, nf->mono, nf->coeff * t->coeff);
      }
    }
    return e;
  };

  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = i + 1; j < rules.size(); ++j) {
      if (rules[i].lhs.coprime_with(rules[j].lhs)) continue;
      auto overlap = lcm(rules[i].lhs, rules[j].lhs);
      if (overlap.degree() > degree_bound) continue;
      CriticalPair cp{i, j, overlap, normalize(ring->apply(i, overlap)),
                      normalize(ring->apply(j, overlap)), false};
      cp.joinable = cp.via_a.terms() == cp.via_b.terms();
      report.all_joinable = report.all_joinable && cp.joinable;
      report.pairs.push_back(std::move(cp));
    }
  }
  std::stable_sort(report.pairs.begin(), report.pairs.end(), [](const CriticalPair& a, const CriticalPair& b) {
    return a.overlap.degree() < b.overlap.degree();
  });
  if (report.all_joinable && report.bound_covers_rules)
    report.certified = ring->with_confluence_checked_to(degree_bound);
  return report;
}

}  // namespace torsionlab
