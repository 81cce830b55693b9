#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torsionlab/linear.hpp"
#include "torsionlab/prime.hpp"
#include "torsionlab/ring.hpp"

namespace torsionlab {

enum class IdealMode { Monomial, General };

/// Three-valued verdict for questions that are only semi-decidable outside
/// monomial mode.
enum class Truth { Yes, No, Unknown };

inline std::string_view to_string(Truth t) {
  switch (t) {
    case Truth::Yes: return "yes";
    case Truth::No: return "no";
    case Truth::Unknown: return "unknown";
  }
  return "unknown";
}

/// Bounds for searches that cannot be exact (general-mode colon and
/// membership) and for iterated constructions.
struct SearchConfig {
  std::size_t degree_bound = 4;
  std::size_t iteration_cap = 64;
};

/// Finitely generated ideal of a RingPresentation.
///
/// In monomial mode (all rules vanish, all generators monomials) the ideal is
/// stored as the minimal monomial generators of its preimage in the free
/// polynomial ring, which always contains the rule left-hand sides. Equality
/// of such ideals is equality of these lists. In general mode the generators
/// are elements scaled so that their grlex-largest term has coefficient one.
class IdealHandle {
 public:
  static IdealHandle zero(Ring ring) { return from_monomials(std::move(ring), {}); }
  static IdealHandle unit(Ring ring) { return from_monomials(std::move(ring), {Monomial{}}); }

  static IdealHandle from_monomials(Ring ring, std::vector<Monomial> gens) {
    for (auto& g : gens) ring->check_variables(g);
    if (ring->all_rules_vanish()) return from_lifted(std::move(ring), std::move(gens));
    std::vector<Element> els;
    for (auto& g : gens) els.push_back(Element::monomial(ring, g));
    return from_elements(std::move(ring), std::move(els));
  }

  static IdealHandle from_elements(Ring ring, std::vector<Element> gens) {
    for (auto& g : gens) require_same_ring(ring, g.ring());
    gens.erase(std::remove_if(gens.begin(), gens.end(), [](const Element& e) { return e.is_zero(); }),
               gens.end());
    bool monomial = ring->all_rules_vanish() &&
                    std::all_of(gens.begin(), gens.end(), [](const Element& e) { return e.is_term(); });
    if (monomial) {
      std::vector<Monomial> ms;
      for (auto& g : gens) ms.push_back(g.terms().begin()->first);
      return from_lifted(std::move(ring), std::move(ms));
    }
    IdealHandle h(std::move(ring), IdealMode::General);
    for (auto& g : gens) {
      Element scaled = g.scaled(1 / g.terms().rbegin()->second);
      if (std::find(h.elements_.begin(), h.elements_.end(), scaled) == h.elements_.end())
        h.elements_.push_back(std::move(scaled));
    }
    return h;
  }

  /// Monomial-mode ideal whose preimage in the free polynomial ring is
  /// generated by `gens` together with the rule left-hand sides.
  static IdealHandle from_lifted(Ring ring, std::vector<Monomial> gens) {
    if (!ring->all_rules_vanish())
      throw Error(ErrorKind::NotMonomialMode, "ring has non-vanishing rules");
    auto lhs = ring->rule_lhs();
    gens.insert(gens.end(), lhs.begin(), lhs.end());
    IdealHandle h(std::move(ring), IdealMode::Monomial);
    h.lifted_ = minimalize(std::move(gens));
    for (auto& g : h.lifted_)
      if (h.ring_->is_normal(g)) h.gens_.push_back(g);
    return h;
  }

  const Ring& ring() const noexcept { return ring_; }
  IdealMode mode() const noexcept { return mode_; }
  bool is_monomial() const noexcept { return mode_ == IdealMode::Monomial; }

  /// False when produced by a bounded search that may have missed generators.
  bool exact() const noexcept { return exact_; }
  void mark_inexact() noexcept { exact_ = false; }

  /// Generators in the ring (rule left-hand sides vanish there and are left out).
  const std::vector<Monomial>& monomial_generators() const {
    require_monomial("monomial_generators");
    return gens_;
  }

  /// Minimal generators of the preimage in the free polynomial ring.
  const std::vector<Monomial>& lifted_generators() const {
    require_monomial("lifted_generators");
    return lifted_;
  }

  std::vector<Element> generators() const {
    if (mode_ == IdealMode::General) return elements_;
    std::vector<Element> out;
    for (auto& g : gens_) out.push_back(Element::monomial(ring_, g));
    return out;
  }

  bool is_unit() const {
    if (mode_ == IdealMode::Monomial) return !lifted_.empty() && lifted_.front().is_one();
    return std::any_of(elements_.begin(), elements_.end(),
                       [](const Element& e) { return e.is_term() && e.terms().begin()->first.is_one(); });
  }

  bool is_zero() const { return mode_ == IdealMode::Monomial ? gens_.empty() : elements_.empty(); }

  /// Monomial mode: exact membership of a monomial by divisibility.
  bool contains_monomial(const Monomial& m) const {
    require_monomial("contains_monomial");
    return std::any_of(lifted_.begin(), lifted_.end(), [&](const Monomial& g) { return g.divides(m); });
  }

  void require_monomial(const char* what) const {
    if (mode_ != IdealMode::Monomial)
      throw Error(ErrorKind::NotMonomialMode, std::string(what) + " needs a monomial-mode ideal");
  }

  /// Canonical text, e.g. `ideal(X0*X1, X2^2)`.
  std::string to_string() const {
    std::string s = "ideal(";
    auto gens = generators();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (k) s += ", ";
      s += gens[k].to_string();
    }
    return s + ")";
  }

  /// Structural equality of monomial-mode ideals in the same ring.
  friend bool operator==(const IdealHandle& a, const IdealHandle& b) {
    if (!same_ring(a.ring_, b.ring_) || a.mode_ != b.mode_) return false;
    if (a.mode_ == IdealMode::Monomial) return a.lifted_ == b.lifted_;
    return a.elements_ == b.elements_;
  }

 private:
  IdealHandle(Ring ring, IdealMode mode) : ring_(std::move(ring)), mode_(mode) {}

  Ring ring_;
  IdealMode mode_;
  bool exact_ = true;
  std::vector<Monomial> lifted_;
  std::vector<Monomial> gens_;
  std::vector<Element> elements_;
};

struct MembershipAnswer {
  Truth verdict = Truth::Unknown;
  /// f = sum of multiplier * generator, by generator index.
  std::optional<std::vector<std::pair<std::size_t, Element>>> certificate;
  std::size_t search_bound = 0;
};

namespace detail {

inline std::vector<Monomial> normal_monomials(const Ring& ring, std::size_t max_degree) {
  auto all = monomials_up_to_degree(ring->num_vars(), max_degree);
  std::vector<Monomial> out;
  for (auto& m : all)
    if (ring->is_normal(m)) out.push_back(std::move(m));
  return out;
}

/// Searches f = sum h_k g_k with multiplier monomials drawn from `multipliers`.
inline std::optional<std::vector<std::pair<std::size_t, Element>>> search_certificate(
    const Element& f, const std::vector<Element>& gens, const std::vector<Monomial>& multipliers) {
  linear::Echelon<Monomial, GrlexLess> basis;
  const std::size_t width = multipliers.size();
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (std::size_t u = 0; u < width; ++u)
      basis.insert(linear::to_vector(gens[k].times_monomial(multipliers[u])), {{k * width + u, Rational(1)}});
  linear::Combination combo;
  if (!basis.contains(linear::to_vector(f), &combo)) return std::nullopt;
  std::vector<Element> mult(gens.size(), Element(f.ring()));
  for (auto& [tag, c] : combo) mult[tag / width] += Element::monomial(f.ring(), multipliers[tag % width], c);
  std::vector<std::pair<std::size_t, Element>> cert;
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (!mult[k].is_zero()) cert.emplace_back(k, std::move(mult[k]));
  return cert;
}

/// Bounded search for {g : g*f_j in I for every j}: candidates are normal
/// monomials of degree <= degree_bound; products are tested against the span
/// of multiplier-monomial multiples of I's generators.
inline IdealHandle bounded_colon(const IdealHandle& ideal, const std::vector<Element>& divisors,
                                 const SearchConfig& cfg) {
  const Ring& ring = ideal.ring();
  using Key = std::pair<std::size_t, Monomial>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      if (a.first != b.first) return a.first < b.first;
      return GrlexLess{}(a.second, b.second);
    }
  };
  using Vec = linear::SparseVector<Key, KeyLess>;

  std::uint64_t max_div = 0;
  for (auto& d : divisors) max_div = std::max(max_div, d.degree());
  auto candidates = normal_monomials(ring, cfg.degree_bound);
  auto multipliers = normal_monomials(ring, cfg.degree_bound + max_div);
  auto gens = ideal.generators();

  linear::Echelon<Key, KeyLess> basis;
  for (std::size_t j = 0; j < divisors.size(); ++j)
    for (auto& g : gens)
      for (auto& u : multipliers) {
        Vec v;
        auto prod = g.times_monomial(u);
        for (auto& [m, c] : prod.terms()) v.emplace(Key{j, m}, c);
        if (!v.empty()) basis.insert(std::move(v), {});
      }

  std::vector<Element> found = gens;
  for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
    Vec v;
    for (std::size_t j = 0; j < divisors.size(); ++j) {
      auto prod = divisors[j].times_monomial(candidates[idx]);
      for (auto& [m, c] : prod.terms()) v.emplace(Key{j, m}, c);
    }
    auto dep = basis.insert(std::move(v), {{idx, Rational(1)}});
    if (!dep) continue;
    Element g(ring);
    for (auto& [t, c] : *dep) g += Element::monomial(ring, candidates[t], c);
    if (!g.is_zero()) found.push_back(std::move(g));
  }
  auto out = IdealHandle::from_elements(ring, std::move(found));
  out.mark_inexact();
  return out;
}

}  // namespace detail

/// Membership of f in I. Exact (Yes/No) in monomial mode; otherwise searches
/// certificates with multiplier monomials of degree <= multiplier_degree_bound
/// and answers Yes or Unknown.
inline MembershipAnswer ideal_membership(const Element& f, const IdealHandle& I,
                                         std::size_t multiplier_degree_bound) {
  require_same_ring(f.ring(), I.ring());
  MembershipAnswer ans;
  ans.search_bound = multiplier_degree_bound;
  if (f.is_zero()) {
    ans.verdict = Truth::Yes;
    ans.certificate.emplace();
    return ans;
  }
  if (I.is_monomial()) {
    const auto& gens = I.monomial_generators();
    std::vector<Element> mult(gens.size(), Element(f.ring()));
    for (auto& [m, c] : f.terms()) {
      auto it = std::find_if(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
      if (it == gens.end()) {
        ans.verdict = Truth::No;
        return ans;
      }
      auto k = static_cast<std::size_t>(it - gens.begin());
      mult[k] += Element::monomial(f.ring(), m.divided_by(*it), c);
    }
    ans.verdict = Truth::Yes;
    ans.certificate.emplace();
    for (std::size_t k = 0; k < gens.size(); ++k)
      if (!mult[k].is_zero()) ans.certificate->emplace_back(k, std::move(mult[k]));
    return ans;
  }
  auto multipliers = detail::normal_monomials(f.ring(), multiplier_degree_bound);
  if (auto cert = detail::search_certificate(f, I.generators(), multipliers)) {
    ans.verdict = Truth::Yes;
    ans.certificate = std::move(cert);
  }
  return ans;
}

enum class BruteVerdict { Yes, NoUpToBound };

/// Independent oracle: linear algebra over all multiplier monomials of degree
/// <= degree_bound, irrespective of mode.
inline BruteVerdict brute_force_membership(const Element& f, const IdealHandle& I, std::size_t degree_bound) {
  require_same_ring(f.ring(), I.ring());
  if (f.is_zero()) return BruteVerdict::Yes;
  auto multipliers = monomials_up_to_degree(f.ring()->num_vars(), degree_bound);
  return detail::search_certificate(f, I.generators(), multipliers) ? BruteVerdict::Yes
                                                                    : BruteVerdict::NoUpToBound;
}

/// J inside I, exact in monomial mode.
inline Truth ideal_contains(const IdealHandle& I, const IdealHandle& J, std::size_t bound = 4) {
  require_same_ring(I.ring(), J.ring());
  bool unknown = false;
  for (auto& g : J.generators()) {
    auto v = ideal_membership(g, I, bound).verdict;
    if (v == Truth::No) return Truth::No;
    if (v == Truth::Unknown) unknown = true;
  }
  return unknown ? Truth::Unknown : Truth::Yes;
}

inline Truth ideal_equal(const IdealHandle& I, const IdealHandle& J, std::size_t bound = 4) {
  require_same_ring(I.ring(), J.ring());
  if (I.is_monomial() && J.is_monomial()) return I == J ? Truth::Yes : Truth::No;
  auto a = ideal_contains(I, J, bound);
  if (a == Truth::No) return Truth::No;
  auto b = ideal_contains(J, I, bound);
  if (b == Truth::No) return Truth::No;
  return (a == Truth::Yes && b == Truth::Yes) ? Truth::Yes : Truth::Unknown;
}

inline IdealHandle ideal_sum(const IdealHandle& I, const IdealHandle& J) {
  require_same_ring(I.ring(), J.ring());
  if (I.is_monomial() && J.is_monomial()) {
    auto g = I.lifted_generators();
    g.insert(g.end(), J.lifted_generators().begin(), J.lifted_generators().end());
    return IdealHandle::from_lifted(I.ring(), std::move(g));
  }
  auto g = I.generators();
  auto h = J.generators();
  g.insert(g.end(), h.begin(), h.end());
  return IdealHandle::from_elements(I.ring(), std::move(g));
}

inline IdealHandle ideal_product(const IdealHandle& I, const IdealHandle& J) {
  require_same_ring(I.ring(), J.ring());
  if (I.is_monomial() && J.is_monomial()) {
    std::vector<Monomial> g;
    for (auto& a : I.monomial_generators())
      for (auto& b : J.monomial_generators()) g.push_back(a * b);
    return IdealHandle::from_lifted(I.ring(), std::move(g));
  }
  std::vector<Element> g;
  for (auto& a : I.generators())
    for (auto& b : J.generators()) g.push_back(a * b);
  return IdealHandle::from_elements(I.ring(), std::move(g));
}

inline IdealHandle ideal_power(const IdealHandle& I, std::size_t n) {
  auto r = IdealHandle::unit(I.ring());
  for (std::size_t k = 0; k < n; ++k) r = ideal_product(r, I);
  return r;
}

inline IdealHandle ideal_intersection(const IdealHandle& I, const IdealHandle& J) {
  require_same_ring(I.ring(), J.ring());
  I.require_monomial("ideal_intersection");
  J.require_monomial("ideal_intersection");
  std::vector<Monomial> g;
  for (auto& a : I.lifted_generators())
    for (auto& b : J.lifted_generators()) g.push_back(lcm(a, b));
  return IdealHandle::from_lifted(I.ring(), std::move(g));
}

/// (I : f). Exact in monomial mode when f is a single term; otherwise a
/// bounded search returning a sub-ideal marked inexact.
inline IdealHandle ideal_colon(const IdealHandle& I, const Element& f, const SearchConfig& cfg = {}) {
  require_same_ring(I.ring(), f.ring());
  if (f.is_zero()) return IdealHandle::unit(I.ring());
  if (I.is_monomial() && f.is_term()) {
    const Monomial& m = f.terms().begin()->first;
    std::vector<Monomial> g;
    g.reserve(I.lifted_generators().size());
    for (auto& x : I.lifted_generators()) g.push_back(x.colon(m));
    return IdealHandle::from_lifted(I.ring(), std::move(g));
  }
  return detail::bounded_colon(I, {f}, cfg);
}

/// (I : J), the intersection of (I : g) over the generators g of J.
inline IdealHandle ideal_colon_ideal(const IdealHandle& I, const IdealHandle& J, const SearchConfig& cfg = {}) {
  require_same_ring(I.ring(), J.ring());
  if (J.is_zero()) return IdealHandle::unit(I.ring());
  if (I.is_monomial() && J.is_monomial()) {
    std::optional<IdealHandle> acc;
    for (auto& g : J.monomial_generators()) {
      auto c = ideal_colon(I, Element::monomial(I.ring(), g), cfg);
      acc = acc ? ideal_intersection(*acc, c) : c;
      if (*acc == I) break;  // cannot shrink below I
    }
    return *acc;
  }
  return detail::bounded_colon(I, J.generators(), cfg);
}

struct SaturationResult {
  IdealHandle ideal;
  bool stabilized = false;
  std::size_t steps = 0;
};

/// Ascending chain I, (I:J), ((I:J):J), ... until two consecutive terms agree
/// or `iteration_cap` colon steps have been taken. `steps` is the index of
/// the returned term.
inline SaturationResult ideal_saturation(const IdealHandle& I, const IdealHandle& J, std::size_t iteration_cap = 64,
                                         const SearchConfig& cfg = {}) {
  require_same_ring(I.ring(), J.ring());
  SaturationResult r{I, false, 0};
  for (std::size_t k = 0; k < iteration_cap; ++k) {
    auto next = ideal_colon_ideal(r.ideal, J, cfg);
    if (ideal_equal(next, r.ideal, cfg.degree_bound) == Truth::Yes) {
      r.stabilized = true;
      return r;
    }
    r.ideal = std::move(next);
    r.steps = k + 1;
  }
  return r;
}

/// Radical of a monomial-mode ideal: squarefree parts of the lifted generators.
inline IdealHandle ideal_radical(const IdealHandle& I) {
  I.require_monomial("ideal_radical");
  std::vector<Monomial> g;
  for (auto& m : I.lifted_generators()) g.push_back(m.radical());
  return IdealHandle::from_lifted(I.ring(), std::move(g));
}

/// Minimal transversals of a family of vertex sets (Berge's incremental
/// method). An empty edge admits no transversal.
inline std::vector<std::vector<VarIndex>> minimal_transversals(std::vector<std::vector<VarIndex>> edges) {
  std::sort(edges.begin(), edges.end(),
            [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
  std::vector<std::vector<VarIndex>> tr{{}};
  for (auto& edge : edges) {
    std::vector<std::vector<VarIndex>> next;
    for (auto& t : tr) {
      bool hit = std::any_of(edge.begin(), edge.end(),
                             [&](VarIndex v) { return std::binary_search(t.begin(), t.end(), v); });
      if (hit) {
        next.push_back(t);
        continue;
      }
      for (VarIndex v : edge) {
        auto u = t;
        u.insert(std::upper_bound(u.begin(), u.end(), v), v);
        next.push_back(std::move(u));
      }
    }
    std::sort(next.begin(), next.end(),
              [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    tr.clear();
    for (auto& t : next) {
      bool dominated = std::any_of(tr.begin(), tr.end(), [&](const auto& k) {
        return k.size() < t.size() && std::includes(t.begin(), t.end(), k.begin(), k.end());
      });
      if (!dominated) tr.push_back(std::move(t));
    }
  }
  std::sort(tr.begin(), tr.end());
  return tr;
}

/// Minimal primes of a proper monomial-mode ideal.
inline std::vector<MonomialPrime> minimal_primes(const IdealHandle& I) {
  I.require_monomial("minimal_primes");
  if (I.is_unit()) throw Error(ErrorKind::UnitIdeal, "the unit ideal has no minimal primes");
  std::vector<std::vector<VarIndex>> edges;
  for (auto& g : I.lifted_generators()) edges.push_back(g.support());
  std::vector<MonomialPrime> out;
  for (auto& t : minimal_transversals(std::move(edges))) out.emplace_back(std::move(t));
  std::sort(out.begin(), out.end());
  return out;
}

/// Ideal of the ring generated by the variables of a monomial prime.
inline IdealHandle prime_ideal(const Ring& ring, const MonomialPrime& p) {
  std::vector<Monomial> g;
  for (auto v : p.vars) g.push_back(Monomial::var(v));
  return IdealHandle::from_monomials(ring, std::move(g));
}

/// If a monomial-mode ideal is generated by variables, the prime it is.
inline std::optional<MonomialPrime> as_prime(const IdealHandle& I) {
  I.require_monomial("as_prime");
  std::vector<VarIndex> vars;
  for (auto& g : I.lifted_generators()) {
    if (g.degree() != 1) return std::nullopt;
    vars.push_back(g.factors().front().first);
  }
  return MonomialPrime(std::move(vars));
}

}  // namespace torsionlab
