#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "torsionlab/dsl/parser.hpp"
#include "torsionlab/ideal.hpp"
#include "torsionlab/pattern.hpp"

namespace torsionlab {

inline constexpr std::int64_t kMaxFamilyLevel = 15;

/// Levels lo..hi with a stabilization window.
struct Schedule {
  std::vector<std::int64_t> levels;
  std::size_t window = 3;

  static Schedule range(std::int64_t lo, std::int64_t hi, std::size_t window) {
    Schedule s;
    for (auto n = lo; n <= hi; ++n) s.levels.push_back(n);
    s.window = window;
    s.validate();
    return s;
  }

  void validate() const {
    if (window < 2) throw Error(ErrorKind::InvalidArgument, "stability window must be at least 2");
    if (levels.empty()) throw Error(ErrorKind::InvalidArgument, "empty level schedule");
    if (levels.size() < window)
      throw Error(ErrorKind::InvalidArgument, "schedule shorter than the stability window");
    for (std::size_t k = 0; k < levels.size(); ++k) {
      if (levels[k] < 0 || levels[k] > kMaxFamilyLevel)
        throw Error(ErrorKind::InvalidArgument, "level " + std::to_string(levels[k]) + " outside 0.." +
                                                    std::to_string(kMaxFamilyLevel));
      if (k && levels[k] <= levels[k - 1]) throw Error(ErrorKind::InvalidArgument, "schedule must increase");
    }
  }
};

struct StabilizationQuery {
  FamilySpec family;
  std::function<std::string(const FamilyInstance&)> query;
  Schedule schedule;
};

struct StableAnswer {
  /// Value at the last level.
  std::string value;
  std::vector<std::pair<std::int64_t, std::string>> evidence;
  bool stable = false;
};

/// True iff the last `window` values coincide.
inline bool window_stable(const std::vector<std::string>& values, std::size_t window) {
  if (values.size() < window) return false;
  return std::all_of(values.end() - static_cast<std::ptrdiff_t>(window), values.end(),
                     [&](const std::string& v) { return v == values.back(); });
}

inline StableAnswer stable_query(const StabilizationQuery& q, const SearchConfig& cfg = {}) {
  q.schedule.validate();
  StableAnswer a;
  std::vector<std::string> values;
  for (auto n : q.schedule.levels) {
    auto v = q.query(instantiate(q.family, n, cfg));
    a.evidence.emplace_back(n, v);
    values.push_back(std::move(v));
  }
  a.value = values.back();
  a.stable = window_stable(values, q.schedule.window);
  return a;
}

// ---------------------------------------------------------------------------
// Rings whose rules are all X_i^2 -> X_i: a monomial generates exactly the span
// of the normal monomials it divides, so membership reduces to divisibility.

class IdempotentMonomialIdeal {
 public:
  IdempotentMonomialIdeal(Ring ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
    for (auto& r : ring_->rules()) {
      auto f = r.lhs.factors();
      bool idem = f.size() == 1 && f[0].second == 2 && r.rhs && r.rhs->coeff == 1 &&
                  r.rhs->mono == Monomial::var(f[0].first);
      if (!idem) throw Error(ErrorKind::InvalidArgument, "ring has a rule other than X^2 -> X");
    }
    for (auto& g : gens) {
      auto nf = ring_->reduce(g);
      if (nf) gens_.push_back(nf->mono);
    }
    gens_ = minimalize(std::move(gens_));
  }

  const std::vector<Monomial>& generators() const { return gens_; }

  bool contains(const Monomial& m) const {
    auto nf = ring_->reduce(m);
    if (!nf) return true;
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(nf->mono); });
  }

  bool contains(const Element& f) const {
    return std::all_of(f.terms().begin(), f.terms().end(), [&](const auto& t) { return contains(t.first); });
  }

  bool is_unit() const { return contains(Monomial{}); }

  /// (I : u) for a monomial u.
  IdempotentMonomialIdeal colon(const Monomial& u) const {
    auto nu = ring_->reduce(u);
    if (!nu) return {ring_, {Monomial{}}};
    std::vector<Monomial> g;
    for (auto& x : gens_) g.push_back(x.colon(nu->mono));
    return {ring_, std::move(g)};
  }

 private:
  Ring ring_;
  std::vector<Monomial> gens_;
};

/// Monomial generators of an ideal given by monomial generators in any mode.
inline std::vector<Monomial> generator_monomials(const IdealHandle& I) {
  std::vector<Monomial> out;
  for (auto& g : I.generators()) {
    if (!g.is_term()) throw Error(ErrorKind::InvalidArgument, "ideal is not generated by monomials");
    out.push_back(g.terms().begin()->first);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Example registry.

struct ClaimValue {
  std::string name;
  bool holds = false;
};

struct ExampleEntry {
  std::string tag;
  std::string summary;
  std::string source;
  std::vector<std::pair<std::string, std::string>> claims;  // name, description
  std::function<std::vector<ClaimValue>(const FamilyInstance&)> evaluate;

  FamilySpec family() const {
    auto script = dsl::parse(source);
    for (auto& st : script.statements)
      if (auto* f = std::get_if<FamilySpec>(&st.node)) return *f;
    throw Error(ErrorKind::PatternError, "registry entry " + tag + " has no family");
  }
};

namespace detail {

inline Monomial squarefree_run(std::int64_t from, std::int64_t to) {
  Monomial m;
  for (auto v = from; v <= to; ++v) m.multiply_var(static_cast<VarIndex>(v), 1);
  return m;
}

inline bool nonzero(const Ring& R, const Monomial& m) { return R->reduce(m).has_value(); }

/// Normal monomials on variables [0, k) of total degree <= d.
inline std::vector<Monomial> normal_monomials_below(const Ring& R, std::size_t k, std::size_t d) {
  std::vector<Monomial> out;
  for (auto& m : monomials_up_to_degree(k, d))
    if (R->is_normal(m)) out.push_back(m);
  return out;
}

/// f * probe is nonzero for every f, and distinct f give distinct products.
inline bool probe_injective(const Ring& R, const std::vector<Monomial>& fs, const Monomial& probe) {
  std::set<Monomial, GrlexLess> seen;
  for (auto& f : fs) {
    auto nf = R->reduce(f * probe);
    if (!nf || !seen.insert(nf->mono).second) return false;
  }
  return true;
}

/// Largest degree of a monomial outside the monomial ideal c, or nullopt if
/// more than `limit` such monomials exist.
inline std::optional<std::size_t> max_standard_degree(const IdealHandle& c, std::size_t limit = 200000) {
  c.require_monomial("max_standard_degree");
  std::set<Monomial, GrlexLess> seen;
  std::vector<Monomial> frontier;
  if (!c.contains_monomial(Monomial{})) frontier.push_back(Monomial{});
  std::size_t best = 0;
  bool any = false;
  while (!frontier.empty()) {
    auto m = frontier.back();
    frontier.pop_back();
    if (!seen.insert(m).second) continue;
    if (seen.size() > limit) return std::nullopt;
    any = true;
    best = std::max<std::size_t>(best, static_cast<std::size_t>(m.degree()));
    for (std::size_t v = 0; v < c.ring()->num_vars(); ++v) {
      auto next = m * Monomial::var(static_cast<VarIndex>(v));
      if (!c.contains_monomial(next) && !seen.count(next)) frontier.push_back(next);
    }
  }
  return any ? std::optional<std::size_t>(best) : std::optional<std::size_t>(0);
}

/// Verifies sum(multiplier * generator) == f for a membership certificate.
inline bool certificate_checks(const Element& f, const IdealHandle& I, const MembershipAnswer& ans) {
  if (ans.verdict != Truth::Yes || !ans.certificate) return false;
  auto gens = I.generators();
  Element sum(f.ring());
  for (auto& [k, mult] : *ans.certificate) sum += mult * gens.at(k);
  return sum == f;
}

inline Element var(const Ring& R, std::int64_t i) { return Element::variable(R, static_cast<VarIndex>(i)); }

inline ClaimValue confluence_claim(const FamilyInstance& inst) {
  return {"ring_confluent", inst.confluence.all_joinable && inst.confluence.degree_bound >= kFamilyConfluenceDegree};
}

inline std::vector<ClaimValue> idem50a_claims(const FamilyInstance& inst) {
  const auto& R = inst.ring;
  auto N = inst.level;
  const auto& a = inst.ideal("a");
  auto a2 = ideal_power(a, 2);
  bool idem = true, in_square = true;
  for (std::int64_t i = 0; i <= N; ++i) {
    auto x = var(R, i);
    idem = idem && x * x == x;
    in_square = in_square && certificate_checks(x, a2, ideal_membership(x, a2, 1));
  }
  bool unit_outside = a.is_monomial() ? !a.is_unit() : !IdempotentMonomialIdeal(R, generator_monomials(a)).is_unit();
  return {confluence_claim(inst), {"generators_idempotent", idem}, {"generators_in_square", in_square},
          {"unit_outside_a", unit_outside}};
}

inline std::vector<ClaimValue> idem50b_claims(const FamilyInstance& inst) {
  const auto& R = inst.ring;
  auto N = inst.level;
  auto a2 = ideal_power(inst.ideal("a"), 2);
  bool square_map = true, in_square = true;
  for (std::int64_t i = 0; i < N; ++i) {
    auto x = var(R, i), y = var(R, i + 1);
    square_map = square_map && x * x == y;
    in_square = in_square && certificate_checks(y, a2, ideal_membership(y, a2, 1));
  }
  auto top = var(R, N);
  bool top_free = !(top * top == top) && (top * top).is_term();
  return {confluence_claim(inst), {"square_map", square_map}, {"successor_in_square", in_square},
          {"top_variable_square_normal", top_free}};
}

inline std::vector<ClaimValue> idem50c_claims(const FamilyInstance& inst) {
  const auto& R = inst.ring;
  auto N = inst.level;
  IdempotentMonomialIdeal a(R, generator_monomials(inst.ideal("a")));
  IdempotentMonomialIdeal b(R, generator_monomials(inst.ideal("b")));
  auto one = Element::one(R);

  bool relations = true, one_minus_outside = true;
  for (std::int64_t i = 1; i <= N; ++i) {
    auto x = var(R, i);
    relations = relations && (x * (one - x)).is_zero();
    one_minus_outside = one_minus_outside && !a.contains(one - x);
  }
  auto x0 = var(R, 0);
  relations = relations && !(x0 * x0 == x0);

  auto colon_x0 = b.colon(Monomial::var(0));
  bool colon_inside = std::all_of(colon_x0.generators().begin(), colon_x0.generators().end(),
                                  [&](const Monomial& g) { return a.contains(g); });

  // The bounded general-mode search must agree: whatever it finds lies in a.
  SearchConfig cfg{2, 64};
  auto searched = ideal_colon(inst.ideal("b"), x0, cfg);
  bool search_inside = true;
  for (auto& g : searched.generators()) search_inside = search_inside && a.contains(g);

  // For monomials f outside b with deg_X0(f) <= p, f * X_{p+1} stays outside b.
  bool colon_by_a = true;
  for (std::int64_t p = 0; p + 1 <= N && colon_by_a; ++p) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << N) && colon_by_a; ++mask) {
      for (std::int64_t e = 0; e <= p && colon_by_a; ++e) {
        Monomial f = Monomial::var(0, static_cast<Exponent>(e));
        if (e == 0) f = Monomial{};
        for (std::int64_t v = 1; v <= N; ++v)
          if (mask >> (v - 1) & 1) f.multiply_var(static_cast<VarIndex>(v), 1);
        if (b.contains(f)) continue;
        colon_by_a = !b.contains(f * Monomial::var(static_cast<VarIndex>(p + 1)));
      }
    }
  }
  return {confluence_claim(inst),
          {"idempotent_relations", relations},
          {"one_minus_generator_outside_a", one_minus_outside},
          {"colon_by_x0_inside_a", colon_inside},
          {"bounded_colon_by_x0_inside_a", search_inside},
          {"colon_by_a_probe", colon_by_a},
          {"unit_outside_a", !a.is_unit()}};
}

/// a^k * <X_k> inside b (or zero when b is the zero ideal) for k in [lo, hi].
inline bool torsion_generators(const FamilyInstance& inst, std::int64_t shift, std::int64_t lo, std::int64_t hi,
                               const IdealHandle& target) {
  const auto& a = inst.ideal("a");
  auto power = ideal_power(a, static_cast<std::size_t>(std::max<std::int64_t>(lo + shift, 0)));
  for (auto k = lo; k <= hi; ++k) {
    auto gen = IdealHandle::from_monomials(inst.ring, {Monomial::var(static_cast<VarIndex>(k))});
    if (ideal_contains(target, ideal_product(power, gen)) != Truth::Yes) return false;
    power = ideal_product(power, a);
  }
  return true;
}

inline std::vector<ClaimValue> nil40a_claims(const FamilyInstance& inst) {
  const auto& R = inst.ring;
  auto N = inst.level;
  const auto& a = inst.ideal("a");
  const auto& b = inst.ideal("b");

  // X_1...X_n is nonzero and lies in a^n, so 1 is not killed by a^n.
  bool ring_probe = true;
  auto power = a;
  for (std::int64_t n = 1; n <= N - 1; ++n) {
    auto probe = squarefree_run(1, n);
    ring_probe = ring_probe && nonzero(R, probe) && power.contains_monomial(probe);
    power = ideal_product(power, a);
  }
  // Fresh variables: f on X_0..X_{k-1} times X_k...X_{k+n-1} is injective.
  bool fresh = true;
  for (std::int64_t k = 1; k <= 3 && k <= N; ++k) {
    auto fs = normal_monomials_below(R, static_cast<std::size_t>(k), static_cast<std::size_t>(k));
    for (std::int64_t n = 1; k + n - 1 <= N; ++n) fresh = fresh && probe_injective(R, fs, squarefree_run(k, k + n - 1));
  }
  bool quotient_gens = torsion_generators(inst, 0, 0, N - 2, b);

  // X_n...X_{2n-1} lies in a^n but not in b.
  bool unit_probe = true;
  power = a;
  for (std::int64_t n = 1; 2 * n - 1 <= N; ++n) {
    auto probe = squarefree_run(n, 2 * n - 1);
    unit_probe = unit_probe && power.contains_monomial(probe) && !b.contains_monomial(probe);
    power = ideal_product(power, a);
  }
  return {confluence_claim(inst),
          {"ring_torsion_probe", ring_probe},
          {"fresh_variable_probe", fresh},
          {"quotient_generators_torsion", quotient_gens},
          {"unit_not_torsion_mod_b", unit_probe},
          {"a_power_nonzero_at_level", nonzero(R, squarefree_run(0, N))}};
}

inline std::vector<ClaimValue> nil40b_claims(const FamilyInstance& inst) {
  const auto& R = inst.ring;
  auto N = inst.level;
  const auto& a = inst.ideal("a");
  bool gens = torsion_generators(inst, 0, 0, N, IdealHandle::zero(R));
  bool unit_probe = true;
  auto power = a;
  for (std::int64_t n = 1; n <= N; ++n) {
    auto probe = Monomial::var(static_cast<VarIndex>(n), static_cast<Exponent>(n));
    unit_probe = unit_probe && nonzero(R, probe) && power.contains_monomial(probe);
    power = ideal_product(power, a);
  }
  return {confluence_claim(inst), {"generators_torsion", gens}, {"unit_not_torsion_probe", unit_probe}};
}

inline std::vector<ClaimValue> nil40c_claims(const FamilyInstance& inst) {
  const auto& R = inst.ring;
  auto N = inst.level;
  const auto& a = inst.ideal("a");
  bool gens = torsion_generators(inst, 1, 0, N, IdealHandle::zero(R));
  bool unit_probe = true;
  auto power = a;
  for (std::int64_t n = 1; 2 * n - 1 <= N; ++n) {
    auto probe = squarefree_run(n, 2 * n - 1);
    unit_probe = unit_probe && nonzero(R, probe) && power.contains_monomial(probe);
    power = ideal_product(power, a);
  }
  return {confluence_claim(inst), {"generators_torsion", gens}, {"unit_not_torsion_probe", unit_probe}};
}

inline std::vector<ClaimValue> nil40d_claims(const FamilyInstance& inst) {
  const auto& R = inst.ring;
  auto N = inst.level;
  const auto& a = inst.ideal("a");
  const auto& b = inst.ideal("b");

  bool fresh = true;
  for (std::int64_t k = 1; k <= N; ++k) {
    auto fs = normal_monomials_below(R, static_cast<std::size_t>(k), 2);
    for (std::int64_t n = 1; n <= k; ++n)
      fresh = fresh && probe_injective(R, fs, Monomial::var(static_cast<VarIndex>(k), static_cast<Exponent>(n)));
  }
  // a^i X_i inside b iff every monomial outside (b : X_i) has degree < i.
  bool quotient_gens = true;
  for (std::int64_t i = 0; i <= N; ++i) {
    auto c = ideal_colon(b, var(R, i));
    auto d = max_standard_degree(c);
    quotient_gens = quotient_gens && d && (c.is_unit() || static_cast<std::int64_t>(*d) < i);
  }
  bool unit_probe = true;
  for (std::int64_t n = 1; n <= N; ++n) {
    auto probe = Monomial::var(static_cast<VarIndex>(n), static_cast<Exponent>(n));
    unit_probe = unit_probe && nonzero(R, probe) && !b.contains_monomial(probe);
  }
  auto colon = ideal_colon_ideal(b, ideal_power(a, 2));
  return {confluence_claim(inst),
          {"fresh_power_probe", fresh},
          {"quotient_generators_torsion", quotient_gens},
          {"unit_not_torsion_probe", unit_probe},
          {"unit_outside_colon_by_a_squared", !colon.is_unit()}};
}

}  // namespace detail

inline const std::vector<ExampleEntry>& example_registry() {
  static const std::vector<ExampleEntry> registry = {
      {"idem50A",
       "idempotent variables; every X_i lies in a^2",
       R"(family idem50A(N) {
  ring R = vars X[0..N] rules { X[i]^2 -> X[i] for i in 0..N }
  ideal a = < X[i] for i in 0..N >
})",
       {{"ring_confluent", "rules are locally confluent up to degree 8"},
        {"generators_idempotent", "X_i * X_i = X_i for every i"},
        {"generators_in_square", "X_i lies in a^2 with a verified certificate"},
        {"unit_outside_a", "1 is not in a"}},
       detail::idem50a_claims},
      {"idem50B",
       "square map X_i^2 = X_{i+1} on indices 0..N",
       R"(family idem50B(N) {
  ring R = vars X[0..N] rules { X[i]^2 -> X[i + 1] for i in 0..N - 1 }
  ideal a = < X[i] for i in 0..N >
})",
       {{"ring_confluent", "rules are locally confluent up to degree 8"},
        {"square_map", "X_i * X_i = X_{i+1} for i < N"},
        {"successor_in_square", "X_{i+1} lies in a^2 with a verified certificate"},
        {"top_variable_square_normal", "X_N^2 is a normal form"}},
       detail::idem50b_claims},
      {"idem50C",
       "X_i idempotent for i >= 1, b generated by X_0^i X_i",
       R"(family idem50C(N) {
  ring R = vars X[0..N] rules { X[i]^2 -> X[i] for i in 1..N }
  ideal a = < X[i] for i in 1..N >
  ideal b = < X[0]^i*X[i] for i in 1..N >
})",
       {{"ring_confluent", "rules are locally confluent up to degree 8"},
        {"idempotent_relations", "X_i (1 - X_i) = 0 for i >= 1 while X_0 is not idempotent"},
        {"one_minus_generator_outside_a", "1 - X_i is not in a"},
        {"colon_by_x0_inside_a", "(b : X_0) is inside a"},
        {"bounded_colon_by_x0_inside_a", "generators found by the bounded search for (b : X_0) lie in a"},
        {"colon_by_a_probe", "monomials f outside b with deg_X0 f <= p keep f X_{p+1} outside b"},
        {"unit_outside_a", "1 is not in a"}},
       detail::idem50c_claims},
      {"nil40A",
       "square-zero variables, b = sum of X_i a^i",
       R"(family nil40A(N) {
  ring R = vars X[0..N] rules { X[i]^2 -> 0 for i in 0..N }
  ideal a = < X[i] for i in 0..N >
  ideal b = sum(i in 0..N) < X[i] > * a^i
})",
       {{"ring_confluent", "rules are locally confluent up to degree 8"},
        {"ring_torsion_probe", "X_1...X_n is a nonzero element of a^n for n <= N - 1"},
        {"fresh_variable_probe", "multiplying by fresh variables is injective on low monomials"},
        {"quotient_generators_torsion", "a^i X_i is inside b for i <= N - 2"},
        {"unit_not_torsion_mod_b", "X_n...X_{2n-1} lies in a^n but not in b"},
        {"a_power_nonzero_at_level", "X_0...X_N is nonzero"}},
       detail::nil40a_claims},
      {"nil40B",
       "X_i X_j = 0 for i != j and X_i^{i+1} = 0",
       R"(family nil40B(N) {
  ring R = vars X[0..N] rules { X[i]*X[j] -> 0 for i, j in 0..N if i != j; X[i]^(i + 1) -> 0 for i in 0..N }
  ideal a = < X[i] for i in 0..N >
})",
       {{"ring_confluent", "rules are locally confluent up to degree 8"},
        {"generators_torsion", "a^i X_i = 0 for every i"},
        {"unit_not_torsion_probe", "X_n^n is a nonzero element of a^n"}},
       detail::nil40b_claims},
      {"nil40C",
       "X_i^2 = 0 and X_i X_j = 0 for 2i < j",
       R"(family nil40C(N) {
  ring R = vars X[0..N] rules { X[i]^2 -> 0 for i in 0..N; X[i]*X[j] -> 0 for i, j in 0..N if 2*i < j }
  ideal a = < X[i] for i in 0..N >
})",
       {{"ring_confluent", "rules are locally confluent up to degree 8"},
        {"generators_torsion", "a^(i+1) X_i = 0 for every i"},
        {"unit_not_torsion_probe", "X_n...X_{2n-1} is a nonzero element of a^n"}},
       detail::nil40c_claims},
      {"nil40D",
       "X_i^{i+1} = 0, b generated by X_i X_j for i != j",
       R"(family nil40D(N) {
  ring R = vars X[0..N] rules { X[i]^(i + 1) -> 0 for i in 0..N }
  ideal a = < X[i] for i in 0..N >
  ideal b = < X[i]*X[j] for i, j in 0..N if i != j >
})",
       {{"ring_confluent", "rules are locally confluent up to degree 8"},
        {"fresh_power_probe", "X_k^n f is nonzero and injective in f on variables below k, n <= k"},
        {"quotient_generators_torsion", "a^i X_i is inside b for every i"},
        {"unit_not_torsion_probe", "X_n^n is nonzero and not in b"},
        {"unit_outside_colon_by_a_squared", "1 is not in (b : a^2)"}},
       detail::nil40d_claims},
  };
  return registry;
}

inline const ExampleEntry& find_example(const std::string& tag) {
  for (auto& e : example_registry())
    if (e.tag == tag) return e;
  throw Error(ErrorKind::UnknownTag, "no example with tag '" + tag + "'");
}

struct ClaimReport {
  std::string name;
  std::string description;
  std::vector<bool> values;  // one per level
  bool pass = false;
  bool stable = false;
};

struct ExampleReport {
  std::string tag;
  std::string summary;
  Schedule schedule;
  std::vector<ClaimReport> claims;

  bool all_pass() const {
    return std::all_of(claims.begin(), claims.end(), [](const ClaimReport& c) { return c.pass && c.stable; });
  }
};

inline Schedule default_schedule() { return Schedule::range(4, 10, 3); }

/// Evaluates every claim of the example at each scheduled level. A claim
/// passes when it holds at every level; it is stable when its last `window`
/// values agree.
inline ExampleReport replicate_example(const std::string& tag, const Schedule& schedule = default_schedule(),
                                       const SearchConfig& cfg = {}) {
  const auto& entry = find_example(tag);
  schedule.validate();
  auto fam = entry.family();
  ExampleReport rep{entry.tag, entry.summary, schedule, {}};
  std::map<std::string, std::vector<bool>> values;
  for (auto n : schedule.levels) {
    auto inst = instantiate(fam, n, cfg);
    for (auto& c : entry.evaluate(inst)) values[c.name].push_back(c.holds);
  }
  for (auto& [name, desc] : entry.claims) {
    ClaimReport c{name, desc, values[name], false, false};
    if (c.values.size() != schedule.levels.size())
      throw Error(ErrorKind::PatternError, "claim " + name + " was not evaluated at every level");
    c.pass = std::all_of(c.values.begin(), c.values.end(), [](bool v) { return v; });
    std::vector<std::string> text;
    for (bool v : c.values) text.push_back(v ? "true" : "false");
    c.stable = window_stable(text, schedule.window);
    rep.claims.push_back(std::move(c));
  }
  return rep;
}

}  // namespace torsionlab
