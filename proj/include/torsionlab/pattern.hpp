#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "torsionlab/ideal.hpp"
#include "torsionlab/ring.hpp"

namespace torsionlab {

/// Integer expression over named indices.
struct IntExpr {
  enum class Op { Lit, Name, Neg, Add, Sub, Mul };
  Op op = Op::Lit;
  std::int64_t value = 0;
  std::string name;
  std::vector<IntExpr> args;

  static IntExpr lit(std::int64_t v) { return {Op::Lit, v, {}, {}}; }
  static IntExpr ref(std::string n) { return {Op::Name, 0, std::move(n), {}}; }
  static IntExpr binary(Op op, IntExpr l, IntExpr r) { return {op, 0, {}, {std::move(l), std::move(r)}}; }
  static IntExpr neg(IntExpr x) { return {Op::Neg, 0, {}, {std::move(x)}}; }

  friend bool operator==(const IntExpr&, const IntExpr&) = default;
};

/// Boolean guard built from integer comparisons.
struct Cond {
  enum class Op { Lt, Le, Gt, Ge, Eq, Ne, And, Or, Not };
  Op op = Op::Eq;
  std::vector<IntExpr> ints;
  std::vector<Cond> conds;

  friend bool operator==(const Cond&, const Cond&) = default;
};

/// `name in lo..hi`, inclusive at both ends.
struct Binder {
  std::string name;
  IntExpr lo;
  IntExpr hi;

  friend bool operator==(const Binder&, const Binder&) = default;
};

/// `X[index]^exponent`.
struct VarFactor {
  std::string family;
  IntExpr index;
  IntExpr exponent = IntExpr::lit(1);

  friend bool operator==(const VarFactor&, const VarFactor&) = default;
};

/// `prod(j in lo..hi) X[...]^...`.
struct ProdFactor {
  Binder binder;
  VarFactor body;

  friend bool operator==(const ProdFactor&, const ProdFactor&) = default;
};

using Factor = std::variant<VarFactor, ProdFactor>;

struct TermPattern {
  Rational coeff = 1;
  std::vector<Factor> factors;

  friend bool operator==(const TermPattern&, const TermPattern&) = default;
};

/// Sum of terms; the empty sum is zero.
struct PolyPattern {
  std::vector<TermPattern> terms;

  friend bool operator==(const PolyPattern&, const PolyPattern&) = default;
};

/// Quantified family of instances `body for binders if guard`.
struct Quantifier {
  std::vector<Binder> binders;
  std::optional<Cond> guard;

  friend bool operator==(const Quantifier&, const Quantifier&) = default;
};

struct RulePattern {
  TermPattern lhs;
  PolyPattern rhs;
  Quantifier quant;

  friend bool operator==(const RulePattern&, const RulePattern&) = default;
};

struct GenPattern {
  PolyPattern poly;
  Quantifier quant;

  friend bool operator==(const GenPattern&, const GenPattern&) = default;
};

struct IdealExpr {
  enum class Op { Gens, Ref, Sum, Product, Power, Colon, IndexedSum };
  Op op = Op::Gens;
  std::vector<GenPattern> gens;
  std::string name;
  std::vector<IdealExpr> args;
  IntExpr exponent;
  std::vector<Binder> binder;  // one element for IndexedSum

  friend bool operator==(const IdealExpr&, const IdealExpr&) = default;
};

struct RingPattern {
  std::string name;
  std::string var_family;
  IntExpr lo;
  IntExpr hi;
  std::vector<RulePattern> rules;

  friend bool operator==(const RingPattern&, const RingPattern&) = default;
};

struct LetDef {
  std::string name;
  IntExpr value;
  friend bool operator==(const LetDef&, const LetDef&) = default;
};

struct IdealDef {
  std::string name;
  IdealExpr expr;
  friend bool operator==(const IdealDef&, const IdealDef&) = default;
};

using FamilyItem = std::variant<LetDef, RingPattern, IdealDef>;

/// Schematic ring and ideals indexed by one integer parameter.
struct FamilySpec {
  std::string name;
  std::string param;
  std::vector<FamilyItem> items;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// What to do with a pattern instance that mentions a variable outside the
/// declared range: families drop it, top-level scripts reject it.
enum class Truncation { Drop, Reject };

using IntEnv = std::map<std::string, std::int64_t>;

inline std::int64_t eval_int(const IntExpr& e, const IntEnv& env) {
  switch (e.op) {
    case IntExpr::Op::Lit: return e.value;
    case IntExpr::Op::Name: {
      auto it = env.find(e.name);
      if (it == env.end()) throw Error(ErrorKind::PatternError, "undefined index '" + e.name + "'");
      return it->second;
    }
    case IntExpr::Op::Neg: return -eval_int(e.args[0], env);
    case IntExpr::Op::Add: return eval_int(e.args[0], env) + eval_int(e.args[1], env);
    case IntExpr::Op::Sub: return eval_int(e.args[0], env) - eval_int(e.args[1], env);
    case IntExpr::Op::Mul: return eval_int(e.args[0], env) * eval_int(e.args[1], env);
  }
  return 0;
}

inline bool eval_cond(const Cond& c, const IntEnv& env) {
  auto i = [&](std::size_t k) { return eval_int(c.ints[k], env); };
  switch (c.op) {
    case Cond::Op::Lt: return i(0) < i(1);
    case Cond::Op::Le: return i(0) <= i(1);
    case Cond::Op::Gt: return i(0) > i(1);
    case Cond::Op::Ge: return i(0) >= i(1);
    case Cond::Op::Eq: return i(0) == i(1);
    case Cond::Op::Ne: return i(0) != i(1);
    case Cond::Op::And: return eval_cond(c.conds[0], env) && eval_cond(c.conds[1], env);
    case Cond::Op::Or: return eval_cond(c.conds[0], env) || eval_cond(c.conds[1], env);
    case Cond::Op::Not: return !eval_cond(c.conds[0], env);
  }
  return false;
}

/// Calls `fn` for every assignment of the binders (nested, left to right)
/// satisfying the guard.
inline void for_each_binding(const Quantifier& q, const IntEnv& env, const std::function<void(const IntEnv&)>& fn) {
  std::function<void(std::size_t, IntEnv&)> rec = [&](std::size_t k, IntEnv& cur) {
    if (k == q.binders.size()) {
      if (!q.guard || eval_cond(*q.guard, cur)) fn(cur);
      return;
    }
    const auto& b = q.binders[k];
    auto lo = eval_int(b.lo, cur), hi = eval_int(b.hi, cur);
    for (auto v = lo; v <= hi; ++v) {
      cur[b.name] = v;
      rec(k + 1, cur);
    }
    cur.erase(b.name);
  };
  IntEnv cur = env;
  rec(0, cur);
}

namespace detail {

/// Multiplies `m` by one variable factor; false when the index is out of range
/// under the Drop policy.
inline bool apply_factor(Monomial& m, const VarFactor& f, const IntEnv& env, std::size_t num_vars,
                         Truncation policy) {
  auto idx = eval_int(f.index, env);
  auto e = eval_int(f.exponent, env);
  if (e < 0) throw Error(ErrorKind::PatternError, "negative exponent " + std::to_string(e));
  if (idx < 0 || static_cast<std::uint64_t>(idx) >= num_vars) {
    if (policy == Truncation::Drop) return false;
    throw Error(ErrorKind::VariableOutOfRange, "variable index " + std::to_string(idx) + " outside the declared range");
  }
  m.multiply_var(static_cast<VarIndex>(idx), static_cast<Exponent>(e));
  return true;
}

}  // namespace detail

/// Coefficient and monomial of a term instance; nullopt when dropped.
inline std::optional<std::pair<Rational, Monomial>> eval_term(const TermPattern& t, const IntEnv& env,
                                                              std::size_t num_vars, Truncation policy) {
  Monomial m;
  for (auto& f : t.factors) {
    if (auto* v = std::get_if<VarFactor>(&f)) {
      if (!detail::apply_factor(m, *v, env, num_vars, policy)) return std::nullopt;
    } else {
      const auto& p = std::get<ProdFactor>(f);
      IntEnv inner = env;
      auto lo = eval_int(p.binder.lo, env), hi = eval_int(p.binder.hi, env);
      for (auto j = lo; j <= hi; ++j) {
        inner[p.binder.name] = j;
        if (!detail::apply_factor(m, p.body, inner, num_vars, policy)) return std::nullopt;
      }
    }
  }
  return std::make_pair(t.coeff, std::move(m));
}

inline std::optional<Element> eval_poly(const PolyPattern& p, const IntEnv& env, const Ring& ring,
                                        Truncation policy) {
  Element e(ring);
  for (auto& t : p.terms) {
    auto inst = eval_term(t, env, ring->num_vars(), policy);
    if (!inst) return std::nullopt;
    e.add_term(inst->second, inst->first);
  }
  return e;
}

/// Expands the rule patterns of a ring declaration.
inline std::vector<RewriteRule> expand_rules(const RingPattern& rp, const IntEnv& env, std::size_t num_vars,
                                             Truncation policy) {
  std::vector<RewriteRule> rules;
  for (auto& r : rp.rules) {
    for_each_binding(r.quant, env, [&](const IntEnv& e) {
      if (r.lhs.coeff != 1) throw Error(ErrorKind::InvalidRule, "rule left-hand side must be a monomial");
      auto lhs = eval_term(r.lhs, e, num_vars, policy);
      if (!lhs) return;
      if (r.rhs.terms.empty()) {
        rules.push_back(RewriteRule::vanishing(lhs->second));
        return;
      }
      if (r.rhs.terms.size() != 1) throw Error(ErrorKind::InvalidRule, "rule right-hand side must be 0 or one term");
      auto rhs = eval_term(r.rhs.terms[0], e, num_vars, policy);
      if (!rhs) return;
      if (rhs->first == 0)
        rules.push_back(RewriteRule::vanishing(lhs->second));
      else
        rules.push_back(RewriteRule::to_term(lhs->second, rhs->first, rhs->second));
    });
  }
  return rules;
}

/// Builds the presentation and certifies local confluence up to
/// `confluence_degree`; raises NonConfluent otherwise.
inline std::pair<Ring, ConfluenceReport> build_ring(const RingPattern& rp, const IntEnv& env, Truncation policy,
                                                    std::size_t confluence_degree) {
  auto lo = eval_int(rp.lo, env), hi = eval_int(rp.hi, env);
  if (lo != 0) throw Error(ErrorKind::PatternError, "variable ranges must start at 0");
  if (hi < 0) throw Error(ErrorKind::PatternError, "empty variable range");
  auto n = static_cast<std::size_t>(hi + 1);
  auto raw = RingPresentation::make(n, expand_rules(rp, env, n, policy), rp.var_family);
  auto report = check_local_confluence(raw, std::max(confluence_degree, raw->max_lhs_degree()));
  if (!report.all_joinable)
    throw Error(ErrorKind::NonConfluent, "ring " + rp.name + " has " + std::to_string(report.non_joinable()) +
                                             " non-joinable critical pairs");
  return {report.certified, std::move(report)};
}

/// Evaluates ideal expressions against named ideals of one ring.
class IdealEvaluator {
 public:
  IdealEvaluator(Ring ring, const std::map<std::string, IdealHandle>& named, IntEnv env, Truncation policy,
                 SearchConfig cfg = {})
      : ring_(std::move(ring)), named_(named), env_(std::move(env)), policy_(policy), cfg_(cfg) {}

  IdealHandle eval(const IdealExpr& e) { return eval(e, env_); }

 private:
  IdealHandle eval(const IdealExpr& e, const IntEnv& env) {
    switch (e.op) {
      case IdealExpr::Op::Gens: {
        std::vector<Element> gens;
        for (auto& g : e.gens)
          for_each_binding(g.quant, env, [&](const IntEnv& b) {
            if (auto el = eval_poly(g.poly, b, ring_, policy_)) gens.push_back(std::move(*el));
          });
        return IdealHandle::from_elements(ring_, std::move(gens));
      }
      case IdealExpr::Op::Ref: return lookup(e.name);
      case IdealExpr::Op::Sum: return ideal_sum(eval(e.args[0], env), eval(e.args[1], env));
      case IdealExpr::Op::Product: return ideal_product(eval(e.args[0], env), eval(e.args[1], env));
      case IdealExpr::Op::Power: {
        auto n = eval_int(e.exponent, env);
        if (n < 0) throw Error(ErrorKind::PatternError, "negative ideal power");
        if (e.args[0].op == IdealExpr::Op::Ref) return cached_power(e.args[0].name, static_cast<std::size_t>(n));
        return ideal_power(eval(e.args[0], env), static_cast<std::size_t>(n));
      }
      case IdealExpr::Op::Colon: return ideal_colon_ideal(eval(e.args[0], env), eval(e.args[1], env), cfg_);
      case IdealExpr::Op::IndexedSum: {
        auto acc = IdealHandle::zero(ring_);
        const auto& b = e.binder.front();
        auto lo = eval_int(b.lo, env), hi = eval_int(b.hi, env);
        IntEnv inner = env;
        for (auto v = lo; v <= hi; ++v) {
          inner[b.name] = v;
          acc = ideal_sum(acc, eval(e.args[0], inner));
        }
        return acc;
      }
    }
    throw Error(ErrorKind::PatternError, "malformed ideal expression");
  }

  IdealHandle lookup(const std::string& name) const {
    auto it = named_.find(name);
    if (it == named_.end()) throw Error(ErrorKind::PatternError, "undefined ideal '" + name + "'");
    return it->second;
  }

  IdealHandle cached_power(const std::string& name, std::size_t n) {
    auto& powers = powers_[name];
    if (powers.empty()) powers.push_back(IdealHandle::unit(ring_));
    while (powers.size() <= n) powers.push_back(ideal_product(powers.back(), lookup(name)));
    return powers[n];
  }

  Ring ring_;
  const std::map<std::string, IdealHandle>& named_;
  IntEnv env_;
  Truncation policy_;
  SearchConfig cfg_;
  std::map<std::string, std::vector<IdealHandle>> powers_;
};

/// A family evaluated at one level.
struct FamilyInstance {
  std::string family;
  std::int64_t level = 0;
  IntEnv ints;
  Ring ring;
  ConfluenceReport confluence;
  std::map<std::string, IdealHandle> ideals;

  const IdealHandle& ideal(const std::string& name) const {
    auto it = ideals.find(name);
    if (it == ideals.end()) throw Error(ErrorKind::PatternError, "family " + family + " has no ideal '" + name + "'");
    return it->second;
  }
};

inline constexpr std::size_t kFamilyConfluenceDegree = 8;

/// Expands the family at parameter value `level`. Pattern instances that
/// mention variables outside the ring are dropped.
inline FamilyInstance instantiate(const FamilySpec& fam, std::int64_t level, const SearchConfig& cfg = {},
                                  std::size_t confluence_degree = kFamilyConfluenceDegree) {
  FamilyInstance inst;
  inst.family = fam.name;
  inst.level = level;
  inst.ints[fam.param] = level;
  for (auto& item : fam.items) {
    if (auto* let = std::get_if<LetDef>(&item)) {
      inst.ints[let->name] = eval_int(let->value, inst.ints);
    } else if (auto* rp = std::get_if<RingPattern>(&item)) {
      if (inst.ring) throw Error(ErrorKind::PatternError, "family " + fam.name + " declares more than one ring");
      auto [ring, report] = build_ring(*rp, inst.ints, Truncation::Drop, confluence_degree);
      inst.ring = std::move(ring);
      inst.confluence = std::move(report);
    } else {
      const auto& def = std::get<IdealDef>(item);
      if (!inst.ring) throw Error(ErrorKind::PatternError, "ideal " + def.name + " declared before the ring");
      IdealEvaluator ev(inst.ring, inst.ideals, inst.ints, Truncation::Drop, cfg);
      auto value = ev.eval(def.expr);
      inst.ideals.insert_or_assign(def.name, std::move(value));
    }
  }
  if (!inst.ring) throw Error(ErrorKind::PatternError, "family " + fam.name + " declares no ring");
  return inst;
}

}  // namespace torsionlab
