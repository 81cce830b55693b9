#pragma once

#include <string>
#include <variant>

#include "torsionlab/dsl/ast.hpp"

namespace torsionlab::dsl {

namespace detail {

inline int int_level(const IntExpr& e) {
  switch (e.op) {
    case IntExpr::Op::Add:
    case IntExpr::Op::Sub: return 1;
    case IntExpr::Op::Mul: return 2;
    case IntExpr::Op::Lit: return e.value < 0 ? 3 : 4;
    case IntExpr::Op::Neg: return 3;
    case IntExpr::Op::Name: return 4;
  }
  return 4;
}

}  // namespace detail

inline std::string print(const IntExpr& e) {
  using detail::int_level;
  auto wrap = [](const IntExpr& x, bool paren) { return paren ? "(" + print(x) + ")" : print(x); };
  switch (e.op) {
    case IntExpr::Op::Lit: return std::to_string(e.value);
    case IntExpr::Op::Name: return e.name;
    case IntExpr::Op::Neg: return "-" + wrap(e.args[0], e.args[0].op != IntExpr::Op::Name);
    case IntExpr::Op::Add:
    case IntExpr::Op::Sub:
      return wrap(e.args[0], int_level(e.args[0]) < 1) + (e.op == IntExpr::Op::Add ? " + " : " - ") +
             wrap(e.args[1], int_level(e.args[1]) <= 1);
    case IntExpr::Op::Mul:
      return wrap(e.args[0], int_level(e.args[0]) < 2) + "*" + wrap(e.args[1], int_level(e.args[1]) <= 2);
  }
  return {};
}

/// Exponent position accepts only a literal, a name or a parenthesised form.
inline std::string print_atom(const IntExpr& e) {
  if (e.op == IntExpr::Op::Name || (e.op == IntExpr::Op::Lit && e.value >= 0)) return print(e);
  return "(" + print(e) + ")";
}

inline std::string print(const Cond& c) {
  auto level = [](const Cond& x) {
    switch (x.op) {
      case Cond::Op::Or: return 1;
      case Cond::Op::And: return 2;
      case Cond::Op::Not: return 3;
      default: return 4;
    }
  };
  auto wrap = [](const Cond& x, bool paren) { return paren ? "(" + print(x) + ")" : print(x); };
  switch (c.op) {
    case Cond::Op::Or: return wrap(c.conds[0], level(c.conds[0]) < 1) + " or " + wrap(c.conds[1], level(c.conds[1]) <= 1);
    case Cond::Op::And:
      return wrap(c.conds[0], level(c.conds[0]) < 2) + " and " + wrap(c.conds[1], level(c.conds[1]) <= 2);
    case Cond::Op::Not: return "not " + wrap(c.conds[0], level(c.conds[0]) < 3);
    default: break;
  }
  static const char* ops[] = {" < ", " <= ", " > ", " >= ", " == ", " != "};
  return print(c.ints[0]) + ops[static_cast<int>(c.op)] + print(c.ints[1]);
}

inline std::string print(const Binder& b) { return b.name + " in " + print(b.lo) + ".." + print(b.hi); }

inline std::string print(const Quantifier& q) {
  std::string s;
  for (std::size_t k = 0; k < q.binders.size(); ++k) s += (k ? ", " : " for ") + print(q.binders[k]);
  if (q.guard) s += " if " + print(*q.guard);
  return s;
}

inline std::string print(const VarFactor& v) {
  std::string s = v.family + "[" + print(v.index) + "]";
  if (!(v.exponent == IntExpr::lit(1))) s += "^" + print_atom(v.exponent);
  return s;
}

inline std::string print(const TermPattern& t) {
  std::string fs;
  for (std::size_t k = 0; k < t.factors.size(); ++k) {
    if (k) fs += "*";
    if (auto* v = std::get_if<VarFactor>(&t.factors[k]))
      fs += print(*v);
    else {
      const auto& p = std::get<ProdFactor>(t.factors[k]);
      fs += "prod(" + print(p.binder) + ") " + print(p.body);
    }
  }
  if (t.factors.empty()) return t.coeff.str();
  if (t.coeff == 1) return fs;
  return t.coeff.str() + "*" + fs;
}

inline std::string print(const PolyPattern& p) {
  if (p.terms.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < p.terms.size(); ++k) s += (k ? " + " : "") + print(p.terms[k]);
  return s;
}

inline std::string print(const IdealExpr& e);

namespace detail {

inline int ideal_level(const IdealExpr& e) {
  switch (e.op) {
    case IdealExpr::Op::Sum: return 1;
    case IdealExpr::Op::Product: return 2;
    case IdealExpr::Op::Power: return 3;
    case IdealExpr::Op::IndexedSum: return 0;
    default: return 4;
  }
}

inline std::string ideal_child(const IdealExpr& e, int min_level) {
  return ideal_level(e) < min_level ? "(" + print(e) + ")" : print(e);
}

}  // namespace detail

inline std::string print(const IdealExpr& e) {
  using detail::ideal_child;
  switch (e.op) {
    case IdealExpr::Op::Gens: {
      if (e.gens.empty()) return "< >";
      std::string s = "< ";
      for (std::size_t k = 0; k < e.gens.size(); ++k) s += (k ? ", " : "") + print(e.gens[k].poly) + print(e.gens[k].quant);
      return s + " >";
    }
    case IdealExpr::Op::Ref: return e.name;
    case IdealExpr::Op::Sum: return ideal_child(e.args[0], 1) + " + " + ideal_child(e.args[1], 2);
    case IdealExpr::Op::Product: return ideal_child(e.args[0], 2) + " * " + ideal_child(e.args[1], 3);
    case IdealExpr::Op::Power: return ideal_child(e.args[0], 4) + "^" + print_atom(e.exponent);
    case IdealExpr::Op::Colon: return "(" + print(e.args[0]) + " : " + print(e.args[1]) + ")";
    case IdealExpr::Op::IndexedSum: return "sum(" + print(e.binder.front()) + ") " + ideal_child(e.args[0], 2);
  }
  return {};
}

inline std::string print(const RulePattern& r) { return print(r.lhs) + " -> " + print(r.rhs) + print(r.quant); }

inline std::string print(const LetDef& d) { return "let " + d.name + " = " + print(d.value); }

inline std::string print(const RingPattern& r) {
  std::string s = "ring " + r.name + " = vars " + r.var_family + "[" + print(r.lo) + ".." + print(r.hi) + "]";
  if (r.rules.empty()) return s;
  s += " rules { ";
  for (std::size_t k = 0; k < r.rules.size(); ++k) s += (k ? "; " : "") + print(r.rules[k]);
  return s + " }";
}

inline std::string print(const IdealDef& d) { return "ideal " + d.name + " = " + print(d.expr); }

inline std::string print(const FamilySpec& f) {
  std::string s = "family " + f.name + "(" + f.param + ") {\n";
  for (auto& item : f.items) s += "  " + std::visit([](const auto& x) { return print(x); }, item) + "\n";
  return s + "}";
}

inline std::string print(const Call& c) {
  std::string s = c.kind + "(";
  for (std::size_t k = 0; k < c.args.size(); ++k)
    s += (k ? "; " : "") + std::visit([](const auto& x) { return print(x); }, c.args[k]);
  s += ")";
  if (c.degree) s += " degree " + std::to_string(*c.degree);
  if (c.cap) s += " cap " + std::to_string(*c.cap);
  return s + print(c.quant);
}

inline std::string print(const Range& r) { return std::to_string(r.lo) + ".." + std::to_string(r.hi); }

inline std::string print(const ScheduleStmt& s) {
  std::string out = "family " + s.family + " levels " + print(s.levels);
  if (s.window) out += " window " + std::to_string(*s.window);
  return out;
}
inline std::string print(const QueryStmt& q) { return "query " + print(q.call); }
inline std::string print(const CheckStmt& c) { return "check " + print(c.call); }
inline std::string print(const StableStmt& s) { return "check stable " + s.family + " { " + print(s.claim) + " }"; }
inline std::string print(const RunExampleStmt& r) {
  std::string s = "run example " + r.tag;
  if (r.levels) s += " levels " + print(*r.levels);
  if (r.window) s += " window " + std::to_string(*r.window);
  return s;
}
inline std::string print(const HarnessStmt& h) {
  std::string s = "harness instances " + std::to_string(h.instances);
  if (h.seed) s += " seed " + std::to_string(*h.seed);
  return s;
}

inline std::string print(const Statement& st) {
  return std::visit([](const auto& x) { return print(x); }, st.node);
}

/// Canonical text of a script, one statement per line.
inline std::string print(const Script& s) {
  std::string out;
  for (auto& st : s.statements) out += print(st) + "\n";
  return out;
}

}  // namespace torsionlab::dsl
