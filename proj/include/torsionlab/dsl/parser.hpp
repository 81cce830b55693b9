#pragma once

#include <cctype>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "torsionlab/dsl/ast.hpp"
#include "torsionlab/dsl/lexer.hpp"

namespace torsionlab::dsl {

inline const std::set<std::string>& query_kinds() {
  static const std::set<std::string> k = {"ass",        "assf",   "bounded", "colon",     "confluence",
                                          "fairness",   "gamma",  "gammabar", "member",   "minprimes",
                                          "normal",     "radical", "saturation"};
  return k;
}

inline const std::set<std::string>& check_kinds() {
  static const std::set<std::string> k = {"confluence", "equal",   "fairness", "member", "nonzero",
                                          "notmember",  "radicalprobe", "subset", "zero"};
  return k;
}

inline const std::set<std::string>& keywords() {
  static const std::set<std::string> k = {"and",   "cap",   "check", "degree",    "example", "family", "for",
                                          "harness", "ideal", "if",  "in",        "instances", "let",  "levels",
                                          "not",   "or",    "prod",  "query",     "ring",    "rules",  "run",
                                          "seed",  "stable", "sum",  "vars",      "window"};
  return k;
}

class Parser {
 public:
  explicit Parser(const std::string& src) : toks_(tokenize(src)) {}

  Script parse_script() {
    Script s;
    while (true) {
      while (at(";")) ++pos_;
      if (peek().kind == TokenKind::End) break;
      s.statements.push_back(statement());
    }
    return s;
  }

 private:
  // ---- token helpers ----
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool at(const std::string& sym, std::size_t k = 0) const {
    const auto& t = peek(k);
    return t.kind == TokenKind::Symbol && t.text == sym;
  }
  bool at_kw(const std::string& w, std::size_t k = 0) const {
    const auto& t = peek(k);
    return t.kind == TokenKind::Ident && t.text == w;
  }
  [[noreturn]] void fail(const std::set<std::string>& expected) const {
    throw SyntaxError(peek().loc, "unexpected " + peek().describe(), expected);
  }
  void expect(const std::string& sym) {
    if (!at(sym)) fail({"'" + sym + "'"});
    ++pos_;
  }
  void expect_kw(const std::string& w) {
    if (!at_kw(w)) fail({w});
    ++pos_;
  }
  std::string name(const std::string& what) {
    const auto& t = peek();
    if (t.kind != TokenKind::Ident || keywords().count(t.text)) fail({what});
    ++pos_;
    return t.text;
  }
  std::int64_t integer(bool allow_sign = false) {
    bool neg = false;
    if (allow_sign && at("-")) {
      neg = true;
      ++pos_;
    }
    const auto& t = peek();
    if (t.kind != TokenKind::Int) fail({"integer"});
    ++pos_;
    try {
      auto v = std::stoll(t.text);
      return neg ? -v : v;
    } catch (const std::out_of_range&) {
      throw SyntaxError(t.loc, "integer literal out of range");
    }
  }

  /// Splits a variable shorthand such as `X12` into family and index.
  bool var_shorthand(const Token& t, std::string& fam, std::int64_t& idx) const {
    if (t.kind != TokenKind::Ident) return false;
    std::size_t k = t.text.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(t.text[k - 1]))) --k;
    if (k == 0 || k == t.text.size() || !var_families_.count(t.text.substr(0, k))) return false;
    fam = t.text.substr(0, k);
    idx = std::stoll(t.text.substr(k));
    return true;
  }
  bool at_var(std::size_t k = 0) const {
    const auto& t = peek(k);
    if (t.kind != TokenKind::Ident) return false;
    if (var_families_.count(t.text) && at("[", k + 1)) return true;
    std::string f;
    std::int64_t i;
    return var_shorthand(t, f, i);
  }

  // ---- statements ----
  Statement statement() {
    Statement st;
    st.loc = peek().loc;
    if (at_kw("let")) {
      st.node = let_def();
    } else if (at_kw("ring")) {
      st.node = ring_pattern();
    } else if (at_kw("ideal")) {
      st.node = ideal_def();
    } else if (at_kw("family")) {
      ++pos_;
      auto fam = name("family name");
      if (at("(")) {
        st.node = family_body(std::move(fam));
      } else {
        ScheduleStmt s{std::move(fam), {}, std::nullopt};
        expect_kw("levels");
        s.levels = range();
        if (at_kw("window")) {
          ++pos_;
          s.window = integer();
        }
        st.node = std::move(s);
      }
    } else if (at_kw("query")) {
      ++pos_;
      st.node = QueryStmt{call(query_kinds())};
    } else if (at_kw("check")) {
      ++pos_;
      if (at_kw("stable")) {
        ++pos_;
        StableStmt s;
        s.family = name("family name");
        expect("{");
        s.claim = call(check_kinds());
        expect("}");
        st.node = std::move(s);
      } else {
        st.node = CheckStmt{call(check_kinds())};
      }
    } else if (at_kw("run")) {
      ++pos_;
      expect_kw("example");
      RunExampleStmt r;
      r.tag = name("example tag");
      if (at_kw("levels")) {
        ++pos_;
        r.levels = range();
      }
      if (at_kw("window")) {
        ++pos_;
        r.window = integer();
      }
      st.node = std::move(r);
    } else if (at_kw("harness")) {
      ++pos_;
      HarnessStmt h;
      expect_kw("instances");
      h.instances = integer();
      if (at_kw("seed")) {
        ++pos_;
        h.seed = integer();
      }
      st.node = h;
    } else {
      fail({"check", "family", "harness", "ideal", "let", "query", "ring", "run"});
    }
    return st;
  }

  Range range() {
    Range r;
    r.lo = integer(true);
    expect("..");
    r.hi = integer(true);
    return r;
  }

  LetDef let_def() {
    expect_kw("let");
    LetDef d;
    d.name = name("name");
    expect("=");
    d.value = int_expr();
    return d;
  }

  RingPattern ring_pattern() {
    expect_kw("ring");
    RingPattern r;
    r.name = name("ring name");
    expect("=");
    expect_kw("vars");
    r.var_family = name("variable name");
    var_families_.insert(r.var_family);
    expect("[");
    r.lo = int_expr();
    expect("..");
    r.hi = int_expr();
    expect("]");
    if (at_kw("rules")) {
      ++pos_;
      expect("{");
      while (!at("}")) {
        r.rules.push_back(rule());
        if (at(";"))
          ++pos_;
        else if (!at("}"))
          fail({"';'", "'}'"});
      }
      expect("}");
    }
    return r;
  }

  RulePattern rule() {
    RulePattern r;
    r.lhs = term();
    if (r.lhs.factors.empty() || r.lhs.coeff != 1) throw SyntaxError(peek().loc, "rule left-hand side must be a monomial");
    expect("->");
    r.rhs = poly();
    r.quant = quantifier();
    return r;
  }

  IdealDef ideal_def() {
    expect_kw("ideal");
    IdealDef d;
    d.name = name("ideal name");
    expect("=");
    d.expr = ideal_expr();
    return d;
  }

  FamilySpec family_body(std::string fam) {
    FamilySpec f;
    f.name = std::move(fam);
    expect("(");
    f.param = name("parameter name");
    expect(")");
    expect("{");
    while (true) {
      while (at(";")) ++pos_;
      if (at("}")) break;
      if (at_kw("let"))
        f.items.emplace_back(let_def());
      else if (at_kw("ring"))
        f.items.emplace_back(ring_pattern());
      else if (at_kw("ideal"))
        f.items.emplace_back(ideal_def());
      else
        fail({"'}'", "ideal", "let", "ring"});
    }
    expect("}");
    return f;
  }

  Call call(const std::set<std::string>& kinds) {
    Call c;
    const auto& t = peek();
    if (t.kind != TokenKind::Ident || !kinds.count(t.text)) fail(kinds);
    c.kind = t.text;
    ++pos_;
    expect("(");
    if (!at(")")) {
      c.args.push_back(arg());
      while (at(";")) {
        ++pos_;
        c.args.push_back(arg());
      }
    }
    expect(")");
    if (at_kw("degree")) {
      ++pos_;
      c.degree = integer();
    }
    if (at_kw("cap")) {
      ++pos_;
      c.cap = integer();
    }
    c.quant = quantifier();
    return c;
  }

  Arg arg() {
    if (at_var() || at_kw("prod") || peek().kind == TokenKind::Int || at("-")) return poly();
    return ideal_expr();
  }

  // ---- quantifiers and integer expressions ----
  Quantifier quantifier() {
    Quantifier q;
    if (at_kw("for")) {
      ++pos_;
      binder_group(q.binders);
      while (at(",") && binder_follows()) {
        ++pos_;
        binder_group(q.binders);
      }
    }
    if (at_kw("if")) {
      ++pos_;
      q.guard = cond();
    }
    return q;
  }

  /// After a comma: does another binder group start here?
  bool binder_follows() const {
    const auto& t = peek(1);
    return t.kind == TokenKind::Ident && !keywords().count(t.text) && !at_var(1) && (at_kw("in", 2) || at(",", 2));
  }

  /// `i, j in lo..hi` declares several binders over one range.
  void binder_group(std::vector<Binder>& out) {
    std::vector<std::string> names{name("index name")};
    while (at(",")) {
      ++pos_;
      names.push_back(name("index name"));
    }
    expect_kw("in");
    auto lo = int_expr();
    expect("..");
    auto hi = int_expr();
    for (auto& n : names) out.push_back({n, lo, hi});
  }

  Binder single_binder() {
    Binder b;
    b.name = name("index name");
    expect_kw("in");
    b.lo = int_expr();
    expect("..");
    b.hi = int_expr();
    return b;
  }

  IntExpr int_expr() {
    auto e = int_product();
    while (at("+") || at("-")) {
      auto op = at("+") ? IntExpr::Op::Add : IntExpr::Op::Sub;
      ++pos_;
      e = IntExpr::binary(op, std::move(e), int_product());
    }
    return e;
  }
  IntExpr int_product() {
    auto e = int_unary();
    while (at("*")) {
      ++pos_;
      e = IntExpr::binary(IntExpr::Op::Mul, std::move(e), int_unary());
    }
    return e;
  }
  IntExpr int_unary() {
    if (at("-")) {
      if (peek(1).kind == TokenKind::Int) return IntExpr::lit(integer(true));
      ++pos_;
      return IntExpr::neg(int_unary());
    }
    return int_atom();
  }
  IntExpr int_atom() {
    const auto& t = peek();
    if (t.kind == TokenKind::Int) return IntExpr::lit(integer());
    if (at("(")) {
      ++pos_;
      auto e = int_expr();
      expect(")");
      return e;
    }
    if (t.kind == TokenKind::Ident && !keywords().count(t.text)) {
      ++pos_;
      return IntExpr::ref(t.text);
    }
    fail({"'('", "'-'", "integer", "index name"});
  }
  /// Exponents are a literal, a name or a parenthesised expression.
  IntExpr exponent() { return int_atom(); }

  Cond cond() {
    auto c = cond_and();
    while (at_kw("or")) {
      ++pos_;
      c = Cond{Cond::Op::Or, {}, {std::move(c), cond_and()}};
    }
    return c;
  }
  Cond cond_and() {
    auto c = cond_not();
    while (at_kw("and")) {
      ++pos_;
      c = Cond{Cond::Op::And, {}, {std::move(c), cond_not()}};
    }
    return c;
  }
  Cond cond_not() {
    if (at_kw("not")) {
      ++pos_;
      return Cond{Cond::Op::Not, {}, {cond_not()}};
    }
    if (at("(")) {
      // A parenthesis may open a grouped condition or an integer expression.
      auto save = pos_;
      try {
        ++pos_;
        auto c = cond();
        expect(")");
        return c;
      } catch (const SyntaxError&) {
        pos_ = save;
      }
    }
    return comparison();
  }
  Cond comparison() {
    auto l = int_expr();
    static const std::vector<std::pair<std::string, Cond::Op>> ops = {
        {"<", Cond::Op::Lt}, {"<=", Cond::Op::Le}, {">", Cond::Op::Gt},
        {">=", Cond::Op::Ge}, {"==", Cond::Op::Eq}, {"!=", Cond::Op::Ne}};
    for (auto& [sym, op] : ops) {
      if (at(sym)) {
        ++pos_;
        return Cond{op, {std::move(l), int_expr()}, {}};
      }
    }
    fail({"'!='", "'<'", "'<='", "'=='", "'>'", "'>='"});
  }

  // ---- polynomials ----
  PolyPattern poly() {
    PolyPattern p;
    auto push = [&](TermPattern t, bool negate) {
      if (negate) t.coeff = -t.coeff;
      if (t.coeff != 0) p.terms.push_back(std::move(t));
    };
    push(term(), false);
    while (at("+") || at("-")) {
      bool minus = at("-");
      ++pos_;
      push(term(), minus);
    }
    return p;
  }

  TermPattern term() {
    TermPattern t;
    if (at("-")) {
      ++pos_;
      t = term();
      t.coeff = -t.coeff;
      return t;
    }
    if (peek().kind == TokenKind::Int) {
      Rational c(integer());
      if (at("/")) {
        ++pos_;
        auto loc = peek().loc;
        auto d = integer();
        if (d == 0) throw SyntaxError(loc, "zero denominator");
        c /= d;
      }
      t.coeff = c;
      if (!at("*")) return t;
      ++pos_;
    }
    t.factors.push_back(factor());
    while (at("*")) {
      ++pos_;
      t.factors.push_back(factor());
    }
    return t;
  }

  Factor factor() {
    if (at_kw("prod")) {
      ++pos_;
      expect("(");
      ProdFactor p;
      p.binder = single_binder();
      expect(")");
      p.body = var_factor();
      return p;
    }
    return var_factor();
  }

  VarFactor var_factor() {
    VarFactor v;
    const auto& t = peek();
    std::string fam;
    std::int64_t idx = 0;
    if (t.kind == TokenKind::Ident && var_families_.count(t.text) && at("[", 1)) {
      v.family = t.text;
      pos_ += 2;
      v.index = int_expr();
      expect("]");
    } else if (var_shorthand(t, fam, idx)) {
      ++pos_;
      v.family = fam;
      v.index = IntExpr::lit(idx);
    } else {
      std::set<std::string> exp{"prod"};
      for (auto& f : var_families_) exp.insert(f + "[");
      fail(exp);
    }
    if (at("^")) {
      ++pos_;
      v.exponent = exponent();
    }
    return v;
  }

  // ---- ideal expressions ----
  IdealExpr ideal_expr() {
    auto e = ideal_product();
    while (at("+")) {
      ++pos_;
      e = IdealExpr{IdealExpr::Op::Sum, {}, {}, {std::move(e), ideal_product()}, {}, {}};
    }
    return e;
  }
  IdealExpr ideal_product() {
    auto e = ideal_power();
    while (at("*")) {
      ++pos_;
      e = IdealExpr{IdealExpr::Op::Product, {}, {}, {std::move(e), ideal_power()}, {}, {}};
    }
    return e;
  }
  IdealExpr ideal_power() {
    auto e = ideal_atom();
    while (at("^")) {
      ++pos_;
      auto n = exponent();
      e = IdealExpr{IdealExpr::Op::Power, {}, {}, {std::move(e)}, std::move(n), {}};
    }
    return e;
  }
  IdealExpr ideal_atom() {
    if (at("<")) {
      ++pos_;
      IdealExpr e;
      e.op = IdealExpr::Op::Gens;
      if (!at(">")) {
        e.gens.push_back(generator());
        while (at(",")) {
          ++pos_;
          e.gens.push_back(generator());
        }
      }
      expect(">");
      return e;
    }
    if (at("(")) {
      ++pos_;
      auto l = ideal_expr();
      if (at(":")) {
        ++pos_;
        auto r = ideal_expr();
        expect(")");
        return IdealExpr{IdealExpr::Op::Colon, {}, {}, {std::move(l), std::move(r)}, {}, {}};
      }
      expect(")");
      return l;
    }
    if (at_kw("sum")) {
      ++pos_;
      expect("(");
      auto b = single_binder();
      expect(")");
      auto body = ideal_product();
      return IdealExpr{IdealExpr::Op::IndexedSum, {}, {}, {std::move(body)}, {}, {std::move(b)}};
    }
    const auto& t = peek();
    if (t.kind == TokenKind::Ident && !keywords().count(t.text) && !at_var()) {
      ++pos_;
      IdealExpr e;
      e.op = IdealExpr::Op::Ref;
      e.name = t.text;
      return e;
    }
    fail({"'('", "'<'", "ideal name", "sum"});
  }

  GenPattern generator() {
    GenPattern g;
    g.poly = poly();
    g.quant = quantifier();
    return g;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::set<std::string> var_families_;
};

inline Script parse(const std::string& source) { return Parser(source).parse_script(); }

}  // namespace torsionlab::dsl
