#pragma once

#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "torsionlab/dsl/ast.hpp"
#include "torsionlab/dsl/printer.hpp"
#include "torsionlab/family.hpp"
#include "torsionlab/harness.hpp"
#include "torsionlab/report.hpp"
#include "torsionlab/torsion.hpp"

namespace torsionlab::dsl {

struct ExecOptions {
  SearchConfig search;
  std::size_t iteration_cap = 64;
  std::size_t stability_window = 3;
  std::uint64_t seed = 42;
  std::size_t workers = 1;
  std::size_t confluence_degree = kFamilyConfluenceDegree;
};

/// Seed from TORSIONLAB_SEED when set and numeric, otherwise `fallback`.
inline std::uint64_t seed_from_environment(std::uint64_t fallback = 42) {
  const char* s = std::getenv("TORSIONLAB_SEED");
  if (!s || !*s) return fallback;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    return fallback;
  }
}

struct ExecResult {
  Json report;
  std::size_t failures = 0;
  std::size_t errors = 0;

  int exit_status() const { return failures == 0 && errors == 0 ? 0 : 1; }
};

namespace detail {

class Executor {
 public:
  explicit Executor(ExecOptions opt) : opt_(std::move(opt)) {}

  ExecResult run(const Script& script) {
    ExecResult res;
    Json entries = Json::array();
    for (std::size_t k = 0; k < script.statements.size(); ++k) {
      const auto& st = script.statements[k];
      Json e = {{"index", k}, {"line", st.loc.line}, {"column", st.loc.column}, {"statement", print(st)}};
      try {
        auto [status, result] = std::visit([&](const auto& node) { return exec(node); }, st.node);
        e["status"] = status;
        e["result"] = result;
        if (status == "FAIL") ++res.failures;
      } catch (const Error& err) {
        e["status"] = "error";
        e["error"] = {{"kind", std::string(to_string(err.kind()))}, {"message", err.what()}};
        ++res.errors;
      }
      entries.push_back(std::move(e));
      if (res.errors) break;
    }
    res.report = {{"statements", entries},
                  {"summary",
                   {{"statements", script.statements.size()},
                    {"executed", entries.size()},
                    {"failures", res.failures},
                    {"errors", res.errors},
                    {"exit_status", res.exit_status()}}}};
    return res;
  }

 private:
  using Outcome = std::pair<std::string, Json>;

  static Outcome ok(Json j) { return {"ok", std::move(j)}; }
  static Outcome verdict(bool pass, Json j) { return {pass ? "PASS" : "FAIL", std::move(j)}; }

  // ---- definitions ----
  Outcome exec(const LetDef& d) {
    ints_[d.name] = eval_int(d.value, ints_);
    return ok({{"name", d.name}, {"value", ints_[d.name]}});
  }

  Outcome exec(const RingPattern& rp) {
    auto [ring, report] = build_ring(rp, ints_, Truncation::Reject, opt_.confluence_degree);
    rings_.insert_or_assign(rp.name, ring);
    active_ = ring;
    return ok({{"name", rp.name},
               {"variables", ring->num_vars()},
               {"rules", ring->rules().size()},
               {"critical_pairs", report.pairs.size()},
               {"confluent_to_degree", report.degree_bound}});
  }

  Outcome exec(const IdealDef& d) {
    auto I = eval_ideal(d.expr);
    ideals_.insert_or_assign(d.name, I);
    return ok({{"name", d.name}, {"ideal", I.to_string()}, {"mode", I.is_monomial() ? "monomial" : "general"},
               {"exact", I.exact()}});
  }

  Outcome exec(const FamilySpec& f) {
    families_.insert_or_assign(f.name, f);
    return ok({{"family", f.name}, {"parameter", f.param}});
  }

  Outcome exec(const ScheduleStmt& s) {
    auto sched = Schedule::range(s.levels.lo, s.levels.hi, s.window ? static_cast<std::size_t>(*s.window)
                                                                   : opt_.stability_window);
    schedules_.insert_or_assign(s.family, sched);
    return ok({{"family", s.family}, {"levels", sched.levels}, {"window", sched.window}});
  }

  // ---- queries ----
  Outcome exec(const QueryStmt& q) {
    const auto& c = q.call;
    const auto& k = c.kind;
    auto cfg = search_config(c);
    auto cap = c.cap ? static_cast<std::size_t>(*c.cap) : opt_.iteration_cap;
    if (k == "gamma" || k == "gammabar") {
      arity(c, 2);
      auto a = ideal_arg(c, 0), b = ideal_arg(c, 1);
      require_same_ring(a.ring(), b.ring());
      auto g = k == "gamma" ? gamma_small_cyclic(b, a, cap, cfg) : gamma_large_cyclic(b, a, cap, cfg);
      return ok({{"ideal", g.ideal.to_string()}, {"stabilized", g.stabilized}, {"steps", g.steps}});
    }
    if (k == "colon") {
      arity(c, 2);
      auto I = ideal_arg(c, 0);
      auto J = std::holds_alternative<PolyPattern>(c.args[1]) ? ideal_colon(I, poly_arg(c, 1), cfg)
                                                             : ideal_colon_ideal(I, ideal_arg(c, 1), cfg);
      return ok({{"ideal", J.to_string()}, {"exact", J.exact()}});
    }
    if (k == "saturation") {
      arity(c, 2);
      auto s = ideal_saturation(ideal_arg(c, 0), ideal_arg(c, 1), cap, cfg);
      return ok({{"ideal", s.ideal.to_string()}, {"stabilized", s.stabilized}, {"steps", s.steps}});
    }
    if (k == "member") {
      arity(c, 2);
      return ok(membership_json(poly_arg(c, 0), ideal_arg(c, 1), cfg.degree_bound));
    }
    if (k == "radical") {
      arity(c, 1);
      auto r = ideal_radical(ideal_arg(c, 0)).to_string();
      return ok({{"ideal", r}});
    }
    if (k == "minprimes") {
      arity(c, 1);
      auto I = ideal_arg(c, 0);
      PrimeSet s;
      for (auto& p : minimal_primes(I)) s.insert(p);
      return ok({{"primes", prime_list(s, I.ring()->var_name())}});
    }
    if (k == "ass" || k == "assf") {
      arity(c, 1);
      auto b = ideal_arg(c, 0);
      auto bound = c.degree ? static_cast<std::size_t>(*c.degree) : default_witness_bound(b);
      auto r = k == "ass" ? assassin_cyclic({b}, bound) : weak_assassin_cyclic({b}, bound);
      return ok({{"primes", prime_list(r.primes, b.ring()->var_name())},
                 {"complete", r.complete},
                 {"witness_bound", r.witness_bound}});
    }
    if (k == "normal") {
      arity(c, 1);
      auto nf = poly_arg(c, 0).to_string();
      return ok({{"normal_form", nf}});
    }
    if (k == "bounded") {
      arity(c, 2);
      auto a = ideal_arg(c, 0), b = ideal_arg(c, 1);
      auto t = torsion_cyclic(b, a, cap);
      auto n = is_bounded_small_torsion(b, a, t.gamma_small, cap);
      auto nl = is_bounded_large_torsion(b, a, t.gamma_large, cap);
      auto opt_json = [](const std::optional<std::size_t>& x) { return x ? Json(*x) : Json(nullptr); };
      return ok({{"small_bounded", n.has_value()},
                 {"small_exponent", opt_json(n)},
                 {"large_bounded", nl.has_value()},
                 {"large_exponent", opt_json(nl)},
                 {"search_limit", cap}});
    }
    if (k == "confluence") {
      arity(c, 0);
      return ok(confluence_json(c));
    }
    if (k == "fairness") {
      arity(c, 2);
      return ok(to_json(fairness(c)));
    }
    throw Error(ErrorKind::InvalidArgument, "unknown query " + k);
  }

  // ---- checks ----
  Outcome exec(const CheckStmt& s) {
    const auto& c = s.call;
    std::size_t total = 0, failed = 0;
    Json failures = Json::array();
    Json last;
    auto saved = ints_;
    for_each_binding(c.quant, ints_, [&](const IntEnv& env) {
      ints_ = env;
      ++total;
      bool pass = evaluate_claim(c, last);
      if (!pass) {
        ++failed;
        Json where = Json::object();
        for (auto& b : c.quant.binders) where[b.name] = env.at(b.name);
        if (failures.size() < 5) failures.push_back(where);
      }
    });
    ints_ = saved;
    if (c.quant.binders.empty() && !c.quant.guard) return verdict(failed == 0, last);
    return verdict(failed == 0, {{"instances", total}, {"failed", failed}, {"failing_bindings", failures}});
  }

  Outcome exec(const StableStmt& s) {
    auto fam = family(s.family);
    auto sched = schedule(s.family);
    std::vector<std::string> values;
    Json evidence = Json::array();
    for (auto n : sched.levels) {
      auto inst = instantiate(fam, n, opt_.search, opt_.confluence_degree);
      Executor inner(opt_);
      inner.ints_ = ints_;
      for (auto& [name, v] : inst.ints) inner.ints_[name] = v;
      inner.ideals_ = inst.ideals;
      inner.active_ = inst.ring;
      auto out = inner.exec(CheckStmt{s.claim});
      bool pass = out.first == "PASS";
      values.push_back(pass ? "true" : "false");
      evidence.push_back({{"level", n}, {"value", pass}});
    }
    bool stable = window_stable(values, sched.window);
    bool all = std::all_of(values.begin(), values.end(), [](const std::string& v) { return v == "true"; });
    return verdict(all && stable, {{"family", s.family},
                                   {"value", values.back() == "true"},
                                   {"stable", stable},
                                   {"window", sched.window},
                                   {"evidence", evidence}});
  }

  Outcome exec(const RunExampleStmt& r) {
    auto sched = schedule(r.tag);
    if (r.levels) sched = Schedule::range(r.levels->lo, r.levels->hi, sched.window);
    if (r.window) sched = Schedule::range(sched.levels.front(), sched.levels.back(), static_cast<std::size_t>(*r.window));
    auto rep = replicate_example(r.tag, sched, opt_.search);
    return verdict(rep.all_pass(), to_json(rep));
  }

  Outcome exec(const HarnessStmt& h) {
    if (h.instances < 0) throw Error(ErrorKind::InvalidArgument, "negative instance count");
    HarnessConfig cfg;
    cfg.instances = static_cast<std::size_t>(h.instances);
    cfg.seed = h.seed ? static_cast<std::uint64_t>(*h.seed) : opt_.seed;
    cfg.workers = opt_.workers;
    cfg.iteration_cap = opt_.iteration_cap;
    auto rep = proposition_harness(cfg);
    return verdict(rep.violations.empty(), to_json(rep));
  }

  // ---- helpers ----
  bool evaluate_claim(const Call& c, Json& out) {
    const auto& k = c.kind;
    auto cfg = search_config(c);
    auto cap = c.cap ? static_cast<std::size_t>(*c.cap) : opt_.iteration_cap;
    if (k == "member" || k == "notmember") {
      arity(c, 2);
      out = membership_json(poly_arg(c, 0), ideal_arg(c, 1), cfg.degree_bound);
      return out["verdict"] == std::string(to_string(k == "member" ? Truth::Yes : Truth::No));
    }
    if (k == "equal" || k == "subset") {
      arity(c, 2);
      auto I = ideal_arg(c, 0), J = ideal_arg(c, 1);
      auto t = k == "equal" ? ideal_equal(I, J, cfg.degree_bound) : ideal_contains(J, I, cfg.degree_bound);
      out = {{"verdict", std::string(to_string(t))}, {"left", I.to_string()}, {"right", J.to_string()}};
      return t == Truth::Yes;
    }
    if (k == "zero" || k == "nonzero") {
      arity(c, 1);
      auto f = poly_arg(c, 0);
      out = {{"normal_form", f.to_string()}};
      return f.is_zero() == (k == "zero");
    }
    if (k == "fairness") {
      arity(c, 2);
      auto r = fairness(c);
      out = to_json(r);
      return r.all_verdicts() && r.centred_witness_ok && r.half_centred_witness_ok && r.torsion.functors_agree;
    }
    if (k == "radicalprobe") {
      arity(c, 2);
      auto a = ideal_arg(c, 0), b = ideal_arg(c, 1);
      auto e = radical_probe(a, {b}, cap).front();
      out = {{"large_radical", e.large_radical}, {"small_radical", e.small_radical}};
      return e.large_radical && e.small_radical;
    }
    if (k == "confluence") {
      arity(c, 0);
      out = confluence_json(c);
      return out["all_joinable"].get<bool>();
    }
    throw Error(ErrorKind::InvalidArgument, "unknown check " + k);
  }

  FairnessReport fairness(const Call& c) {
    auto a = ideal_arg(c, 0), b = ideal_arg(c, 1);
    FairnessBounds fb;
    fb.iteration_cap = c.cap ? static_cast<std::size_t>(*c.cap) : opt_.iteration_cap;
    fb.witness_bound = c.degree ? static_cast<std::size_t>(*c.degree) : 0;
    return fairness_report(a, b, fb);
  }

  Json confluence_json(const Call& c) {
    const auto& R = ring();
    auto bound = c.degree ? static_cast<std::size_t>(*c.degree) : opt_.confluence_degree;
    auto rep = check_local_confluence(R, bound);
    return {{"critical_pairs", rep.pairs.size()},
            {"non_joinable", rep.non_joinable()},
            {"all_joinable", rep.all_joinable},
            {"degree_bound", bound}};
  }

  static Json membership_json(const Element& f, const IdealHandle& I, std::size_t bound) {
    auto ans = ideal_membership(f, I, bound);
    Json j = {{"element", f.to_string()}, {"verdict", std::string(to_string(ans.verdict))},
              {"search_bound", ans.search_bound}};
    if (ans.certificate) {
      auto gens = I.generators();
      Json cert = Json::array();
      for (auto& [idx, mult] : *ans.certificate)
        cert.push_back({{"generator", gens.at(idx).to_string()}, {"multiplier", mult.to_string()}});
      j["certificate"] = cert;
    }
    return j;
  }

  SearchConfig search_config(const Call& c) const {
    auto cfg = opt_.search;
    if (c.degree) cfg.degree_bound = static_cast<std::size_t>(*c.degree);
    if (c.cap) cfg.iteration_cap = static_cast<std::size_t>(*c.cap);
    return cfg;
  }

  static void arity(const Call& c, std::size_t n) {
    if (c.args.size() != n)
      throw Error(ErrorKind::InvalidArgument, c.kind + " takes " + std::to_string(n) + " argument(s), got " +
                                                  std::to_string(c.args.size()));
  }

  const Ring& ring() const {
    if (!active_) throw Error(ErrorKind::PatternError, "no ring declared");
    return active_;
  }

  IdealHandle eval_ideal(const IdealExpr& e) {
    IdealEvaluator ev(ring(), ideals_, ints_, Truncation::Reject, opt_.search);
    return ev.eval(e);
  }

  IdealHandle ideal_arg(const Call& c, std::size_t k) {
    if (auto* e = std::get_if<IdealExpr>(&c.args[k])) return eval_ideal(*e);
    auto f = poly_arg(c, k);
    return IdealHandle::from_elements(f.ring(), {f});
  }

  Element poly_arg(const Call& c, std::size_t k) {
    const auto* p = std::get_if<PolyPattern>(&c.args[k]);
    if (!p) throw Error(ErrorKind::InvalidArgument, c.kind + ": argument " + std::to_string(k + 1) + " must be a polynomial");
    return *eval_poly(*p, ints_, ring(), Truncation::Reject);
  }

  FamilySpec family(const std::string& name) const {
    if (auto it = families_.find(name); it != families_.end()) return it->second;
    return find_example(name).family();
  }

  Schedule schedule(const std::string& name) const {
    if (auto it = schedules_.find(name); it != schedules_.end()) return it->second;
    return Schedule::range(4, 10, opt_.stability_window);
  }

  ExecOptions opt_;
  IntEnv ints_;
  std::map<std::string, Ring> rings_;
  Ring active_;
  std::map<std::string, IdealHandle> ideals_;
  std::map<std::string, FamilySpec> families_;
  std::map<std::string, Schedule> schedules_;
};

}  // namespace detail

/// Evaluates the statements in order. Execution stops at the first error.
inline ExecResult execute(const Script& script, const ExecOptions& opt = {}) {
  return detail::Executor(opt).run(script);
}

}  // namespace torsionlab::dsl
