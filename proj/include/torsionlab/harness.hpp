#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "torsionlab/format.hpp"
#include "torsionlab/torsion.hpp"

namespace torsionlab {

/// One randomly drawn configuration: a ring, the ideal a, the module R/b, a
/// second ideal a2, an ideal c containing b, and an ideal b2 with
/// a inside b2 inside rad(a).
struct HarnessInstance {
  std::size_t index = 0;
  Ring ring;
  bool artinian = false;
  IdealHandle a, b, c, a2, b2;
};

struct Violation {
  std::size_t instance = 0;
  std::string property;
  std::string detail;
  std::string script;
};

struct HarnessConfig {
  std::size_t instances = 500;
  std::uint64_t seed = 42;
  std::size_t workers = 1;
  std::size_t iteration_cap = 64;
};

struct HarnessReport {
  std::size_t instances = 0;
  std::uint64_t seed = 0;
  std::size_t artinian_instances = 0;
  /// Number of instances on which each property was evaluated.
  std::map<std::string, std::size_t> checked;
  std::vector<Violation> violations;

  std::size_t violation_count(const std::string& prefix) const {
    return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(), [&](const Violation& v) {
      return v.property.compare(0, prefix.size(), prefix) == 0;
    }));
  }
};

namespace detail {

class InstanceDraw {
 public:
  InstanceDraw(std::uint64_t seed, std::size_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    rng_.seed(seq);
  }

  std::size_t pick(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  Monomial monomial(std::size_t num_vars, std::size_t min_degree, std::size_t max_degree) {
    std::size_t d = pick(min_degree, max_degree);
    Monomial m;
    for (std::size_t k = 0; k < d; ++k) m.multiply_var(static_cast<VarIndex>(pick(0, num_vars - 1)), 1);
    return m;
  }

  std::vector<Monomial> monomials(std::size_t num_vars, std::size_t count, std::size_t min_degree,
                                  std::size_t max_degree) {
    std::vector<Monomial> out;
    for (std::size_t k = 0; k < count; ++k) out.push_back(monomial(num_vars, min_degree, max_degree));
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace detail

/// Deterministic instance for (seed, index). Rings have at most four
/// variables; rule sets are empty, powers of some or all variables, or powers
/// of all variables plus mixed monomials, so every ring is noetherian.
inline HarnessInstance draw_instance(std::uint64_t seed, std::size_t index) {
  detail::InstanceDraw d(seed, index);
  std::size_t n = d.pick(0, 9) == 0 ? 1 : d.pick(2, 4);
  // Kinds: 0-2 polynomial ring, 3-6 some variables nilpotent, 7-9 every
  // variable nilpotent (artinian), 8-9 with extra mixed monomial rules.
  std::size_t kind = d.pick(0, 9);
  std::vector<RewriteRule> rules;
  for (std::size_t v = 0; v < n; ++v) {
    bool nilpotent = kind >= 7 || (kind >= 3 && d.pick(0, 2) == 0);
    if (nilpotent)
      rules.push_back(RewriteRule::vanishing(Monomial::var(static_cast<VarIndex>(v), static_cast<Exponent>(d.pick(2, 4)))));
  }
  bool artinian = rules.size() == n;
  if (kind >= 8 && n > 1) {
    for (auto& m : d.monomials(n, d.pick(1, 2), 2, 3))
      if (m.factors().size() > 1) rules.push_back(RewriteRule::vanishing(m));
  }
  // Drop redundant rules so the presentation stays minimal.
  std::vector<Monomial> lhs;
  for (auto& r : rules) lhs.push_back(r.lhs);
  lhs = minimalize(lhs);
  rules.clear();
  for (auto& m : lhs) rules.push_back(RewriteRule::vanishing(m));
  auto R = RingPresentation::make(n, rules);

  std::size_t akind = d.pick(0, 29);
  auto a = akind == 0   ? IdealHandle::unit(R)
           : akind == 1 ? IdealHandle::zero(R)
                        : IdealHandle::from_monomials(R, d.monomials(n, d.pick(1, 2), 1, 2));

  auto b = IdealHandle::from_monomials(R, d.monomials(n, d.pick(0, 4), 2, 4));
  auto c = ideal_sum(b, IdealHandle::from_monomials(R, d.monomials(n, d.pick(1, 2), 1, 3)));
  auto a2 = IdealHandle::from_monomials(R, d.monomials(n, d.pick(1, 2), 1, 3));

  // b2 = a plus multiples of generators of rad(a), or rad(a) itself.
  auto rad = ideal_radical(a);
  auto b2 = rad;
  if (d.pick(0, 3) != 0) {
    std::vector<Monomial> extra;
    const auto& rg = rad.lifted_generators();
    if (!rg.empty()) {
      for (std::size_t k = d.pick(0, 2); k > 0; --k)
        extra.push_back(rg[d.pick(0, rg.size() - 1)] * d.monomial(n, 0, 1));
    }
    b2 = ideal_sum(a, IdealHandle::from_monomials(R, extra));
  }
  return {index, R, artinian, a, b, c, a2, b2};
}

/// Script reproducing the computations of an instance.
inline std::string instance_script(const HarnessInstance& inst) {
  std::string s = "# seed instance " + std::to_string(inst.index) + "\n";
  s += ring_declaration("R", inst.ring) + "\n";
  s += "ideal a = " + ideal_literal(inst.a) + "\n";
  s += "ideal b = " + ideal_literal(inst.b) + "\n";
  s += "ideal c = " + ideal_literal(inst.c) + "\n";
  s += "ideal a2 = " + ideal_literal(inst.a2) + "\n";
  s += "ideal b2 = " + ideal_literal(inst.b2) + "\n";
  s += "query fairness(a; b)\n";
  s += "query fairness(b2; b)\n";
  s += "query ass(c)\n";
  s += "query assf(c)\n";
  s += "query colon(b; c)\n";
  return s;
}

/// Outcome of the checks on one instance, merged by the driver.
struct InstanceOutcome {
  std::vector<std::string> checked;
  std::vector<Violation> violations;
  bool artinian = false;
  bool centred_a = false;
  bool centred_a2 = false;
  bool centred_sum = false;
};

inline bool implies(bool p, bool q) { return !p || q; }

inline std::string set_text(const PrimeSet& s) { return to_string(s); }

/// Evaluates every per-instance proposition.
inline InstanceOutcome check_instance(const HarnessInstance& inst, std::size_t cap = 64) {
  InstanceOutcome out;
  out.artinian = inst.artinian;
  std::string script;
  auto expect = [&](const std::string& property, bool ok, const std::string& detail = {}) {
    out.checked.push_back(property);
    if (ok) return;
    if (script.empty()) script = instance_script(inst);
    out.violations.push_back({inst.index, property, detail, script});
  };

  const auto& a = inst.a;
  const auto& b = inst.b;
  FairnessBounds bounds{cap, 0};
  auto rep = fairness_report(a, b, bounds);
  const auto& s = rep.sets;
  const auto& g = rep.torsion.gamma_small;
  const auto& gl = rep.torsion.gamma_large;
  auto in_var = [&](const PrimeSet& x) { return set_intersect_variety(x, a); };
  auto off_var = [&](const PrimeSet& x) { return set_difference_variety(x, a); };

  expect("assassins.complete", s.complete);
  expect("torsion.stabilized", rep.torsion.small_stabilized && rep.torsion.large_stabilized);
  expect("torsion.subfunctor_chain",
         ideal_contains(g, b) == Truth::Yes && ideal_contains(gl, g) == Truth::Yes,
         "b=" + b.to_string() + " g=" + g.to_string() + " gbar=" + gl.to_string());
  expect("torsion.power_invariance", gamma_small_cyclic(b, ideal_power(a, 2), cap).ideal == g);
  {
    auto g2 = gamma_small_cyclic(b, inst.a2, cap).ideal;
    auto gsum = gamma_small_cyclic(b, ideal_sum(a, inst.a2), cap).ideal;
    expect("torsion.sum_composition", gsum == ideal_intersection(g, g2),
           "gamma(a+a2)=" + gsum.to_string());
  }

  // Small torsion relations.
  expect("small_torsion.ass_equals_ass_in_variety", s.ass_small == in_var(s.ass_module),
         set_text(s.ass_small) + " vs " + set_text(in_var(s.ass_module)));
  expect("small_torsion.assf_within_assf_in_variety", is_subset(s.assf_small, in_var(s.assf_module)));
  expect("small_quotient.ass_contains_ass_off_variety", is_subset(off_var(s.ass_module), s.ass_small_quotient));
  expect("small_quotient.assf_contains_assf_off_variety",
         is_subset(off_var(s.assf_module), s.assf_small_quotient));

  // Large torsion relations.
  expect("large_torsion.ass_equals_ass_in_variety_and_small",
         s.ass_large == in_var(s.ass_module) && s.ass_large == s.ass_small);
  expect("large_torsion.assf_within_assf_in_variety", is_subset(s.assf_large, in_var(s.assf_module)));
  expect("large_quotient.ass_contains_ass_off_variety", is_subset(off_var(s.ass_module), s.ass_large_quotient));
  expect("large_quotient.assf_contains_assf_off_variety",
         is_subset(off_var(s.assf_module), s.assf_large_quotient));

  // Vanishing and fullness.
  bool assf_disjoint = in_var(s.assf_module).empty();
  bool ass_disjoint = in_var(s.ass_module).empty();
  bool large_zero = gl == b;
  bool small_zero = g == b;
  expect("vanishing.assf_disjoint_implies_large_zero", implies(assf_disjoint, large_zero));
  expect("vanishing.large_zero_implies_small_zero", implies(large_zero, small_zero));
  expect("vanishing.small_zero_implies_ass_disjoint", implies(small_zero, ass_disjoint));
  bool assf_inside = off_var(s.assf_module).empty();
  expect("fullness.small_full_implies_assf_in_variety", implies(g.is_unit(), assf_inside));
  expect("fullness.assf_in_variety_iff_large_full", assf_inside == gl.is_unit());

  // Implications between per-module verdicts.
  expect("verdicts.weakly_fair_implies_weakly_quasifair",
         implies(rep.weakly_fair.holds, rep.weakly_quasifair.holds));
  expect("verdicts.weakly_large_fair_implies_weakly_large_quasifair",
         implies(rep.weakly_large_fair.holds, rep.weakly_large_quasifair.holds));
  expect("verdicts.weakly_quasifair_implies_weakly_large_quasifair",
         implies(rep.weakly_quasifair.holds, rep.weakly_large_quasifair.holds));

  expect("large_quotient.ass_misses_variety", in_var(s.ass_large_quotient).empty());

  // Exact sequence 0 -> c/b -> R/b -> R/c -> 0 and the quotient inclusion.
  const auto& c = inst.c;
  auto sub = assassins_submodule(b, c, default_witness_bound(b, c));
  auto quo = assassins_cyclic({c}, default_witness_bound(c));
  expect("assassins.complete_exact_sequence", sub.ass.complete && quo.ass.complete);
  expect("exact_sequence.ass_inclusions", is_subset(sub.ass.primes, s.ass_module) &&
                                              is_subset(s.ass_module, set_union(sub.ass.primes, quo.ass.primes)));
  expect("exact_sequence.assf_inclusions",
         is_subset(sub.assf.primes, s.assf_module) &&
             is_subset(s.assf_module, set_union(sub.assf.primes, quo.assf.primes)));
  auto ann = ideal_colon_ideal(b, c);
  expect("quotient_module.ass_off_annihilator_variety",
         is_subset(set_difference_variety(quo.ass.primes, ann), s.ass_module));
  expect("quotient_module.assf_off_annihilator_variety",
         is_subset(set_difference_variety(quo.assf.primes, ann), s.assf_module));

  // Bounded torsion criteria.
  auto bounded_small = is_bounded_small_torsion(b, a, g, cap);
  auto bounded_large = is_bounded_large_torsion(b, a, gl, cap);
  expect("bounded_torsion.detected", bounded_small.has_value() && bounded_large.has_value());
  if (bounded_small) {
    expect("bounded_torsion.small_ass_criterion",
           implies(in_var(s.ass_small_quotient).empty(), rep.fair.holds));
    expect("bounded_torsion.small_assf_criterion",
           implies(in_var(s.assf_small_quotient).empty(), rep.fair.holds && rep.weakly_fair.holds));
  }
  if (bounded_large) {
    expect("bounded_torsion.large_fair", rep.large_fair.holds);
    expect("bounded_torsion.large_assf_criterion",
           implies(in_var(s.assf_large_quotient).empty(), rep.weakly_large_fair.holds));
  }

  // An ideal between a and rad(a).
  auto rep2 = fairness_report(inst.b2, b, bounds);
  expect("between_radical.weak_quasifairness_descends",
         implies(rep2.weakly_quasifair.holds, rep.weakly_quasifair.holds));

  // Assassin versus weak assassin; this ring is noetherian.
  expect("assassins.ass_within_assf", is_subset(s.ass_module, s.assf_module));
  {
    auto binary = binary_element_prime_annihilators(b);
    expect("assassins.binary_element_annihilators_are_witnessed", is_subset(binary, s.ass_module),
           set_text(binary) + " vs " + set_text(s.ass_module));
  }
  expect("assassins.equal_on_noetherian", s.ass_module == s.assf_module);
  expect("vanishing.large_zero_iff_assf_disjoint", large_zero == assf_disjoint);

  // Noetherian rings: every verdict and witness holds.
  bool ok_ideal = rep.all_verdicts() && rep.centred_witness_ok && rep.half_centred_witness_ok &&
             rep.torsion.functors_agree;
  expect("noetherian.all_verdicts_and_witnesses", ok_ideal);

  // Radicality.
  expect("radical.large", gamma_large_cyclic(gl, a, cap).ideal == gl);
  expect("radical.small", gamma_small_cyclic(g, a, cap).ideal == g);

  auto centred = [&](const IdealHandle& x) {
    auto r = fairness_report(x, b, bounds);
    return r.centred_witness_ok && r.half_centred_witness_ok;
  };
  out.centred_a = rep.centred_witness_ok && rep.half_centred_witness_ok;
  out.centred_a2 = centred(inst.a2);
  out.centred_sum = centred(ideal_sum(a, inst.a2));
  return out;
}

/// Runs the proposition harness. Instances are independent and drawn from
/// (seed, index), so the report does not depend on the number of workers.
inline HarnessReport proposition_harness(const HarnessConfig& cfg) {
  std::vector<InstanceOutcome> outcomes(cfg.instances);
  auto work = [&](std::size_t first, std::size_t step) {
    for (std::size_t i = first; i < cfg.instances; i += step)
      outcomes[i] = check_instance(draw_instance(cfg.seed, i), cfg.iteration_cap);
  };
  std::size_t workers = std::max<std::size_t>(1, std::min(cfg.workers, cfg.instances));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    for (auto& t : pool) t.join();
  }

  HarnessReport rep;
  rep.instances = cfg.instances;
  rep.seed = cfg.seed;
  bool all_a = true, all_a2 = true, all_sum = true;
  for (auto& o : outcomes) {
    for (auto& p : o.checked) ++rep.checked[p];
    rep.violations.insert(rep.violations.end(), o.violations.begin(), o.violations.end());
    rep.artinian_instances += o.artinian;
    all_a = all_a && o.centred_a;
    all_a2 = all_a2 && o.centred_a2;
    all_sum = all_sum && o.centred_sum;
  }
  if (cfg.instances > 0) {
    ++rep.checked["corpus.centred_witnesses_closed_under_sum"];
    if (all_a && all_a2 && !all_sum)
      rep.violations.push_back({0, "corpus.centred_witnesses_closed_under_sum",
                                "a and a2 pass every centredness witness but a+a2 does not", ""});
  }
  return rep;
}

}  // namespace torsionlab
