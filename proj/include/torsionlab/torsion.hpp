#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "torsionlab/assassin.hpp"
#include "torsionlab/ideal.hpp"

namespace torsionlab {

struct GammaResult {
  IdealHandle ideal;
  bool stabilized = false;
  std::size_t steps = 0;
};

/// g with Gamma_a(R/b) = g/b, i.e. the saturation of b by a.
inline GammaResult gamma_small_cyclic(const IdealHandle& b, const IdealHandle& a, std::size_t cap = 64,
                                      const SearchConfig& cfg = {}) {
  auto s = ideal_saturation(b, a, cap, cfg);
  return {std::move(s.ideal), s.stabilized, s.steps};
}

/// Intersection over the generators x of a of the saturation of b by x.
/// For a = 0 every element is large torsion.
inline GammaResult gamma_large_cyclic(const IdealHandle& b, const IdealHandle& a, std::size_t cap = 64,
                                      const SearchConfig& cfg = {}) {
  require_same_ring(b.ring(), a.ring());
  b.require_monomial("gamma_large_cyclic");
  a.require_monomial("gamma_large_cyclic");
  GammaResult r{IdealHandle::unit(b.ring()), true, 0};
  for (auto& g : a.monomial_generators()) {
    auto s = ideal_saturation(b, IdealHandle::from_monomials(b.ring(), {g}), cap, cfg);
    r.ideal = ideal_intersection(r.ideal, s.ideal);
    r.stabilized = r.stabilized && s.stabilized;
    r.steps = std::max(r.steps, s.steps);
  }
  return r;
}

struct TorsionResult {
  IdealHandle gamma_small;
  IdealHandle gamma_large;
  bool small_stabilized = false;
  bool large_stabilized = false;
  bool functors_agree = false;
};

inline TorsionResult torsion_cyclic(const IdealHandle& b, const IdealHandle& a, std::size_t cap = 64) {
  auto g = gamma_small_cyclic(b, a, cap);
  auto gl = gamma_large_cyclic(b, a, cap);
  bool agree = g.ideal == gl.ideal;
  return {std::move(g.ideal), std::move(gl.ideal), g.stabilized, gl.stabilized, agree};
}

/// Smallest n <= n_max with a^n * g inside b.
inline std::optional<std::size_t> is_bounded_small_torsion(const IdealHandle& b, const IdealHandle& a,
                                                           const IdealHandle& g, std::size_t n_max) {
  auto power = IdealHandle::unit(b.ring());
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (ideal_contains(b, ideal_product(power, g)) == Truth::Yes) return n;
    power = ideal_product(power, a);
  }
  return std::nullopt;
}

/// Smallest n <= n_max with a^n * gbar inside b.
inline std::optional<std::size_t> is_bounded_large_torsion(const IdealHandle& b, const IdealHandle& a,
                                                           const IdealHandle& gbar, std::size_t n_max) {
  return is_bounded_small_torsion(b, a, gbar, n_max);
}

/// One set identity of a fairness notion: holds iff left == right.
struct SetComparison {
  PrimeSet left;
  PrimeSet right;
  bool holds = false;
};

inline SetComparison compare_sets(PrimeSet left, PrimeSet right) {
  bool eq = left == right;
  return {std::move(left), std::move(right), eq};
}

/// Assassins of R/b, of the torsion submodules and of the torsion quotients.
struct ModuleAssassins {
  PrimeSet ass_module, assf_module;
  PrimeSet ass_small, assf_small;
  PrimeSet ass_large, assf_large;
  PrimeSet ass_small_quotient, assf_small_quotient;
  PrimeSet ass_large_quotient, assf_large_quotient;
  bool complete = true;
};

struct FairnessReport {
  IdealHandle a;
  IdealHandle b;
  TorsionResult torsion;
  ModuleAssassins sets;

  SetComparison weakly_quasifair;
  SetComparison fair;
  SetComparison weakly_fair;
  SetComparison weakly_large_quasifair;
  SetComparison large_fair;
  SetComparison weakly_large_fair;

  /// Gamma = 0 implies ass^f(M) meets var(a) nowhere.
  bool centred_witness_ok = false;
  /// ass^f(M) inside var(a) implies Gamma = M.
  bool half_centred_witness_ok = false;

  bool all_verdicts() const {
    return weakly_quasifair.holds && fair.holds && weakly_fair.holds && weakly_large_quasifair.holds &&
           large_fair.holds && weakly_large_fair.holds;
  }
};

struct FairnessBounds {
  std::size_t iteration_cap = 64;
  /// Zero selects the default witness bound of each module.
  std::size_t witness_bound = 0;
};

inline ModuleAssassins module_assassins(const IdealHandle& b, const TorsionResult& t, const FairnessBounds& bounds) {
  auto pick = [&](std::size_t dflt) { return bounds.witness_bound ? bounds.witness_bound : dflt; };
  ModuleAssassins s;
  auto take = [&](const AssassinResult& r, PrimeSet& out) {
    out = r.primes;
    s.complete = s.complete && r.complete;
  };
  auto both = [&](const AssassinPair& r, PrimeSet& ass, PrimeSet& assf) {
    take(r.ass, ass);
    take(r.assf, assf);
  };
  const auto& g = t.gamma_small;
  const auto& gl = t.gamma_large;
  both(assassins_cyclic({b}, pick(default_witness_bound(b))), s.ass_module, s.assf_module);
  both(assassins_submodule(b, g, pick(default_witness_bound(b, g))), s.ass_small, s.assf_small);
  both(assassins_submodule(b, gl, pick(default_witness_bound(b, gl))), s.ass_large, s.assf_large);
  both(assassins_cyclic({g}, pick(default_witness_bound(g))), s.ass_small_quotient, s.assf_small_quotient);
  both(assassins_cyclic({gl}, pick(default_witness_bound(gl))), s.ass_large_quotient, s.assf_large_quotient);
  return s;
}

inline FairnessReport fairness_report(const IdealHandle& a, const IdealHandle& b, const FairnessBounds& bounds = {}) {
  require_same_ring(a.ring(), b.ring());
  a.require_monomial("fairness_report");
  b.require_monomial("fairness_report");
  FairnessReport r{a, b, torsion_cyclic(b, a, bounds.iteration_cap), {}, {}, {}, {}, {}, {}, {}, false, false};
  r.sets = module_assassins(b, r.torsion, bounds);
  const auto& s = r.sets;
  auto in_var = [&](const PrimeSet& x) { return set_intersect_variety(x, a); };
  auto off_var = [&](const PrimeSet& x) { return set_difference_variety(x, a); };

  r.weakly_quasifair = compare_sets(s.assf_small, in_var(s.assf_module));
  r.fair = compare_sets(s.ass_small_quotient, off_var(s.ass_module));
  r.weakly_fair = compare_sets(s.assf_small_quotient, off_var(s.assf_module));
  r.weakly_large_quasifair = compare_sets(s.assf_large, in_var(s.assf_module));
  r.large_fair = compare_sets(s.ass_large_quotient, off_var(s.ass_module));
  r.weakly_large_fair = compare_sets(s.assf_large_quotient, off_var(s.assf_module));

  const auto& g = r.torsion.gamma_small;
  r.centred_witness_ok = !(g == b) || in_var(s.assf_module).empty();
  r.half_centred_witness_ok = !(off_var(s.assf_module).empty()) || g.is_unit();
  return r;
}

struct RadicalProbeEntry {
  IdealHandle b;
  /// Gamma-bar of R/gbar vanishes.
  bool large_radical = false;
  /// Gamma of R/g vanishes.
  bool small_radical = false;
};

inline std::vector<RadicalProbeEntry> radical_probe(const IdealHandle& a, const std::vector<IdealHandle>& corpus,
                                                    std::size_t cap = 64) {
  std::vector<RadicalProbeEntry> out;
  for (auto& b : corpus) {
    auto t = torsion_cyclic(b, a, cap);
    RadicalProbeEntry e{b, false, false};
    e.large_radical = gamma_large_cyclic(t.gamma_large, a, cap).ideal == t.gamma_large;
    e.small_radical = gamma_small_cyclic(t.gamma_small, a, cap).ideal == t.gamma_small;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace torsionlab
