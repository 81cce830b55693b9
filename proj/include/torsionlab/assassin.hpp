#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <vector>

#include "torsionlab/ideal.hpp"
#include "torsionlab/prime.hpp"

namespace torsionlab {

/// The cyclic module R/b. The unit ideal encodes the zero module.
struct CyclicModule {
  IdealHandle b;
};

struct AssassinResult {
  PrimeSet primes;
  /// Every witness that can produce a distinct annihilator was examined.
  bool complete = false;
  std::size_t witness_bound = 0;
};

/// True iff a lies in the prime, i.e. every generator of a meets p.
inline bool in_variety(const MonomialPrime& p, const IdealHandle& a) {
  const auto& gens = a.monomial_generators();
  return std::all_of(gens.begin(), gens.end(), [&](const Monomial& g) { return p.contains(g); });
}

inline PrimeSet set_intersect_variety(const PrimeSet& s, const IdealHandle& a) {
  a.require_monomial("set_intersect_variety");
  PrimeSet out;
  for (auto& p : s)
    if (in_variety(p, a)) out.insert(p);
  return out;
}

inline PrimeSet set_difference_variety(const PrimeSet& s, const IdealHandle& a) {
  a.require_monomial("set_difference_variety");
  PrimeSet out;
  for (auto& p : s)
    if (!in_variety(p, a)) out.insert(p);
  return out;
}

/// Total degree of the lcm of the lifted generators, plus two.
inline std::size_t default_witness_bound(const IdealHandle& b) {
  Monomial l;
  for (auto& g : b.lifted_generators()) l = lcm(l, g);
  return static_cast<std::size_t>(l.degree()) + 2;
}

namespace detail {

/// Exponent caps per variable: the largest exponent among the lifted
/// generators of the given ideals. Raising a witness above its cap never
/// changes the colon by those ideals.
inline std::vector<Exponent> witness_caps(std::size_t num_vars, std::initializer_list<const IdealHandle*> ideals) {
  std::vector<Exponent> caps(num_vars, 0);
  for (auto* I : ideals)
    for (auto& g : I->lifted_generators())
      for (auto [v, e] : g.factors()) caps[v] = std::max(caps[v], e);
  return caps;
}

/// Calls `visit` on every monomial below the caps with total degree <= bound.
/// Returns whether the bound covered the whole box.
inline bool for_each_capped(const std::vector<Exponent>& caps, std::size_t bound,
                            const std::function<void(const Monomial&)>& visit) {
  std::size_t box_degree = 0;
  for (auto c : caps) box_degree += c;
  std::vector<Exponent> exps(caps.size(), 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t v, std::size_t left) {
    if (v == caps.size()) {
      visit(Monomial::from_dense(exps));
      return;
    }
    for (std::size_t e = 0; e <= std::min<std::size_t>(caps[v], left); ++e) {
      exps[v] = static_cast<Exponent>(e);
      rec(v + 1, left - e);
    }
    exps[v] = 0;
  };
  rec(0, bound);
  return box_degree <= bound;
}

struct Scan {
  AssassinResult ass;
  AssassinResult assf;
};

inline Scan scan_witnesses(const IdealHandle& b, const IdealHandle* c, std::size_t bound) {
  b.require_monomial("assassin");
  if (c) {
    c->require_monomial("assassin");
    require_same_ring(b.ring(), c->ring());
  }
  Scan r;
  auto caps = c ? witness_caps(b.ring()->num_vars(), {&b, c}) : witness_caps(b.ring()->num_vars(), {&b});
  bool complete = for_each_capped(caps, bound, [&](const Monomial& m) {
    if (b.contains_monomial(m)) return;
    if (c && !c->contains_monomial(m)) return;
    auto colon = ideal_colon(b, Element::monomial(b.ring(), m));
    if (auto p = as_prime(colon)) r.ass.primes.insert(*p);
    for (auto& p : minimal_primes(colon)) r.assf.primes.insert(p);
  });
  r.ass.complete = r.assf.complete = complete;
  r.ass.witness_bound = r.assf.witness_bound = bound;
  return r;
}

}  // namespace detail

/// Assassin and weak assassin of R/b from one pass over the witnesses.
struct AssassinPair {
  AssassinResult ass;
  AssassinResult assf;
};

inline AssassinPair assassins_cyclic(const CyclicModule& M, std::size_t witness_bound) {
  auto s = detail::scan_witnesses(M.b, nullptr, witness_bound);
  return {std::move(s.ass), std::move(s.assf)};
}

/// Both assassins of the submodule c/b of R/b (b contained in c); witnesses
/// range over the monomials of c outside b.
inline AssassinPair assassins_submodule(const IdealHandle& b, const IdealHandle& c, std::size_t witness_bound) {
  auto s = detail::scan_witnesses(b, &c, witness_bound);
  return {std::move(s.ass), std::move(s.assf)};
}

/// Primes of the form (b : m) for monomials m outside b.
inline AssassinResult assassin_cyclic(const CyclicModule& M, std::size_t witness_bound) {
  return assassins_cyclic(M, witness_bound).ass;
}

/// Union of the minimal primes of (b : m) over monomials m outside b.
inline AssassinResult weak_assassin_cyclic(const CyclicModule& M, std::size_t witness_bound) {
  return assassins_cyclic(M, witness_bound).assf;
}

inline AssassinResult assassin_cyclic(const CyclicModule& M) {
  return assassin_cyclic(M, default_witness_bound(M.b));
}
inline AssassinResult weak_assassin_cyclic(const CyclicModule& M) {
  return weak_assassin_cyclic(M, default_witness_bound(M.b));
}

inline AssassinResult assassin_submodule(const IdealHandle& b, const IdealHandle& c, std::size_t witness_bound) {
  return assassins_submodule(b, c, witness_bound).ass;
}

inline AssassinResult weak_assassin_submodule(const IdealHandle& b, const IdealHandle& c,
                                              std::size_t witness_bound) {
  return assassins_submodule(b, c, witness_bound).assf;
}

/// Monomial primes p that are the exact annihilator of some element of R/b
/// with 0/1 coefficients, at most `max_terms` terms and degree <= max_degree.
/// Terms of x with equal p-part form a class pi * g(Y) over the variables Y
/// outside p; given p x = 0, Ann(x) = p iff some class has (b : pi) free of
/// monomials in Y alone.
inline PrimeSet binary_element_prime_annihilators(const IdealHandle& b, std::size_t max_degree = 3,
                                                  std::size_t max_terms = 3) {
  const auto n = b.ring()->num_vars();
  if (n > 16) throw Error(ErrorKind::InvalidArgument, "too many variables for the 0/1 element scan");
  std::vector<Monomial> pool;
  for (auto& m : monomials_up_to_degree(n, max_degree))
    if (!b.contains_monomial(m)) pool.push_back(m);
  std::vector<std::uint32_t> kills(pool.size(), 0);
  for (std::size_t k = 0; k < pool.size(); ++k)
    for (std::size_t v = 0; v < n; ++v)
      if (b.contains_monomial(pool[k] * Monomial::var(static_cast<VarIndex>(v)))) kills[k] |= 1u << v;
  const std::uint32_t full = (1u << n) - 1;
  // free_class[k][P]: (b : p-part of pool[k]) has no generator supported off P.
  std::vector<std::vector<bool>> free_class(pool.size(), std::vector<bool>(full + 1, false));
  for (std::size_t k = 0; k < pool.size(); ++k)
    for (std::uint32_t P = 0; P <= full; ++P) {
      Monomial pi;
      for (auto [v, e] : pool[k].factors())
        if (P >> v & 1) pi.multiply_var(v, e);
      bool none_pure = true;
      for (auto& g : b.lifted_generators()) {
        std::uint32_t support = 0;
        auto q = g.colon(pi);
        for (auto [v, e] : q.factors()) support |= 1u << v;
        if ((support & P) == 0) none_pure = false;
      }
      free_class[k][P] = none_pure;
    }
  std::set<std::uint32_t> found;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t from, std::uint32_t common) {
    if (!pick.empty()) {
      for (std::uint32_t P = common;; P = (P - 1) & common) {
        if (std::any_of(pick.begin(), pick.end(), [&](std::size_t k) { return free_class[k][P]; })) found.insert(P);
        if (P == 0) break;
      }
    }
    if (pick.size() == max_terms) return;
    for (std::size_t k = from; k < pool.size(); ++k) {
      pick.push_back(k);
      rec(k + 1, common & kills[k]);
      pick.pop_back();
    }
  };
  rec(0, full);
  PrimeSet out;
  for (auto P : found) {
    std::vector<VarIndex> vars;
    for (std::size_t v = 0; v < n; ++v)
      if (P >> v & 1) vars.push_back(static_cast<VarIndex>(v));
    out.insert(MonomialPrime(vars));
  }
  return out;
}

inline std::size_t default_witness_bound(const IdealHandle& b, const IdealHandle& c) {
  Monomial l;
  for (auto& g : b.lifted_generators()) l = lcm(l, g);
  for (auto& g : c.lifted_generators()) l = lcm(l, g);
  return static_cast<std::size_t>(l.degree()) + 2;
}

}  // namespace torsionlab
