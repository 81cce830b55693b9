#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace torsionlab;
using support::lifted;
using support::monomial_ideal;
using support::to_oracle;

namespace {

Ring nil_ring(std::vector<Exponent> powers) {
  std::vector<RewriteRule> rules;
  for (std::size_t v = 0; v < powers.size(); ++v)
    if (powers[v]) rules.push_back(RewriteRule::vanishing(Monomial::var(static_cast<VarIndex>(v), powers[v])));
  return RingPresentation::make(powers.size(), rules);
}

/// Instances from the harness distribution whose generators stay within degree 6.
std::vector<HarnessInstance> small_instances(std::size_t count) {
  std::vector<HarnessInstance> out;
  for (std::size_t i = 0; out.size() < count; ++i) {
    auto inst = draw_instance(20240501, i);
    if (support::lcm_degree(inst.b) <= 6 && support::lcm_degree(inst.c) <= 6) out.push_back(inst);
  }
  return out;
}

}  // namespace

TEST(Ideal, MonomialModeBasics) {
  auto R = nil_ring({2, 0, 0});
  auto I = monomial_ideal(R, {{1, 1, 0}, {0, 0, 2}});
  EXPECT_TRUE(I.is_monomial());
  EXPECT_EQ(I.to_string(), "ideal(X0*X1, X2^2)");
  EXPECT_TRUE(I.contains_monomial(Monomial::from_dense({1, 2, 0})));
  EXPECT_FALSE(I.contains_monomial(Monomial::from_dense({0, 1, 1})));
  EXPECT_TRUE(IdealHandle::zero(R).is_zero());
  EXPECT_TRUE(IdealHandle::unit(R).is_unit());
}

TEST(Ideal, ColonSaturationExamples) {
  auto R = RingPresentation::free(2);
  auto b = monomial_ideal(R, {{2, 1}});
  auto x0 = Element::variable(R, 0);
  EXPECT_EQ(ideal_colon(b, x0).to_string(), "ideal(X0*X1)");
  auto s = ideal_saturation(b, monomial_ideal(R, {{1, 0}}));
  EXPECT_EQ(s.ideal.to_string(), "ideal(X1)");
  EXPECT_TRUE(s.stabilized);
  EXPECT_EQ(s.steps, 2u);
}

TEST(Ideal, ColonByZeroIsUnit) {
  auto R = RingPresentation::free(2);
  auto b = monomial_ideal(R, {{1, 1}});
  EXPECT_TRUE(ideal_colon(b, Element(R)).is_unit());
  EXPECT_TRUE(ideal_colon_ideal(b, IdealHandle::zero(R)).is_unit());
}

TEST(Ideal, MinimalPrimesOfUnitThrows) {
  auto R = RingPresentation::free(2);
  try {
    minimal_primes(IdealHandle::unit(R));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnitIdeal);
  }
}

TEST(Ideal, MinimalPrimesOfZeroInFreeRing) {
  auto R = RingPresentation::free(2);
  auto p = minimal_primes(IdealHandle::zero(R));
  ASSERT_EQ(p.size(), 1u);
  EXPECT_TRUE(p.front().vars.empty());
}

TEST(Ideal, MembershipCertificateInMonomialMode) {
  auto R = nil_ring({0, 0, 3});
  auto I = monomial_ideal(R, {{1, 1, 0}, {0, 0, 2}});
  auto f = Element::monomial(R, Monomial::from_dense({2, 1, 0}), 3) + Element::monomial(R, Monomial::from_dense({0, 1, 2}));
  auto ans = ideal_membership(f, I, 0);
  ASSERT_EQ(ans.verdict, Truth::Yes);
  Element sum(R);
  auto gens = I.generators();
  for (auto& [k, m] : *ans.certificate) sum += m * gens[k];
  EXPECT_EQ(sum, f);
  EXPECT_EQ(ideal_membership(Element::variable(R, 0), I, 4).verdict, Truth::No);
}

TEST(Ideal, GeneralModeMembershipIsSoundAndBounded) {
  // X0*X1 - X1 = X1*(X0 - X1); X0 maps to the nonzero idempotent X1 in the quotient.
  auto R = RingPresentation::make(2, {RewriteRule::to_term(Monomial::var(1, 2), 1, Monomial::var(1))});
  auto I = IdealHandle::from_elements(R, {Element::variable(R, 0) - Element::variable(R, 1)});
  EXPECT_FALSE(I.is_monomial());
  auto y = Element::variable(R, 0) * Element::variable(R, 1) - Element::variable(R, 1);
  auto ans = ideal_membership(y, I, 2);
  EXPECT_EQ(ans.verdict, Truth::Yes);
  EXPECT_EQ(brute_force_membership(y, I, 2), BruteVerdict::Yes);
  auto z = ideal_membership(Element::variable(R, 0), I, 3);
  EXPECT_EQ(z.verdict, Truth::Unknown);
  EXPECT_EQ(brute_force_membership(Element::variable(R, 0), I, 3), BruteVerdict::NoUpToBound);
}

TEST(Ideal, GeneralModeColonIsMarkedInexact) {
  auto R = RingPresentation::make(2, {RewriteRule::to_term(Monomial::var(1, 2), 1, Monomial::var(1))});
  auto I = IdealHandle::from_elements(R, {Element::variable(R, 1)});
  auto c = ideal_colon(I, Element::variable(R, 1) + Element::variable(R, 0), SearchConfig{2, 64});
  EXPECT_FALSE(c.exact());
}

TEST(Ideal, MinimalTransversalsMatchSubsetEnumeration) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 2 + rng() % 4;
    std::vector<std::vector<VarIndex>> edges;
    std::vector<Monomial> gens;
    for (std::size_t k = 0, m = 1 + rng() % 4; k < m; ++k) {
      std::vector<VarIndex> e;
      Monomial g;
      for (std::size_t v = 0; v < n; ++v)
        if (rng() % 2) {
          e.push_back(static_cast<VarIndex>(v));
          g.multiply_var(static_cast<VarIndex>(v), 1);
        }
      if (e.empty()) continue;
      edges.push_back(e);
      gens.push_back(g);
    }
    auto got = minimal_transversals(edges);
    oracle::PrimeSet expect = oracle::minimal_primes(oracle::make(n, gens, {}));
    oracle::PrimeSet have(got.begin(), got.end());
    EXPECT_EQ(have, expect) << "trial " << trial;
  }
}

TEST(IdealOracle, ColonSaturationRadicalMinimalPrimes) {
  auto corpus = small_instances(120);
  std::size_t compared = 0;
  for (auto& inst : corpus) {
    auto ob = to_oracle(inst.b), oc = to_oracle(inst.c), oa = to_oracle(inst.a);
    // Colon by an ideal and by its first generator.
    EXPECT_EQ(lifted(ideal_colon_ideal(inst.b, inst.c)), oracle::colon(ob, oc).gens) << instance_script(inst);
    if (!inst.c.monomial_generators().empty()) {
      auto g = inst.c.monomial_generators().front();
      EXPECT_EQ(lifted(ideal_colon(inst.b, Element::monomial(inst.ring, g))),
                oracle::colon(ob, std::vector<Monomial>{g}).gens);
    }
    EXPECT_EQ(lifted(ideal_saturation(inst.b, inst.a).ideal), oracle::saturation(ob, oa).gens);
    EXPECT_EQ(lifted(ideal_intersection(inst.b, inst.a2)), oracle::intersection(ob, to_oracle(inst.a2)).gens);
    EXPECT_EQ(lifted(ideal_radical(inst.b)), oracle::radical(ob).gens);
    if (!inst.b.is_unit()) {
      PrimeSet mp;
      for (auto& p : minimal_primes(inst.b)) mp.insert(p);
      EXPECT_EQ(support::to_oracle(mp), oracle::minimal_primes(ob));
    }
    ++compared;
  }
  EXPECT_GE(compared, 100u);
}

TEST(IdealOracle, SumProductPower) {
  auto corpus = small_instances(60);
  for (auto& inst : corpus) {
    auto s = ideal_sum(inst.a, inst.b);
    auto p = ideal_product(inst.a, inst.a2);
    for (auto& m : oracle::box(inst.ring->num_vars(), 4)) {
      EXPECT_EQ(s.contains_monomial(m), inst.a.contains_monomial(m) || inst.b.contains_monomial(m));
      bool in_product = inst.ring->reduce(m) == std::nullopt;
      for (auto& g : inst.a.monomial_generators())
        for (auto& h : inst.a2.monomial_generators()) in_product = in_product || (g * h).divides(m);
      EXPECT_EQ(p.contains_monomial(m), in_product);
    }
    EXPECT_EQ(ideal_power(inst.a, 2), ideal_product(inst.a, inst.a));
    EXPECT_TRUE(ideal_power(inst.a, 0).is_unit());
  }
}

TEST(Ideal, PowerInSquareZeroRing) {
  auto R = nil_ring({2, 2});
  auto a = monomial_ideal(R, {{1, 0}, {0, 1}});
  EXPECT_EQ(ideal_power(a, 2).to_string(), "ideal(X0*X1)");
}

TEST(Ideal, RadicalAndMinimalPrimesOfSmallIdeals) {
  auto R = RingPresentation::free(3);
  EXPECT_EQ(ideal_radical(monomial_ideal(R, {{2, 1, 0}, {0, 0, 3}})).to_string(), "ideal(X2, X0*X1)");
  EXPECT_EQ(ideal_radical(monomial_ideal(R, {{2, 0, 0}})).to_string(), "ideal(X0)");
  auto p = minimal_primes(monomial_ideal(R, {{1, 1, 0}, {1, 0, 1}}));
  EXPECT_EQ(to_string(PrimeSet(p.begin(), p.end())), "{prime(X0), prime(X1, X2)}");
}
