#include <gtest/gtest.h>

#include "support.hpp"

using namespace torsionlab;
using support::monomial_ideal;

namespace {

std::vector<HarnessInstance> small_instances(std::size_t count, std::uint64_t seed) {
  std::vector<HarnessInstance> out;
  for (std::size_t i = 0; out.size() < count; ++i) {
    auto inst = draw_instance(seed, i);
    if (support::lcm_degree(inst.b) <= 6 && support::lcm_degree(inst.c) <= 6) out.push_back(inst);
  }
  return out;
}

}  // namespace

TEST(Assassin, EmbeddedPrime) {
  auto R = RingPresentation::free(2);
  auto b = monomial_ideal(R, {{2, 0}, {1, 1}});
  auto r = assassins_cyclic({b}, default_witness_bound(b));
  EXPECT_EQ(to_string(r.ass.primes), "{prime(X0), prime(X0, X1)}");
  EXPECT_EQ(to_string(r.assf.primes), "{prime(X0), prime(X0, X1)}");
  EXPECT_TRUE(r.ass.complete);
}

TEST(Assassin, ZeroModuleHasNone) {
  auto R = RingPresentation::free(2);
  auto r = assassins_cyclic({IdealHandle::unit(R)}, 4);
  EXPECT_TRUE(r.ass.primes.empty());
  EXPECT_TRUE(r.assf.primes.empty());
}

TEST(Assassin, FreeRingHasZeroPrime) {
  auto R = RingPresentation::free(2);
  auto r = assassins_cyclic({IdealHandle::zero(R)}, 2);
  EXPECT_EQ(to_string(r.ass.primes), "{prime()}");
}

TEST(Assassin, SmallBoundIsFlaggedIncomplete) {
  auto R = RingPresentation::free(3);
  auto b = monomial_ideal(R, {{2, 2, 2}});
  auto r = assassins_cyclic({b}, 2);
  EXPECT_FALSE(r.ass.complete);
  EXPECT_TRUE(assassins_cyclic({b}, default_witness_bound(b)).ass.complete);
}

TEST(Assassin, DefaultBoundIsLcmDegreePlusTwo) {
  auto R = RingPresentation::free(3);
  auto b = monomial_ideal(R, {{2, 1, 0}, {0, 1, 3}});
  EXPECT_EQ(default_witness_bound(b), 8u);
}

TEST(Assassin, VarietyFilters) {
  auto R = RingPresentation::free(3);
  auto a = monomial_ideal(R, {{1, 1, 0}});
  PrimeSet s{MonomialPrime{{0}}, MonomialPrime{{2}}, MonomialPrime{{1, 2}}};
  EXPECT_EQ(to_string(set_intersect_variety(s, a)), "{prime(X0), prime(X1, X2)}");
  EXPECT_EQ(to_string(set_difference_variety(s, a)), "{prime(X2)}");
}

TEST(AssassinOracle, CyclicModulesMatchBoxEnumeration) {
  std::size_t compared = 0;
  for (auto& inst : small_instances(120, 99)) {
    auto ob = support::to_oracle(inst.b);
    auto expect = oracle::assassins(ob, oracle::unit(ob.n));
    auto got = assassins_cyclic({inst.b}, default_witness_bound(inst.b));
    ASSERT_TRUE(got.ass.complete);
    EXPECT_EQ(support::to_oracle(got.ass.primes), expect.ass) << instance_script(inst);
    EXPECT_EQ(support::to_oracle(got.assf.primes), expect.assf) << instance_script(inst);
    ++compared;
  }
  EXPECT_GE(compared, 100u);
}

TEST(AssassinOracle, SubmodulesMatchBoxEnumeration) {
  std::size_t compared = 0;
  for (auto& inst : small_instances(120, 17)) {
    auto ob = support::to_oracle(inst.b), oc = support::to_oracle(inst.c);
    auto expect = oracle::assassins(ob, oc);
    auto got = assassins_submodule(inst.b, inst.c, default_witness_bound(inst.b, inst.c));
    ASSERT_TRUE(got.ass.complete);
    EXPECT_EQ(support::to_oracle(got.ass.primes), expect.ass) << instance_script(inst);
    EXPECT_EQ(support::to_oracle(got.assf.primes), expect.assf) << instance_script(inst);
    ++compared;
  }
  EXPECT_GE(compared, 100u);
}

TEST(Assassin, BinaryElementAnnihilators) {
  auto R = RingPresentation::free(2);
  auto b = monomial_ideal(R, {{2, 0}, {1, 1}});
  EXPECT_EQ(to_string(binary_element_prime_annihilators(b)), "{prime(X0), prime(X0, X1)}");
  EXPECT_EQ(to_string(binary_element_prime_annihilators(IdealHandle::zero(R))), "{prime()}");
}

TEST(Assassin, AnnihilatorOfSumExceedsIntersection) {
  auto R = RingPresentation::make(2, {RewriteRule::vanishing(Monomial::var(0, 2)),
                                      RewriteRule::vanishing(Monomial::var(1, 2))});
  auto x0 = Element::variable(R, 0), x1 = Element::variable(R, 1);
  auto zero = IdealHandle::zero(R);
  auto meet = ideal_intersection(ideal_colon(zero, x0), ideal_colon(zero, x1));
  EXPECT_TRUE(((x0 - x1) * (x0 + x1)).is_zero());
  EXPECT_EQ(ideal_membership(x0 - x1, meet, 0).verdict, Truth::No);
  // Ann(X0 + X1) is not prime, so no monomial prime is reported for it.
  auto primes = binary_element_prime_annihilators(zero);
  EXPECT_EQ(to_string(primes), "{prime(X0, X1)}");
}
