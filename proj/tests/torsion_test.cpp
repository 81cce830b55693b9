#include <gtest/gtest.h>

#include "support.hpp"

using namespace torsionlab;
using support::lifted;
using support::monomial_ideal;
using support::to_oracle;

namespace {

std::vector<HarnessInstance> small_instances(std::size_t count, std::uint64_t seed) {
  std::vector<HarnessInstance> out;
  for (std::size_t i = 0; out.size() < count; ++i) {
    auto inst = draw_instance(seed, i);
    if (support::lcm_degree(inst.b) <= 6) out.push_back(inst);
  }
  return out;
}

Ring square_zero(std::size_t n, std::vector<VarIndex> nilpotent) {
  std::vector<RewriteRule> rules;
  for (auto v : nilpotent) rules.push_back(RewriteRule::vanishing(Monomial::var(v, 2)));
  return RingPresentation::make(n, rules);
}

}  // namespace

TEST(Torsion, CrossTermHasNoTorsion) {
  auto R = RingPresentation::free(2);
  auto a = monomial_ideal(R, {{1, 0}, {0, 1}});
  auto b = monomial_ideal(R, {{1, 1}});
  auto t = torsion_cyclic(b, a);
  EXPECT_EQ(t.gamma_small.to_string(), "ideal(X0*X1)");
  EXPECT_EQ(t.gamma_large.to_string(), "ideal(X0*X1)");
  EXPECT_TRUE(t.functors_agree);
}

TEST(Torsion, ThreeVariableExample) {
  auto R = square_zero(3, {0, 1});
  auto a = monomial_ideal(R, {{0, 0, 1}});
  auto b = monomial_ideal(R, {{1, 1, 0}, {0, 1, 2}});
  auto t = torsion_cyclic(b, a);
  EXPECT_EQ(t.gamma_small.to_string(), "ideal(X1)");
  EXPECT_TRUE(t.small_stabilized);
  EXPECT_TRUE(t.functors_agree);
  auto fr = fairness_report(a, b);
  EXPECT_EQ(to_string(fr.sets.ass_module), "{prime(X0, X1), prime(X0, X1, X2)}");
  EXPECT_TRUE(fr.all_verdicts());
}

TEST(Torsion, ZeroIdealAIsEverythingLarge) {
  auto R = RingPresentation::free(2);
  auto b = monomial_ideal(R, {{1, 1}});
  EXPECT_TRUE(gamma_large_cyclic(b, IdealHandle::zero(R)).ideal.is_unit());
  EXPECT_TRUE(gamma_small_cyclic(b, IdealHandle::zero(R)).ideal.is_unit());
}

TEST(Torsion, BoundedTorsionExponent) {
  auto R = RingPresentation::free(2);
  auto a = monomial_ideal(R, {{1, 0}});
  auto b = monomial_ideal(R, {{3, 0}, {1, 1}});
  auto g = gamma_small_cyclic(b, a).ideal;
  EXPECT_TRUE(g.is_unit());
  EXPECT_EQ(is_bounded_small_torsion(b, a, g, 10), std::optional<std::size_t>(3));
  EXPECT_EQ(is_bounded_small_torsion(b, a, g, 2), std::nullopt);
}

TEST(Torsion, UnitAIsFairEverywhere) {
  for (auto& inst : small_instances(40, 5)) {
    auto unit = IdealHandle::unit(inst.ring);
    auto r = fairness_report(unit, inst.b);
    EXPECT_TRUE(r.all_verdicts()) << instance_script(inst);
    EXPECT_TRUE(r.torsion.functors_agree);
  }
}

TEST(Torsion, RadicalProbeOnArtinianInstances) {
  std::size_t artinian = 0;
  for (auto& inst : small_instances(80, 11)) {
    auto entries = radical_probe(inst.a, {inst.b});
    ASSERT_EQ(entries.size(), 1u);
    EXPECT_TRUE(entries.front().large_radical) << instance_script(inst);
    if (inst.artinian) {
      ++artinian;
      EXPECT_TRUE(entries.front().small_radical) << instance_script(inst);
    }
  }
  EXPECT_GT(artinian, 10u);
}

TEST(TorsionOracle, GammaMatchesBoxComputation) {
  std::size_t compared = 0;
  for (auto& inst : small_instances(120, 23)) {
    auto ob = to_oracle(inst.b), oa = to_oracle(inst.a);
    auto t = torsion_cyclic(inst.b, inst.a);
    EXPECT_EQ(lifted(t.gamma_small), oracle::gamma_small(ob, oa).gens) << instance_script(inst);
    EXPECT_EQ(lifted(t.gamma_large), oracle::gamma_large(ob, oa).gens) << instance_script(inst);
    ++compared;
  }
  EXPECT_GE(compared, 100u);
}

TEST(Harness, NoViolationsAndWorkerIndependence) {
  HarnessConfig cfg;
  cfg.instances = 120;
  cfg.seed = 77;
  auto one = proposition_harness(cfg);
  EXPECT_TRUE(one.violations.empty());
  EXPECT_GT(one.artinian_instances, 0u);
  EXPECT_LT(one.artinian_instances, one.instances);
  cfg.workers = 3;
  auto three = proposition_harness(cfg);
  EXPECT_EQ(to_json(one).dump(), to_json(three).dump());
}

TEST(Harness, DrawIsDeterministic) {
  for (std::size_t i = 0; i < 30; ++i)
    EXPECT_EQ(instance_script(draw_instance(9, i)), instance_script(draw_instance(9, i)));
  EXPECT_NE(instance_script(draw_instance(9, 0)), instance_script(draw_instance(10, 0)));
}

TEST(Torsion, TorsionExponentOfPrincipalExample) {
  auto R = RingPresentation::free(2);
  auto a = monomial_ideal(R, {{1, 0}});
  auto b = monomial_ideal(R, {{2, 1}});
  auto g = gamma_small_cyclic(b, a).ideal;
  EXPECT_EQ(g.to_string(), "ideal(X1)");
  EXPECT_EQ(is_bounded_small_torsion(b, a, g, 10), std::optional<std::size_t>(2));
  EXPECT_EQ(is_bounded_small_torsion(b, a, b, 10), std::optional<std::size_t>(0));
}

TEST(Torsion, NilpotentTruncationIsAllTorsion) {
  auto inst = instantiate(find_example("nil40A").family(), 3);
  auto zero = IdealHandle::zero(inst.ring);
  auto t = torsion_cyclic(zero, inst.ideal("a"));
  EXPECT_TRUE(t.gamma_small.is_unit());
  EXPECT_TRUE(t.gamma_large.is_unit());
}
