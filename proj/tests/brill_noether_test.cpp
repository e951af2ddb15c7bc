#include "schubert/brill_noether.hpp"

#include "gtest/gtest.h"

namespace schubert {
namespace {

TEST(Rho, Examples) {
  EXPECT_EQ(rho(BNData::unramified(0, 1, 1)), 0);
  EXPECT_EQ(rho(BNData(1, 1, 4, {0, 2}, {0, 2})), 3);
  EXPECT_EQ(rho(BNData::unramified(2, 1, 2)), 0);
  EXPECT_EQ(rho(BNData::unramified(3, 1, 2)), -1);
}

TEST(Rho, GenusOneShift) {
  for (int r = 0; r <= 2; ++r)
    for (int d = r + 1; d <= 7; ++d)
      for (const auto& a : increasing_sequences(r, d - 1))
        for (const auto& b : increasing_sequences(r, d - 1))
          EXPECT_EQ(rho(1, r, d, a, b) - 1, rho(0, r, d - 1, a, b));
}

TEST(RhoHat, Examples) {
  // Minimal sequences with d >= g + r: empty sum.
  EXPECT_EQ(rho_hat(BNData::unramified(3, 1, 5)), 3);
  EXPECT_EQ(rho_hat(BNData(1, 1, 4, {0, 2}, {0, 2})), 1);
  // a_0 + b_0 = 2 > d - g = 0.
  EXPECT_EQ(rho_hat(BNData(1, 0, 1, {1}, {1})), -1);
}

TEST(BNData, Validation) {
  EXPECT_THROW(BNData(1, 1, 3, {0}, {0, 1}), std::invalid_argument);
  EXPECT_THROW(BNData(1, 1, 3, {0, 4}, {0, 1}), std::invalid_argument);
  EXPECT_THROW(BNData(1, 1, 3, {1, 1}, {0, 1}), std::invalid_argument);
  EXPECT_NO_THROW(BNData(1, 1, 3, {0, 3}, {0, 1}));
}

TEST(GcircMembership, Examples) {
  EXPECT_TRUE(gcirc_membership({0, 2}, {0, 2}));
  EXPECT_TRUE(gcirc_membership({1, 3}, {0, 1}));
  EXPECT_TRUE(gcirc_membership({1, 2}, {0, 2}));
  EXPECT_FALSE(gcirc_membership({2, 3}, {0, 2}));
  EXPECT_THROW(gcirc_membership({0, 1}, {0, 2}), precondition_error);
}

TEST(FiberKind, ParseRoundTrip) {
  for (const auto& k : {FiberKind::generic(), FiberKind::all_p(), FiberKind::all_q(), FiberKind::mixed(3)})
    EXPECT_EQ(parse_fiber_kind(to_string(k)), k);
  EXPECT_THROW(parse_fiber_kind("mixed:x"), std::invalid_argument);
  EXPECT_THROW(parse_fiber_kind("other"), std::invalid_argument);
}

TEST(FiberModel, GenericIsTransverseWithIndicesUnchanged) {
  PrimeField f(1009);
  BNData data(1, 1, 5, {0, 2}, {1, 2});
  auto model = genus1_fiber_model(f, data, FiberKind::generic());
  ASSERT_TRUE(model.has_value());
  EXPECT_EQ(model->pair.flag_class().kind, FlagPairClass::Kind::Transverse);
  EXPECT_EQ(model->pair.a().seq(), data.a);
  EXPECT_EQ(model->pair.b().seq(), data.b);
  EXPECT_EQ(model->expected_dim(), rho(data) - 1);
}

TEST(FiberModel, Example0202IsAlmostTransverse) {
  PrimeField f(1009);
  BNData data(1, 1, 4, {0, 2}, {0, 2});
  auto model = genus1_fiber_model(f, data, FiberKind::mixed(2));
  ASSERT_TRUE(model.has_value());
  const auto cls = model->pair.flag_class();
  EXPECT_EQ(cls.kind, FlagPairClass::Kind::AlmostTransverse);
  EXPECT_EQ(cls.t, 2u);
  EXPECT_EQ(cls.t_prime, 2u);
  EXPECT_EQ(model->pair.a().seq(), data.a);
  EXPECT_FALSE(model->richardson_index.has_value());
}

TEST(FiberModel, TightMixedFiberBecomesRichardson) {
  PrimeField f(1009);
  // a_1 + b_0 = 3 + 1 = d, so the series lives over O(3P + Q).
  BNData data(1, 1, 4, {0, 3}, {1, 2});
  EXPECT_FALSE(genus1_fiber_model(f, data, FiberKind::generic()).has_value());
  EXPECT_FALSE(genus1_fiber_model(f, data, FiberKind::mixed(2)).has_value());
  auto model = genus1_fiber_model(f, data, FiberKind::mixed(3));
  ASSERT_TRUE(model.has_value());
  ASSERT_TRUE(model->richardson_index.has_value());
  EXPECT_EQ(*model->richardson_index, 1u);
  EXPECT_EQ(model->pair.a().seq(), (std::vector<int>{0, 2}));
  EXPECT_EQ(model->pair.flag_class().kind, FlagPairClass::Kind::Transverse);
  EXPECT_EQ(model->expected_dim(), rho(data));
}

TEST(FiberModel, AllPReindexesTopCondition) {
  PrimeField f(1009);
  BNData data(1, 1, 4, {0, 4}, {0, 1});
  EXPECT_FALSE(genus1_fiber_model(f, data, FiberKind::generic()).has_value());
  EXPECT_FALSE(genus1_fiber_model(f, data, FiberKind::all_q()).has_value());
  auto model = genus1_fiber_model(f, data, FiberKind::all_p());
  ASSERT_TRUE(model.has_value());
  EXPECT_TRUE(model->top_reindexed);
  EXPECT_EQ(model->pair.a().codim(), ramification_weight(data.a) - 1);
  EXPECT_EQ(model->pair.flag_class().kind, FlagPairClass::Kind::Transverse);
}

TEST(FiberModel, OverfullVanishingIsEmpty) {
  PrimeField f(1009);
  BNData data(1, 1, 4, {0, 4}, {1, 2});
  for (const auto& k : {FiberKind::generic(), FiberKind::all_p(), FiberKind::all_q(), FiberKind::mixed(2)})
    EXPECT_FALSE(genus1_fiber_model(f, data, k).has_value());
}

TEST(FiberModel, RejectsOtherGenera) {
  PrimeField f(1009);
  EXPECT_THROW(genus1_fiber_model(f, BNData::unramified(2, 1, 4), FiberKind::generic()), unsupported_genus);
  EXPECT_THROW(genus1_fiber_model(f, BNData::unramified(1, 1, 4), FiberKind::mixed(4)), std::invalid_argument);
}

TEST(FiberAnalysis, GenericFiberIsSmoothOfDimensionRhoMinusOne) {
  PrimeField f(1009);
  BNData data(1, 1, 5, {0, 2}, {0, 1});
  auto rep = analyze_genus1_fiber(f, data, FiberKind::generic(), 8, 1);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.observed_dims, (std::set<long>{rho(data) - 1}));
  EXPECT_EQ(rep.jump_count, 0u);
}

TEST(FiberAnalysis, Example0202SeesBothDimensions) {
  PrimeField f(1009);
  BNData data(1, 1, 4, {0, 2}, {0, 2});
  auto rep = analyze_genus1_fiber(f, data, FiberKind::mixed(2), 12, 5);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.observed_dims, (std::set<long>{2, 3}));
  EXPECT_GT(rep.jump_count, 0u);
  EXPECT_EQ(rep.failed_samples, 0u);
}

TEST(FiberAnalysis, EveryMixedFiberStaysWithinOneOfExpected) {
  PrimeField f(1009);
  for (int r = 0; r <= 1; ++r)
    for (int d = r + 2; d <= 5; ++d)
      for (const auto& a : increasing_sequences(r, d))
        for (const auto& b : increasing_sequences(r, d))
          for (int t = 1; t < d; ++t) {
            auto rep = analyze_genus1_fiber(f, BNData(1, r, d, a, b), FiberKind::mixed(t), 4, 3);
            EXPECT_TRUE(rep.ok()) << "d=" << d << " t=" << t << ": "
                                  << (rep.violations.empty() ? "" : rep.violations.front());
          }
}

TEST(Chains, GenusZeroSingleComponent) {
  BNData data = BNData::unramified(0, 1, 3);
  auto chains = enumerate_refined_chains(data, {0});
  ASSERT_FALSE(chains.empty());
  long best = chains.front().total_rho;
  for (const auto& c : chains) best = std::max(best, c.total_rho);
  EXPECT_EQ(best, rho(data));
}

TEST(Chains, SingleEllipticComponent) {
  BNData data = BNData::unramified(1, 1, 2);
  auto v = chain_dimension_check(data);
  EXPECT_TRUE(v.nonempty);
  ASSERT_TRUE(v.max_total.has_value());
  EXPECT_EQ(*v.max_total, 1);
  EXPECT_TRUE(v.ok());
}

TEST(Chains, TwoEllipticComponents) {
  BNData data = BNData::unramified(2, 1, 2);
  auto chains = enumerate_refined_chains(data, {1, 1});
  ASSERT_FALSE(chains.empty());
  long best = chains.front().total_rho;
  for (const auto& c : chains) {
    best = std::max(best, c.total_rho);
    ASSERT_EQ(c.components.size(), 2u);
    // Equality at the node.
    for (int j = 0; j <= 1; ++j) EXPECT_EQ(c.components[0].b[j] + c.components[1].a[1 - j], 2);
  }
  EXPECT_EQ(best, 0);
}

TEST(Chains, NegativeRhoHatGivesNoAssignment) {
  BNData data(1, 0, 1, {1}, {1});
  EXPECT_TRUE(enumerate_refined_chains(data, {1}).empty());
  auto v = chain_dimension_check(data);
  EXPECT_FALSE(v.nonempty);
  EXPECT_TRUE(v.ok());
}

TEST(Chains, Example0202Numerology) {
  auto v = chain_dimension_check(BNData(1, 1, 4, {0, 2}, {0, 2}));
  EXPECT_EQ(v.rho_hat, 1);
  EXPECT_TRUE(v.nonempty);
  EXPECT_EQ(v.max_total, 3);
}

TEST(Chains, GenusMismatchThrows) {
  BNData data = BNData::unramified(2, 1, 3);
  EXPECT_THROW(enumerate_refined_chains(data, {1}), genus_mismatch);
  EXPECT_THROW(enumerate_refined_chains(data, {2}), genus_mismatch);
  EXPECT_THROW(enumerate_refined_chains(data, {}), genus_mismatch);
}

TEST(Chains, CountMatchesEnumeration) {
  for (int g = 1; g <= 2; ++g)
    for (int d = 1; d <= 4; ++d)
      for (const auto& a : increasing_sequences(1, d)) {
        BNData data(g, 1, d, a, {0, 1});
        auto v = chain_dimension_check(data);
        EXPECT_EQ(v.assignment_count, enumerate_refined_chains(data, default_genera(g)).size());
      }
}

TEST(Chains, MixedGeneraAgreeWithNumerology) {
  // Rational bridges between elliptic components do not change the answer.
  for (int d = 2; d <= 5; ++d)
    for (const auto& a : increasing_sequences(1, d)) {
      BNData data(2, 1, d, a, {0, 1});
      EXPECT_TRUE(chain_dimension_check(data, {1, 0, 1}).ok()) << "d=" << d;
    }
}

}  // namespace
}  // namespace schubert
