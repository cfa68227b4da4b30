#include <gtest/gtest.h>

#include "helpers.hpp"
#include "sbaf/coherence.hpp"
#include "sbaf/errors.hpp"

using namespace testing_support;
using sbaf::Semantics;
using sbaf::Strength;

TEST(Coherence, ViolinStronglyCoherent) {
  const auto sb = fx("violin");
  EXPECT_EQ(family(sb, sbaf::enumerate_coherent(Strength::strong, sb)),
            fam({{},
                 {"a1", "a2"},
                 {"a1", "a2", "a3", "a4"},
                 {"a1", "a2", "a4"},
                 {"a1", "a2", "a5"},
                 {"a2"},
                 {"a2", "a3", "a4"},
                 {"a2", "a4"},
                 {"a2", "a5"},
                 {"a3", "a4"},
                 {"a4"},
                 {"a5"}}));
}

TEST(Coherence, ViolinWeakAcceptsA3Alone) {
  const auto sb = fx("violin");
  const auto a3 = sb.arg_set({"a3"});
  EXPECT_FALSE(sbaf::is_strongly_coherent(a3, sb));
  EXPECT_TRUE(sbaf::is_weakly_coherent(a3, sb));
  EXPECT_EQ(sbaf::closure_violation(a3, sb, Strength::strong), sb.index_of("a4"));
}

TEST(Coherence, DirectFixture) {
  const auto sb = fx("direct");
  EXPECT_EQ(family(sb, sbaf::enumerate_coherent(Strength::strong, sb)), fam({{}, {"a2"}, {"a3"}}));
  EXPECT_EQ(family(sb, sbaf::enumerate_coherent(Strength::weak, sb)),
            fam({{}, {"a1"}, {"a1", "a2"}, {"a1", "a3"}, {"a2"}, {"a3"}}));
}

TEST(Coherence, SharedAndClash) {
  const auto shared = fx("shared");
  EXPECT_EQ(family(shared, sbaf::enumerate_coherent(Strength::strong, shared)), fam({{}, {"a1", "a2"}}));
  const auto clash = fx("clash");
  EXPECT_EQ(family(clash, sbaf::enumerate_coherent(Strength::strong, clash)),
            fam({{}, {"a1"}, {"a1", "a2"}, {"a2"}}));
}

TEST(Coherence, RunningUndercutInformationBlocksClosure) {
  const auto sb = fx("running");
  // {a2, a3} supports the unnamed a5, so a5 must be included.
  EXPECT_FALSE(sbaf::is_strongly_coherent(sb.arg_set({"a1", "a2", "a3", "a4", "a6"}), sb));
  EXPECT_EQ(sbaf::closure_violation(sb.arg_set({"a1", "a2", "a3", "a4", "a6"}), sb, Strength::strong),
            sb.index_of("a5"));
  EXPECT_TRUE(sbaf::is_strongly_coherent(sb.arg_set({"a1", "a2", "a4", "a6"}), sb));
}

TEST(Coherence, MatchesNaiveOnFixtures) {
  for (const auto& name : sbaf::verify::fixture_names()) {
    const auto sb = fx(name.c_str());
    const auto f = naive::from(sb);
    EXPECT_EQ(family(sb, sbaf::enumerate_coherent(Strength::strong, sb)), naive::strongly_coherent_sets(f)) << name;
    EXPECT_EQ(family(sb, sbaf::enumerate_coherent(Strength::weak, sb)), naive::weakly_coherent_sets(f)) << name;
  }
}

TEST(Coherence, StrongImpliesWeakOnFixtures) {
  for (const auto& name : sbaf::verify::fixture_names()) {
    const auto sb = fx(name.c_str());
    for (const auto& e : sbaf::enumerate_coherent(Strength::strong, sb))
      EXPECT_TRUE(sbaf::is_weakly_coherent(e, sb)) << name;
  }
}

TEST(Directionality, StrongFailsWeakHoldsOnDirect) {
  const auto sb = fx("direct");
  const auto u = sb.arg_set({"a1"});
  EXPECT_FALSE(sbaf::directionality_obstacle(sb, u).has_value());
  EXPECT_FALSE(sbaf::check_directionality(sb, u, Semantics::strongly_coherent));
  EXPECT_TRUE(sbaf::check_directionality(sb, u, Semantics::weakly_coherent));
  EXPECT_TRUE(sbaf::check_directionality(sb, u, Semantics::preferred));
}

TEST(Directionality, AffectedSetIsRejected) {
  const auto sb = fx("running");
  const auto u = sb.arg_set({"a6"});
  EXPECT_TRUE(sbaf::directionality_obstacle(sb, u).has_value());
  EXPECT_THROW(sbaf::check_directionality(sb, u, Semantics::weakly_coherent), sbaf::PreconditionError);
}
