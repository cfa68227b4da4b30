#include <gtest/gtest.h>

#include <algorithm>

#include "helpers.hpp"
#include "sbaf/errors.hpp"
#include "sbaf/io/framework_file.hpp"
#include "sbaf/language_semantics.hpp"
#include "sbaf/saturation.hpp"
#include "sbaf/verify/generator.hpp"
#include "sbaf/verify/oracle.hpp"
#include "sbaf/verify/suite.hpp"

using namespace testing_support;
namespace v = sbaf::verify;

TEST(Generator, SameSeedSameFramework) {
  v::GenConfig c;
  c.seed = 42;
  EXPECT_EQ(v::gen_sbaf(c), v::gen_sbaf(c));
  c.seed = 43;
  const auto other = v::gen_sbaf(c);
  c.seed = 42;
  EXPECT_NE(sbaf::io::emit_framework(v::gen_sbaf(c)), sbaf::io::emit_framework(other));
}

TEST(Generator, RespectsBounds) {
  v::GenConfig c;
  c.min_arguments = 3;
  c.max_arguments = 5;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    c.seed = seed;
    const auto sb = v::gen_sbaf(c);
    EXPECT_GE(sb.size(), 3u);
    EXPECT_LE(sb.size(), 5u);
    for (std::size_t a = 0; a < sb.size(); ++a) {
      EXPECT_GE(sb.premises(a).count(), 1u);
      EXPECT_LE(sb.premises(a).count(), 3u);
      if (sb.is_minimal(a)) {
        EXPECT_FALSE(sb.name(a).has_value());
      }
    }
  }
}

TEST(Generator, SinglePremiseShapes) {
  v::GenConfig c;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    c.seed = seed;
    const auto sb = v::gen_single_premise(c, true);
    sbaf::SentSet seen = sb.no_sentences();
    for (std::size_t a = 0; a < sb.size(); ++a) {
      ASSERT_EQ(sb.premises(a).count(), 1u);
      EXPECT_FALSE(sb.name(a).has_value());
      EXPECT_FALSE(sb.premises(a).intersects(seen));
      seen |= sb.premises(a);
    }
  }
}

TEST(Generator, RandomSaturationSaturates) {
  v::GenConfig c;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    c.seed = seed;
    const auto sat = v::saturate_randomly(v::gen_sbaf(c), seed);
    EXPECT_TRUE(sbaf::is_saturated(sat));
    EXPECT_EQ(v::saturate_randomly(v::gen_sbaf(c), seed), sat);
  }
}

TEST(Generator, BafDeterminism) {
  v::BafConfig c;
  c.seed = 9;
  const auto a = v::gen_baf(c), b = v::gen_baf(c);
  EXPECT_EQ(a.ids(), b.ids());
  EXPECT_EQ(a.attacks(), b.attacks());
  EXPECT_EQ(a.supports(), b.supports());
}

TEST(Generator, InvalidConfig) {
  v::GenConfig c;
  c.sentence_pool = 0;
  EXPECT_THROW(v::gen_sbaf(c), sbaf::ConfigError);
  c = {};
  c.min_arguments = 5;
  c.max_arguments = 2;
  EXPECT_THROW(v::validate(c), sbaf::ConfigError);
  c = {};
  c.naming_probability = 1.5;
  EXPECT_THROW(v::validate(c), sbaf::ConfigError);
}

TEST(Generator, MixSeedSpreads) {
  EXPECT_NE(v::mix_seed(1), v::mix_seed(2));
  EXPECT_EQ(v::mix_seed(7), v::mix_seed(7));
}

TEST(Oracle, RejectsIncompatibleSet) {
  const auto sb = fx("running");
  EXPECT_THROW(v::oracle_arg_w(sb.sent_set({"t", "r"}), sb), sbaf::PreconditionError);
}

TEST(Suite, ListsChecksInOrder) {
  const auto& ids = v::suite_ids();
  ASSERT_EQ(ids.size(), 15u);
  EXPECT_EQ(ids.front(), "strong-implies-weak-coherence");
  EXPECT_EQ(ids.back(), "oracle-d-preferred");
  for (const auto& id : ids) EXPECT_FALSE(v::describe(id).empty());
  EXPECT_THROW(v::describe("nope"), sbaf::LookupError);
  EXPECT_THROW(v::run_suite({"nope"}, {}), sbaf::LookupError);
}

TEST(Suite, SmallRunIsDeterministic) {
  v::SuiteConfig c;
  c.trials = 10;
  c.seed = 5;
  std::vector<std::string> ids = v::suite_ids();
  ids.erase(std::remove(ids.begin(), ids.end(), "deductive-converse"), ids.end());
  const auto first = v::run_suite(ids, c);
  ASSERT_EQ(first.size(), ids.size());
  for (const auto& r : first) {
    EXPECT_EQ(r.trials, 10u) << r.id;
    EXPECT_TRUE(r.passed()) << r.id;
  }
  c.threads = 1;
  EXPECT_EQ(v::to_json(v::run_suite(ids, c)), v::to_json(first));
}

TEST(Suite, ConverseViolationsAreShrunkAndReproducible) {
  v::SuiteConfig c;
  c.trials = 100;
  const auto reports = v::run_suite({"deductive-converse"}, c);
  ASSERT_EQ(reports.size(), 1u);
  for (const auto& violation : reports[0].violations) {
    const auto witness = parse(violation.witness);
    EXPECT_LE(witness.size(), 4u);
    EXPECT_FALSE(violation.message.empty());
  }
}

TEST(Suite, ShrinkKeepsViolation) {
  const auto sb = fx("running");
  const auto small = v::shrink(sb, [](const sbaf::Sbaf& s) -> std::optional<std::string> {
    if (s.find("a6") && s.find("a5")) return "both present";
    return std::nullopt;
  });
  EXPECT_EQ(small.size(), 2u);
  EXPECT_TRUE(small.find("a5").has_value());
  EXPECT_TRUE(small.find("a6").has_value());
}

TEST(Suite, DirectionalityCounterexampleOnDirect) {
  const auto sb = fx("direct");
  const auto u = v::directionality_counterexample(sb, sbaf::Semantics::strongly_coherent);
  ASSERT_TRUE(u.has_value());
  EXPECT_EQ(ids(sb, *u), set_of({"a1"}));
  EXPECT_FALSE(v::directionality_counterexample(sb, sbaf::Semantics::weakly_coherent).has_value());
}
