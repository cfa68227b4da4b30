#include <gtest/gtest.h>

#include "helpers.hpp"
#include "sbaf/errors.hpp"
#include "sbaf/saturation.hpp"

using namespace testing_support;
using sbaf::ArgSet;

namespace {

std::vector<std::pair<std::string, std::string>> attack_ids(const sbaf::Sbaf& sb) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [a, b] : sb.attack_graph().edges()) out.emplace_back(sb.id(a), sb.id(b));
  return out;
}

}  // namespace

TEST(Framework, ViolinStructure) {
  const auto sb = fx("violin");
  EXPECT_EQ(sb.size(), 5u);
  EXPECT_EQ(sb.sentence_count(), 8u);
  using P = std::pair<std::string, std::string>;
  EXPECT_EQ(attack_ids(sb), (std::vector<P>{{"a4", "a5"}, {"a5", "a4"}}));
  EXPECT_TRUE(sb.supports(sb.arg_set({"a1"}), sb.index_of("a2")));
  EXPECT_TRUE(sb.supports(sb.arg_set({"a3"}), sb.index_of("a4")));
  EXPECT_FALSE(sb.supports(sb.arg_set({"a3"}), sb.index_of("a2")));
  EXPECT_EQ(ids(sb, sb.sent(sb.arg_set({"a1", "a2"}))), set_of({"Ale", "Str", "Exp"}));
}

TEST(Framework, RunningAttacksIncludeUndercut) {
  const auto sb = fx("running");
  using P = std::pair<std::string, std::string>;
  EXPECT_EQ(attack_ids(sb), (std::vector<P>{{"a4", "a5"}, {"a5", "a4"}, {"a5", "a6"}, {"a6", "a7"}}));
  EXPECT_EQ(sb.name(sb.index_of("a6")), sb.language().find("n6"));
  EXPECT_EQ(ids(sb, sb.undercutters(sb.index_of("a6"))), set_of({"r"}));
  EXPECT_TRUE(sb.undercut_info(sb.arg_set({"a5"}), sb.index_of("a6")));
  EXPECT_FALSE(sb.undercut_info(sb.arg_set({"a4"}), sb.index_of("a6")));
  EXPECT_EQ(sb.sentence_universe().count(), 11u);
  EXPECT_TRUE(sb.is_minimal(sb.index_of("a1")));
  EXPECT_FALSE(sb.is_minimal(sb.index_of("a2")));
}

TEST(Framework, SupportNeedsEveryPremise) {
  const auto sb = fx("running");
  const auto a5 = sb.index_of("a5");
  EXPECT_FALSE(sb.supports(sb.arg_set({"a2"}), a5));
  EXPECT_FALSE(sb.supports(sb.arg_set({"a3"}), a5));
  EXPECT_TRUE(sb.supports(sb.arg_set({"a2", "a3"}), a5));
  EXPECT_TRUE(sb.supports(sb.arg_set({"a1"}), sb.index_of("a1")));
}

TEST(Framework, DerivedAttacksMatchStoredOnes) {
  for (const auto& name : sbaf::verify::fixture_names()) {
    const auto sb = fx(name.c_str());
    EXPECT_EQ(sb.derive_attacks(), sb.attack_graph()) << name;
  }
}

TEST(Framework, IncompatibilityIsSymmetric) {
  sbaf::Language lang;
  lang.add_incompatibility("p", "q");
  EXPECT_TRUE(lang.incompatible(lang.index_of("p"), lang.index_of("q")));
  EXPECT_TRUE(lang.incompatible(lang.index_of("q"), lang.index_of("p")));
  EXPECT_EQ(lang.add_sentence("p"), lang.index_of("p"));
  EXPECT_EQ(lang.size(), 2u);
}

TEST(Framework, SelfIncompatibleConclusionAttacksItself) {
  const auto sb = parse("inc p p\narg a1 : q -> p\n");
  EXPECT_TRUE(sb.attacks(0, 0));
}

TEST(Framework, ValidationErrors) {
  sbaf::Language lang;
  lang.add_sentence("p");
  lang.add_sentence("q");
  EXPECT_THROW(sbaf::Sbaf(lang, {{"a1", {}, "p"}}), sbaf::ValidationError);
  EXPECT_THROW(sbaf::Sbaf(lang, {{"a1", {"p"}, "q"}, {"a1", {"q"}, "p"}}), sbaf::ValidationError);
  EXPECT_THROW(sbaf::Sbaf(lang, {{"a1", {"zz"}, "p"}}), sbaf::ValidationError);

  sbaf::Language named = lang;
  named.add_incompatibility("n", "q");
  named.set_name("a1", "n");
  EXPECT_THROW(sbaf::Sbaf(named, {{"a1", {"p"}, "p"}}), sbaf::ValidationError);
  EXPECT_NO_THROW(sbaf::Sbaf(named, {{"a1", {"q"}, "p"}}));
}

TEST(Framework, LookupErrors) {
  const auto sb = fx("violin");
  EXPECT_THROW(sb.index_of("a9"), sbaf::LookupError);
  EXPECT_THROW(sb.arg_set({"a1", "nope"}), sbaf::LookupError);
  EXPECT_THROW(sb.sent_set({"Nope"}), sbaf::LookupError);
  EXPECT_THROW(sbaf::verify::fixture("nope"), sbaf::LookupError);
}

TEST(Framework, DuplicatePremisesCollapse) {
  const auto sb = parse("arg a1 : q p q -> r\n");
  EXPECT_EQ(sb.premises(0).count(), 2u);
  EXPECT_EQ(sb.argument(0).premises.size(), 2u);
}

TEST(Saturation, RunningIsNotSaturated) {
  const auto sb = fx("running");
  EXPECT_FALSE(sbaf::is_saturated(sb));
  EXPECT_FALSE(sbaf::is_strongly_saturated(sb));
  EXPECT_EQ(ids(sb, sbaf::minimally_argued(sb)), set_of({"s"}));
  EXPECT_EQ(ids(sb, sbaf::undercutting_sentences(sb)), set_of({"r"}));
  EXPECT_EQ(ids(sb, sbaf::conflicting_sentences(sb)), set_of({"t", "r", "z", "p"}));
}

TEST(Saturation, MinimalArgumentsForRAndZSaturate) {
  const auto sb = fx("running");
  const auto extended = sbaf::add_minimal_arguments(sb, sb.sent_set({"r", "z"}));
  EXPECT_EQ(extended.size(), 9u);
  EXPECT_TRUE(sbaf::is_saturated(extended));
  EXPECT_FALSE(sbaf::is_strongly_saturated(extended));
  EXPECT_TRUE(extended.find("m_r").has_value());
  EXPECT_TRUE(extended.find("m_z").has_value());
}

TEST(Saturation, StrongSaturationOfRunning) {
  const auto sb = fx("running");
  const auto strong = sbaf::strongly_saturate(sb);
  EXPECT_EQ(strong.size(), 11u);
  for (const char* s : {"m_t", "m_r", "m_z", "m_p"}) EXPECT_TRUE(strong.find(s).has_value()) << s;
  EXPECT_TRUE(sbaf::is_strongly_saturated(strong));
  EXPECT_TRUE(sbaf::is_saturated(strong));
  EXPECT_EQ(sbaf::strongly_saturate(strong), strong);
}

TEST(Saturation, StrongSaturationOfViolin) {
  const auto sb = fx("violin");
  const auto strong = sbaf::strongly_saturate(sb);
  EXPECT_EQ(strong.size(), 7u);
  EXPECT_TRUE(strong.find("m_Ann").has_value());
  EXPECT_TRUE(strong.find("m_Hil").has_value());
}

TEST(Saturation, WeakSaturationPicksFirstDeclaredSide) {
  const auto sb = fx("running");
  const auto sat = sbaf::saturate(sb);
  EXPECT_TRUE(sbaf::is_saturated(sat));
  // r undercuts a6, so its minimal argument also covers the (t, r) pair.
  EXPECT_FALSE(sat.find("m_t").has_value());
  EXPECT_TRUE(sat.find("m_r").has_value());
  EXPECT_TRUE(sat.find("m_z").has_value());
  EXPECT_FALSE(sat.find("m_p").has_value());
  EXPECT_EQ(sbaf::saturate(sat), sat);
}

TEST(Saturation, FreshIdAvoidsCollisions) {
  const auto sb = parse("arg m_p : q -> p\n");
  EXPECT_EQ(sbaf::fresh_minimal_id(sb, sb.language().index_of("p")), "m_p_2");
  EXPECT_EQ(sbaf::fresh_minimal_id(sb, sb.language().index_of("q")), "m_q");
}
