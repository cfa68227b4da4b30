#include "sbaf/saturation.hpp"

#include <algorithm>
#include <set>

namespace sbaf {

SentSet minimally_argued(const Sbaf& sb) {
  SentSet out = sb.no_sentences();
  for (ArgumentIndex a = 0; a < sb.size(); ++a)
    if (sb.is_minimal(a)) out.insert(sb.conclusion(a));
  return out;
}

SentSet conflicting_sentences(const Sbaf& sb) {
  const SentSet& universe = sb.sentence_universe();
  SentSet out = sb.no_sentences();
  universe.for_each([&](std::size_t s) {
    if (sb.incompatible_with(s).intersects(universe)) out.insert(s);
  });
  return out;
}

SentSet undercutting_sentences(const Sbaf& sb) {
  SentSet out = sb.no_sentences();
  for (ArgumentIndex a = 0; a < sb.size(); ++a) out |= sb.undercutters(a);
  return out & sb.sentence_universe();
}

namespace {

bool undercuts_covered(const Sbaf& sb, const SentSet& argued) {
  return undercutting_sentences(sb).is_subset_of(argued);
}

}  // namespace

bool is_saturated(const Sbaf& sb) {
  const SentSet argued = minimally_argued(sb);
  const SentSet& universe = sb.sentence_universe();
  bool pairs_ok = true;
  universe.for_each([&](std::size_t s) {
    if (!pairs_ok || argued.contains(s)) return;
    // s lacks a minimal argument, so every in-scope partner needs one
    SentSet partners = sb.incompatible_with(s) & universe;
    if (!partners.is_subset_of(argued)) pairs_ok = false;
  });
  return pairs_ok && undercuts_covered(sb, argued);
}

bool is_strongly_saturated(const Sbaf& sb) {
  const SentSet argued = minimally_argued(sb);
  return conflicting_sentences(sb).is_subset_of(argued) && undercuts_covered(sb, argued);
}

namespace {

std::string fresh_id(const Sbaf& sb, SentenceIndex s, const std::set<std::string>& reserved) {
  const std::string base = "m_" + sb.language().sentence(s);
  auto taken = [&](const std::string& id) {
    return sb.find(id).has_value() || sb.language().name_of(id).has_value() || reserved.count(id) != 0;
  };
  if (!taken(base)) return base;
  for (std::size_t k = 2;; ++k) {
    std::string id = base + "_" + std::to_string(k);
    if (!taken(id)) return id;
  }
}

}  // namespace

std::string fresh_minimal_id(const Sbaf& sb, SentenceIndex s) { return fresh_id(sb, s, {}); }

Sbaf add_minimal_arguments(const Sbaf& sb, const SentSet& needed) {
  const SentSet missing = needed - minimally_argued(sb);
  if (missing.empty()) return sb;
  std::vector<Argument> extra;
  std::set<std::string> reserved;
  missing.for_each([&](std::size_t s) {
    const std::string& sid = sb.language().sentence(s);
    std::string id = fresh_id(sb, s, reserved);
    reserved.insert(id);
    extra.push_back(Argument{std::move(id), {sid}, sid});
  });
  return sb.with_arguments(extra);
}

Sbaf strongly_saturate(const Sbaf& sb) {
  return add_minimal_arguments(sb, conflicting_sentences(sb) | undercutting_sentences(sb));
}

}  // namespace sbaf

namespace sbaf {

Sbaf saturate(const Sbaf& sb) {
  SentSet have = minimally_argued(sb);
  SentSet needed = undercutting_sentences(sb) - have;
  have |= needed;
  const SentSet& scope = sb.sentence_universe();
  scope.for_each([&](std::size_t s) {
    (sb.incompatible_with(s) & scope).for_each([&](std::size_t t) {
      if (have.contains(s) || have.contains(t)) return;
      const std::size_t pick = std::min(s, t);
      needed.insert(pick);
      have.insert(pick);
    });
  });
  return add_minimal_arguments(sb, needed);
}

}  // namespace sbaf
