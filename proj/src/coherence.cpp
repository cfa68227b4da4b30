#include "sbaf/coherence.hpp"

#include "sbaf/dung.hpp"

namespace sbaf {

std::optional<ArgumentIndex> closure_violation(const ArgSet& e, const Sbaf& sb, Strength strength) {
  const SentSet accepted = sb.sent(e);
  for (ArgumentIndex a = 0; a < sb.size(); ++a) {
    if (e.contains(a)) continue;
    if (!sb.premises(a).is_subset_of(accepted)) continue;
    if (sb.undercut_info(accepted, a)) continue;
    if (strength == Strength::weak && !defends(e, a, sb)) continue;
    return a;
  }
  return std::nullopt;
}

bool is_coherent(const ArgSet& e, const Sbaf& sb, Strength strength) {
  return is_admissible(e, sb) && !closure_violation(e, sb, strength);
}

std::vector<ArgSet> enumerate_coherent(Strength strength, const Sbaf& sb, const EnumerationLimits& limits) {
  require_argument_cap(sb.size(), limits);
  const AttackGraph& g = sb.attack_graph();
  std::vector<ArgSet> out;
  for_each_conflict_free(g, sb.no_arguments(), sb.all_arguments(), [&](const ArgSet& e) {
    if (is_admissible(e, g) && !closure_violation(e, sb, strength)) out.push_back(e);
  });
  canonicalize(out);
  return out;
}

std::optional<std::string> directionality_obstacle(const Sbaf& sb, const ArgSet& u) {
  const ArgSet rest = sb.all_arguments() - u;
  const SentSet rest_sentences = sb.sent(rest);
  for (ArgumentIndex a = 0; a < sb.size(); ++a) {
    if (!u.contains(a)) continue;
    if (sb.attack_graph().attackers_of(a).intersects(rest)) {
      ArgumentIndex b = (sb.attack_graph().attackers_of(a) & rest).next(0);
      return sb.id(b) + " outside U attacks " + sb.id(a);
    }
    if (sb.undercutters(a).intersects(rest_sentences))
      return "arguments outside U hold undercutting information for " + sb.id(a);
    // Support of a leans on the rest iff some premise p available outside U
    // can be left out of every U-argument while the others stay covered.
    const SentSet borrowed = sb.premises(a) & rest_sentences;
    std::optional<std::string> found;
    borrowed.for_each([&](std::size_t p) {
      if (found) return;
      SentSet cover = rest_sentences;
      u.for_each([&](std::size_t b) {
        if (!sb.sentences(b).contains(p)) cover |= sb.sentences(b);
      });
      if (sb.premises(a).is_subset_of(cover))
        found = "support of " + sb.id(a) + " can depend on sentence " + sb.language().sentence(p) +
                " from outside U";
    });
    if (found) return found;
  }
  return std::nullopt;
}

namespace {

std::vector<ArgSet> argument_extensions(Semantics semantics, const Sbaf& sb, const EnumerationLimits& limits) {
  switch (semantics) {
    case Semantics::strongly_coherent:
      return enumerate_coherent(Strength::strong, sb, limits);
    case Semantics::weakly_coherent:
      return enumerate_coherent(Strength::weak, sb, limits);
    default:
      if (is_dung_semantics(semantics)) return enumerate(semantics, sb, limits);
      throw ConfigError("directionality is checked for Dung and coherent semantics only, not '" +
                        std::string(to_string(semantics)) + "'");
  }
}

}  // namespace

bool check_directionality(const Sbaf& sb, const ArgSet& u, Semantics semantics, const EnumerationLimits& limits) {
  if (auto obstacle = directionality_obstacle(sb, u)) throw PreconditionError("directionality: " + *obstacle);
  std::vector<ArgSet> local = argument_extensions(semantics, restrict(sb, u), limits);
  std::vector<ArgSet> projected;
  for (const auto& e : argument_extensions(semantics, sb, limits)) projected.push_back(project(e, u));
  canonicalize(projected);
  canonicalize(local);
  return local == projected;
}

}  // namespace sbaf
