#include "sbaf/dung.hpp"

namespace sbaf {

bool is_conflict_free(const ArgSet& e, const AttackGraph& g) {
  bool ok = true;
  e.for_each([&](std::size_t a) {
    if (ok && g.targets_of(a).intersects(e)) ok = false;
  });
  return ok;
}

bool defends(const ArgSet& e, ArgumentIndex a, const AttackGraph& g) {
  bool ok = true;
  g.attackers_of(a).for_each([&](std::size_t b) {
    if (ok && !g.set_attacks(e, b)) ok = false;
  });
  return ok;
}

ArgSet defended_by(const ArgSet& e, const AttackGraph& g) {
  ArgSet out(g.size());
  for (std::size_t a = 0; a < g.size(); ++a)
    if (defends(e, a, g)) out.insert(a);
  return out;
}

bool is_admissible(const ArgSet& e, const AttackGraph& g) {
  if (!is_conflict_free(e, g)) return false;
  bool ok = true;
  e.for_each([&](std::size_t a) {
    if (ok && !defends(e, a, g)) ok = false;
  });
  return ok;
}

bool is_complete(const ArgSet& e, const AttackGraph& g) {
  return is_admissible(e, g) && defended_by(e, g).is_subset_of(e);
}

void require_argument_cap(std::size_t arguments, const EnumerationLimits& limits) {
  if (arguments > limits.max_arguments)
    throw CapExceeded("argument", arguments, limits.max_arguments, "--max-args");
}

bool is_preferred(const ArgSet& e, const AttackGraph& g, const EnumerationLimits& limits) {
  if (!is_admissible(e, g)) return false;
  const ArgSet outside = ArgSet::full(g.size()) - e;
  require_argument_cap(outside.count(), limits);
  bool larger = false;
  for_each_conflict_free(g, e, outside, [&](const ArgSet& cand) {
    if (!larger && cand != e && is_admissible(cand, g)) larger = true;
  });
  return !larger;
}

std::vector<ArgSet> enumerate(Semantics semantics, const AttackGraph& g, const EnumerationLimits& limits) {
  if (!is_dung_semantics(semantics))
    throw ConfigError("'" + std::string(to_string(semantics)) + "' is not a Dung semantics");
  require_argument_cap(g.size(), limits);
  std::vector<ArgSet> out;
  const ArgSet none(g.size());
  const ArgSet all = ArgSet::full(g.size());
  for_each_conflict_free(g, none, all, [&](const ArgSet& e) {
    switch (semantics) {
      case Semantics::conflict_free:
        out.push_back(e);
        break;
      case Semantics::admissible:
      case Semantics::preferred:
        if (is_admissible(e, g)) out.push_back(e);
        break;
      case Semantics::complete:
        if (is_complete(e, g)) out.push_back(e);
        break;
      default:
        break;
    }
  });
  if (semantics == Semantics::preferred) return maximal_elements(std::move(out));
  canonicalize(out);
  return out;
}

Sbaf restrict(const Sbaf& sb, const ArgSet& u) {
  std::vector<Argument> kept;
  u.for_each([&](std::size_t a) { kept.push_back(sb.argument(a)); });
  return Sbaf(sb.language(), std::move(kept));
}

ArgSet project(const ArgSet& e, const ArgSet& u) {
  ArgSet out(u.count());
  std::size_t k = 0;
  u.for_each([&](std::size_t a) {
    if (e.contains(a)) out.insert(k);
    ++k;
  });
  return out;
}

}  // namespace sbaf
