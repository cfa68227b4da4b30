#pragma once

#include <vector>

#include "sbaf/attack_graph.hpp"
#include "sbaf/errors.hpp"
#include "sbaf/framework.hpp"
#include "sbaf/semantics.hpp"
#include "sbaf/set_family.hpp"

// Dung-style semantics over an attack relation. Support is ignored here.
namespace sbaf {

bool is_conflict_free(const ArgSet& e, const AttackGraph& g);
/// Every attacker of a is attacked by E.
bool defends(const ArgSet& e, ArgumentIndex a, const AttackGraph& g);
/// All arguments E defends.
ArgSet defended_by(const ArgSet& e, const AttackGraph& g);
bool is_admissible(const ArgSet& e, const AttackGraph& g);
bool is_complete(const ArgSet& e, const AttackGraph& g);
/// Admissible with no admissible proper superset. Searches supersets of E,
/// so the arguments outside E count against the cap.
bool is_preferred(const ArgSet& e, const AttackGraph& g, const EnumerationLimits& limits = {});

/// Throws CapExceeded when the graph has more arguments than allowed.
void require_argument_cap(std::size_t arguments, const EnumerationLimits& limits);

/// Visits every conflict-free superset of `base` (base itself included when
/// conflict-free), extending only with arguments of `candidates`.
template <typename Fn>
void for_each_conflict_free(const AttackGraph& g, const ArgSet& base, const ArgSet& candidates, Fn&& visit) {
  if (!is_conflict_free(base, g)) return;
  const std::vector<std::size_t> order = (candidates - base).indices();
  ArgSet blocked(g.size());
  base.for_each([&](std::size_t a) {
    blocked |= g.attackers_of(a);
    blocked |= g.targets_of(a);
  });
  ArgSet current = base;
  auto rec = [&](auto&& self, std::size_t pos, const ArgSet& blocked_now) -> void {
    if (pos == order.size()) {
      visit(static_cast<const ArgSet&>(current));
      return;
    }
    const std::size_t a = order[pos];
    self(self, pos + 1, blocked_now);
    if (!blocked_now.contains(a) && !g.attacks(a, a)) {
      current.insert(a);
      self(self, pos + 1, blocked_now | g.attackers_of(a) | g.targets_of(a));
      current.erase(a);
    }
  };
  rec(rec, 0, blocked);
}

/// Extensions of a Dung semantics (conflict-free, admissible, complete,
/// preferred) in canonical order.
std::vector<ArgSet> enumerate(Semantics semantics, const AttackGraph& g, const EnumerationLimits& limits = {});

inline bool is_conflict_free(const ArgSet& e, const Sbaf& sb) { return is_conflict_free(e, sb.attack_graph()); }
inline bool defends(const ArgSet& e, ArgumentIndex a, const Sbaf& sb) { return defends(e, a, sb.attack_graph()); }
inline bool is_admissible(const ArgSet& e, const Sbaf& sb) { return is_admissible(e, sb.attack_graph()); }
inline bool is_complete(const ArgSet& e, const Sbaf& sb) { return is_complete(e, sb.attack_graph()); }
inline bool is_preferred(const ArgSet& e, const Sbaf& sb, const EnumerationLimits& limits = {}) {
  return is_preferred(e, sb.attack_graph(), limits);
}
inline std::vector<ArgSet> enumerate(Semantics semantics, const Sbaf& sb, const EnumerationLimits& limits = {}) {
  return enumerate(semantics, sb.attack_graph(), limits);
}

/// Sub-framework over U with the inherited language; the induced attack
/// relation is re-derived and equals the original restricted to U.
Sbaf restrict(const Sbaf& sb, const ArgSet& u);

/// Image of an extension of sb under the index renumbering of restrict(sb, U).
ArgSet project(const ArgSet& e, const ArgSet& u);

}  // namespace sbaf
