#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sbaf/framework.hpp"
#include "sbaf/semantics.hpp"

namespace sbaf {

/// First argument a (by index) that E supports without holding undercutting
/// information for it (and, for the weak reading, that E defends) but that
/// is missing from E.
std::optional<ArgumentIndex> closure_violation(const ArgSet& e, const Sbaf& sb, Strength strength);

inline bool strong_support_closure(const ArgSet& e, const Sbaf& sb) {
  return !closure_violation(e, sb, Strength::strong).has_value();
}
inline bool weak_support_closure(const ArgSet& e, const Sbaf& sb) {
  return !closure_violation(e, sb, Strength::weak).has_value();
}

/// Admissible and support-closed.
bool is_coherent(const ArgSet& e, const Sbaf& sb, Strength strength);
inline bool is_strongly_coherent(const ArgSet& e, const Sbaf& sb) { return is_coherent(e, sb, Strength::strong); }
inline bool is_weakly_coherent(const ArgSet& e, const Sbaf& sb) { return is_coherent(e, sb, Strength::weak); }

std::vector<ArgSet> enumerate_coherent(Strength strength, const Sbaf& sb, const EnumerationLimits& limits = {});

/// Why U is not unaffected by the rest of the framework, or nullopt if it is.
///
/// U is unaffected when no argument outside U attacks a member of U, no
/// support of a member of U ever depends on arguments outside U, and no
/// argument outside U carries undercutting information for a member of U.
std::optional<std::string> directionality_obstacle(const Sbaf& sb, const ArgSet& u);

/// Extensions of the restriction to U equal the U-projections of the
/// extensions of the whole framework. Accepts Dung and coherent semantics.
/// Throws PreconditionError when U is affected by the rest.
bool check_directionality(const Sbaf& sb, const ArgSet& u, Semantics semantics,
                          const EnumerationLimits& limits = {});

}  // namespace sbaf
