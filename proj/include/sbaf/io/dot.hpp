#pragma once

#include <string>

#include "sbaf/deductive.hpp"
#include "sbaf/framework.hpp"

namespace sbaf::io {

/// Graphviz digraph: one box per argument labelled `id: {premises} -> conclusion`,
/// solid edges for attacks, dashed edges for binary supports under `rule`.
std::string to_dot(const Sbaf& sb, SupportRule rule = SupportRule::conclusion);

}  // namespace sbaf::io
