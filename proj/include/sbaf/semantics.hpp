#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sbaf {

enum class Semantics {
  conflict_free,
  admissible,
  complete,
  preferred,
  strongly_coherent,
  weakly_coherent,
  strongly_adequate,
  weakly_adequate,
  d_admissible,
  d_complete,
  d_preferred,
};

/// Strong vs weak reading of support.
enum class Strength { strong, weak };

std::string_view to_string(Semantics s);
std::optional<Semantics> parse_semantics(std::string_view tag);
const std::vector<Semantics>& all_semantics();

/// Adequate semantics evaluate sentence sets; everything else argument sets.
bool is_language_semantics(Semantics s);
bool is_dung_semantics(Semantics s);
bool is_deductive_semantics(Semantics s);

/// Size guards for exhaustive enumeration.
struct EnumerationLimits {
  std::size_t max_arguments = 16;
  std::size_t max_sentences = 18;
};

}  // namespace sbaf
