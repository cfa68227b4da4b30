#include "sbaf/semantics.hpp"

#include <array>
#include <utility>

namespace sbaf {

namespace {

constexpr std::array<std::pair<Semantics, std::string_view>, 11> kTags{{
    {Semantics::conflict_free, "conflict-free"},
    {Semantics::admissible, "admissible"},
    {Semantics::complete, "complete"},
    {Semantics::preferred, "preferred"},
    {Semantics::strongly_coherent, "strongly-coherent"},
    {Semantics::weakly_coherent, "weakly-coherent"},
    {Semantics::strongly_adequate, "strongly-adequate"},
    {Semantics::weakly_adequate, "weakly-adequate"},
    {Semantics::d_admissible, "d-admissible"},
    {Semantics::d_complete, "d-complete"},
    {Semantics::d_preferred, "d-preferred"},
}};

}  // namespace

std::string_view to_string(Semantics s) {
  for (const auto& [sem, tag] : kTags)
    if (sem == s) return tag;
  return "unknown";
}

std::optional<Semantics> parse_semantics(std::string_view tag) {
  for (const auto& [sem, name] : kTags)
    if (name == tag) return sem;
  return std::nullopt;
}

const std::vector<Semantics>& all_semantics() {
  static const std::vector<Semantics> all = [] {
    std::vector<Semantics> v;
    for (const auto& entry : kTags) v.push_back(entry.first);
    return v;
  }();
  return all;
}

bool is_language_semantics(Semantics s) {
  return s == Semantics::strongly_adequate || s == Semantics::weakly_adequate;
}

bool is_dung_semantics(Semantics s) {
  return s == Semantics::conflict_free || s == Semantics::admissible || s == Semantics::complete ||
         s == Semantics::preferred;
}

bool is_deductive_semantics(Semantics s) {
  return s == Semantics::d_admissible || s == Semantics::d_complete || s == Semantics::d_preferred;
}

}  // namespace sbaf
