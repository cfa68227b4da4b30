#pragma once

#include <algorithm>
#include <vector>

#include "sbaf/index_set.hpp"

namespace sbaf {

/// Sorts into canonical order and removes duplicates.
template <typename Tag>
void canonicalize(std::vector<IndexSet<Tag>>& family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

/// Subset-maximal members, canonically ordered.
template <typename Tag>
std::vector<IndexSet<Tag>> maximal_elements(std::vector<IndexSet<Tag>> family) {
  canonicalize(family);
  std::vector<IndexSet<Tag>> out;
  for (const auto& s : family) {
    bool dominated = std::any_of(family.begin(), family.end(), [&](const IndexSet<Tag>& t) {
      return s != t && s.is_subset_of(t);
    });
    if (!dominated) out.push_back(s);
  }
  return out;
}

}  // namespace sbaf
