#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sbaf/index_set.hpp"

namespace sbaf {

/// Directed attack relation over arguments 0..size()-1, stored both ways.
class AttackGraph {
 public:
  AttackGraph() = default;
  explicit AttackGraph(std::size_t size)
      : attackers_(size, ArgSet(size)), targets_(size, ArgSet(size)) {}

  std::size_t size() const { return attackers_.size(); }

  void add_attack(std::size_t from, std::size_t to) {
    targets_[from].insert(to);
    attackers_[to].insert(from);
  }
  bool attacks(std::size_t from, std::size_t to) const { return targets_[from].contains(to); }

  const ArgSet& attackers_of(std::size_t arg) const { return attackers_[arg]; }
  const ArgSet& targets_of(std::size_t arg) const { return targets_[arg]; }

  /// E -> a
  bool set_attacks(const ArgSet& from, std::size_t to) const {
    return from.intersects(attackers_[to]);
  }

  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < size(); ++a)
      targets_[a].for_each([&](std::size_t b) { out.emplace_back(a, b); });
    return out;
  }

  friend bool operator==(const AttackGraph&, const AttackGraph&) = default;

 private:
  std::vector<ArgSet> attackers_;
  std::vector<ArgSet> targets_;
};

}  // namespace sbaf
