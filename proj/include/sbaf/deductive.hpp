#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sbaf/attack_graph.hpp"
#include "sbaf/framework.hpp"
#include "sbaf/semantics.hpp"

// Bipolar frameworks with binary (deductive) support.
namespace sbaf {

/// Binary relation over arguments; support reuses the attack graph layout.
using Relation = AttackGraph;

class Baf {
 public:
  using Edge = std::pair<std::string, std::string>;

  Baf() = default;
  /// Throws ValidationError on duplicate ids, LookupError on edges that
  /// mention undeclared arguments.
  Baf(std::vector<std::string> ids, const std::vector<Edge>& attacks, const std::vector<Edge>& supports);
  Baf(std::vector<std::string> ids, Relation attacks, Relation supports);

  std::size_t size() const { return ids_.size(); }
  const std::string& id(ArgumentIndex a) const { return ids_.at(a); }
  const std::vector<std::string>& ids() const { return ids_; }
  ArgumentIndex index_of(std::string_view id) const;
  ArgSet arg_set(const std::vector<std::string>& ids) const;
  std::vector<std::string> ids(const ArgSet& e) const;

  const Relation& attacks() const { return attacks_; }
  const Relation& supports() const { return supports_; }
  /// Complex attack closure, computed once at construction.
  const Relation& complex() const { return complex_; }

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, ArgumentIndex> index_;
  Relation attacks_;
  Relation supports_;
  Relation complex_;
};

/// a supports some c with c -> b in rel.
bool supported_attack(ArgumentIndex a, ArgumentIndex b, const Baf& baf, const Relation& rel);
/// b supports some c with a -> c in rel.
bool mediated_attack(ArgumentIndex a, ArgumentIndex b, const Baf& baf, const Relation& rel);

/// Least relation containing the attacks and closed under supported and
/// mediated attacks.
Relation complex_attacks(const Baf& baf);

/// a in E and a supports b imply b in E.
bool is_support_closed(const ArgSet& e, const Baf& baf);
bool is_d_admissible(const ArgSet& e, const Baf& baf);
/// Complete with respect to the complex attacks.
bool is_d_complete(const ArgSet& e, const Baf& baf);
/// Subset-maximal among d-admissible sets.
bool is_d_preferred(const ArgSet& e, const Baf& baf, const EnumerationLimits& limits = {});

std::vector<ArgSet> enumerate_deductive(Semantics semantics, const Baf& baf, const EnumerationLimits& limits = {});

/// How set-valued support is projected onto a binary relation.
///  conclusion: a => b iff Conc(a) is a premise of b
///  singleton:  a => b iff Prem(b) is covered by Sent(a)
/// Both exclude a == b.
enum class SupportRule { conclusion, singleton };

std::string_view to_string(SupportRule rule);
/// Throws ConfigError for unknown names.
SupportRule parse_support_rule(std::string_view name);

/// Binary support between distinct arguments under the rule.
Relation binary_support(const Sbaf& sb, SupportRule rule);

/// Same arguments and attacks, binary support per rule.
Baf baf_from_sbaf(const Sbaf& sb, SupportRule rule = SupportRule::conclusion);

}  // namespace sbaf
