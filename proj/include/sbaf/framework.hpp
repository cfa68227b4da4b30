#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sbaf/attack_graph.hpp"
#include "sbaf/index_set.hpp"

namespace sbaf {

using SentenceIndex = std::size_t;
using ArgumentIndex = std::size_t;

/// True for identifiers matching [A-Za-z0-9_]+.
bool is_identifier(std::string_view token);

/// Sentences, their symmetric incompatibility, and argument names.
///
/// Sentences are indexed in insertion order. Incompatibility is recorded in
/// both directions by add_incompatibility, so symmetry holds by construction.
class Language {
 public:
  /// Idempotent; returns the index of the (possibly existing) sentence.
  SentenceIndex add_sentence(std::string_view id);
  void add_incompatibility(std::string_view s, std::string_view t);
  /// Assigns n(argument) = sentence. Distinct arguments may share a name.
  void set_name(std::string_view argument_id, std::string_view sentence);

  std::size_t size() const { return sentences_.size(); }
  bool empty() const { return sentences_.empty(); }
  const std::string& sentence(SentenceIndex s) const { return sentences_.at(s); }
  const std::vector<std::string>& sentences() const { return sentences_; }
  std::optional<SentenceIndex> find(std::string_view id) const;
  SentenceIndex index_of(std::string_view id) const;

  bool incompatible(SentenceIndex s, SentenceIndex t) const;
  /// s-bar, ascending.
  const std::set<SentenceIndex>& incompatible_with(SentenceIndex s) const {
    return incompatible_.at(s);
  }
  std::optional<SentenceIndex> name_of(std::string_view argument_id) const;
  const std::map<std::string, SentenceIndex, std::less<>>& names() const { return names_; }

  friend bool operator==(const Language&, const Language&) = default;

 private:
  std::vector<std::string> sentences_;
  std::map<std::string, SentenceIndex, std::less<>> index_;
  std::vector<std::set<SentenceIndex>> incompatible_;
  std::map<std::string, SentenceIndex, std::less<>> names_;
};

/// An argument as written: premises (non-empty) and a conclusion.
struct Argument {
  std::string id;
  std::vector<std::string> premises;
  std::string conclusion;

  friend bool operator==(const Argument&, const Argument&) = default;
};

/// Structured bipolar argumentation framework.
///
/// Immutable once built. Attack is derived from argument structure at
/// construction; set-valued support is evaluated on demand.
class Sbaf {
 public:
  Sbaf();
  /// Throws ValidationError on empty premises, duplicate ids, sentences
  /// missing from the language, or a named minimal argument whose name
  /// has incompatibilities.
  Sbaf(Language language, std::vector<Argument> arguments);

  const Language& language() const { return language_; }
  std::size_t size() const { return arguments_.size(); }
  bool empty() const { return arguments_.empty(); }
  std::size_t sentence_count() const { return language_.size(); }

  /// Premises are sorted by sentence index and deduplicated.
  const Argument& argument(ArgumentIndex a) const { return arguments_.at(a); }
  const std::vector<Argument>& arguments() const { return arguments_; }
  const std::string& id(ArgumentIndex a) const { return arguments_.at(a).id; }

  const SentSet& premises(ArgumentIndex a) const { return premises_[a]; }
  SentenceIndex conclusion(ArgumentIndex a) const { return conclusions_[a]; }
  /// Sent(a) = Prem(a) + Conc(a); never includes the name.
  const SentSet& sentences(ArgumentIndex a) const { return sentences_[a]; }
  std::optional<SentenceIndex> name(ArgumentIndex a) const { return names_[a]; }
  /// n(a)-bar; empty for unnamed arguments.
  const SentSet& undercutters(ArgumentIndex a) const { return undercutters_[a]; }
  /// s-bar as a set.
  const SentSet& incompatible_with(SentenceIndex s) const { return incompatible_[s]; }
  bool is_minimal(ArgumentIndex a) const;

  ArgumentIndex index_of(std::string_view id) const;
  std::optional<ArgumentIndex> find(std::string_view id) const;

  ArgSet no_arguments() const { return ArgSet(size()); }
  ArgSet all_arguments() const { return ArgSet::full(size()); }
  SentSet no_sentences() const { return SentSet(sentence_count()); }

  ArgSet arg_set(const std::vector<std::string>& ids) const;
  SentSet sent_set(const std::vector<std::string>& ids) const;
  std::vector<std::string> ids(const ArgSet& e) const;
  std::vector<std::string> sentence_ids(const SentSet& s) const;

  /// Sent(E).
  SentSet sent(const ArgSet& e) const;
  /// Sent(A).
  const SentSet& sentence_universe() const { return universe_; }

  bool attacks(ArgumentIndex a, ArgumentIndex b) const { return graph_.attacks(a, b); }
  /// Prem(a) is covered by Sent(E).
  bool supports(const ArgSet& e, ArgumentIndex a) const;
  /// a is named and n(a)-bar meets Sent(E).
  bool undercut_info(const ArgSet& e, ArgumentIndex a) const;
  /// Same test against an already computed Sent(E) or a language extension.
  bool undercut_info(const SentSet& sentences, ArgumentIndex a) const {
    return undercutters_[a].intersects(sentences);
  }

  const AttackGraph& attack_graph() const { return graph_; }

  /// Attack relation recomputed from (conclusion, Sent, names) alone.
  AttackGraph derive_attacks() const;

  /// New framework with extra arguments appended.
  Sbaf with_arguments(const std::vector<Argument>& extra) const;

  friend bool operator==(const Sbaf& a, const Sbaf& b) {
    return a.language_ == b.language_ && a.arguments_ == b.arguments_;
  }

 private:
  Language language_;
  std::vector<Argument> arguments_;
  std::unordered_map<std::string, ArgumentIndex> index_;
  std::vector<SentSet> premises_;
  std::vector<SentenceIndex> conclusions_;
  std::vector<SentSet> sentences_;
  std::vector<std::optional<SentenceIndex>> names_;
  std::vector<SentSet> undercutters_;
  std::vector<SentSet> incompatible_;
  SentSet universe_;
  AttackGraph graph_;
};

}  // namespace sbaf
