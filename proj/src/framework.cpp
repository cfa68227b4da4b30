#include "sbaf/framework.hpp"

#include <algorithm>

#include "sbaf/errors.hpp"

namespace sbaf {

bool is_identifier(std::string_view token) {
  if (token.empty()) return false;
  return std::all_of(token.begin(), token.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

SentenceIndex Language::add_sentence(std::string_view id) {
  if (auto it = index_.find(id); it != index_.end()) return it->second;
  if (!is_identifier(id)) throw ValidationError("invalid sentence identifier '" + std::string(id) + "'");
  SentenceIndex s = sentences_.size();
  sentences_.emplace_back(id);
  index_.emplace(std::string(id), s);
  incompatible_.emplace_back();
  return s;
}

void Language::add_incompatibility(std::string_view s, std::string_view t) {
  SentenceIndex a = add_sentence(s);
  SentenceIndex b = add_sentence(t);
  incompatible_[a].insert(b);
  incompatible_[b].insert(a);
}

void Language::set_name(std::string_view argument_id, std::string_view sentence) {
  if (!is_identifier(argument_id))
    throw ValidationError("invalid argument identifier '" + std::string(argument_id) + "'");
  SentenceIndex s = add_sentence(sentence);
  names_.insert_or_assign(std::string(argument_id), s);
}

std::optional<SentenceIndex> Language::find(std::string_view id) const {
  if (auto it = index_.find(id); it != index_.end()) return it->second;
  return std::nullopt;
}

SentenceIndex Language::index_of(std::string_view id) const {
  if (auto s = find(id)) return *s;
  throw LookupError("unknown sentence '" + std::string(id) + "'");
}

bool Language::incompatible(SentenceIndex s, SentenceIndex t) const {
  return incompatible_.at(s).count(t) != 0;
}

std::optional<SentenceIndex> Language::name_of(std::string_view argument_id) const {
  if (auto it = names_.find(argument_id); it != names_.end()) return it->second;
  return std::nullopt;
}

Sbaf::Sbaf() : Sbaf(Language{}, {}) {}

Sbaf::Sbaf(Language language, std::vector<Argument> arguments)
    : language_(std::move(language)), arguments_(std::move(arguments)) {
  const std::size_t n_sent = language_.size();
  const std::size_t n_arg = arguments_.size();

  incompatible_.reserve(n_sent);
  for (SentenceIndex s = 0; s < n_sent; ++s) {
    SentSet bar(n_sent);
    for (auto t : language_.incompatible_with(s)) bar.insert(t);
    incompatible_.push_back(std::move(bar));
  }

  universe_ = SentSet(n_sent);
  for (ArgumentIndex a = 0; a < n_arg; ++a) {
    Argument& arg = arguments_[a];
    if (!is_identifier(arg.id)) throw ValidationError("invalid argument identifier '" + arg.id + "'");
    if (!index_.emplace(arg.id, a).second) throw ValidationError("duplicate argument id '" + arg.id + "'");
    if (arg.premises.empty()) throw ValidationError("argument '" + arg.id + "' has no premises");

    auto resolve = [&](const std::string& sid) {
      auto s = language_.find(sid);
      if (!s) throw ValidationError("argument '" + arg.id + "' uses undeclared sentence '" + sid + "'");
      return *s;
    };
    SentSet prem(n_sent);
    for (const auto& p : arg.premises) prem.insert(resolve(p));
    SentenceIndex conc = resolve(arg.conclusion);

    // normalise premise order to sentence order
    arg.premises.clear();
    prem.for_each([&](std::size_t s) { arg.premises.push_back(language_.sentence(s)); });

    SentSet sent = prem;
    sent.insert(conc);
    universe_ |= sent;

    auto name = language_.name_of(arg.id);
    SentSet under(n_sent);
    if (name) under = incompatible_[*name];
    if (name && !under.empty() && prem.count() == 1 && prem.contains(conc))
      throw ValidationError("minimal argument '" + arg.id + "' carries name '" +
                            language_.sentence(*name) + "' with incompatible sentences");

    premises_.push_back(std::move(prem));
    conclusions_.push_back(conc);
    sentences_.push_back(std::move(sent));
    names_.push_back(name);
    undercutters_.push_back(std::move(under));
  }

  graph_ = derive_attacks();
}

AttackGraph Sbaf::derive_attacks() const {
  AttackGraph g(size());
  for (ArgumentIndex a = 0; a < size(); ++a) {
    const SentSet& hits = incompatible_[conclusions_[a]];
    for (ArgumentIndex b = 0; b < size(); ++b) {
      if (hits.intersects(sentences_[b]) || undercutters_[b].contains(conclusions_[a])) g.add_attack(a, b);
    }
  }
  return g;
}

bool Sbaf::is_minimal(ArgumentIndex a) const {
  return premises_[a].count() == 1 && premises_[a].contains(conclusions_[a]);
}

std::optional<ArgumentIndex> Sbaf::find(std::string_view id) const {
  if (auto it = index_.find(std::string(id)); it != index_.end()) return it->second;
  return std::nullopt;
}

ArgumentIndex Sbaf::index_of(std::string_view id) const {
  if (auto a = find(id)) return *a;
  throw LookupError("unknown argument '" + std::string(id) + "'");
}

ArgSet Sbaf::arg_set(const std::vector<std::string>& ids) const {
  ArgSet e(size());
  for (const auto& id : ids) e.insert(index_of(id));
  return e;
}

SentSet Sbaf::sent_set(const std::vector<std::string>& ids) const {
  SentSet s(sentence_count());
  for (const auto& id : ids) s.insert(language_.index_of(id));
  return s;
}

std::vector<std::string> Sbaf::ids(const ArgSet& e) const {
  std::vector<std::string> out;
  e.for_each([&](std::size_t a) { out.push_back(arguments_[a].id); });
  return out;
}

std::vector<std::string> Sbaf::sentence_ids(const SentSet& s) const {
  std::vector<std::string> out;
  s.for_each([&](std::size_t i) { out.push_back(language_.sentence(i)); });
  return out;
}

SentSet Sbaf::sent(const ArgSet& e) const {
  SentSet out(sentence_count());
  e.for_each([&](std::size_t a) { out |= sentences_.at(a); });
  return out;
}

bool Sbaf::supports(const ArgSet& e, ArgumentIndex a) const {
  return premises_.at(a).is_subset_of(sent(e));
}

bool Sbaf::undercut_info(const ArgSet& e, ArgumentIndex a) const {
  return undercutters_.at(a).intersects(sent(e));
}

Sbaf Sbaf::with_arguments(const std::vector<Argument>& extra) const {
  std::vector<Argument> all = arguments_;
  all.insert(all.end(), extra.begin(), extra.end());
  return Sbaf(language_, std::move(all));
}

}  // namespace sbaf
