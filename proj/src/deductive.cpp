#include "sbaf/deductive.hpp"

#include "sbaf/dung.hpp"
#include "sbaf/errors.hpp"
#include "sbaf/set_family.hpp"

namespace sbaf {

namespace {

Relation close_attacks(const Relation& attacks, const Relation& supports) {
  const std::size_t n = attacks.size();
  Relation current = attacks;
  while (true) {
    Relation next = current;
    for (std::size_t a = 0; a < n; ++a) {
      // supported: a => c, c -> b
      supports.targets_of(a).for_each([&](std::size_t c) {
        current.targets_of(c).for_each([&](std::size_t b) { next.add_attack(a, b); });
      });
      // mediated: b => c, a -> c
      current.targets_of(a).for_each([&](std::size_t c) {
        supports.attackers_of(c).for_each([&](std::size_t b) { next.add_attack(a, b); });
      });
    }
    if (next == current) return current;
    current = std::move(next);
  }
}

}  // namespace

Baf::Baf(std::vector<std::string> ids, Relation attacks, Relation supports)
    : ids_(std::move(ids)), attacks_(std::move(attacks)), supports_(std::move(supports)) {
  for (std::size_t a = 0; a < ids_.size(); ++a)
    if (!index_.emplace(ids_[a], a).second) throw ValidationError("duplicate argument id '" + ids_[a] + "'");
  if (attacks_.size() != ids_.size() || supports_.size() != ids_.size())
    throw ValidationError("relation size does not match argument count");
  complex_ = close_attacks(attacks_, supports_);
}

Baf::Baf(std::vector<std::string> ids, const std::vector<Edge>& attacks, const std::vector<Edge>& supports) {
  std::unordered_map<std::string, ArgumentIndex> index;
  for (std::size_t a = 0; a < ids.size(); ++a) index.emplace(ids[a], a);
  auto lookup = [&](const std::string& id) {
    auto it = index.find(id);
    if (it == index.end()) throw LookupError("unknown argument '" + id + "'");
    return it->second;
  };
  Relation att(ids.size());
  Relation sup(ids.size());
  for (const auto& [from, to] : attacks) att.add_attack(lookup(from), lookup(to));
  for (const auto& [from, to] : supports) sup.add_attack(lookup(from), lookup(to));
  *this = Baf(std::move(ids), std::move(att), std::move(sup));
}

ArgumentIndex Baf::index_of(std::string_view id) const {
  if (auto it = index_.find(std::string(id)); it != index_.end()) return it->second;
  throw LookupError("unknown argument '" + std::string(id) + "'");
}

ArgSet Baf::arg_set(const std::vector<std::string>& ids) const {
  ArgSet e(size());
  for (const auto& id : ids) e.insert(index_of(id));
  return e;
}

std::vector<std::string> Baf::ids(const ArgSet& e) const {
  std::vector<std::string> out;
  e.for_each([&](std::size_t a) { out.push_back(ids_[a]); });
  return out;
}

bool supported_attack(ArgumentIndex a, ArgumentIndex b, const Baf& baf, const Relation& rel) {
  return baf.supports().targets_of(a).intersects(rel.attackers_of(b));
}

bool mediated_attack(ArgumentIndex a, ArgumentIndex b, const Baf& baf, const Relation& rel) {
  return baf.supports().targets_of(b).intersects(rel.targets_of(a));
}

Relation complex_attacks(const Baf& baf) { return close_attacks(baf.attacks(), baf.supports()); }

bool is_support_closed(const ArgSet& e, const Baf& baf) {
  bool ok = true;
  e.for_each([&](std::size_t a) {
    if (ok && !baf.supports().targets_of(a).is_subset_of(e)) ok = false;
  });
  return ok;
}

bool is_d_admissible(const ArgSet& e, const Baf& baf) {
  return is_support_closed(e, baf) && is_admissible(e, baf.complex());
}

bool is_d_complete(const ArgSet& e, const Baf& baf) { return is_complete(e, baf.complex()); }

bool is_d_preferred(const ArgSet& e, const Baf& baf, const EnumerationLimits& limits) {
  if (!is_d_admissible(e, baf)) return false;
  const ArgSet outside = ArgSet::full(baf.size()) - e;
  require_argument_cap(outside.count(), limits);
  bool larger = false;
  for_each_conflict_free(baf.complex(), e, outside, [&](const ArgSet& cand) {
    if (!larger && cand != e && is_d_admissible(cand, baf)) larger = true;
  });
  return !larger;
}

std::vector<ArgSet> enumerate_deductive(Semantics semantics, const Baf& baf, const EnumerationLimits& limits) {
  if (!is_deductive_semantics(semantics))
    throw ConfigError("'" + std::string(to_string(semantics)) + "' is not a deductive-support semantics");
  require_argument_cap(baf.size(), limits);
  std::vector<ArgSet> out;
  const ArgSet none(baf.size());
  for_each_conflict_free(baf.complex(), none, ArgSet::full(baf.size()), [&](const ArgSet& e) {
    bool keep = semantics == Semantics::d_complete ? is_d_complete(e, baf) : is_d_admissible(e, baf);
    if (keep) out.push_back(e);
  });
  if (semantics == Semantics::d_preferred) return maximal_elements(std::move(out));
  canonicalize(out);
  return out;
}

std::string_view to_string(SupportRule rule) {
  return rule == SupportRule::conclusion ? "conclusion" : "singleton";
}

SupportRule parse_support_rule(std::string_view name) {
  if (name == "conclusion") return SupportRule::conclusion;
  if (name == "singleton") return SupportRule::singleton;
  throw ConfigError("unknown support rule '" + std::string(name) + "' (expected conclusion or singleton)");
}

Relation binary_support(const Sbaf& sb, SupportRule rule) {
  Relation out(sb.size());
  for (ArgumentIndex a = 0; a < sb.size(); ++a) {
    for (ArgumentIndex b = 0; b < sb.size(); ++b) {
      if (a == b) continue;
      bool linked = rule == SupportRule::conclusion ? sb.premises(b).contains(sb.conclusion(a))
                                                    : sb.premises(b).is_subset_of(sb.sentences(a));
      if (linked) out.add_attack(a, b);
    }
  }
  return out;
}

Baf baf_from_sbaf(const Sbaf& sb, SupportRule rule) {
  std::vector<std::string> ids;
  for (const auto& arg : sb.arguments()) ids.push_back(arg.id);
  return Baf(std::move(ids), sb.attack_graph(), binary_support(sb, rule));
}

}  // namespace sbaf
