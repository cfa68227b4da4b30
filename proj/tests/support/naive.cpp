#include "naive.hpp"

#include <algorithm>
#include <stdexcept>

namespace naive {

namespace {

using Rel = std::set<std::pair<std::string, std::string>>;

Rel attack_relation(const Framework& f) {
  Rel out;
  for (const auto& a : f.args)
    for (const auto& b : f.args)
      if (attacks(f, a, b)) out.insert({a.id, b.id});
  return out;
}

bool cf(const Rel& r, const Ids& e) {
  for (const auto& a : e)
    for (const auto& b : e)
      if (r.count({a, b})) return false;
  return true;
}

bool def(const Rel& r, const Ids& universe, const Ids& e, const std::string& a) {
  for (const auto& b : universe) {
    if (!r.count({b, a})) continue;
    bool countered = false;
    for (const auto& c : e)
      if (r.count({c, b})) countered = true;
    if (!countered) return false;
  }
  return true;
}

bool adm(const Rel& r, const Ids& universe, const Ids& e) {
  if (!cf(r, e)) return false;
  for (const auto& a : e)
    if (!def(r, universe, e, a)) return false;
  return true;
}

bool comp(const Rel& r, const Ids& universe, const Ids& e) {
  if (!adm(r, universe, e)) return false;
  for (const auto& a : universe)
    if (!e.count(a) && def(r, universe, e, a)) return false;
  return true;
}

bool subset(const Ids& a, const Ids& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

template <typename Pred>
Family filter(const Ids& universe, Pred pred) {
  Family out;
  for (const auto& e : subsets(universe))
    if (pred(e)) out.insert(e);
  return out;
}

bool coherent(const Framework& f, const Ids& e, bool weak) {
  if (!admissible(f, e)) return false;
  const Ids s = sent(f, e);
  for (const auto& a : f.args) {
    if (e.count(a.id)) continue;
    if (!subset(a.prem, s)) continue;
    if (undercut_info(f, s, a)) continue;
    if (weak && !defends(f, e, a)) continue;
    return false;
  }
  return true;
}

}  // namespace

const Arg& Framework::arg(const std::string& id) const {
  for (const auto& a : args)
    if (a.id == id) return a;
  throw std::out_of_range("no argument " + id);
}

Ids Framework::all_ids() const {
  Ids out;
  for (const auto& a : args) out.insert(a.id);
  return out;
}

Ids Framework::sentences_in_arguments() const {
  Ids out;
  for (const auto& a : args) {
    out.insert(a.prem.begin(), a.prem.end());
    out.insert(a.conc);
  }
  return out;
}

Framework from(const sbaf::Sbaf& sb) {
  Framework f;
  const auto& lang = sb.language();
  for (const auto& a : sb.arguments()) {
    Arg arg{a.id, Ids(a.premises.begin(), a.premises.end()), a.conclusion, std::nullopt};
    if (auto n = lang.name_of(a.id)) arg.name = lang.sentence(*n);
    f.args.push_back(arg);
  }
  for (std::size_t s = 0; s < lang.size(); ++s)
    for (auto t : lang.incompatible_with(s)) {
      f.inc.insert({lang.sentence(s), lang.sentence(t)});
      f.inc.insert({lang.sentence(t), lang.sentence(s)});
    }
  return f;
}

Ids sent_of(const Arg& a) {
  Ids out = a.prem;
  out.insert(a.conc);
  return out;
}

Ids sent(const Framework& f, const Ids& e) {
  Ids out;
  for (const auto& id : e) {
    const Ids s = sent_of(f.arg(id));
    out.insert(s.begin(), s.end());
  }
  return out;
}

bool attacks(const Framework& f, const Arg& a, const Arg& b) {
  for (const auto& s : sent_of(b))
    if (f.incompatible(a.conc, s)) return true;
  return b.name && f.incompatible(a.conc, *b.name);
}

bool supports(const Framework& f, const Ids& e, const Arg& a) { return subset(a.prem, sent(f, e)); }

bool undercut_info(const Framework& f, const Ids& sentences, const Arg& a) {
  if (!a.name) return false;
  for (const auto& s : sentences)
    if (f.incompatible(*a.name, s)) return true;
  return false;
}

std::vector<Ids> subsets(const Ids& universe) {
  const std::vector<std::string> items(universe.begin(), universe.end());
  std::vector<Ids> out;
  for (unsigned long mask = 0; mask < (1UL << items.size()); ++mask) {
    Ids e;
    for (std::size_t k = 0; k < items.size(); ++k)
      if (mask & (1UL << k)) e.insert(items[k]);
    out.push_back(e);
  }
  return out;
}

bool conflict_free(const Framework& f, const Ids& e) { return cf(attack_relation(f), e); }
bool defends(const Framework& f, const Ids& e, const Arg& a) { return def(attack_relation(f), f.all_ids(), e, a.id); }
bool admissible(const Framework& f, const Ids& e) { return adm(attack_relation(f), f.all_ids(), e); }
bool complete(const Framework& f, const Ids& e) { return comp(attack_relation(f), f.all_ids(), e); }

Family maximal(const Family& family) {
  Family out;
  for (const auto& e : family) {
    bool dominated = false;
    for (const auto& g : family)
      if (g != e && subset(e, g)) dominated = true;
    if (!dominated) out.insert(e);
  }
  return out;
}

Family conflict_free_sets(const Framework& f) {
  const Rel r = attack_relation(f);
  return filter(f.all_ids(), [&](const Ids& e) { return cf(r, e); });
}
Family admissible_sets(const Framework& f) {
  const Rel r = attack_relation(f);
  return filter(f.all_ids(), [&](const Ids& e) { return adm(r, f.all_ids(), e); });
}
Family complete_sets(const Framework& f) {
  const Rel r = attack_relation(f);
  return filter(f.all_ids(), [&](const Ids& e) { return comp(r, f.all_ids(), e); });
}
Family preferred_sets(const Framework& f) { return maximal(admissible_sets(f)); }

bool strongly_coherent(const Framework& f, const Ids& e) { return coherent(f, e, false); }
bool weakly_coherent(const Framework& f, const Ids& e) { return coherent(f, e, true); }
Family strongly_coherent_sets(const Framework& f) {
  return filter(f.all_ids(), [&](const Ids& e) { return strongly_coherent(f, e); });
}
Family weakly_coherent_sets(const Framework& f) {
  return filter(f.all_ids(), [&](const Ids& e) { return weakly_coherent(f, e); });
}

bool compatible(const Framework& f, const Ids& s) {
  for (const auto& a : s)
    for (const auto& b : s)
      if (f.incompatible(a, b)) return false;
  return true;
}

Ids arg_s(const Framework& f, const Ids& s) {
  Ids out;
  for (const auto& a : f.args)
    if (subset(a.prem, s) && !undercut_info(f, s, a)) out.insert(a.id);
  return out;
}

Ids characteristic(const Framework& f, const Ids& s, const Ids& e) {
  Ids out;
  for (const auto& id : arg_s(f, s))
    if (defends(f, e, f.arg(id))) out.insert(id);
  return out;
}

std::optional<Ids> init(const Framework& f, const Ids& s) {
  Ids candidates;
  for (const auto& a : f.args)
    if (subset(sent_of(a), s) && !undercut_info(f, s, a)) candidates.insert(a.id);
  std::vector<Ids> adm_subsets;
  for (const auto& e : subsets(candidates))
    if (admissible(f, e)) adm_subsets.push_back(e);
  for (const auto& e : adm_subsets) {
    bool largest = true;
    for (const auto& g : adm_subsets)
      if (!subset(g, e)) largest = false;
    if (largest) return e;
  }
  return std::nullopt;
}

std::optional<Ids> arg_w(const Framework& f, const Ids& s) {
  const auto base = init(f, s);
  if (!base) return std::nullopt;
  std::vector<Ids> fixpoints;
  for (const auto& e : subsets(f.all_ids()))
    if (subset(*base, e) && characteristic(f, s, e) == e) fixpoints.push_back(e);
  for (const auto& e : fixpoints) {
    bool least = true;
    for (const auto& g : fixpoints)
      if (!subset(e, g)) least = false;
    if (least) return e;
  }
  return std::nullopt;
}

bool strongly_adequate(const Framework& f, const Ids& s) {
  if (!compatible(f, s)) return false;
  const Ids args = arg_s(f, s);
  for (const auto& id : args)
    if (!defends(f, args, f.arg(id))) return false;
  return subset(sent(f, args), s);
}

bool weakly_adequate(const Framework& f, const Ids& s) {
  if (!compatible(f, s)) return false;
  const auto args = arg_w(f, s);
  return args && subset(sent(f, *args), s);
}

Family strongly_adequate_sets(const Framework& f) {
  return filter(f.sentences_in_arguments(), [&](const Ids& s) { return strongly_adequate(f, s); });
}
Family weakly_adequate_sets(const Framework& f) {
  return filter(f.sentences_in_arguments(), [&](const Ids& s) { return weakly_adequate(f, s); });
}

Family confident_strongly_coherent(const Framework& f) {
  Family out;
  for (const auto& s : maximal(strongly_adequate_sets(f))) {
    const Ids e = arg_s(f, s);
    if (strongly_coherent(f, e)) out.insert(e);
  }
  return out;
}

Family confident_weakly_coherent(const Framework& f) {
  Family out;
  for (const auto& s : maximal(weakly_adequate_sets(f))) {
    const Ids e = *arg_w(f, s);
    if (weakly_coherent(f, e)) out.insert(e);
  }
  return out;
}

Bipolar from(const sbaf::Baf& baf) {
  Bipolar b;
  b.args.insert(baf.ids().begin(), baf.ids().end());
  for (const auto& [x, y] : baf.attacks().edges()) b.att.insert({baf.id(x), baf.id(y)});
  for (const auto& [x, y] : baf.supports().edges()) b.sup.insert({baf.id(x), baf.id(y)});
  return b;
}

Bipolar conclusion_baf(const Framework& f) {
  Bipolar b;
  b.args = f.all_ids();
  b.att = attack_relation(f);
  for (const auto& x : f.args)
    for (const auto& y : f.args)
      if (x.id != y.id && y.prem.count(x.conc)) b.sup.insert({x.id, y.id});
  return b;
}

Rel complex_attacks(const Bipolar& b) {
  Rel r = b.att;
  for (bool grew = true; grew;) {
    grew = false;
    Rel next = r;
    for (const auto& [x, c] : b.sup)
      for (const auto& [y, z] : r) {
        if (y == c) next.insert({x, z});  // x => c -> z
        if (z == c) next.insert({y, x});  // y -> c, x => c
      }
    grew = next.size() != r.size();
    r = next;
  }
  return r;
}

Family d_admissible_sets(const Bipolar& b) {
  const Rel co = complex_attacks(b);
  return filter(b.args, [&](const Ids& e) {
    for (const auto& [x, y] : b.sup)
      if (e.count(x) && !e.count(y)) return false;
    return adm(co, b.args, e);
  });
}

Family d_complete_sets(const Bipolar& b) {
  const Rel co = complex_attacks(b);
  return filter(b.args, [&](const Ids& e) { return comp(co, b.args, e); });
}

Family d_preferred_sets(const Bipolar& b) {
  const Rel co = complex_attacks(b);
  return maximal(filter(b.args, [&](const Ids& e) { return adm(co, b.args, e); }));
}

}  // namespace naive
