#include "sbaf/io/commands.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "sbaf/coherence.hpp"
#include "sbaf/dung.hpp"
#include "sbaf/errors.hpp"
#include "sbaf/io/framework_file.hpp"
#include "sbaf/language_semantics.hpp"
#include "sbaf/saturation.hpp"

namespace sbaf::io {

std::string_view to_string(Mode mode) { return mode == Mode::arguments ? "arguments" : "language"; }

Mode parse_mode(std::string_view name) {
  if (name == "arguments") return Mode::arguments;
  if (name == "language") return Mode::language;
  throw ConfigError("unknown mode '" + std::string(name) + "' (expected arguments or language)");
}

namespace {

Strength strength_of(Semantics s) {
  return (s == Semantics::weakly_coherent || s == Semantics::weakly_adequate) ? Strength::weak : Strength::strong;
}

bool is_coherent_semantics(Semantics s) {
  return s == Semantics::strongly_coherent || s == Semantics::weakly_coherent;
}

void require_confident_applicable(const SolveOptions& options) {
  if (options.confident && !is_coherent_semantics(options.semantics) && !is_language_semantics(options.semantics))
    throw ConfigError("--confident applies to coherent and adequate semantics only, not '" +
                      std::string(to_string(options.semantics)) + "'");
}

std::vector<ArgSet> argument_extensions(const Sbaf& sb, const SolveOptions& options) {
  const Semantics sem = options.semantics;
  if (is_dung_semantics(sem)) return enumerate(sem, sb, options.limits);
  if (is_coherent_semantics(sem))
    return options.confident ? confident_coherent(strength_of(sem), sb, options.limits)
                             : enumerate_coherent(strength_of(sem), sb, options.limits);
  if (is_deductive_semantics(sem))
    return enumerate_deductive(sem, baf_from_sbaf(sb, options.support_rule), options.limits);
  throw ConfigError("'" + std::string(to_string(sem)) + "' is not an argument semantics");
}

void sort_family(std::vector<std::vector<std::string>>& family) {
  for (auto& ext : family) std::sort(ext.begin(), ext.end());
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

Diagnostics diagnostics_of(const Sbaf& sb, const SolveOptions& options) {
  Diagnostics d;
  d.saturated = is_saturated(sb);
  d.strongly_saturated = is_strongly_saturated(sb);
  d.arguments = sb.size();
  d.sentences = sb.sentence_universe().count();
  d.limits = options.limits;
  if (is_deductive_semantics(options.semantics)) d.support_rule = options.support_rule;
  return d;
}

std::string join(const std::vector<std::string>& ids) {
  std::string out;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (k) out += ',';
    out += ids[k];
  }
  return out;
}

std::string braces(const std::vector<std::string>& ids) { return "{" + join(ids) + "}"; }

}  // namespace

ResultDocument solve(const Sbaf& sb, const SolveOptions& options) {
  require_confident_applicable(options);
  const Semantics sem = options.semantics;
  ResultDocument doc;
  doc.digest = digest(sb);
  doc.semantics = sem;
  doc.mode = options.mode.value_or(is_language_semantics(sem) ? Mode::language : Mode::arguments);
  doc.confident = options.confident;
  doc.diagnostics = diagnostics_of(sb, options);

  if (is_language_semantics(sem)) {
    const Strength strength = strength_of(sem);
    const std::vector<SentSet> family = options.confident ? confident_adequate(strength, sb, options.limits)
                                                          : enumerate_adequate(strength, sb, options.limits);
    for (const auto& s : family)
      doc.extensions.push_back(doc.mode == Mode::language ? sb.sentence_ids(s)
                                                          : sb.ids(argument_set(s, sb, strength)));
  } else {
    for (const auto& e : argument_extensions(sb, options))
      doc.extensions.push_back(doc.mode == Mode::arguments ? sb.ids(e) : sb.sentence_ids(sb.sent(e)));
  }
  sort_family(doc.extensions);
  return doc;
}

nlohmann::json to_json(const ResultDocument& doc) {
  nlohmann::json diag = {
      {"saturated", doc.diagnostics.saturated},
      {"strongly_saturated", doc.diagnostics.strongly_saturated},
      {"arguments", doc.diagnostics.arguments},
      {"sentences", doc.diagnostics.sentences},
      {"max_args", doc.diagnostics.limits.max_arguments},
      {"max_sents", doc.diagnostics.limits.max_sentences},
  };
  if (doc.diagnostics.support_rule) diag["support_rule"] = std::string(to_string(*doc.diagnostics.support_rule));
  return {
      {"digest", doc.digest},
      {"semantics", std::string(to_string(doc.semantics))},
      {"mode", std::string(to_string(doc.mode))},
      {"confident", doc.confident},
      {"count", doc.extensions.size()},
      {"extensions", doc.extensions},
      {"diagnostics", diag},
  };
}

std::string to_plain(const ResultDocument& doc) {
  std::string out;
  for (const auto& ext : doc.extensions) out += join(ext) + '\n';
  return out;
}

namespace {

using IdOf = std::function<const std::string&(ArgumentIndex)>;

std::optional<std::string> conflict_clause(const ArgSet& e, const AttackGraph& g, const IdOf& id) {
  std::optional<std::string> out;
  e.for_each([&](std::size_t a) {
    if (out) return;
    const ArgSet hit = g.targets_of(a) & e;
    if (!hit.empty()) out = "conflict-freeness violated: " + id(a) + " attacks " + id(hit.next(0));
  });
  return out;
}

std::optional<std::string> defense_clause(const ArgSet& e, const AttackGraph& g, const IdOf& id) {
  std::optional<std::string> out;
  e.for_each([&](std::size_t a) {
    if (out) return;
    g.attackers_of(a).for_each([&](std::size_t b) {
      if (!out && !g.set_attacks(e, b)) out = "defense violated: " + id(a) + " undefended against " + id(b);
    });
  });
  return out;
}

std::optional<std::string> admissible_clauses(const ArgSet& e, const AttackGraph& g, const IdOf& id) {
  if (auto c = conflict_clause(e, g, id)) return c;
  return defense_clause(e, g, id);
}

std::optional<std::string> completeness_clause(const ArgSet& e, const AttackGraph& g, const IdOf& id) {
  const ArgSet missing = defended_by(e, g) - e;
  if (missing.empty()) return std::nullopt;
  return "completeness violated: " + id(missing.next(0)) + " defended, not member";
}

std::optional<std::string> maximality_clause(const ArgSet& e, const std::vector<ArgSet>& family, const IdOf& id) {
  for (const auto& f : family)
    if (f != e && e.is_subset_of(f)) {
      std::vector<std::string> ids;
      f.for_each([&](std::size_t a) { ids.push_back(id(a)); });
      std::sort(ids.begin(), ids.end());
      return "maximality violated: contained in " + braces(ids);
    }
  return std::nullopt;
}

std::optional<std::string> closure_clause(const ArgSet& e, const Sbaf& sb, Strength strength) {
  const auto a = closure_violation(e, sb, strength);
  if (!a) return std::nullopt;
  if (strength == Strength::strong)
    return "strong support-closure violated: " + sb.id(*a) + " supported, no undercut info, not member";
  return "weak support-closure violated: " + sb.id(*a) + " supported, defended, no undercut info, not member";
}

std::optional<std::string> argument_clauses(const Sbaf& sb, const ArgSet& e, const SolveOptions& options) {
  const Semantics sem = options.semantics;
  const AttackGraph& g = sb.attack_graph();
  const IdOf id = [&](ArgumentIndex a) -> const std::string& { return sb.id(a); };
  switch (sem) {
    case Semantics::conflict_free:
      return conflict_clause(e, g, id);
    case Semantics::admissible:
      return admissible_clauses(e, g, id);
    case Semantics::complete:
      if (auto c = admissible_clauses(e, g, id)) return c;
      return completeness_clause(e, g, id);
    case Semantics::preferred:
      if (auto c = admissible_clauses(e, g, id)) return c;
      return maximality_clause(e, enumerate(Semantics::preferred, g, options.limits), id);
    case Semantics::strongly_coherent:
    case Semantics::weakly_coherent:
      if (auto c = admissible_clauses(e, g, id)) return c;
      return closure_clause(e, sb, strength_of(sem));
    default:
      break;
  }
  const Baf baf = baf_from_sbaf(sb, options.support_rule);
  const AttackGraph& co = baf.complex();
  if (sem == Semantics::d_admissible) {
    std::optional<std::string> out;
    e.for_each([&](std::size_t a) {
      if (out) return;
      const ArgSet missing = baf.supports().targets_of(a) - e;
      if (!missing.empty())
        out = "support-closure violated: " + sb.id(a) + " supports " + sb.id(missing.next(0)) + ", not member";
    });
    if (out) return out;
    return admissible_clauses(e, co, id);
  }
  if (auto c = admissible_clauses(e, co, id)) return c;
  if (sem == Semantics::d_complete) return completeness_clause(e, co, id);
  return maximality_clause(e, enumerate(Semantics::preferred, co, options.limits), id);
}

std::optional<std::string> language_clauses(const Sbaf& sb, const SentSet& s, Strength strength) {
  const Language& lang = sb.language();
  std::optional<std::string> out;
  s.for_each([&](std::size_t t) {
    if (out) return;
    const SentSet clash = sb.incompatible_with(t) & s;
    if (!clash.empty())
      out = "compatibility violated: " + lang.sentence(t) + " incompatible with " + lang.sentence(clash.next(0));
  });
  if (out) return out;
  const ArgSet args = argument_set(s, sb, strength);
  if (strength == Strength::strong) {
    args.for_each([&](std::size_t a) {
      if (!out && !defends(args, a, sb))
        out = "self-defense violated: strong argument set does not defend " + sb.id(a);
    });
    if (out) return out;
  }
  args.for_each([&](std::size_t a) {
    if (out) return;
    const SentSet outside = sb.sentences(a) - s;
    if (!outside.empty())
      out = "sentence-closure violated: " + sb.id(a) + " uses " + lang.sentence(outside.next(0)) + ", not member";
  });
  return out;
}

}  // namespace

Verdict check(const Sbaf& sb, Semantics semantics, const std::vector<std::string>& members,
              const SolveOptions& options) {
  SolveOptions opts = options;
  opts.semantics = semantics;
  require_confident_applicable(opts);
  const std::string tag(to_string(semantics));

  std::optional<std::string> violation;
  bool in_confident_family = true;
  if (is_language_semantics(semantics)) {
    const SentSet s = sb.sent_set(members);
    require_language_extension(s, sb);
    violation = language_clauses(sb, s, strength_of(semantics));
    if (!violation && opts.confident) {
      const auto family = confident_adequate(strength_of(semantics), sb, opts.limits);
      in_confident_family = std::find(family.begin(), family.end(), s) != family.end();
    }
  } else {
    const ArgSet e = sb.arg_set(members);
    violation = argument_clauses(sb, e, opts);
    if (!violation && opts.confident) {
      const auto family = confident_coherent(strength_of(semantics), sb, opts.limits);
      in_confident_family = std::find(family.begin(), family.end(), e) != family.end();
    }
  }
  if (violation) return {false, *violation};
  if (!in_confident_family) return {false, "confidence violated: not induced by a maximal adequate language extension"};
  return {true, std::string(opts.confident ? "confident " : "") + tag + ": all clauses hold"};
}

nlohmann::json to_json(const Verdict& verdict, Semantics semantics, const std::vector<std::string>& members) {
  std::vector<std::string> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return {
      {"semantics", std::string(to_string(semantics))},
      {"extension", sorted},
      {"accepted", verdict.accepted},
      {"explanation", verdict.explanation},
  };
}

nlohmann::json properties(const Sbaf& sb) {
  return {
      {"digest", digest(sb)},
      {"arguments", sb.size()},
      {"sentences", sb.sentence_universe().count()},
      {"language_sentences", sb.sentence_count()},
      {"attacks", sb.attack_graph().edges().size()},
      {"saturated", is_saturated(sb)},
      {"strongly_saturated", is_strongly_saturated(sb)},
  };
}

}  // namespace sbaf::io
