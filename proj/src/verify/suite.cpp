#include "sbaf/verify/suite.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "sbaf/coherence.hpp"
#include "sbaf/deductive.hpp"
#include "sbaf/dung.hpp"
#include "sbaf/errors.hpp"
#include "sbaf/io/framework_file.hpp"
#include "sbaf/language_semantics.hpp"
#include "sbaf/saturation.hpp"
#include "sbaf/verify/oracle.hpp"

namespace sbaf::verify {

namespace {

struct Outcome {
  std::size_t checked = 0;
  std::optional<std::string> violation;
};

using Check = std::function<Outcome(const Sbaf&, std::uint64_t seed, const EnumerationLimits&)>;
using Generate = std::function<Sbaf(const GenConfig&)>;

struct Entry {
  std::string id;
  std::string description;
  Generate generate;
  Check check;
};

std::string braces(const Sbaf& sb, const ArgSet& e) {
  std::string out = "{";
  bool first = true;
  for (const auto& id : sb.ids(e)) {
    out += (first ? "" : ",") + id;
    first = false;
  }
  return out + "}";
}

std::string braces(const Sbaf& sb, const SentSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& id : sb.sentence_ids(s)) {
    out += (first ? "" : ",") + id;
    first = false;
  }
  return out + "}";
}

bool contains(const std::vector<ArgSet>& family, const ArgSet& e) {
  return std::find(family.begin(), family.end(), e) != family.end();
}

/// Compatible subsets of Sent(A), by bitmask over its members.
std::vector<SentSet> compatible_sets(const Sbaf& sb, const EnumerationLimits& limits) {
  require_sentence_cap(sb, limits);
  const std::vector<std::size_t> scope = sb.sentence_universe().indices();
  std::vector<SentSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << scope.size()); ++mask) {
    SentSet s = sb.no_sentences();
    for (std::size_t k = 0; k < scope.size(); ++k)
      if (mask >> k & 1U) s.insert(scope[k]);
    if (is_compatible(s, sb)) out.push_back(std::move(s));
  }
  return out;
}

/// Random subset of Sent(A) made compatible by dropping later clashing members.
SentSet random_compatible(const Sbaf& sb, std::uint64_t seed) {
  std::mt19937_64 rng(mix_seed(seed));
  SentSet s = sb.no_sentences();
  sb.sentence_universe().for_each([&](std::size_t t) {
    if (rng() & 1U) return;
    if (sb.incompatible_with(t).contains(t) || sb.incompatible_with(t).intersects(s)) return;
    s.insert(t);
  });
  return s;
}

/// Random U grown until nothing outside it attacks, undercuts or can feed
/// the premises of a member.
ArgSet closed_random_subset(const Sbaf& sb, std::uint64_t seed) {
  std::mt19937_64 rng(mix_seed(seed));
  ArgSet u = sb.no_arguments();
  for (ArgumentIndex a = 0; a < sb.size(); ++a)
    if (rng() & 1U) u.insert(a);
  if (u.empty() && !sb.empty()) u.insert(rng() % sb.size());
  for (bool grew = true; grew;) {
    grew = false;
    const ArgSet before = u;
    before.for_each([&](std::size_t a) {
      u |= sb.attack_graph().attackers_of(a);
      for (ArgumentIndex b = 0; b < sb.size(); ++b)
        if (sb.sentences(b).intersects(sb.undercutters(a)) || sb.sentences(b).intersects(sb.premises(a)))
          u.insert(b);
    });
    grew = u != before;
  }
  return u;
}

Sbaf gen_default(const GenConfig& c) { return gen_sbaf(c); }

Outcome strong_implies_weak(const Sbaf& sb, std::uint64_t, const EnumerationLimits& limits) {
  const auto strong = enumerate_coherent(Strength::strong, sb, limits);
  const auto weak = enumerate_coherent(Strength::weak, sb, limits);
  for (const auto& e : strong)
    if (!contains(weak, e)) return {strong.size(), "strongly coherent " + braces(sb, e) + " is not weakly coherent"};
  return {strong.size(), std::nullopt};
}

Outcome complete_weak_maximal(const Sbaf& sb, std::uint64_t, const EnumerationLimits& limits) {
  const auto weak = enumerate_coherent(Strength::weak, sb, limits);
  const auto complete = enumerate(Semantics::complete, sb, limits);
  for (const auto& e : complete)
    if (!contains(weak, e)) return {complete.size(), "complete " + braces(sb, e) + " is not weakly coherent"};
  const auto maximal = maximal_elements(weak);
  const auto preferred = enumerate(Semantics::preferred, sb, limits);
  const std::size_t n = complete.size() + maximal.size();
  for (const auto& e : maximal)
    if (!contains(preferred, e)) return {n, "maximal weakly coherent " + braces(sb, e) + " is not preferred"};
  for (const auto& e : preferred)
    if (!contains(maximal, e)) return {n, "preferred " + braces(sb, e) + " is not maximal weakly coherent"};
  return {n, std::nullopt};
}

Outcome weak_directionality(const Sbaf& sb, std::uint64_t seed, const EnumerationLimits& limits) {
  Outcome out;
  for (std::uint64_t k = 0; k < 4; ++k) {
    const ArgSet u = closed_random_subset(sb, seed + k);
    if (directionality_obstacle(sb, u)) continue;
    ++out.checked;
    if (!check_directionality(sb, u, Semantics::weakly_coherent, limits)) {
      out.violation = "weak coherence fails directionality for U=" + braces(sb, u);
      return out;
    }
  }
  return out;
}

Outcome least_fixpoint(const Sbaf& sb, std::uint64_t seed, const EnumerationLimits& limits) {
  Outcome out;
  for (std::uint64_t k = 0; k < 8; ++k) {
    const SentSet s = random_compatible(sb, seed + k);
    ++out.checked;
    const ArgSet iterative = arg_w(s, sb).fixpoint;
    const ArgSet oracle = oracle_arg_w(s, sb, limits);
    if (iterative != oracle) {
      out.violation = "S=" + braces(sb, s) + ": iteration gives " + braces(sb, iterative) + ", least fixpoint is " +
                      braces(sb, oracle);
      return out;
    }
  }
  return out;
}

Outcome weak_set_admissible(const Sbaf& sb, std::uint64_t, const EnumerationLimits& limits) {
  Outcome out;
  for (const auto& s : compatible_sets(sb, limits)) {
    ++out.checked;
    const FixpointTrace trace = arg_w(s, sb);
    if (!is_admissible(trace.fixpoint, sb)) {
      out.violation = "weak argument set of " + braces(sb, s) + " is not admissible";
      return out;
    }
    for (std::size_t k = 0; k < trace.iterates.size(); ++k) {
      if (!is_admissible(trace.iterates[k], sb)) {
        out.violation = "iterate " + std::to_string(k) + " for " + braces(sb, s) + " is not admissible";
        return out;
      }
      if (k && !trace.iterates[k - 1].is_subset_of(trace.iterates[k])) {
        out.violation = "iterates for " + braces(sb, s) + " shrink at step " + std::to_string(k);
        return out;
      }
    }
  }
  return out;
}

Outcome strong_adequate_implies_weak(const Sbaf& sb, std::uint64_t, const EnumerationLimits& limits) {
  const auto strong = enumerate_adequate(Strength::strong, sb, limits);
  const auto weak = enumerate_adequate(Strength::weak, sb, limits);
  for (const auto& s : strong)
    if (std::find(weak.begin(), weak.end(), s) == weak.end())
      return {strong.size(), "strongly adequate " + braces(sb, s) + " is not weakly adequate"};
  return {strong.size(), std::nullopt};
}

Outcome correspondence(const Sbaf& sb, Strength strength, const EnumerationLimits& limits) {
  const char* kind = strength == Strength::strong ? "strongly" : "weakly";
  Outcome out;
  for (const auto& s : enumerate_adequate(strength, sb, limits)) {
    ++out.checked;
    const ArgSet e = argument_set(s, sb, strength);
    if (!is_coherent(e, sb, strength)) {
      out.violation = std::string(kind) + " adequate " + braces(sb, s) + " induces " + braces(sb, e) +
                      ", which is not " + kind + " coherent";
      return out;
    }
  }
  for (const auto& e : enumerate_coherent(strength, sb, limits)) {
    ++out.checked;
    const SentSet s = sb.sent(e);
    if (!is_adequate(s, sb, strength)) {
      out.violation = std::string(kind) + " coherent " + braces(sb, e) + " has sentences " + braces(sb, s) +
                      ", which are not " + kind + " adequate";
      return out;
    }
  }
  return out;
}

Outcome strong_correspondence(const Sbaf& raw, std::uint64_t, const EnumerationLimits& limits) {
  return correspondence(strongly_saturate(raw), Strength::strong, limits);
}

Outcome weak_correspondence(const Sbaf& raw, std::uint64_t, const EnumerationLimits& limits) {
  return correspondence(strongly_saturate(raw), Strength::weak, limits);
}

Outcome confident_correspondence(const Sbaf& raw, std::uint64_t seed, const EnumerationLimits& limits) {
  const Sbaf sb = saturate_randomly(raw, seed);
  Outcome out;
  for (Strength strength : {Strength::strong, Strength::weak}) {
    const char* kind = strength == Strength::strong ? "strongly" : "weakly";
    for (const auto& s : confident_adequate(strength, sb, limits)) {
      ++out.checked;
      const ArgSet e = argument_set(s, sb, strength);
      if (!is_coherent(e, sb, strength)) {
        out.violation = std::string("confident ") + kind + " adequate " + braces(sb, s) + " induces " +
                        braces(sb, e) + ", which is not " + kind + " coherent";
        return out;
      }
    }
  }
  return out;
}

Outcome preferred_are_confident(const Sbaf& raw, std::uint64_t seed, const EnumerationLimits& limits) {
  const Sbaf sb = saturate_randomly(raw, seed);
  const auto confident = confident_coherent(Strength::weak, sb, limits);
  const auto preferred = enumerate(Semantics::preferred, sb, limits);
  for (const auto& e : preferred)
    if (!contains(confident, e))
      return {preferred.size(), "preferred " + braces(sb, e) + " is not confident weakly coherent"};
  return {preferred.size(), std::nullopt};
}

Outcome confident_are_preferred(const Sbaf& raw, std::uint64_t, const EnumerationLimits& limits) {
  const Sbaf sb = strongly_saturate(raw);
  const auto confident = confident_coherent(Strength::weak, sb, limits);
  const auto preferred = enumerate(Semantics::preferred, sb, limits);
  for (const auto& e : confident)
    if (!contains(preferred, e))
      return {confident.size(), "confident weakly coherent " + braces(sb, e) + " is not preferred"};
  return {confident.size(), std::nullopt};
}

Outcome deductive_forward(const Sbaf& sb, std::uint64_t, const EnumerationLimits& limits) {
  const Baf baf = baf_from_sbaf(sb, SupportRule::conclusion);
  const auto coherent = enumerate_coherent(Strength::strong, sb, limits);
  for (const auto& e : coherent)
    if (!is_d_admissible(e, baf)) return {coherent.size(), "strongly coherent " + braces(sb, e) + " is not d-admissible"};
  return {coherent.size(), std::nullopt};
}

Outcome deductive_converse(const Sbaf& sb, std::uint64_t, const EnumerationLimits& limits) {
  if (binary_support(sb, SupportRule::conclusion) != binary_support(sb, SupportRule::singleton))
    return {0, "conclusion and singleton support rules disagree"};
  const Baf baf = baf_from_sbaf(sb, SupportRule::conclusion);
  const auto d_admissible = enumerate_deductive(Semantics::d_admissible, baf, limits);
  for (const auto& e : d_admissible)
    if (!is_strongly_coherent(e, sb))
      return {d_admissible.size(), "d-admissible " + braces(sb, e) + " is not strongly coherent"};
  return {d_admissible.size(), std::nullopt};
}

Outcome oracle_weak_set(const Sbaf& sb, std::uint64_t seed, const EnumerationLimits& limits) {
  const SentSet s = random_compatible(sb, seed);
  const ArgSet iterative = arg_w(s, sb).fixpoint;
  const ArgSet oracle = oracle_arg_w(s, sb, limits);
  if (iterative != oracle)
    return {1, "S=" + braces(sb, s) + ": iteration gives " + braces(sb, iterative) + ", oracle gives " +
                   braces(sb, oracle)};
  return {1, std::nullopt};
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = {
      {"strong-implies-weak-coherence", "every strongly coherent extension is weakly coherent", gen_default,
       strong_implies_weak},
      {"complete-weak-maximal-preferred",
       "complete extensions are weakly coherent; maximal weakly coherent extensions are exactly the preferred ones",
       gen_default, complete_weak_maximal},
      {"weak-coherence-directionality",
       "weakly coherent extensions of an unaffected restriction are the projections of the full ones", gen_default,
       weak_directionality},
      {"weak-set-least-fixpoint", "iterating from Init(S) reaches the least fixpoint above Init(S)", gen_default,
       least_fixpoint},
      {"weak-set-admissible", "the weak argument set and every iterate towards it are admissible", gen_default,
       weak_set_admissible},
      {"strong-adequate-implies-weak", "every strongly adequate language extension is weakly adequate", gen_default,
       strong_adequate_implies_weak},
      {"strong-correspondence",
       "strongly saturated: Arg_s of strongly adequate S is strongly coherent, Sent of strongly coherent E is "
       "strongly adequate",
       gen_default, strong_correspondence},
      {"weak-correspondence",
       "strongly saturated: Arg_w of weakly adequate S is weakly coherent, Sent of weakly coherent E is weakly "
       "adequate",
       gen_default, weak_correspondence},
      {"confident-correspondence", "saturated: argument sets of confident adequate S are coherent (both readings)",
       gen_default, confident_correspondence},
      {"preferred-are-confident-weak", "saturated: every preferred extension is confident weakly coherent",
       gen_default, preferred_are_confident},
      {"confident-weak-are-preferred", "strongly saturated: every confident weakly coherent extension is preferred",
       gen_default, confident_are_preferred},
      {"deductive-forward",
       "single premise, no undercuts: strongly coherent extensions are d-admissible under the conclusion rule",
       [](const GenConfig& c) { return gen_single_premise(c, false); }, deductive_forward},
      {"deductive-converse",
       "single unique premise, no undercuts: d-admissible extensions are strongly coherent and both support rules "
       "agree",
       [](const GenConfig& c) { return gen_single_premise(c, true); }, deductive_converse},
      {"oracle-weak-set", "iterative weak argument set equals the exhaustive least-fixpoint oracle", gen_default,
       oracle_weak_set},
  };
  return all;
}

const std::string kDeductivePreferred = "oracle-d-preferred";

std::uint64_t id_hash(std::string_view id) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : id) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t trial_seed(const SuiteConfig& config, std::string_view id, std::size_t k) {
  return mix_seed(mix_seed(config.seed) ^ id_hash(id)) + k;
}

template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& body) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t k = 0; k < n; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < n; k = next++) {
        try {
          body(k);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

struct TrialResult {
  std::size_t checked = 0;
  std::optional<Violation> violation;
};

PropositionReport run_entry(const Entry& entry, const SuiteConfig& config) {
  std::vector<TrialResult> results(config.trials);
  parallel_for(config.trials, config.threads, [&](std::size_t k) {
    const std::uint64_t seed = trial_seed(config, entry.id, k);
    GenConfig gen = config.gen;
    gen.seed = seed;
    const Sbaf sb = entry.generate(gen);
    Outcome outcome = entry.check(sb, seed, config.limits);
    results[k].checked = outcome.checked;
    if (!outcome.violation) return;
    Sbaf witness = sb;
    std::string message = *outcome.violation;
    if (config.shrink) {
      auto violates = [&](const Sbaf& candidate) { return entry.check(candidate, seed, config.limits).violation; };
      witness = shrink(sb, violates);
      message = violates(witness).value_or(message);
    }
    results[k].violation = Violation{seed, message, io::emit_framework(witness)};
  });
  PropositionReport report{entry.id, config.trials, 0, {}};
  for (auto& r : results) {
    report.checked += r.checked;
    if (r.violation) report.violations.push_back(std::move(*r.violation));
  }
  return report;
}

std::string baf_text(const Baf& baf) {
  std::string out;
  for (const auto& [a, b] : baf.attacks().edges()) out += "att " + baf.id(a) + " " + baf.id(b) + "\n";
  for (const auto& [a, b] : baf.supports().edges()) out += "sup " + baf.id(a) + " " + baf.id(b) + "\n";
  return out;
}

PropositionReport run_deductive_preferred(const SuiteConfig& config) {
  std::vector<TrialResult> results(config.trials);
  parallel_for(config.trials, config.threads, [&](std::size_t k) {
    const std::uint64_t seed = trial_seed(config, kDeductivePreferred, k);
    BafConfig gen;
    gen.seed = seed;
    gen.max_arguments = config.gen.max_arguments;
    gen.min_arguments = std::min(config.gen.min_arguments, gen.max_arguments);
    const Baf baf = gen_baf(gen);
    const auto d_preferred = enumerate_deductive(Semantics::d_preferred, baf, config.limits);
    const auto preferred = enumerate(Semantics::preferred, baf.complex(), config.limits);
    results[k].checked = d_preferred.size();
    if (d_preferred != preferred)
      results[k].violation = Violation{seed, "d-preferred differs from preferred over complex attacks", baf_text(baf)};
  });
  PropositionReport report{kDeductivePreferred, config.trials, 0, {}};
  for (auto& r : results) {
    report.checked += r.checked;
    if (r.violation) report.violations.push_back(std::move(*r.violation));
  }
  return report;
}

Sbaf prune_sentences(const Sbaf& sb) {
  SentSet keep = sb.sentence_universe();
  for (ArgumentIndex a = 0; a < sb.size(); ++a)
    if (auto n = sb.name(a)) keep.insert(*n);
  const Language& old = sb.language();
  Language lang;
  keep.for_each([&](std::size_t s) { lang.add_sentence(old.sentence(s)); });
  keep.for_each([&](std::size_t s) {
    for (auto t : old.incompatible_with(s))
      if (t >= s && keep.contains(t)) lang.add_incompatibility(old.sentence(s), old.sentence(t));
  });
  for (ArgumentIndex a = 0; a < sb.size(); ++a)
    if (auto n = sb.name(a)) lang.set_name(sb.id(a), old.sentence(*n));
  return Sbaf(std::move(lang), sb.arguments());
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& e : entries()) v.push_back(e.id);
    v.push_back(kDeductivePreferred);
    return v;
  }();
  return ids;
}

std::string_view describe(std::string_view id) {
  for (const auto& e : entries())
    if (e.id == id) return e.description;
  if (id == kDeductivePreferred) return "maximal d-admissible sets equal the preferred sets over complex attacks";
  throw LookupError("unknown check '" + std::string(id) + "'");
}

std::vector<PropositionReport> run_suite(const std::vector<std::string>& ids, const SuiteConfig& config) {
  validate(config.gen);
  for (const auto& id : ids) describe(id);
  std::vector<PropositionReport> out;
  for (const auto& id : ids) {
    if (id == kDeductivePreferred) {
      out.push_back(run_deductive_preferred(config));
      continue;
    }
    for (const auto& e : entries())
      if (e.id == id) out.push_back(run_entry(e, config));
  }
  return out;
}

nlohmann::json to_json(const std::vector<PropositionReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : r.violations)
      violations.push_back({{"seed", v.seed}, {"message", v.message}, {"witness", v.witness}});
    arr.push_back({{"id", r.id},
                   {"description", std::string(describe(r.id))},
                   {"trials", r.trials},
                   {"checked", r.checked},
                   {"passed", r.passed()},
                   {"violations", violations}});
  }
  return {{"reports", arr}};
}

Sbaf shrink(const Sbaf& sb, const std::function<std::optional<std::string>(const Sbaf&)>& violates) {
  Sbaf current = sb;
  for (bool progress = true; progress;) {
    progress = false;
    for (ArgumentIndex a = 0; a < current.size(); ++a) {
      ArgSet keep = current.all_arguments();
      keep.erase(a);
      Sbaf candidate = restrict(current, keep);
      if (violates(candidate)) {
        current = std::move(candidate);
        progress = true;
        break;
      }
    }
  }
  Sbaf pruned = prune_sentences(current);
  if (!pruned.language().empty() && violates(pruned)) return pruned;
  return current;
}

std::optional<ArgSet> directionality_counterexample(const Sbaf& sb, Semantics semantics,
                                                    const EnumerationLimits& limits) {
  require_argument_cap(sb.size(), limits);
  std::vector<ArgSet> candidates;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << sb.size()); ++mask) {
    ArgSet u = sb.no_arguments();
    for (ArgumentIndex a = 0; a < sb.size(); ++a)
      if (mask >> a & 1U) u.insert(a);
    candidates.push_back(std::move(u));
  }
  canonicalize(candidates);
  for (const auto& u : candidates) {
    if (directionality_obstacle(sb, u)) continue;
    if (!check_directionality(sb, u, semantics, limits)) return u;
  }
  return std::nullopt;
}

}  // namespace sbaf::verify
