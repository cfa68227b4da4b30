#include "sbaf/language_semantics.hpp"

#include "sbaf/coherence.hpp"
#include "sbaf/dung.hpp"
#include "sbaf/errors.hpp"
#include "sbaf/set_family.hpp"

namespace sbaf {

void require_language_extension(const SentSet& s, const Sbaf& sb) {
  if (s.universe() != sb.sentence_count()) throw DomainError("sentence set built for a different language");
  if (!s.is_subset_of(sb.sentence_universe())) {
    const SentSet stray = s - sb.sentence_universe();
    throw DomainError("sentence '" + sb.language().sentence(stray.next(0)) +
                      "' does not occur in any argument");
  }
}

bool is_compatible(const SentSet& s, const Sbaf& sb) {
  require_language_extension(s, sb);
  bool ok = true;
  s.for_each([&](std::size_t t) {
    if (ok && sb.incompatible_with(t).intersects(s)) ok = false;
  });
  return ok;
}

ArgSet arg_s(const SentSet& s, const Sbaf& sb) {
  require_language_extension(s, sb);
  ArgSet out = sb.no_arguments();
  for (ArgumentIndex a = 0; a < sb.size(); ++a)
    if (sb.premises(a).is_subset_of(s) && !sb.undercut_info(s, a)) out.insert(a);
  return out;
}

ArgSet characteristic(const SentSet& s, const ArgSet& e, const Sbaf& sb) {
  ArgSet out = arg_s(s, sb);
  out.for_each([&](std::size_t a) {
    if (!defends(e, a, sb)) out.erase(a);
  });
  return out;
}

ArgSet init_candidates(const SentSet& s, const Sbaf& sb) {
  require_language_extension(s, sb);
  ArgSet out = sb.no_arguments();
  for (ArgumentIndex a = 0; a < sb.size(); ++a)
    if (sb.sentences(a).is_subset_of(s) && !sb.undercut_info(s, a)) out.insert(a);
  return out;
}

namespace {

void require_compatible(const SentSet& s, const Sbaf& sb) {
  if (!is_compatible(s, sb)) throw PreconditionError("language extension is not compatible");
}

}  // namespace

ArgSet init(const SentSet& s, const Sbaf& sb) {
  require_compatible(s, sb);
  ArgSet current = init_candidates(s, sb);
  while (true) {
    ArgSet kept = current;
    current.for_each([&](std::size_t a) {
      if (!defends(current, a, sb)) kept.erase(a);
    });
    if (kept == current) return current;
    current = std::move(kept);
  }
}

FixpointTrace arg_w(const SentSet& s, const Sbaf& sb) {
  FixpointTrace trace;
  trace.init = init(s, sb);
  trace.iterates.push_back(trace.init);
  while (true) {
    ArgSet next = characteristic(s, trace.iterates.back(), sb);
    if (next == trace.iterates.back()) break;
    trace.iterates.push_back(std::move(next));
  }
  trace.fixpoint = trace.iterates.back();
  return trace;
}

ArgSet argument_set(const SentSet& s, const Sbaf& sb, Strength strength) {
  return strength == Strength::strong ? arg_s(s, sb) : arg_w(s, sb).fixpoint;
}

bool is_adequate(const SentSet& s, const Sbaf& sb, Strength strength) {
  if (!is_compatible(s, sb)) return false;
  const ArgSet args = argument_set(s, sb, strength);
  if (strength == Strength::strong) {
    bool defended = true;
    args.for_each([&](std::size_t a) {
      if (defended && !defends(args, a, sb)) defended = false;
    });
    if (!defended) return false;
  }
  return sb.sent(args).is_subset_of(s);
}

void require_sentence_cap(const Sbaf& sb, const EnumerationLimits& limits) {
  const std::size_t n = sb.sentence_universe().count();
  if (n > limits.max_sentences) throw CapExceeded("sentence", n, limits.max_sentences, "--max-sents");
}

std::vector<SentSet> enumerate_adequate(Strength strength, const Sbaf& sb, const EnumerationLimits& limits) {
  require_sentence_cap(sb, limits);
  const std::vector<std::size_t> order = sb.sentence_universe().indices();
  std::vector<SentSet> out;
  SentSet current = sb.no_sentences();
  // compatible subsets only; adding an incompatible sentence can never be undone
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == order.size()) {
      if (is_adequate(current, sb, strength)) out.push_back(current);
      return;
    }
    const std::size_t s = order[pos];
    self(self, pos + 1);
    if (!sb.incompatible_with(s).intersects(current) && !sb.incompatible_with(s).contains(s)) {
      current.insert(s);
      self(self, pos + 1);
      current.erase(s);
    }
  };
  rec(rec, 0);
  canonicalize(out);
  return out;
}

std::vector<SentSet> confident_adequate(Strength strength, const Sbaf& sb, const EnumerationLimits& limits) {
  return maximal_elements(enumerate_adequate(strength, sb, limits));
}

std::vector<ArgSet> confident_coherent(Strength strength, const Sbaf& sb, const EnumerationLimits& limits) {
  std::vector<ArgSet> out;
  for (const auto& s : confident_adequate(strength, sb, limits)) {
    ArgSet e = argument_set(s, sb, strength);
    if (is_coherent(e, sb, strength)) out.push_back(std::move(e));
  }
  canonicalize(out);
  return out;
}

}  // namespace sbaf
