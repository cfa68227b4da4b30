#pragma once

#include <vector>

#include "sbaf/framework.hpp"
#include "sbaf/semantics.hpp"

namespace sbaf {

/// Record of the iteration from Init(S) up to the weak argument set.
struct FixpointTrace {
  ArgSet init;
  /// R^S applied 0, 1, 2, ... times to init; first entry is init, last is
  /// the fixpoint.
  std::vector<ArgSet> iterates;
  ArgSet fixpoint;
};

/// Throws DomainError unless S is within Sent(A).
void require_language_extension(const SentSet& s, const Sbaf& sb);

/// No two members (possibly the same sentence twice) are incompatible.
bool is_compatible(const SentSet& s, const Sbaf& sb);

/// Strong argument set: premises inside S and no undercutting sentence in S.
ArgSet arg_s(const SentSet& s, const Sbaf& sb);

/// R^S(E): members of Arg_s(S) that E defends.
ArgSet characteristic(const SentSet& s, const ArgSet& e, const Sbaf& sb);

/// Arguments whose sentences all lie in S and that S does not undercut.
ArgSet init_candidates(const SentSet& s, const Sbaf& sb);

/// Largest admissible subset of init_candidates(S). The candidate set is
/// conflict-free for compatible S, so this shrinks it by repeatedly dropping
/// undefended members. Throws PreconditionError for incompatible S.
ArgSet init(const SentSet& s, const Sbaf& sb);

/// Weak argument set as the limit of R^S iterated from Init(S).
/// Throws PreconditionError for incompatible S.
FixpointTrace arg_w(const SentSet& s, const Sbaf& sb);

/// Arg_s(S) for the strong reading, Arg_w(S) for the weak one.
ArgSet argument_set(const SentSet& s, const Sbaf& sb, Strength strength);

bool is_adequate(const SentSet& s, const Sbaf& sb, Strength strength);
inline bool is_strongly_adequate(const SentSet& s, const Sbaf& sb) { return is_adequate(s, sb, Strength::strong); }
inline bool is_weakly_adequate(const SentSet& s, const Sbaf& sb) { return is_adequate(s, sb, Strength::weak); }

/// Throws CapExceeded when |Sent(A)| exceeds the sentence cap.
void require_sentence_cap(const Sbaf& sb, const EnumerationLimits& limits);

/// All adequate language extensions, canonical order.
std::vector<SentSet> enumerate_adequate(Strength strength, const Sbaf& sb, const EnumerationLimits& limits = {});

/// Subset-maximal adequate language extensions.
std::vector<SentSet> confident_adequate(Strength strength, const Sbaf& sb, const EnumerationLimits& limits = {});

/// Coherent extensions induced by confident adequate language extensions,
/// deduplicated.
std::vector<ArgSet> confident_coherent(Strength strength, const Sbaf& sb, const EnumerationLimits& limits = {});

}  // namespace sbaf
