#pragma once

#include <string>

#include "sbaf/framework.hpp"

namespace sbaf {

/// Sentences that have a minimal argument <{s}, s> in the framework.
SentSet minimally_argued(const Sbaf& sb);

/// Sentences of Sent(A) incompatible with some other sentence of Sent(A).
SentSet conflicting_sentences(const Sbaf& sb);

/// Sentences of Sent(A) that undercut some argument.
SentSet undercutting_sentences(const Sbaf& sb);

/// Every in-scope incompatible pair has a minimal argument on at least one
/// side, and every undercutting sentence has one.
bool is_saturated(const Sbaf& sb);

/// As is_saturated, with minimal arguments on both sides of each pair.
bool is_strongly_saturated(const Sbaf& sb);

/// Identifier not used by any argument or name entry: "m_<sentence>", then
/// "m_<sentence>_2", ...
std::string fresh_minimal_id(const Sbaf& sb, SentenceIndex s);

/// Appends an unnamed minimal argument for every sentence in `needed`
/// lacking one. Sentences keep their order.
Sbaf add_minimal_arguments(const Sbaf& sb, const SentSet& needed);

/// Saturated, not necessarily strongly: for a pair with no minimal argument on
/// either side, the sentence declared first gets one. Undercutting sentences
/// always get one.
Sbaf saturate(const Sbaf& sb);

/// Canonical closure: minimal arguments for both sides of every in-scope
/// incompatibility and for every undercutting sentence. Idempotent.
Sbaf strongly_saturate(const Sbaf& sb);

}  // namespace sbaf
