#include "sbaf/verify/oracle.hpp"

#include <vector>

#include "sbaf/dung.hpp"
#include "sbaf/errors.hpp"
#include "sbaf/language_semantics.hpp"

namespace sbaf::verify {

ArgSet oracle_arg_w(const SentSet& s, const Sbaf& sb, const EnumerationLimits& limits) {
  const ArgSet base = init(s, sb);
  const std::vector<std::size_t> free = (sb.all_arguments() - base).indices();
  require_argument_cap(free.size(), limits);

  std::vector<ArgSet> fixpoints;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    ArgSet e = base;
    for (std::size_t k = 0; k < free.size(); ++k)
      if (mask >> k & 1U) e.insert(free[k]);
    if (characteristic(s, e, sb) == e) fixpoints.push_back(std::move(e));
  }
  for (const auto& candidate : fixpoints) {
    bool least = true;
    for (const auto& other : fixpoints)
      if (!candidate.is_subset_of(other)) {
        least = false;
        break;
      }
    if (least) return candidate;
  }
  throw PreconditionError("no least fixpoint above Init(S)");
}

}  // namespace sbaf::verify
