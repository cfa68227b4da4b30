#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sbaf/framework.hpp"
#include "sbaf/semantics.hpp"
#include "sbaf/verify/generator.hpp"

// Randomised checks of the semantic correspondences. Each check generates
// frameworks already shaped to its hypotheses (saturation, single premises,
// ...) and tests the implication on every qualifying extension.
namespace sbaf::verify {

struct Violation {
  std::uint64_t seed = 0;
  std::string message;
  /// Framework text after greedy shrinking, still violating.
  std::string witness;
};

struct PropositionReport {
  std::string id;
  std::size_t trials = 0;
  /// Extensions, language extensions or pairs actually tested.
  std::size_t checked = 0;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
};

struct SuiteConfig {
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  GenConfig gen;
  /// Saturation can more than double the argument count.
  EnumerationLimits limits{24, 24};
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
  bool shrink = true;
};

/// Every check id, in run order.
const std::vector<std::string>& suite_ids();
/// One-line statement of what a check asserts. Throws LookupError.
std::string_view describe(std::string_view id);

/// Reports in the order of `ids`; violations within a report in trial order.
/// Throws LookupError for unknown ids.
std::vector<PropositionReport> run_suite(const std::vector<std::string>& ids, const SuiteConfig& config);

nlohmann::json to_json(const std::vector<PropositionReport>& reports);

/// Greedily removes arguments, then unused sentences, while `violates` keeps
/// returning a message.
Sbaf shrink(const Sbaf& sb, const std::function<std::optional<std::string>(const Sbaf&)>& violates);

/// First U (in canonical order) unaffected by the rest of the framework for
/// which the semantics fails directionality, if any.
std::optional<ArgSet> directionality_counterexample(const Sbaf& sb, Semantics semantics,
                                                    const EnumerationLimits& limits = {});

}  // namespace sbaf::verify
