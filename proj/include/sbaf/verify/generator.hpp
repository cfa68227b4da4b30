#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "sbaf/deductive.hpp"
#include "sbaf/framework.hpp"

// Seeded random frameworks. Identical config and seed give identical output.
namespace sbaf::verify {

struct GenConfig {
  std::size_t min_arguments = 1;
  std::size_t max_arguments = 8;
  /// Sentences s1..sN available to arguments.
  std::size_t sentence_pool = 10;
  /// Relative weights of 1, 2 and 3 premises.
  std::array<double, 3> premise_weights{0.6, 0.3, 0.1};
  /// Chance that a pair of pool sentences is incompatible.
  double incompatibility_density = 0.2;
  /// Chance that a non-minimal argument gets a name with one undercutting sentence.
  double naming_probability = 0.15;
  /// Chance that an argument is minimal, <{s}, s>.
  double minimal_probability = 0.2;
  std::uint64_t seed = 1;
};

/// Throws ConfigError for an empty sentence pool, an empty argument range or
/// probabilities outside [0, 1].
void validate(const GenConfig& config);

Sbaf gen_sbaf(const GenConfig& config);

/// Every argument has one premise and no argument is named, so nothing in
/// Sent(A) undercuts. With `unique_premises` no two arguments share a premise;
/// the argument count is then capped by the pool size.
Sbaf gen_single_premise(const GenConfig& config, bool unique_premises);

/// Saturated (at least one side of each pair, every undercutting sentence)
/// by adding minimal arguments, choosing a side at random when neither has one.
Sbaf saturate_randomly(const Sbaf& sb, std::uint64_t seed);

struct BafConfig {
  std::size_t min_arguments = 1;
  std::size_t max_arguments = 8;
  double attack_density = 0.2;
  double support_density = 0.15;
  std::uint64_t seed = 1;
};

Baf gen_baf(const BafConfig& config);

/// splitmix64 finaliser, used to derive independent trial seeds.
std::uint64_t mix_seed(std::uint64_t x);

}  // namespace sbaf::verify
