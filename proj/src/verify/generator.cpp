#include "sbaf/verify/generator.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "sbaf/errors.hpp"
#include "sbaf/saturation.hpp"

namespace sbaf::verify {

namespace {

// Distribution helpers built on raw engine output so that results do not
// depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix_seed(seed)) {}

  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(engine_() % n); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

  std::size_t weighted(const std::array<double, 3>& w) {
    const double total = w[0] + w[1] + w[2];
    double x = unit() * total;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (x < w[k]) return k;
      x -= w[k];
    }
    return w.size() - 1;
  }

  /// k distinct values from [0, n), ascending.
  std::vector<std::size_t> sample(std::size_t n, std::size_t k) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    for (std::size_t i = 0; i < k && i < n; ++i) std::swap(all[i], all[i + below(n - i)]);
    all.resize(std::min(k, n));
    std::sort(all.begin(), all.end());
    return all;
  }

 private:
  std::mt19937_64 engine_;
};

std::string pool_sentence(std::size_t k) { return "s" + std::to_string(k + 1); }
std::string argument_id(std::size_t k) { return "a" + std::to_string(k + 1); }

Language pool_language(const GenConfig& config, Rng& rng) {
  Language lang;
  for (std::size_t k = 0; k < config.sentence_pool; ++k) lang.add_sentence(pool_sentence(k));
  for (std::size_t i = 0; i < config.sentence_pool; ++i)
    for (std::size_t j = i + 1; j < config.sentence_pool; ++j)
      if (rng.chance(config.incompatibility_density)) lang.add_incompatibility(pool_sentence(i), pool_sentence(j));
  return lang;
}

bool probability(double p) { return p >= 0.0 && p <= 1.0; }

}  // namespace

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void validate(const GenConfig& config) {
  if (config.sentence_pool == 0) throw ConfigError("generator needs at least one sentence");
  if (config.min_arguments > config.max_arguments) throw ConfigError("min_arguments exceeds max_arguments");
  if (!probability(config.incompatibility_density) || !probability(config.naming_probability) ||
      !probability(config.minimal_probability))
    throw ConfigError("generator probabilities must lie in [0, 1]");
  for (double w : config.premise_weights)
    if (w < 0.0) throw ConfigError("premise weights must be non-negative");
  if (config.premise_weights[0] + config.premise_weights[1] + config.premise_weights[2] <= 0.0)
    throw ConfigError("premise weights must not all be zero");
}

Sbaf gen_sbaf(const GenConfig& config) {
  validate(config);
  Rng rng(config.seed);
  Language lang = pool_language(config, rng);
  const std::size_t n = rng.between(config.min_arguments, config.max_arguments);
  std::vector<Argument> args;
  for (std::size_t k = 0; k < n; ++k) {
    Argument arg{argument_id(k), {}, {}};
    if (rng.chance(config.minimal_probability)) {
      const std::string s = pool_sentence(rng.below(config.sentence_pool));
      arg.premises = {s};
      arg.conclusion = s;
    } else {
      const std::size_t size = std::min(rng.weighted(config.premise_weights) + 1, config.sentence_pool);
      for (std::size_t p : rng.sample(config.sentence_pool, size)) arg.premises.push_back(pool_sentence(p));
      arg.conclusion = pool_sentence(rng.below(config.sentence_pool));
      const bool minimal = arg.premises.size() == 1 && arg.premises.front() == arg.conclusion;
      if (!minimal && rng.chance(config.naming_probability)) {
        const std::string name = "n_" + arg.id;
        lang.add_sentence(name);
        lang.add_incompatibility(name, pool_sentence(rng.below(config.sentence_pool)));
        lang.set_name(arg.id, name);
      }
    }
    args.push_back(std::move(arg));
  }
  return Sbaf(std::move(lang), std::move(args));
}

Sbaf gen_single_premise(const GenConfig& config, bool unique_premises) {
  validate(config);
  Rng rng(config.seed);
  Language lang = pool_language(config, rng);
  std::size_t n = rng.between(config.min_arguments, config.max_arguments);
  if (unique_premises) n = std::min(n, config.sentence_pool);
  const std::vector<std::size_t> premises =
      unique_premises ? rng.sample(config.sentence_pool, n) : std::vector<std::size_t>{};
  std::vector<std::size_t> order(premises.size());
  std::iota(order.begin(), order.end(), 0);
  // sample() is sorted; shuffle so premise order does not follow argument order
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  std::vector<Argument> args;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t p = unique_premises ? premises[order[k]] : rng.below(config.sentence_pool);
    const std::size_t c = rng.chance(config.minimal_probability) ? p : rng.below(config.sentence_pool);
    args.push_back({argument_id(k), {pool_sentence(p)}, pool_sentence(c)});
  }
  return Sbaf(std::move(lang), std::move(args));
}

Sbaf saturate_randomly(const Sbaf& sb, std::uint64_t seed) {
  Rng rng(seed);
  SentSet have = minimally_argued(sb);
  SentSet needed = undercutting_sentences(sb) - have;
  have |= needed;
  const SentSet& scope = sb.sentence_universe();
  scope.for_each([&](std::size_t s) {
    (sb.incompatible_with(s) & scope).for_each([&](std::size_t t) {
      if (t < s) return;
      if (have.contains(s) || have.contains(t)) return;
      const std::size_t pick = rng.chance(0.5) ? s : t;
      needed.insert(pick);
      have.insert(pick);
    });
  });
  return add_minimal_arguments(sb, needed);
}

Baf gen_baf(const BafConfig& config) {
  if (config.min_arguments > config.max_arguments) throw ConfigError("min_arguments exceeds max_arguments");
  if (!probability(config.attack_density) || !probability(config.support_density))
    throw ConfigError("densities must lie in [0, 1]");
  Rng rng(config.seed);
  const std::size_t n = rng.between(config.min_arguments, config.max_arguments);
  std::vector<std::string> ids;
  for (std::size_t k = 0; k < n; ++k) ids.push_back(argument_id(k));
  Relation attacks(n), supports(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (rng.chance(config.attack_density)) attacks.add_attack(a, b);
      if (a != b && rng.chance(config.support_density)) supports.add_attack(a, b);
    }
  return Baf(std::move(ids), std::move(attacks), std::move(supports));
}

}  // namespace sbaf::verify
