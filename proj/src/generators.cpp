#include <pbf/generators.hpp>

#include <pbf/rng.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace pbf {

RandomDistribution parse_distribution(std::string_view name) {
  if (name == "uniform") return RandomDistribution::uniform;
  if (name == "boolean") return RandomDistribution::boolean;
  if (name == "monotone") return RandomDistribution::monotone;
  throw DomainError("unknown distribution '" + std::string(name) +
                    "' (expected uniform, boolean or monotone)");
}

std::string_view to_string(RandomDistribution d) {
  switch (d) {
    case RandomDistribution::uniform:
      return "uniform";
    case RandomDistribution::boolean:
      return "boolean";
    case RandomDistribution::monotone:
      return "monotone";
  }
  return "uniform";
}

PseudoBooleanFunction random_game(int n, std::uint64_t seed, RandomDistribution distribution) {
  check_player_count(n);
  Rng rng(seed);
  std::vector<double> values(table_size(n));
  for (double& v : values) {
    switch (distribution) {
      case RandomDistribution::uniform:
        v = 2.0 * rng.uniform() - 1.0;
        break;
      case RandomDistribution::boolean:
        v = rng.uniform() < 0.5 ? 0.0 : 1.0;
        break;
      case RandomDistribution::monotone:
        v = rng.uniform();
        break;
    }
  }
  PseudoBooleanFunction f(n, std::move(values));
  return distribution == RandomDistribution::monotone ? monotone_closure(f) : f;
}

PseudoBooleanFunction weighted_voting_game(double quota, std::span<const double> weights) {
  const int n = static_cast<int>(weights.size());
  check_player_count(n);
  if (!std::isfinite(quota)) throw ValidationError("quota is not finite");
  for (double w : weights) {
    if (!std::isfinite(w)) throw ValidationError("voting weight is not finite");
  }
  std::vector<double> values(table_size(n));
  for (mask_t m = 0; m < values.size(); ++m) {
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      if (m >> i & 1u) total += weights[static_cast<std::size_t>(i)];
    }
    values[m] = total >= quota ? 1.0 : 0.0;
  }
  return PseudoBooleanFunction(n, std::move(values));
}

PseudoBooleanFunction monotone_closure(const PseudoBooleanFunction& f) {
  std::vector<double> v(f.values().begin(), f.values().end());
  for (int i = 0; i < f.players(); ++i) {
    const mask_t bit = mask_t{1} << i;
    for (mask_t m = 0; m < v.size(); ++m) {
      if (m & bit) v[m] = std::max(v[m], v[m ^ bit]);
    }
  }
  return PseudoBooleanFunction(f.players(), std::move(v));
}

}  // namespace pbf
