#pragma once

#include <pbf/core.hpp>

#include <cstdint>
#include <span>
#include <string_view>

namespace pbf {

enum class RandomDistribution {
  uniform,   ///< values uniform on [-1, 1]
  boolean,   ///< values 0 or 1 with equal probability
  monotone,  ///< uniform [0,1] table closed under cumulative max
};

/// Parses "uniform", "boolean" or "monotone"; DomainError otherwise.
RandomDistribution parse_distribution(std::string_view name);
std::string_view to_string(RandomDistribution d);

/// Deterministic per (n, seed, distribution).
PseudoBooleanFunction random_game(int n, std::uint64_t seed,
                                  RandomDistribution distribution = RandomDistribution::uniform);

/// f(T) = 1 iff sum_{i in T} weights_i >= quota.
PseudoBooleanFunction weighted_voting_game(double quota, std::span<const double> weights);

/// Smallest nondecreasing function above f: g(T) = max_{R subset T} f(R).
PseudoBooleanFunction monotone_closure(const PseudoBooleanFunction& f);

}  // namespace pbf
