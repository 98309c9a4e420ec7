#pragma once

// Independent verifiers: brute-force least squares, Monte Carlo sampling of
// random coalitions, and quadrature. Nothing here routes through the
// projection or index code it is meant to check.

#include <pbf/approx.hpp>
#include <pbf/core.hpp>
#include <pbf/measure.hpp>
#include <pbf/rng.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace pbf::oracle {

struct SampleEstimate {
  double mean;
  /// Sample standard deviation over sqrt(samples).
  double std_error;
  std::size_t samples;
  std::uint64_t seed;

  /// |mean - truth| <= k * std_error.
  bool within(double truth, double k = 3.0) const;
};

/// Best S-approximation by assembling the 2^|S| x 2^|S| Gram system in the
/// unanimity basis (summing over all 2^n coalitions) and solving it with
/// partial pivoting. Requires |S| <= 16.
Approximation lsq_normal_equations(const PseudoBooleanFunction& f, const CoalitionMask& s,
                                   const ProbabilityProfile& p);

/// Includes each player i independently with probability p_i.
CoalitionMask sample_coalition(const ProbabilityProfile& p, Rng& rng);

enum class Transform { identity, sigma_s, delta_s };

/// Monte Carlo E[(transform f)(C)]. Requires samples >= 100.
SampleEstimate mc_expectation(const PseudoBooleanFunction& f, Transform transform,
                              const CoalitionMask& s, const ProbabilityProfile& p,
                              std::size_t samples, std::uint64_t seed);

/// Gauss-Legendre nodes and weights on [0,1].
std::vector<std::pair<double, double>> gauss_legendre(int nodes);

/// Gauss-Legendre value of int_0^1 Phi_{B,(q,...,q)}(f,S) dq. Requires nodes >= n+1.
double diagonal_quadrature(const PseudoBooleanFunction& f, const CoalitionMask& s, int nodes);

/// Default node count n + 2.
double diagonal_quadrature(const PseudoBooleanFunction& f, const CoalitionMask& s);

/// Exact integral of Phi_{B,p}(f,S) over p in [0,1]^n.
double cube_average(const PseudoBooleanFunction& f, const CoalitionMask& s);

/// Mean-preserving distributions on [0,1] used by cdf_integral_check.
enum class CdfFamily {
  beta,        ///< Beta(2 p_i, 2 (1 - p_i))
  point_mass,  ///< Dirac at p_i
};

/// Sample mean of (sigma_S fbar)(X) with X_i drawn independently from a
/// distribution of mean p_i. Requires samples >= 1000.
SampleEstimate cdf_integral_check(const PseudoBooleanFunction& f, const CoalitionMask& s,
                                  const ProbabilityProfile& p, std::size_t samples,
                                  std::uint64_t seed, CdfFamily family = CdfFamily::beta);

}  // namespace pbf::oracle
