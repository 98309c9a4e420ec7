#pragma once

// Product (independent-player) measure on coalitions and the weighted L2
// geometry it induces.

#include <pbf/core.hpp>

#include <cmath>
#include <span>
#include <vector>

namespace pbf {

/// p_i = Pr(player i+1 joins the random coalition), strictly inside (0,1).
class ProbabilityProfile {
public:
  /// Smallest admissible distance of p_i from 0 and 1. Values closer to the
  /// boundary are rejected, never clamped.
  static constexpr double kInteriorMargin = 1e-9;

  explicit ProbabilityProfile(std::vector<double> p);

  static ProbabilityProfile uniform(int n) { return constant(n, 0.5); }
  static ProbabilityProfile constant(int n, double p);

  int players() const noexcept { return static_cast<int>(p_.size()); }
  double operator[](int i) const { return p_[static_cast<std::size_t>(i)]; }
  std::span<const double> probabilities() const noexcept { return p_; }

  /// Copy with p_{player} replaced (player is 1-based).
  ProbabilityProfile with(int player, double value) const;

private:
  std::vector<double> p_;
};

/// w(T) = prod_{i in T} p_i prod_{i notin T} (1 - p_i).
double coalition_weight(const ProbabilityProfile& p, const CoalitionMask& t);

/// All 2^n weights, indexed by mask.
std::vector<double> coalition_weights(const ProbabilityProfile& p);

/// Precomputed weights plus a fixed summation schedule. Sums run over masks
/// in descending weight order with Neumaier compensation, so repeated inner
/// products against one profile share the sort.
class ProductMeasure {
public:
  explicit ProductMeasure(const ProbabilityProfile& p);

  const ProbabilityProfile& profile() const noexcept { return profile_; }
  int players() const noexcept { return profile_.players(); }
  std::span<const double> weights() const noexcept { return weights_; }

  double inner_product(const PseudoBooleanFunction& f, const PseudoBooleanFunction& g) const;
  double expectation(const PseudoBooleanFunction& f) const;

  /// sum_x w(x) term(x) under the fixed schedule.
  template <class Term>
  double weighted_sum(Term&& term) const {
    double sum = 0.0;
    double carry = 0.0;
    for (mask_t m : order_) {
      const double x = weights_[m] * term(m);
      const double t = sum + x;
      carry += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
      sum = t;
    }
    return sum + carry;
  }

private:
  void require(const PseudoBooleanFunction& f) const;

  ProbabilityProfile profile_;
  std::vector<double> weights_;
  std::vector<mask_t> order_;
};

/// <f, g> = sum_x w(x) f(x) g(x). DimensionError on mismatched n.
double inner_product(const ProbabilityProfile& p, const PseudoBooleanFunction& f,
                     const PseudoBooleanFunction& g);

/// v_{T,p}(x) = prod_{i in T} (x_i - p_i) / sqrt(p_i (1 - p_i)); orthonormal under <.,.>.
PseudoBooleanFunction basis_function(const ProbabilityProfile& p, const CoalitionMask& t);

/// E[f(C)] for the random coalition C drawn from the product measure.
double expectation(const ProbabilityProfile& p, const PseudoBooleanFunction& f);

double covariance(const ProbabilityProfile& p, const PseudoBooleanFunction& f,
                  const PseudoBooleanFunction& g);

double standard_deviation(const ProbabilityProfile& p, const PseudoBooleanFunction& f);

}  // namespace pbf
