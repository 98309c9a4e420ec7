#include <pbf/measure.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace pbf {

ProbabilityProfile::ProbabilityProfile(std::vector<double> p) : p_(std::move(p)) {
  check_player_count(static_cast<int>(p_.size()));
  for (std::size_t i = 0; i < p_.size(); ++i) {
    const double v = p_[i];
    if (!(v >= kInteriorMargin && v <= 1.0 - kInteriorMargin)) {
      throw DomainError("p_" + std::to_string(i + 1) + " = " + std::to_string(v) +
                        " is not strictly inside (0,1)");
    }
  }
}

ProbabilityProfile ProbabilityProfile::constant(int n, double p) {
  check_player_count(n);
  return ProbabilityProfile(std::vector<double>(static_cast<std::size_t>(n), p));
}

ProbabilityProfile ProbabilityProfile::with(int player, double value) const {
  if (player < 1 || player > players()) {
    throw DomainError("player " + std::to_string(player) + " outside profile");
  }
  std::vector<double> q = p_;
  q[static_cast<std::size_t>(player - 1)] = value;
  return ProbabilityProfile(std::move(q));
}

double coalition_weight(const ProbabilityProfile& p, const CoalitionMask& t) {
  detail::require_same_players(p.players(), t.players(), "coalition weight");
  double w = 1.0;
  for (int i = 0; i < p.players(); ++i) w *= (t.bits() >> i & 1u) ? p[i] : 1.0 - p[i];
  return w;
}

std::vector<double> coalition_weights(const ProbabilityProfile& p) {
  const int n = p.players();
  std::vector<double> w(table_size(n));
  w[0] = 1.0;
  for (int i = 0; i < n; ++i) {
    const std::size_t half = std::size_t{1} << i;
    for (std::size_t m = 0; m < half; ++m) {
      w[m | half] = w[m] * p[i];
      w[m] *= 1.0 - p[i];
    }
  }
  return w;
}

ProductMeasure::ProductMeasure(const ProbabilityProfile& p)
    : profile_(p), weights_(coalition_weights(p)), order_(weights_.size()) {
  std::iota(order_.begin(), order_.end(), mask_t{0});
  std::stable_sort(order_.begin(), order_.end(),
                   [this](mask_t a, mask_t b) { return weights_[a] > weights_[b]; });
}

void ProductMeasure::require(const PseudoBooleanFunction& f) const {
  detail::require_same_players(players(), f.players(), "product measure");
}

double ProductMeasure::inner_product(const PseudoBooleanFunction& f,
                                     const PseudoBooleanFunction& g) const {
  require(f);
  require(g);
  return weighted_sum([&](mask_t m) { return f[m] * g[m]; });
}

double ProductMeasure::expectation(const PseudoBooleanFunction& f) const {
  require(f);
  return weighted_sum([&](mask_t m) { return f[m]; });
}

double inner_product(const ProbabilityProfile& p, const PseudoBooleanFunction& f,
                     const PseudoBooleanFunction& g) {
  return ProductMeasure(p).inner_product(f, g);
}

PseudoBooleanFunction basis_function(const ProbabilityProfile& p, const CoalitionMask& t) {
  const int n = p.players();
  detail::require_same_players(n, t.players(), "basis function");
  // Per-player factors for x_i = 0 and x_i = 1.
  std::vector<double> lo(static_cast<std::size_t>(n), 1.0);
  std::vector<double> hi(static_cast<std::size_t>(n), 1.0);
  for (int i = 0; i < n; ++i) {
    if (!(t.bits() >> i & 1u)) continue;
    const double scale = std::sqrt(p[i] * (1.0 - p[i]));
    lo[static_cast<std::size_t>(i)] = -p[i] / scale;
    hi[static_cast<std::size_t>(i)] = (1.0 - p[i]) / scale;
  }
  std::vector<double> v(table_size(n));
  v[0] = 1.0;
  for (int i = 0; i < n; ++i) {
    const std::size_t half = std::size_t{1} << i;
    for (std::size_t m = 0; m < half; ++m) {
      v[m | half] = v[m] * hi[static_cast<std::size_t>(i)];
      v[m] *= lo[static_cast<std::size_t>(i)];
    }
  }
  return PseudoBooleanFunction(n, std::move(v));
}

double expectation(const ProbabilityProfile& p, const PseudoBooleanFunction& f) {
  return ProductMeasure(p).expectation(f);
}

double covariance(const ProbabilityProfile& p, const PseudoBooleanFunction& f,
                  const PseudoBooleanFunction& g) {
  const ProductMeasure mu(p);
  const double ef = mu.expectation(f);
  const double eg = mu.expectation(g);
  return mu.weighted_sum([&](mask_t m) { return (f[m] - ef) * (g[m] - eg); });
}

double standard_deviation(const ProbabilityProfile& p, const PseudoBooleanFunction& f) {
  return std::sqrt(std::max(0.0, covariance(p, f, f)));
}

}  // namespace pbf
