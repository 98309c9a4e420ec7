#include <pbf/approx.hpp>

#include <cmath>
#include <string>

namespace pbf {

namespace {

template <class Include>
std::map<mask_t, double> project(const PseudoBooleanFunction& f, const ProbabilityProfile& p,
                                 Include include) {
  detail::require_same_players(p.players(), f.players(), "approximation");
  const ProductMeasure mu(p);
  const int n = f.players();
  std::map<mask_t, double> fourier;
  for (mask_t t = 0; t < table_size(n); ++t) {
    if (!include(t)) continue;
    fourier.emplace(t, mu.inner_product(f, basis_function(p, CoalitionMask(n, t))));
  }
  return fourier;
}

}  // namespace

MobiusRepresentation expand_fourier(const std::map<mask_t, double>& fourier,
                                    const ProbabilityProfile& p) {
  const int n = p.players();
  std::vector<double> c(table_size(n), 0.0);
  for (const auto& [t, coeff] : fourier) {
    if (!is_subset(t, full_mask(n))) {
      throw DomainError("fourier key " + std::to_string(t) + " exceeds " + std::to_string(n) +
                        " players");
    }
    double scale = 1.0;
    for (int i = 0; i < n; ++i) {
      if (t >> i & 1u) scale *= std::sqrt(p[i] * (1.0 - p[i]));
    }
    c[t] = coeff / scale;
  }
  // prod_{i in T} (x_i - p_i) = sum_{R subset T} u_R prod_{i in T\R} (-p_i):
  // a weighted superset sum, one coordinate at a time.
  for (int i = 0; i < n; ++i) {
    const mask_t bit = mask_t{1} << i;
    for (mask_t m = 0; m < c.size(); ++m) {
      if (!(m & bit)) c[m] -= p[i] * c[m | bit];
    }
  }
  return MobiusRepresentation(n, std::move(c));
}

Approximation best_s_approximation(const PseudoBooleanFunction& f, const CoalitionMask& s,
                                   const ProbabilityProfile& p) {
  detail::require_same_players(f.players(), s.players(), "S-approximation");
  auto fourier = project(f, p, [&](mask_t t) { return is_subset(t, s.bits()); });
  auto multilinear = expand_fourier(fourier, p);
  return Approximation{f.players(), SubsetTarget{s}, p, std::move(fourier),
                       std::move(multilinear)};
}

Approximation best_k_approximation(const PseudoBooleanFunction& f, int k,
                                   const ProbabilityProfile& p) {
  if (k < 0 || k > f.players()) {
    throw DomainError("degree " + std::to_string(k) + " outside [0, " +
                      std::to_string(f.players()) + "]");
  }
  auto fourier = project(f, p, [&](mask_t t) { return cardinality(t) <= k; });
  auto multilinear = expand_fourier(fourier, p);
  return Approximation{f.players(), DegreeTarget{k}, p, std::move(fourier),
                       std::move(multilinear)};
}

MobiusRepresentation to_multilinear(const Approximation& approx) {
  return expand_fourier(approx.fourier, approx.profile);
}

double residual_norm(const PseudoBooleanFunction& f, const Approximation& approx,
                     const ProbabilityProfile& p) {
  detail::require_same_players(f.players(), approx.players, "residual");
  const PseudoBooleanFunction g = approx.values();
  const ProductMeasure mu(p);
  return mu.weighted_sum([&](mask_t m) {
    const double d = f[m] - g[m];
    return d * d;
  });
}

}  // namespace pbf
