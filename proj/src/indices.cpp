#include <pbf/indices.hpp>

#include <pbf/approx.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace pbf {

namespace {

void require_players(int n, const CoalitionMask& s, const ProbabilityProfile& p,
                     const char* what) {
  detail::require_same_players(n, s.players(), what);
  detail::require_same_players(n, p.players(), what);
}

// pw[T] = prod_{i in T} p_i.
std::vector<double> subset_products(const ProbabilityProfile& p) {
  const int n = p.players();
  std::vector<double> pw(table_size(n));
  pw[0] = 1.0;
  for (int i = 0; i < n; ++i) {
    const std::size_t half = std::size_t{1} << i;
    for (std::size_t m = 0; m < half; ++m) pw[m | half] = pw[m] * p[i];
  }
  return pw;
}

double interaction_from(const MobiusRepresentation& a, mask_t s, std::span<const double> pw) {
  double sum = 0.0;
  for (mask_t t = 0; t < a.size(); ++t) {
    if (is_subset(s, t)) sum += a[t] * pw[t & ~s];
  }
  return sum;
}

double influence_from(const MobiusRepresentation& a, mask_t s, std::span<const double> pw) {
  double sum = 0.0;
  for (mask_t t = 0; t < a.size(); ++t) {
    if (t & s) sum += a[t] * pw[t & ~s];
  }
  return sum;
}

double shapley_from(const MobiusRepresentation& a, mask_t s) {
  double sum = 0.0;
  for (mask_t t = 0; t < a.size(); ++t) {
    if (t & s) sum += a[t] / static_cast<double>(cardinality(t & ~s) + 1);
  }
  return sum;
}

double influence_by_projection(const PseudoBooleanFunction& f, const CoalitionMask& s,
                               const ProbabilityProfile& p) {
  const MobiusRepresentation c = best_s_approximation(f, s, p).multilinear;
  // f_S(S) - f_S(empty) = sum_{empty != R subset S} c(R).
  double sum = 0.0;
  const mask_t sb = s.bits();
  for (mask_t r = sb; r != 0; r = (r - 1) & sb) sum += c[r];
  return sum;
}

double influence_by_average(const PseudoBooleanFunction& f, const CoalitionMask& s,
                            const ProbabilityProfile& p) {
  const int n = f.players();
  const mask_t sb = s.bits();
  const mask_t rest = full_mask(n) & ~sb;
  double sum = 0.0;
  for (mask_t t = rest;; t = (t - 1) & rest) {
    double coeff = 1.0;
    for (int i = 0; i < n; ++i) {
      const mask_t bit = mask_t{1} << i;
      if (t & bit) {
        coeff *= p[i];
      } else if (rest & bit) {
        coeff *= 1.0 - p[i];
      }
    }
    sum += coeff * (f[t | sb] - f[t]);
    if (t == 0) break;
  }
  return sum;
}

}  // namespace

double banzhaf_interaction(const PseudoBooleanFunction& f, const CoalitionMask& s,
                           const ProbabilityProfile& p) {
  require_players(f.players(), s, p, "interaction index");
  return interaction_from(mobius(f), s.bits(), subset_products(p));
}

double banzhaf_influence(const PseudoBooleanFunction& f, const CoalitionMask& s,
                         const ProbabilityProfile& p, InfluenceMethod method) {
  require_players(f.players(), s, p, "influence index");
  switch (method) {
    case InfluenceMethod::projection:
      return influence_by_projection(f, s, p);
    case InfluenceMethod::mobius:
      return influence_from(mobius(f), s.bits(), subset_products(p));
    case InfluenceMethod::average:
      return influence_by_average(f, s, p);
    case InfluenceMethod::inner_product:
      return inner_product(p, f, g_function(s, p));
  }
  throw DomainError("unknown influence method");
}

double influence_interaction_expansion(const PseudoBooleanFunction& f, const CoalitionMask& s,
                                       const ProbabilityProfile& p) {
  require_players(f.players(), s, p, "interaction expansion");
  const MobiusRepresentation a = mobius(f);
  const std::vector<double> pw = subset_products(p);
  const int n = f.players();
  const mask_t sb = s.bits();
  double sum = 0.0;
  for (mask_t t = sb; t != 0; t = (t - 1) & sb) {
    double absent = 1.0;
    double present = 1.0;
    for (int i = 0; i < n; ++i) {
      if (t >> i & 1u) {
        absent *= 1.0 - p[i];
        present *= p[i];
      }
    }
    const double weight = (cardinality(t) % 2 == 0) ? absent - present : absent + present;
    sum += interaction_from(a, t, pw) * weight;
  }
  // The T = empty term has weight 1 - 1 = 0.
  return sum;
}

double shapley_generalized_value(const PseudoBooleanFunction& f, const CoalitionMask& s) {
  detail::require_same_players(f.players(), s.players(), "Shapley generalized value");
  return shapley_from(mobius(f), s.bits());
}

double ben_or_linial_influence(const PseudoBooleanFunction& f, const CoalitionMask& s) {
  const int n = f.players();
  detail::require_same_players(n, s.players(), "Ben-Or-Linial influence");
  const mask_t sb = s.bits();
  std::vector<double> hi(table_size(n), -std::numeric_limits<double>::infinity());
  std::vector<double> lo(table_size(n), std::numeric_limits<double>::infinity());
  for (mask_t m = 0; m < f.size(); ++m) {
    const mask_t t = m & ~sb;
    hi[t] = std::max(hi[t], f[m]);
    lo[t] = std::min(lo[t], f[m]);
  }
  const mask_t rest = full_mask(n) & ~sb;
  double sum = 0.0;
  for (mask_t t = rest;; t = (t - 1) & rest) {
    sum += hi[t] - lo[t];
    if (t == 0) break;
  }
  return std::ldexp(sum, -(n - s.size()));
}

PseudoBooleanFunction g_function(const CoalitionMask& s, const ProbabilityProfile& p) {
  const int n = p.players();
  detail::require_same_players(n, s.players(), "g function");
  double all_in = 1.0;
  double all_out = 1.0;
  for (int i = 0; i < n; ++i) {
    if (s.bits() >> i & 1u) {
      all_in /= p[i];
      all_out /= 1.0 - p[i];
    }
  }
  const mask_t sb = s.bits();
  std::vector<double> g(table_size(n));
  for (mask_t m = 0; m < g.size(); ++m) {
    g[m] = (is_subset(sb, m) ? all_in : 0.0) - ((m & sb) == 0 ? all_out : 0.0);
  }
  return PseudoBooleanFunction(n, std::move(g));
}

double g_function_stddev(const CoalitionMask& s, const ProbabilityProfile& p) {
  detail::require_same_players(p.players(), s.players(), "g function");
  if (s.is_empty()) throw EmptySubset("g_{S,p} is identically zero for S = empty");
  double inv_in = 1.0;
  double inv_out = 1.0;
  for (int i = 0; i < p.players(); ++i) {
    if (s.bits() >> i & 1u) {
      inv_in /= p[i];
      inv_out /= 1.0 - p[i];
    }
  }
  return std::sqrt(inv_in + inv_out);
}

double normalized_influence(const PseudoBooleanFunction& f, const CoalitionMask& s,
                            const ProbabilityProfile& p) {
  require_players(f.players(), s, p, "normalized influence");
  if (s.is_empty()) throw EmptySubset("normalized influence needs a nonempty subset");
  const double sigma_f = standard_deviation(p, f);
  if (!(sigma_f > kDegenerateStddev)) {
    throw DegenerateFunction("standard deviation of f is " + std::to_string(sigma_f));
  }
  const double cov = covariance(p, f, g_function(s, p));
  const double r = cov / (sigma_f * g_function_stddev(s, p));
  if (std::abs(r) > 1.0 + 1e-12) {
    throw Error("correlation " + std::to_string(r) + " exceeds 1 beyond rounding");
  }
  return std::clamp(r, -1.0, 1.0);
}

PseudoBooleanFunction taylor_reconstruct(const std::map<mask_t, double>& interactions,
                                         const ProbabilityProfile& p) {
  const int n = p.players();
  std::vector<double> c(table_size(n), 0.0);
  std::size_t found = 0;
  for (const auto& [s, value] : interactions) {
    if (!is_subset(s, full_mask(n))) {
      throw IncompleteTable("subset " + std::to_string(s) + " exceeds " + std::to_string(n) +
                            " players");
    }
    c[s] = value;
    ++found;
  }
  if (found != c.size()) {
    throw IncompleteTable("interaction table has " + std::to_string(found) + " of " +
                          std::to_string(c.size()) + " subsets");
  }
  // Coordinate i: the x_i = 1 branch gets c0 + (1 - p_i) c1, x_i = 0 gets c0 - p_i c1.
  for (int i = 0; i < n; ++i) {
    const mask_t bit = mask_t{1} << i;
    for (mask_t m = 0; m < c.size(); ++m) {
      if (m & bit) continue;
      const double c0 = c[m];
      const double c1 = c[m | bit];
      c[m | bit] = c0 + (1.0 - p[i]) * c1;
      c[m] = c0 - p[i] * c1;
    }
  }
  return PseudoBooleanFunction(n, std::move(c));
}

// Generalized values ---------------------------------------------------------

namespace {

void check_p_form_keys(const GeneralizedValueCoefficients& c) {
  const mask_t rest = full_mask(c.players()) & ~c.subset.bits();
  const std::size_t expected = std::size_t{1} << cardinality(rest);
  for (const auto& [t, v] : c.table) {
    if (!is_subset(t, rest)) {
      throw InvalidCoefficients("p-form key " + std::to_string(t) + " meets S");
    }
    if (!std::isfinite(v)) throw InvalidCoefficients("p-form value is not finite");
  }
  if (c.table.size() != expected) {
    throw InvalidCoefficients("p-form has " + std::to_string(c.table.size()) + " of " +
                              std::to_string(expected) + " keys");
  }
}

void check_q_form_keys(const GeneralizedValueCoefficients& c) {
  const mask_t sb = c.subset.bits();
  const std::size_t expected =
      table_size(c.players()) - (std::size_t{1} << (c.players() - c.subset.size()));
  for (const auto& [r, v] : c.table) {
    if (!is_subset(r, full_mask(c.players())) || (r & sb) == 0) {
      throw InvalidCoefficients("q-form key " + std::to_string(r) + " does not meet S");
    }
    if (!std::isfinite(v)) throw InvalidCoefficients("q-form value is not finite");
  }
  if (c.table.size() != expected) {
    throw InvalidCoefficients("q-form has " + std::to_string(c.table.size()) + " of " +
                              std::to_string(expected) + " keys");
  }
}

}  // namespace

GeneralizedValueCoefficients influence_coefficients(const CoalitionMask& s,
                                                    const ProbabilityProfile& p) {
  const int n = p.players();
  detail::require_same_players(n, s.players(), "influence coefficients");
  const mask_t rest = full_mask(n) & ~s.bits();
  GeneralizedValueCoefficients out{s, CoefficientForm::p_form, {}};
  for (mask_t t = rest;; t = (t - 1) & rest) {
    double coeff = 1.0;
    for (int i = 0; i < n; ++i) {
      const mask_t bit = mask_t{1} << i;
      if (t & bit) {
        coeff *= p[i];
      } else if (rest & bit) {
        coeff *= 1.0 - p[i];
      }
    }
    out.table.emplace(t, coeff);
    if (t == 0) break;
  }
  return out;
}

GeneralizedValueCoefficients gv_p_to_q(const GeneralizedValueCoefficients& coeffs) {
  if (coeffs.form != CoefficientForm::p_form) throw InvalidCoefficients("expected a p-form");
  check_p_form_keys(coeffs);
  const int n = coeffs.players();
  const mask_t sb = coeffs.subset.bits();
  // Superset sums over the coordinates outside S: acc[U] = sum_{U subset T subset N\S} p_T.
  std::vector<double> acc(table_size(n), 0.0);
  for (const auto& [t, v] : coeffs.table) acc[t] = v;
  for (int i = 0; i < n; ++i) {
    const mask_t bit = mask_t{1} << i;
    if (sb & bit) continue;
    for (mask_t m = 0; m < acc.size(); ++m) {
      if (!(m & bit)) acc[m] += acc[m | bit];
    }
  }
  GeneralizedValueCoefficients out{coeffs.subset, CoefficientForm::q_form, {}};
  for (mask_t r = 0; r < acc.size(); ++r) {
    if (r & sb) out.table.emplace(r, acc[r & ~sb]);
  }
  return out;
}

GeneralizedValueCoefficients gv_q_to_p(const GeneralizedValueCoefficients& coeffs) {
  if (coeffs.form != CoefficientForm::q_form) throw InvalidCoefficients("expected a q-form");
  if (coeffs.subset.is_empty()) {
    throw EmptySubset("a q-form over S = empty has no keys to convert");
  }
  check_q_form_keys(coeffs);
  const int n = coeffs.players();
  const mask_t sb = coeffs.subset.bits();
  std::vector<double> acc(table_size(n), 0.0);
  for (const auto& [r, v] : coeffs.table) {
    const double ref = coeffs.table.at((r & ~sb) | sb);
    if (std::abs(v - ref) > 1e-12 * std::max(1.0, std::abs(ref))) {
      throw InvalidCoefficients("q_R^S depends on R cap S at R = " + std::to_string(r));
    }
  }
  for (mask_t u = 0; u < acc.size(); ++u) {
    if ((u & sb) == 0) acc[u] = coeffs.table.at(u | sb);
  }
  // Superset Mobius over the coordinates outside S.
  for (int i = 0; i < n; ++i) {
    const mask_t bit = mask_t{1} << i;
    if (sb & bit) continue;
    for (mask_t m = 0; m < acc.size(); ++m) {
      if (!(m & bit)) acc[m] -= acc[m | bit];
    }
  }
  GeneralizedValueCoefficients out{coeffs.subset, CoefficientForm::p_form, {}};
  for (mask_t t = 0; t < acc.size(); ++t) {
    if ((t & sb) == 0) out.table.emplace(t, acc[t]);
  }
  return out;
}

double generalized_value(const PseudoBooleanFunction& f,
                         const GeneralizedValueCoefficients& coeffs) {
  detail::require_same_players(f.players(), coeffs.players(), "generalized value");
  const mask_t sb = coeffs.subset.bits();
  double sum = 0.0;
  if (coeffs.form == CoefficientForm::p_form) {
    check_p_form_keys(coeffs);
    for (const auto& [t, v] : coeffs.table) sum += v * (f[t | sb] - f[t]);
  } else {
    check_q_form_keys(coeffs);
    const MobiusRepresentation a = mobius(f);
    for (const auto& [r, v] : coeffs.table) sum += v * a[r];
  }
  return sum;
}

// GameIndices ----------------------------------------------------------------

GameIndices::GameIndices(PseudoBooleanFunction f) : f_(std::move(f)), a_(mobius(f_)) {}

double GameIndices::interaction(const CoalitionMask& s, const ProbabilityProfile& p) const {
  require_players(players(), s, p, "interaction index");
  return interaction_from(a_, s.bits(), subset_products(p));
}

double GameIndices::influence(const CoalitionMask& s, const ProbabilityProfile& p) const {
  require_players(players(), s, p, "influence index");
  return influence_from(a_, s.bits(), subset_products(p));
}

double GameIndices::shapley(const CoalitionMask& s) const {
  detail::require_same_players(players(), s.players(), "Shapley generalized value");
  return shapley_from(a_, s.bits());
}

std::vector<double> GameIndices::all_interactions(const ProbabilityProfile& p) const {
  detail::require_same_players(players(), p.players(), "interaction table");
  std::vector<double> c(a_.values().begin(), a_.values().end());
  for (int i = 0; i < players(); ++i) {
    const mask_t bit = mask_t{1} << i;
    for (mask_t m = 0; m < c.size(); ++m) {
      if (!(m & bit)) c[m] += p[i] * c[m | bit];
    }
  }
  return c;
}

std::vector<double> GameIndices::all_influences(const ProbabilityProfile& p) const {
  detail::require_same_players(players(), p.players(), "influence table");
  // Index bit i set means i in S. hi pins x_S = 1, lo pins x_S = 0; the other
  // coordinates sit at p_i.
  std::vector<double> hi(a_.values().begin(), a_.values().end());
  std::vector<double> lo = hi;
  for (int i = 0; i < players(); ++i) {
    const mask_t bit = mask_t{1} << i;
    for (mask_t m = 0; m < hi.size(); ++m) {
      if (m & bit) continue;
      const double h0 = hi[m];
      const double h1 = hi[m | bit];
      hi[m | bit] = h0 + h1;
      hi[m] = h0 + p[i] * h1;
      const double l0 = lo[m];
      const double l1 = lo[m | bit];
      lo[m | bit] = l0;
      lo[m] = l0 + p[i] * l1;
    }
  }
  for (std::size_t m = 0; m < hi.size(); ++m) hi[m] -= lo[m];
  return hi;
}

std::vector<double> GameIndices::all_shapley() const {
  // Same pinning scheme as all_influences, with polynomials in t whose
  // exponent records |T\S|; then t^k integrates to 1/(k+1).
  const int n = players();
  const std::size_t deg = static_cast<std::size_t>(n) + 1;
  const std::size_t size = a_.size();
  std::vector<double> hi(size * deg, 0.0);
  for (std::size_t m = 0; m < size; ++m) hi[m * deg] = a_[static_cast<mask_t>(m)];
  std::vector<double> lo = hi;
  std::vector<double> x0(deg);
  std::vector<double> x1(deg);
  for (int i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t m = 0; m < size; ++m) {
      if (m & bit) continue;
      double* h0 = &hi[m * deg];
      double* h1 = &hi[(m | bit) * deg];
      std::copy(h0, h0 + deg, x0.begin());
      std::copy(h1, h1 + deg, x1.begin());
      for (std::size_t k = 0; k < deg; ++k) {
        h1[k] = x0[k] + x1[k];
        h0[k] = x0[k] + (k > 0 ? x1[k - 1] : 0.0);
      }
      double* l0 = &lo[m * deg];
      double* l1 = &lo[(m | bit) * deg];
      std::copy(l0, l0 + deg, x0.begin());
      std::copy(l1, l1 + deg, x1.begin());
      for (std::size_t k = 0; k < deg; ++k) {
        l1[k] = x0[k];
        l0[k] = x0[k] + (k > 0 ? x1[k - 1] : 0.0);
      }
    }
  }
  std::vector<double> out(size, 0.0);
  for (std::size_t m = 0; m < size; ++m) {
    double sum = 0.0;
    for (std::size_t k = 0; k < deg; ++k) {
      sum += (hi[m * deg + k] - lo[m * deg + k]) / static_cast<double>(k + 1);
    }
    out[m] = sum;
  }
  return out;
}

// Reports --------------------------------------------------------------------

IndexReport build_index_report(const GameIndices& game, std::string game_id,
                               const ProbabilityProfile& p,
                               std::span<const CoalitionMask> subsets) {
  const int n = game.players();
  detail::require_same_players(n, p.players(), "index report");
  for (const CoalitionMask& s : subsets) detail::require_same_players(n, s.players(), "report");

  const double sigma_f = standard_deviation(p, game.function());
  // Dense tables pay off once the per-subset O(2^n) scans outnumber n.
  const bool dense = subsets.size() > static_cast<std::size_t>(2 * n + 2) && n <= 16;
  std::vector<double> interactions, influences, shapley;
  if (dense) {
    interactions = game.all_interactions(p);
    influences = game.all_influences(p);
    shapley = game.all_shapley();
  }

  IndexReport report{std::move(game_id), p, {}};
  report.records.reserve(subsets.size());
  for (const CoalitionMask& s : subsets) {
    IndexRecord rec{s, 0.0, 0.0, 0.0, std::nullopt};
    if (dense) {
      rec.interaction = interactions[s.bits()];
      rec.influence = influences[s.bits()];
      rec.shapley = shapley[s.bits()];
    } else {
      rec.interaction = game.interaction(s, p);
      rec.influence = game.influence(s, p);
      rec.shapley = game.shapley(s);
    }
    if (!s.is_empty() && sigma_f > kDegenerateStddev) {
      const double r = rec.influence / (sigma_f * g_function_stddev(s, p));
      rec.normalized = std::clamp(r, -1.0, 1.0);
    }
    report.records.push_back(rec);
  }
  return report;
}

}  // namespace pbf
