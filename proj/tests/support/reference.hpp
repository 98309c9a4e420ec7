#pragma once

// Slow, definition-level references used to check the library. Each routine
// follows the textbook formula directly and shares no code with src/.

#include <pbf/core.hpp>
#include <pbf/measure.hpp>
#include <pbf/rng.hpp>

#include <vector>

namespace ref {

using pbf::mask_t;

std::vector<double> mobius(const std::vector<double>& f, int n);
std::vector<double> zeta(const std::vector<double>& a, int n);

double weight(const std::vector<double>& p, mask_t t);
double expectation(const std::vector<double>& p, const std::vector<double>& f);
double inner(const std::vector<double>& p, const std::vector<double>& f,
             const std::vector<double>& g);

/// Delta_S f(T) = sum_{R subset S} (-1)^{|S|-|R|} f((T \ S) u R).
double delta(const std::vector<double>& f, mask_t s, mask_t t);
/// f((T \ S) u S) - f(T \ S).
double sigma(const std::vector<double>& f, mask_t s, mask_t t);

double interaction(const std::vector<double>& f, int n, mask_t s, const std::vector<double>& p);
/// sum over T subset N\S of p_T^S (f(T u S) - f(T)).
double influence(const std::vector<double>& f, int n, mask_t s, const std::vector<double>& p);
double shapley(const std::vector<double>& f, int n, mask_t s);
double ben_or_linial(const std::vector<double>& f, int n, mask_t s);

/// Value of prod_{i in T} (x_i - p_i) / sqrt(p_i (1 - p_i)) at vertex x.
double basis_value(const std::vector<double>& p, mask_t t, mask_t x);

/// Dense least squares over the span of {u_R : R subset S}, solved by
/// Gaussian elimination with full pivoting on the normal equations.
std::vector<double> lsq_coefficients(const std::vector<double>& f, int n, mask_t s,
                                     const std::vector<double>& p);

// Generators for property tests ----------------------------------------------

std::vector<double> random_table(pbf::Rng& rng, int n, double lo = -1.0, double hi = 1.0);
std::vector<double> integer_table(pbf::Rng& rng, int n, int lo, int hi);
std::vector<double> random_probabilities(pbf::Rng& rng, int n, double lo = 0.05,
                                         double hi = 0.95);
mask_t random_mask(pbf::Rng& rng, int n);
int random_int(pbf::Rng& rng, int lo, int hi);

inline pbf::PseudoBooleanFunction function(int n, std::vector<double> v) {
  return pbf::PseudoBooleanFunction(n, std::move(v));
}
inline std::vector<double> table(const pbf::SetTable& t) {
  return {t.values().begin(), t.values().end()};
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace ref
