#include <pbf/oracle.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <string>

namespace pbf::oracle {

namespace {

// Welford accumulator.
class RunningStats {
public:
  void add(double x) {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
  }

  SampleEstimate finish(std::uint64_t seed) const {
    const double var = count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0;
    return {mean_, std::sqrt(var / static_cast<double>(count_)), count_, seed};
  }

private:
  std::size_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

// Position of r among the submasks of s (bits of r packed along s).
std::size_t compress(mask_t r, mask_t s) {
  std::size_t out = 0;
  int k = 0;
  for (mask_t rest = s; rest != 0; rest &= rest - 1, ++k) {
    if (r & (rest & -rest)) out |= std::size_t{1} << k;
  }
  return out;
}

mask_t expand(std::size_t idx, mask_t s) {
  mask_t out = 0;
  int k = 0;
  for (mask_t rest = s; rest != 0; rest &= rest - 1, ++k) {
    if (idx >> k & 1u) out |= rest & -rest;
  }
  return out;
}

double fold_multilinear(std::vector<double>& buf, std::span<const double> coeffs,
                        std::span<const double> x) {
  std::copy(coeffs.begin(), coeffs.end(), buf.begin());
  for (int i = static_cast<int>(x.size()) - 1; i >= 0; --i) {
    const std::size_t half = std::size_t{1} << i;
    for (std::size_t m = 0; m < half; ++m) buf[m] += x[static_cast<std::size_t>(i)] * buf[m | half];
  }
  return buf[0];
}

}  // namespace

bool SampleEstimate::within(double truth, double k) const {
  return std::abs(mean - truth) <= k * std_error;
}

Approximation lsq_normal_equations(const PseudoBooleanFunction& f, const CoalitionMask& s,
                                   const ProbabilityProfile& p) {
  const int n = f.players();
  detail::require_same_players(n, s.players(), "normal equations");
  detail::require_same_players(n, p.players(), "normal equations");
  if (s.size() > 16) {
    throw DomainError("normal equations need |S| <= 16, got " + std::to_string(s.size()));
  }
  const mask_t sb = s.bits();
  const std::size_t dim = std::size_t{1} << s.size();

  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim),
                                               static_cast<Eigen::Index>(dim));
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
  std::vector<Eigen::Index> active;
  for (mask_t t = 0; t < f.size(); ++t) {
    double w = 1.0;
    for (int i = 0; i < n; ++i) w *= (t >> i & 1u) ? p[i] : 1.0 - p[i];
    // u_R(T) = 1 exactly for R subset T cap S.
    const mask_t inside = t & sb;
    active.clear();
    for (mask_t r = inside;; r = (r - 1) & inside) {
      active.push_back(static_cast<Eigen::Index>(compress(r, sb)));
      if (r == 0) break;
    }
    for (Eigen::Index j : active) {
      rhs(j) += w * f[t];
      for (Eigen::Index k : active) gram(j, k) += w;
    }
  }

  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(gram);
  if (!(lu.rcond() > 1e-15)) {
    throw SingularSystem("Gram matrix is numerically singular (rcond " +
                         std::to_string(lu.rcond()) + ")");
  }
  const Eigen::VectorXd sol = lu.solve(rhs);

  std::vector<double> coeffs(table_size(n), 0.0);
  for (std::size_t j = 0; j < dim; ++j) coeffs[expand(j, sb)] = sol(static_cast<Eigen::Index>(j));
  MobiusRepresentation multilinear(n, std::move(coeffs));

  const PseudoBooleanFunction g = zeta(multilinear);
  const ProductMeasure mu(p);
  std::map<mask_t, double> fourier;
  for (mask_t t = sb;; t = (t - 1) & sb) {
    fourier.emplace(t, mu.inner_product(g, basis_function(p, CoalitionMask(n, t))));
    if (t == 0) break;
  }
  return Approximation{n, SubsetTarget{s}, p, std::move(fourier), std::move(multilinear)};
}

CoalitionMask sample_coalition(const ProbabilityProfile& p, Rng& rng) {
  mask_t bits = 0;
  for (int i = 0; i < p.players(); ++i) {
    if (rng.uniform() < p[i]) bits |= mask_t{1} << i;
  }
  return CoalitionMask(p.players(), bits);
}

SampleEstimate mc_expectation(const PseudoBooleanFunction& f, Transform transform,
                              const CoalitionMask& s, const ProbabilityProfile& p,
                              std::size_t samples, std::uint64_t seed) {
  detail::require_same_players(f.players(), p.players(), "Monte Carlo expectation");
  if (samples < 100) throw DomainError("Monte Carlo needs at least 100 samples");
  const PseudoBooleanFunction g = transform == Transform::sigma_s   ? sigma_s(f, s)
                                  : transform == Transform::delta_s ? s_difference(f, s)
                                                                    : f;
  Rng rng(seed);
  RunningStats stats;
  for (std::size_t k = 0; k < samples; ++k) stats.add(g[sample_coalition(p, rng)]);
  return stats.finish(seed);
}

std::vector<std::pair<double, double>> gauss_legendre(int nodes) {
  if (nodes < 1) throw DomainError("Gauss-Legendre needs at least one node");
  std::vector<std::pair<double, double>> out(static_cast<std::size_t>(nodes));
  const int m = (nodes + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (nodes + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Legendre recurrence for P_nodes(z) and its derivative.
      double p0 = 1.0;
      double p1 = 0.0;
      for (int j = 1; j <= nodes; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
      }
      dp = nodes * (z * p0 - p1) / (z * z - 1.0);
      const double step = p0 / dp;
      z -= step;
      if (std::abs(step) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    // Map [-1,1] onto [0,1].
    out[static_cast<std::size_t>(i)] = {0.5 * (1.0 - z), 0.5 * w};
    out[static_cast<std::size_t>(nodes - 1 - i)] = {0.5 * (1.0 + z), 0.5 * w};
  }
  return out;
}

double diagonal_quadrature(const PseudoBooleanFunction& f, const CoalitionMask& s, int nodes) {
  detail::require_same_players(f.players(), s.players(), "diagonal quadrature");
  if (nodes < f.players() + 1) {
    throw DomainError("diagonal quadrature needs at least n+1 = " +
                      std::to_string(f.players() + 1) + " nodes");
  }
  const MobiusRepresentation a = mobius(f);
  const mask_t sb = s.bits();
  double total = 0.0;
  for (const auto& [q, w] : gauss_legendre(nodes)) {
    // Phi_{B,(q,...,q)}(f,S) = sum_{T meets S} a(T) q^{|T\S|}.
    double phi = 0.0;
    for (mask_t t = 0; t < a.size(); ++t) {
      if (t & sb) phi += a[t] * std::pow(q, cardinality(t & ~sb));
    }
    total += w * phi;
  }
  return total;
}

double diagonal_quadrature(const PseudoBooleanFunction& f, const CoalitionMask& s) {
  return diagonal_quadrature(f, s, f.players() + 2);
}

double cube_average(const PseudoBooleanFunction& f, const CoalitionMask& s) {
  detail::require_same_players(f.players(), s.players(), "cube average");
  // Each p_i integrates to 1/2 independently.
  const MobiusRepresentation a = mobius(f);
  const mask_t sb = s.bits();
  double sum = 0.0;
  for (mask_t t = 0; t < a.size(); ++t) {
    if (t & sb) sum += std::ldexp(a[t], -cardinality(t & ~sb));
  }
  return sum;
}

SampleEstimate cdf_integral_check(const PseudoBooleanFunction& f, const CoalitionMask& s,
                                  const ProbabilityProfile& p, std::size_t samples,
                                  std::uint64_t seed, CdfFamily family) {
  const int n = f.players();
  detail::require_same_players(n, p.players(), "CDF integral check");
  if (samples < 1000) throw DomainError("CDF integral check needs at least 1000 samples");
  const MobiusRepresentation h = mobius(sigma_s(f, s));
  std::vector<double> buf(h.size());
  std::vector<double> x(static_cast<std::size_t>(n));
  Rng rng(seed);
  RunningStats stats;
  for (std::size_t k = 0; k < samples; ++k) {
    for (int i = 0; i < n; ++i) {
      x[static_cast<std::size_t>(i)] =
          family == CdfFamily::beta ? rng.beta(2.0 * p[i], 2.0 * (1.0 - p[i])) : p[i];
    }
    stats.add(fold_multilinear(buf, h.values(), x));
  }
  return stats.finish(seed);
}

}  // namespace pbf::oracle
