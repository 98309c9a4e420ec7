#include <pbf/core.hpp>

#include <cmath>
#include <string>

namespace pbf {

void check_player_count(int n) {
  if (n < 1 || n > kMaxPlayers) {
    throw ValidationError("player count " + std::to_string(n) + " outside [1, " +
                          std::to_string(kMaxPlayers) + "]");
  }
}

namespace detail {

void require_same_players(int expected, int actual, const char* what) {
  if (expected != actual) {
    throw DimensionError(std::string(what) + ": expected " + std::to_string(expected) +
                         " players, got " + std::to_string(actual));
  }
}

}  // namespace detail

CoalitionMask::CoalitionMask(int n, mask_t bits) : n_(n), bits_(bits) {
  check_player_count(n);
  if (!is_subset(bits, full_mask(n))) {
    throw DomainError("coalition mask " + std::to_string(bits) + " exceeds " + std::to_string(n) +
                      " players");
  }
}

CoalitionMask CoalitionMask::from_players(int n, std::span<const int> players) {
  check_player_count(n);
  mask_t bits = 0;
  for (int p : players) {
    if (p < 1 || p > n) {
      throw DomainError("player " + std::to_string(p) + " outside 1.." + std::to_string(n));
    }
    bits |= mask_t{1} << (p - 1);
  }
  return CoalitionMask(n, bits);
}

bool CoalitionMask::is_subset_of(const CoalitionMask& other) const {
  detail::require_same_players(n_, other.n_, "subset test");
  return is_subset(bits_, other.bits_);
}

CoalitionMask CoalitionMask::operator|(const CoalitionMask& other) const {
  detail::require_same_players(n_, other.n_, "union");
  return CoalitionMask(n_, bits_ | other.bits_);
}

CoalitionMask CoalitionMask::operator&(const CoalitionMask& other) const {
  detail::require_same_players(n_, other.n_, "intersection");
  return CoalitionMask(n_, bits_ & other.bits_);
}

CoalitionMask CoalitionMask::operator-(const CoalitionMask& other) const {
  detail::require_same_players(n_, other.n_, "difference");
  return CoalitionMask(n_, bits_ & ~other.bits_);
}

std::vector<int> CoalitionMask::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int i = 0; i < n_; ++i) {
    if (bits_ >> i & 1u) out.push_back(i + 1);
  }
  return out;
}

SetTable::SetTable(int n, std::vector<double> values, const char* kind)
    : n_(n), values_(std::move(values)) {
  check_player_count(n);
  if (values_.size() != table_size(n)) {
    throw ValidationError(std::string(kind) + " needs " + std::to_string(table_size(n)) +
                          " entries, got " + std::to_string(values_.size()));
  }
  for (std::size_t m = 0; m < values_.size(); ++m) {
    if (!std::isfinite(values_[m])) {
      throw ValidationError(std::string(kind) + " entry " + std::to_string(m) + " is not finite");
    }
  }
}

namespace {

template <class Op>
PseudoBooleanFunction combine(const PseudoBooleanFunction& f, const PseudoBooleanFunction& g,
                              Op op) {
  detail::require_same_players(f.players(), g.players(), "function arithmetic");
  std::vector<double> out(f.size());
  for (std::size_t m = 0; m < out.size(); ++m) out[m] = op(f.values()[m], g.values()[m]);
  return PseudoBooleanFunction(f.players(), std::move(out));
}

// Subset-sum butterfly. sign = +1 gives zeta, -1 gives Mobius.
std::vector<double> subset_butterfly(std::span<const double> in, int n, double sign) {
  std::vector<double> t(in.begin(), in.end());
  const std::size_t size = t.size();
  for (int i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t m = 0; m < size; ++m) {
      if (m & bit) t[m] += sign * t[m ^ bit];
    }
  }
  return t;
}

void require_domain(const CoalitionMask& s, int n) {
  detail::require_same_players(n, s.players(), "coalition");
}

}  // namespace

PseudoBooleanFunction operator+(const PseudoBooleanFunction& f, const PseudoBooleanFunction& g) {
  return combine(f, g, [](double a, double b) { return a + b; });
}

PseudoBooleanFunction operator-(const PseudoBooleanFunction& f, const PseudoBooleanFunction& g) {
  return combine(f, g, [](double a, double b) { return a - b; });
}

PseudoBooleanFunction operator*(double alpha, const PseudoBooleanFunction& f) {
  std::vector<double> out(f.values().begin(), f.values().end());
  for (double& v : out) v *= alpha;
  return PseudoBooleanFunction(f.players(), std::move(out));
}

PseudoBooleanFunction operator+(const PseudoBooleanFunction& f, double c) {
  std::vector<double> out(f.values().begin(), f.values().end());
  for (double& v : out) v += c;
  return PseudoBooleanFunction(f.players(), std::move(out));
}

MobiusRepresentation mobius(const PseudoBooleanFunction& f) {
  return MobiusRepresentation(f.players(), subset_butterfly(f.values(), f.players(), -1.0));
}

PseudoBooleanFunction zeta(const MobiusRepresentation& a) {
  return PseudoBooleanFunction(a.players(), subset_butterfly(a.values(), a.players(), 1.0));
}

double eval_multilinear_extension(const MobiusRepresentation& a, std::span<const double> x) {
  const int n = a.players();
  if (x.size() != static_cast<std::size_t>(n)) {
    throw DimensionError("point has " + std::to_string(x.size()) + " coordinates, expected " +
                         std::to_string(n));
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] >= 0.0 && x[i] <= 1.0)) {
      throw DomainError("coordinate " + std::to_string(i + 1) + " outside [0,1]");
    }
  }
  // Fold the highest coordinate first: c(m) += x_i c(m | bit_i).
  std::vector<double> c(a.values().begin(), a.values().end());
  for (int i = n - 1; i >= 0; --i) {
    const std::size_t half = std::size_t{1} << i;
    for (std::size_t m = 0; m < half; ++m) c[m] += x[static_cast<std::size_t>(i)] * c[m | half];
  }
  return c[0];
}

PseudoBooleanFunction s_difference(const PseudoBooleanFunction& f, const CoalitionMask& s) {
  require_domain(s, f.players());
  std::vector<double> g(f.values().begin(), f.values().end());
  for (int i = 0; i < f.players(); ++i) {
    const mask_t bit = mask_t{1} << i;
    if (!(s.bits() & bit)) continue;
    for (mask_t m = 0; m < g.size(); ++m) {
      if (m & bit) continue;
      const double diff = g[m | bit] - g[m];
      g[m] = diff;
      g[m | bit] = diff;
    }
  }
  return PseudoBooleanFunction(f.players(), std::move(g));
}

PseudoBooleanFunction sigma_s(const PseudoBooleanFunction& f, const CoalitionMask& s) {
  require_domain(s, f.players());
  const mask_t sb = s.bits();
  std::vector<double> g(f.size());
  for (mask_t m = 0; m < g.size(); ++m) g[m] = f[m | sb] - f[m & ~sb];
  return PseudoBooleanFunction(f.players(), std::move(g));
}

PseudoBooleanFunction unanimity_game(int n, const CoalitionMask& t) {
  require_domain(t, n);
  std::vector<double> values(table_size(n));
  for (mask_t m = 0; m < values.size(); ++m) values[m] = is_subset(t.bits(), m) ? 1.0 : 0.0;
  return PseudoBooleanFunction(n, std::move(values));
}

}  // namespace pbf
