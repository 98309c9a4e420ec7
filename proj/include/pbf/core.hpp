#pragma once

// Dense set-function representations and the exact subset-lattice transforms.
//
// Coalitions are bitmasks: bit i is set iff player i+1 belongs to the
// coalition. Tables are indexed by mask, so values[m] is the worth of the
// coalition encoded by m.

#include <pbf/errors.hpp>

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace pbf {

using mask_t = std::uint32_t;

inline constexpr int kMaxPlayers = 24;

inline constexpr std::size_t table_size(int n) { return std::size_t{1} << n; }

inline int cardinality(mask_t m) { return std::popcount(m); }

inline constexpr mask_t full_mask(int n) { return static_cast<mask_t>(table_size(n) - 1); }

inline constexpr bool is_subset(mask_t sub, mask_t super) { return (sub & ~super) == 0; }

/// Throws ValidationError unless 1 <= n <= kMaxPlayers.
void check_player_count(int n);

/// A subset of N = {1, ..., n}.
class CoalitionMask {
public:
  CoalitionMask(int n, mask_t bits);

  static CoalitionMask empty(int n) { return CoalitionMask(n, 0); }
  static CoalitionMask full(int n) { return CoalitionMask(n, full_mask(n)); }
  /// Players are 1-based; duplicates are tolerated.
  static CoalitionMask from_players(int n, std::span<const int> players);
  static CoalitionMask from_players(int n, std::initializer_list<int> players) {
    return from_players(n, std::span<const int>(players.begin(), players.size()));
  }

  mask_t bits() const noexcept { return bits_; }
  int players() const noexcept { return n_; }
  int size() const noexcept { return cardinality(bits_); }
  bool is_empty() const noexcept { return bits_ == 0; }
  bool contains(int player) const noexcept {
    return player >= 1 && player <= n_ && (bits_ >> (player - 1) & 1u) != 0;
  }
  bool is_subset_of(const CoalitionMask& other) const;

  CoalitionMask complement() const { return CoalitionMask(n_, full_mask(n_) & ~bits_); }
  CoalitionMask operator|(const CoalitionMask& other) const;
  CoalitionMask operator&(const CoalitionMask& other) const;
  CoalitionMask operator-(const CoalitionMask& other) const;

  /// Sorted 1-based member list.
  std::vector<int> members() const;

  friend bool operator==(const CoalitionMask&, const CoalitionMask&) = default;

private:
  int n_;
  mask_t bits_;
};

/// Common storage for the two dense 2^n tables.
class SetTable {
public:
  int players() const noexcept { return n_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](mask_t m) const { return values_[m]; }
  double operator[](const CoalitionMask& m) const { return values_[m.bits()]; }
  std::span<const double> values() const noexcept { return values_; }

protected:
  SetTable(int n, std::vector<double> values, const char* kind);

private:
  int n_;
  std::vector<double> values_;
};

/// f: {0,1}^n -> R stored as the set function T -> f(T).
class PseudoBooleanFunction : public SetTable {
public:
  PseudoBooleanFunction(int n, std::vector<double> values)
      : SetTable(n, std::move(values), "pseudo-Boolean function") {}

  static PseudoBooleanFunction constant(int n, double c) {
    return PseudoBooleanFunction(n, std::vector<double>(table_size(n), c));
  }
};

/// Coefficients a(T) of f = sum_T a(T) u_T.
class MobiusRepresentation : public SetTable {
public:
  MobiusRepresentation(int n, std::vector<double> coeffs)
      : SetTable(n, std::move(coeffs), "Mobius representation") {}
};

PseudoBooleanFunction operator+(const PseudoBooleanFunction& f, const PseudoBooleanFunction& g);
PseudoBooleanFunction operator-(const PseudoBooleanFunction& f, const PseudoBooleanFunction& g);
PseudoBooleanFunction operator*(double alpha, const PseudoBooleanFunction& f);
PseudoBooleanFunction operator+(const PseudoBooleanFunction& f, double c);

/// a(S) = sum_{T subset S} (-1)^{|S|-|T|} f(T), by the in-place butterfly in O(n 2^n).
MobiusRepresentation mobius(const PseudoBooleanFunction& f);

/// f(S) = sum_{T subset S} a(T); inverse of mobius().
PseudoBooleanFunction zeta(const MobiusRepresentation& a);

/// Owen's multilinear extension sum_S a(S) prod_{i in S} x_i, evaluated in O(2^n).
/// Throws DomainError unless every x_i lies in [0,1].
double eval_multilinear_extension(const MobiusRepresentation& a, std::span<const double> x);

/// Iterated discrete derivative Delta_S f. The result does not depend on the
/// S coordinates: g(T) = g(T \ S) for every T.
PseudoBooleanFunction s_difference(const PseudoBooleanFunction& f, const CoalitionMask& s);

/// sigma_S f(x) = f(x | x_S = 1) - f(x | x_S = 0), stored like s_difference.
PseudoBooleanFunction sigma_s(const PseudoBooleanFunction& f, const CoalitionMask& s);

/// u_T(S) = 1 iff T subset S; u_empty == 1.
PseudoBooleanFunction unanimity_game(int n, const CoalitionMask& t);

namespace detail {

void require_same_players(int expected, int actual, const char* what);

}  // namespace detail

}  // namespace pbf
