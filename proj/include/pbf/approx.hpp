#pragma once

// Weighted least-squares approximation by orthogonal projection onto the
// v_{T,p} basis.

#include <pbf/core.hpp>
#include <pbf/measure.hpp>

#include <map>
#include <variant>

namespace pbf {

/// Approximant restricted to functions of the players in `subset`.
struct SubsetTarget {
  CoalitionMask subset;
};

/// Approximant of multilinear degree at most `degree`.
struct DegreeTarget {
  int degree;
};

using ApproximationTarget = std::variant<SubsetTarget, DegreeTarget>;

struct Approximation {
  int players;
  ApproximationTarget target;
  ProbabilityProfile profile;
  /// T -> <f, v_{T,p}> over the included T (ordered by mask).
  std::map<mask_t, double> fourier;
  /// Unanimity-basis coefficients of the approximant.
  MobiusRepresentation multilinear;

  /// The approximant as a value table.
  PseudoBooleanFunction values() const { return zeta(multilinear); }
};

/// f_{S,p} = sum_{T subset S} <f, v_{T,p}> v_{T,p}, the minimiser of the
/// w-weighted squared distance over functions of the S players.
Approximation best_s_approximation(const PseudoBooleanFunction& f, const CoalitionMask& s,
                                   const ProbabilityProfile& p);

/// sum_{|T| <= k} <f, v_{T,p}> v_{T,p}. Requires 0 <= k <= n.
Approximation best_k_approximation(const PseudoBooleanFunction& f, int k,
                                   const ProbabilityProfile& p);

/// Re-expands approx.fourier into the unanimity basis.
MobiusRepresentation to_multilinear(const Approximation& approx);

/// Same expansion for an arbitrary coefficient map.
MobiusRepresentation expand_fourier(const std::map<mask_t, double>& fourier,
                                    const ProbabilityProfile& p);

/// sum_T w(T) (f(T) - g(T))^2 where g is the approximant.
double residual_norm(const PseudoBooleanFunction& f, const Approximation& approx,
                     const ProbabilityProfile& p);

}  // namespace pbf
