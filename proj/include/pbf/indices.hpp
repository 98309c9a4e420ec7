#pragma once

// Banzhaf-type power, interaction and influence indexes, the Shapley
// generalized value, and the generalized-value coefficient calculus.

#include <pbf/core.hpp>
#include <pbf/measure.hpp>

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pbf {

/// Four algebraically equivalent ways to compute the weighted influence.
enum class InfluenceMethod {
  projection,     ///< f_{S,p}(S) - f_{S,p}(empty) from the best S-approximation
  mobius,         ///< sum_{T meets S} a(T) prod_{T\S} p_i
  average,        ///< generalized value with p_T^S = Pr(T subset C subset S u T)
  inner_product,  ///< <f, g_{S,p}>
};

/// Weighted Banzhaf interaction index I_{B,p}(f,S) = sum_{T supset S} a(T) prod_{T\S} p_i.
double banzhaf_interaction(const PseudoBooleanFunction& f, const CoalitionMask& s,
                           const ProbabilityProfile& p);

/// Weighted Banzhaf influence index Phi_{B,p}(f,S).
double banzhaf_influence(const PseudoBooleanFunction& f, const CoalitionMask& s,
                         const ProbabilityProfile& p,
                         InfluenceMethod method = InfluenceMethod::mobius);

/// Phi_{B,p}(f,S) rebuilt from the interaction indexes of the subsets of S.
double influence_interaction_expansion(const PseudoBooleanFunction& f, const CoalitionMask& s,
                                       const ProbabilityProfile& p);

/// sum_{T meets S} a(T) / (|T\S| + 1); equals the integral of the influence
/// over the diagonal profiles (p, ..., p).
double shapley_generalized_value(const PseudoBooleanFunction& f, const CoalitionMask& s);

/// Average spread max_R f(T u R) - min_R f(T u R), R subset S, over uniform T subset N\S.
double ben_or_linial_influence(const PseudoBooleanFunction& f, const CoalitionMask& s);

/// g_{S,p}(x) = prod_{i in S} x_i / p_i - prod_{i in S} (1 - x_i) / (1 - p_i).
PseudoBooleanFunction g_function(const CoalitionMask& s, const ProbabilityProfile& p);

/// Closed-form standard deviation of g_{S,p}. EmptySubset for S = empty.
double g_function_stddev(const CoalitionMask& s, const ProbabilityProfile& p);

/// Pearson correlation between f and g_{S,p}, clamped to [-1, 1].
/// Throws EmptySubset for S = empty and DegenerateFunction if sigma(f) <= 1e-12.
double normalized_influence(const PseudoBooleanFunction& f, const CoalitionMask& s,
                            const ProbabilityProfile& p);

/// sum_S I(S) prod_{i in S} (x_i - p_i) at every vertex. The map must hold all
/// 2^n subsets; IncompleteTable otherwise.
PseudoBooleanFunction taylor_reconstruct(const std::map<mask_t, double>& interactions,
                                         const ProbabilityProfile& p);

inline constexpr double kDegenerateStddev = 1e-12;

// Generalized values ---------------------------------------------------------

enum class CoefficientForm {
  p_form,  ///< keys T subset N\S, G(f,S) = sum_T p_T^S (f(T u S) - f(T))
  q_form,  ///< keys R meeting S, G(f,S) = sum_R q_R^S a(R)
};

struct GeneralizedValueCoefficients {
  CoalitionMask subset;
  CoefficientForm form;
  std::map<mask_t, double> table;

  int players() const noexcept { return subset.players(); }
};

/// p_T^S = prod_{i in T} p_i prod_{i in N\(S u T)} (1 - p_i), the coefficients
/// that make the weighted influence a generalized value.
GeneralizedValueCoefficients influence_coefficients(const CoalitionMask& s,
                                                    const ProbabilityProfile& p);

/// q_R^S = sum_{R\S subset T subset N\S} p_T^S.
GeneralizedValueCoefficients gv_p_to_q(const GeneralizedValueCoefficients& coeffs);

/// p_T^S = sum_{T subset R subset N\S} (-1)^{|R|-|T|} q_{R u S}^S. The q-form must
/// depend only on R\S (within 1e-12); InvalidCoefficients otherwise. EmptySubset
/// for S = empty, where the q-form carries no information.
GeneralizedValueCoefficients gv_q_to_p(const GeneralizedValueCoefficients& coeffs);

/// Evaluates G(f,S) from either coefficient form.
double generalized_value(const PseudoBooleanFunction& f,
                         const GeneralizedValueCoefficients& coeffs);

// Cached evaluation ----------------------------------------------------------

/// Holds one game and its Mobius transform; every index query reuses it.
class GameIndices {
public:
  explicit GameIndices(PseudoBooleanFunction f);

  const PseudoBooleanFunction& function() const noexcept { return f_; }
  const MobiusRepresentation& transform() const noexcept { return a_; }
  int players() const noexcept { return f_.players(); }

  double interaction(const CoalitionMask& s, const ProbabilityProfile& p) const;
  double influence(const CoalitionMask& s, const ProbabilityProfile& p) const;
  double shapley(const CoalitionMask& s) const;

  /// Dense tables over all 2^n subsets, O(n 2^n) each.
  std::vector<double> all_interactions(const ProbabilityProfile& p) const;
  std::vector<double> all_influences(const ProbabilityProfile& p) const;
  /// O(n^2 2^n) time, O(n 2^n) memory.
  std::vector<double> all_shapley() const;

private:
  PseudoBooleanFunction f_;
  MobiusRepresentation a_;
};

// Reports --------------------------------------------------------------------

struct IndexRecord {
  CoalitionMask subset;
  double interaction;
  double influence;
  double shapley;
  /// Absent for S = empty or a degenerate f.
  std::optional<double> normalized;
};

struct IndexReport {
  std::string game_id;
  ProbabilityProfile profile;
  std::vector<IndexRecord> records;
};

IndexReport build_index_report(const GameIndices& game, std::string game_id,
                               const ProbabilityProfile& p,
                               std::span<const CoalitionMask> subsets);

}  // namespace pbf
