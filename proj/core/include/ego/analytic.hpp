#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ego/cohesion_value.hpp"
#include "ego/generators.hpp"

namespace ego {

/// Closed-form cohesion of a planted random set:
///   p_in^3 / (1 + 3 p_out g_ext / (p_in (s - 2)))
/// Zero when p_in is zero.
double expectedPlantedCohesion(const PlantedSpec& spec);

/// Ratio-of-expectations estimate built from E[tri_in] = C(s,3) p_in^3 and
/// E[tri_out] = g_ext C(s,2) p_in p_out^2:
///   p_in^3 / (1 + 3 p_out^2 g_ext / (p_in^2 (s - 2)))
double firstPrinciplesPlantedCohesion(const PlantedSpec& spec);

struct MonteCarloEstimate {
  double mean = 0.0;
  double standardError = 0.0;  ///< sample standard deviation / sqrt(trials); 0 for one trial
  std::size_t trials = 0;
};

/// Mean exact cohesion of the planted set over `trials` generated graphs.
/// Trial i uses a seed derived from (seed, i), so results are reproducible.
MonteCarloEstimate monteCarloPlantedCohesion(const PlantedSpec& spec, std::size_t trials,
                                             std::uint64_t seed);

struct CliquePairCohesions {
  CohesionValue small;  ///< cohesion of the smaller clique S2
  CohesionValue whole;  ///< cohesion of S1 ∪ S2
};

/// Exact closed forms for two cliques sharing p nodes:
///   C(S2)       = 1 / (1 + 3 (n1 - p) p (p - 1) / (n2 (n2 - 1) (n2 - 2)))
///   C(S1 ∪ S2)  = (C(n1,3) + C(n2,3) - C(p,3)) / C(n1 + n2 - p, 3)
/// The first denominator uses n2: tri_in(S2) = C(n2,3) and
/// tri_out(S2) = (n1 - p) C(p,2).
CliquePairCohesions cliquePairCohesions(const CliquePairSpec& spec);

struct DominanceCell {
  std::size_t n2;
  std::size_t p;
  CliquePairCohesions values;
  bool smallWins;  ///< C(S2) >= C(S1 ∪ S2)
};

/// Grid over n2 in [n2Min, n2Max] and p in [pMin, min(pMax, n2)].
/// Points violating the clique-pair invariants are skipped.
std::vector<DominanceCell> dominanceRegion(std::size_t n1, std::size_t n2Min, std::size_t n2Max,
                                           std::size_t pMin, std::size_t pMax);

/// CSV: n1,n2,p,c_small,c_union,small_wins
void writeDominanceCsv(std::size_t n1, const std::vector<DominanceCell>& cells, std::ostream& out);

struct CompatibilityPoint {
  PlantedSpec spec;
  double printedFormula;
  double firstPrinciples;
  MonteCarloEstimate monteCarlo;
};

/// Evaluates both closed forms and a Monte Carlo estimate for each
/// (p_in, p_out) pair. Grid point k uses seed + k.
std::vector<CompatibilityPoint> compatibilitySweep(std::size_t s, std::size_t gExt,
                                                   const std::vector<double>& pIn,
                                                   const std::vector<double>& pOut,
                                                   std::size_t trials, std::uint64_t seed);

/// CSV: s,g_ext,p_in,p_out,printed_formula,first_principles,mc_mean,mc_stderr,trials
void writeCompatibilityCsv(const std::vector<CompatibilityPoint>& points, std::ostream& out);

}  // namespace ego
