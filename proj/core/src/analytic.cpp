#include "ego/analytic.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <string_view>

#include "ego/cohesion.hpp"
#include "ego/errors.hpp"

namespace ego {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string_view formatReal(double v, char (&buf)[64]) {
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, static_cast<std::size_t>(ptr - buf)};
}

}  // namespace

double expectedPlantedCohesion(const PlantedSpec& spec) {
  spec.validate();
  if (spec.pIn == 0.0) return 0.0;
  const double s = static_cast<double>(spec.s);
  const double g = static_cast<double>(spec.gExt);
  return std::pow(spec.pIn, 3) / (1.0 + 3.0 * spec.pOut * g / (spec.pIn * (s - 2.0)));
}

double firstPrinciplesPlantedCohesion(const PlantedSpec& spec) {
  spec.validate();
  if (spec.pIn == 0.0) return 0.0;
  const double s = static_cast<double>(spec.s);
  const double g = static_cast<double>(spec.gExt);
  return std::pow(spec.pIn, 3) /
         (1.0 + 3.0 * spec.pOut * spec.pOut * g / (spec.pIn * spec.pIn * (s - 2.0)));
}

MonteCarloEstimate monteCarloPlantedCohesion(const PlantedSpec& spec, std::size_t trials,
                                             std::uint64_t seed) {
  spec.validate();
  if (trials == 0) throw ValidationError("Monte Carlo needs at least one trial");
  double sum = 0.0, sumSq = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    const auto sample = generatePlanted(spec, splitmix64(seed ^ splitmix64(i)));
    const double c = cohesion(sample.graph, sample.planted).real();
    sum += c;
    sumSq += c * c;
  }
  MonteCarloEstimate est;
  est.trials = trials;
  const double n = static_cast<double>(trials);
  est.mean = sum / n;
  if (trials > 1) {
    const double var = std::max(0.0, (sumSq - n * est.mean * est.mean) / (n - 1.0));
    est.standardError = std::sqrt(var / n);
  }
  return est;
}

CliquePairCohesions cliquePairCohesions(const CliquePairSpec& spec) {
  spec.validate();
  const uint128 n1 = spec.n1, n2 = spec.n2, p = spec.p;
  const uint128 cube = n2 * (n2 - 1) * (n2 - 2);
  const uint128 cut = 3 * (n1 - p) * p * (p == 0 ? 0 : p - 1);
  CliquePairCohesions out;
  out.small = CohesionValue::fromRatio(cube, cube + cut);
  out.whole = CohesionValue::fromRatio(choose3(spec.n1) + choose3(spec.n2) - choose3(spec.p),
                                       choose3(spec.n1 + spec.n2 - spec.p));
  return out;
}

std::vector<DominanceCell> dominanceRegion(std::size_t n1, std::size_t n2Min, std::size_t n2Max,
                                           std::size_t pMin, std::size_t pMax) {
  std::vector<DominanceCell> cells;
  for (std::size_t n2 = std::max<std::size_t>(n2Min, 3); n2 <= std::min(n2Max, n1); ++n2) {
    for (std::size_t p = pMin; p <= std::min(pMax, n2); ++p) {
      const auto values = cliquePairCohesions({n1, n2, p});
      cells.push_back({n2, p, values, values.small >= values.whole});
    }
  }
  return cells;
}

void writeDominanceCsv(std::size_t n1, const std::vector<DominanceCell>& cells, std::ostream& out) {
  char a[64], b[64];
  out << "n1,n2,p,c_small,c_union,small_wins\n";
  for (const auto& c : cells) {
    out << n1 << ',' << c.n2 << ',' << c.p << ',' << formatReal(c.values.small.real(), a) << ','
        << formatReal(c.values.whole.real(), b) << ',' << (c.smallWins ? 1 : 0) << '\n';
  }
}

std::vector<CompatibilityPoint> compatibilitySweep(std::size_t s, std::size_t gExt,
                                                   const std::vector<double>& pIn,
                                                   const std::vector<double>& pOut,
                                                   std::size_t trials, std::uint64_t seed) {
  std::vector<CompatibilityPoint> points;
  std::uint64_t k = 0;
  for (double in : pIn) {
    for (double outP : pOut) {
      PlantedSpec spec{s, gExt, in, outP};
      points.push_back({spec, expectedPlantedCohesion(spec), firstPrinciplesPlantedCohesion(spec),
                        monteCarloPlantedCohesion(spec, trials, seed + k++)});
    }
  }
  return points;
}

void writeCompatibilityCsv(const std::vector<CompatibilityPoint>& points, std::ostream& out) {
  char b[6][64];
  out << "s,g_ext,p_in,p_out,printed_formula,first_principles,mc_mean,mc_stderr,trials\n";
  for (const auto& pt : points) {
    out << pt.spec.s << ',' << pt.spec.gExt << ',' << formatReal(pt.spec.pIn, b[0]) << ','
        << formatReal(pt.spec.pOut, b[1]) << ',' << formatReal(pt.printedFormula, b[2]) << ','
        << formatReal(pt.firstPrinciples, b[3]) << ',' << formatReal(pt.monteCarlo.mean, b[4])
        << ',' << formatReal(pt.monteCarlo.standardError, b[5]) << ',' << pt.monteCarlo.trials
        << '\n';
  }
}

}  // namespace ego
