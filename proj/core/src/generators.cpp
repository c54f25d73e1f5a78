#include "ego/generators.hpp"

#include <random>
#include <string>

#include "ego/errors.hpp"

namespace ego {

namespace {

// Bit-level uniform draw so that graphs are identical across standard libraries.
bool coin(std::mt19937_64& rng, double prob) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return u < prob;
}

void checkProbability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError(std::string(name) + " must lie in [0, 1], got " + std::to_string(p));
  }
}

}  // namespace

void PlantedSpec::validate() const {
  if (s < 3) throw ValidationError("planted set size must be at least 3");
  checkProbability(pIn, "p_in");
  checkProbability(pOut, "p_out");
}

void CliquePairSpec::validate() const {
  if (n2 < 3) throw ValidationError("n2 must be at least 3");
  if (n1 < n2) throw ValidationError("n1 must be at least n2");
  if (p > n2) throw ValidationError("p must not exceed n2");
}

PlantedGraph generatePlanted(const PlantedSpec& spec, std::uint64_t seed) {
  spec.validate();
  std::mt19937_64 rng(seed);
  Graph::Builder b;
  std::vector<NodeId> planted;
  for (std::size_t i = 0; i < spec.s; ++i) planted.push_back(b.addNode("s" + std::to_string(i)));
  std::vector<NodeId> external;
  for (std::size_t i = 0; i < spec.gExt; ++i) external.push_back(b.addNode("x" + std::to_string(i)));

  for (std::size_t i = 0; i < spec.s; ++i) {
    for (std::size_t j = i + 1; j < spec.s; ++j) {
      if (coin(rng, spec.pIn)) b.addEdge(planted[i], planted[j]);
    }
  }
  for (NodeId x : external) {
    for (NodeId v : planted) {
      if (coin(rng, spec.pOut)) b.addEdge(x, v);
    }
  }
  return {b.build(), makeNodeSet(std::move(planted))};
}

CliquePairGraph generateTwoCliques(const CliquePairSpec& spec) {
  spec.validate();
  const std::size_t total = spec.n1 + spec.n2 - spec.p;
  Graph::Builder b;
  for (std::size_t i = 0; i < total; ++i) b.addNode(std::to_string(i));

  std::vector<NodeId> first, second;
  for (std::size_t i = 0; i < spec.n1; ++i) first.push_back(static_cast<NodeId>(i));
  for (std::size_t i = spec.n1 - spec.p; i < total; ++i) second.push_back(static_cast<NodeId>(i));
  for (const auto* clique : {&first, &second}) {
    for (std::size_t i = 0; i < clique->size(); ++i) {
      for (std::size_t j = i + 1; j < clique->size(); ++j) b.addEdge((*clique)[i], (*clique)[j]);
    }
  }
  return {b.build(), std::move(first), std::move(second)};
}

Graph generateRandom(std::size_t n, double prob, std::uint64_t seed) {
  checkProbability(prob, "edge probability");
  std::mt19937_64 rng(seed);
  Graph::Builder b;
  for (std::size_t i = 0; i < n; ++i) b.addNode("v" + std::to_string(i));
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      if (coin(rng, prob)) b.addEdge(i, j);
    }
  }
  return b.build();
}

}  // namespace ego
