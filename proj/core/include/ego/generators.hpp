#pragma once

#include <cstdint>

#include "ego/graph.hpp"

namespace ego {

/// Random s-node set with internal edge probability p_in, plus g_ext
/// external nodes each linked to each planted node with probability p_out.
/// External nodes are never linked to each other.
struct PlantedSpec {
  std::size_t s = 3;
  std::size_t gExt = 0;
  double pIn = 0.0;
  double pOut = 0.0;

  /// Throws ValidationError when s < 3 or a probability leaves [0, 1].
  void validate() const;
};

/// Two cliques of sizes n1 >= n2 sharing exactly p nodes.
struct CliquePairSpec {
  std::size_t n1 = 3;
  std::size_t n2 = 3;
  std::size_t p = 0;

  void validate() const;
};

struct PlantedGraph {
  Graph graph;
  NodeSet planted;
};

struct CliquePairGraph {
  Graph graph;
  NodeSet first;
  NodeSet second;
};

/// Planted nodes are labelled s0.., externals x0... Deterministic per seed.
PlantedGraph generatePlanted(const PlantedSpec& spec, std::uint64_t seed);

/// Nodes are labelled by decimal index; the first clique is [0, n1), the
/// second is [n1 - p, n1 - p + n2).
CliquePairGraph generateTwoCliques(const CliquePairSpec& spec);

/// Erdos-Renyi G(n, prob) with labels v0.., deterministic per seed.
Graph generateRandom(std::size_t n, double prob, std::uint64_t seed);

}  // namespace ego
