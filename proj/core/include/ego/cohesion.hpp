#pragma once

#include <cstdint>

#include "ego/cohesion_value.hpp"
#include "ego/graph.hpp"

namespace ego {

/// Triangle counts for a node set S.
struct TriangleCounts {
  std::uint64_t in = 0;   ///< triangles with all three nodes in S
  std::uint64_t out = 0;  ///< triangles with exactly two nodes in S

  friend bool operator==(const TriangleCounts&, const TriangleCounts&) = default;
};

/// Counts inbound and outbound triangles of `members`. Triangles with a single
/// node in the set do not count. Throws UnknownNodeError for bad indices.
TriangleCounts countTriangles(const Graph& g, const NodeSet& members);

inline std::uint64_t triIn(const Graph& g, const NodeSet& members) {
  return countTriangles(g, members).in;
}
inline std::uint64_t triOut(const Graph& g, const NodeSet& members) {
  return countTriangles(g, members).out;
}

/// Triangular density times the fraction of set-touching triangles kept
/// inside; zero for sets smaller than three or without inbound triangles.
CohesionValue cohesion(const Graph& g, const NodeSet& members);

struct TriangleMass {
  double in = 0.0;
  double out = 0.0;
};

/// Weighted triangle sums, each triangle weighted by the product of its three
/// edge weights. Sums run over unordered triples (in) and over unordered pairs
/// inside S with an outside apex (out), so 0/1 weights give the plain counts.
TriangleMass weightedTriangleMass(const Graph& g, const NodeSet& members);

/// Real-valued cohesion computed from the weighted triangle masses.
double weightedCohesion(const Graph& g, const NodeSet& members);

/// Cohesion formula over real-valued masses; zero when size < 3 or in <= 0.
double cohesionFromMass(double in, double out, std::uint64_t size);

}  // namespace ego
