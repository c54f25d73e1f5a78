#include "ego/cohesion.hpp"

#include <vector>

namespace ego {

namespace {

// Walks every triangle {a, b, c} that has at least two corners in the set,
// reporting each once together with the number of corners inside.
template <typename Visit>
void forEachTouchingTriangle(const Graph& g, const NodeSet& members, Visit&& visit) {
  g.checkNodes(members);
  std::vector<char> inSet(g.numNodes(), 0);
  for (NodeId u : members) inSet[u] = 1;

  // Each qualifying triangle is enumerated from its smallest in-set edge (a, b),
  // a < b, with apex c. Triangles fully inside are taken only when c > b.
  std::vector<double> mark(g.numNodes(), 0.0);
  for (NodeId a : members) {
    auto adjA = g.neighbors(a);
    auto wA = g.neighborWeights(a);
    for (std::size_t i = 0; i < adjA.size(); ++i) mark[adjA[i]] = wA[i];

    for (std::size_t i = 0; i < adjA.size(); ++i) {
      const NodeId b = adjA[i];
      if (b <= a || !inSet[b]) continue;
      auto adjB = g.neighbors(b);
      auto wB = g.neighborWeights(b);
      for (std::size_t j = 0; j < adjB.size(); ++j) {
        const NodeId c = adjB[j];
        if (mark[c] == 0.0) continue;
        const double w = wA[i] * wB[j] * mark[c];
        if (inSet[c]) {
          if (c > b) visit(3, w);
        } else {
          visit(2, w);
        }
      }
    }
    for (NodeId v : adjA) mark[v] = 0.0;
  }
}

}  // namespace

TriangleCounts countTriangles(const Graph& g, const NodeSet& members) {
  TriangleCounts counts;
  forEachTouchingTriangle(g, members, [&](int inside, double) {
    if (inside == 3) {
      ++counts.in;
    } else {
      ++counts.out;
    }
  });
  return counts;
}

CohesionValue cohesion(const Graph& g, const NodeSet& members) {
  const TriangleCounts c = countTriangles(g, members);
  return CohesionValue::fromCounts(c.in, c.out, members.size());
}

TriangleMass weightedTriangleMass(const Graph& g, const NodeSet& members) {
  TriangleMass mass;
  forEachTouchingTriangle(g, members, [&](int inside, double w) {
    if (inside == 3) {
      mass.in += w;
    } else {
      mass.out += w;
    }
  });
  return mass;
}

double cohesionFromMass(double in, double out, std::uint64_t size) {
  if (size < 3 || !(in > 0.0)) return 0.0;
  const double n = static_cast<double>(size);
  const double density = in / (n * (n - 1.0) * (n - 2.0) / 6.0);
  return density * (in / (in + out));
}

double weightedCohesion(const Graph& g, const NodeSet& members) {
  const TriangleMass m = weightedTriangleMass(g, members);
  return cohesionFromMass(m.in, m.out, members.size());
}

}  // namespace ego
