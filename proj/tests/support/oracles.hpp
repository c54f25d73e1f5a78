#pragma once

// Brute-force reference computations used only by tests. Everything here works
// from hasEdge()/weight() queries over explicit node triples and never calls
// the library's counting, ledger or closed-form code.

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ego/graph.hpp"

namespace ego::oracle {

struct Counts {
  std::uint64_t in = 0;
  std::uint64_t out = 0;
};

/// Enumerates every node triple of the graph.
inline Counts enumerateTriangles(const Graph& g, const NodeSet& members) {
  std::vector<char> inSet(g.numNodes(), 0);
  for (NodeId v : members) inSet[v] = 1;
  Counts c;
  const auto n = static_cast<NodeId>(g.numNodes());
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      if (!g.hasEdge(a, b)) continue;
      for (NodeId d = b + 1; d < n; ++d) {
        if (!g.hasEdge(a, d) || !g.hasEdge(b, d)) continue;
        const int k = inSet[a] + inSet[b] + inSet[d];
        if (k == 3) ++c.in;
        if (k == 2) ++c.out;
      }
    }
  }
  return c;
}

struct Mass {
  double in = 0.0;
  double out = 0.0;
};

inline Mass enumerateTriangleMass(const Graph& g, const NodeSet& members) {
  std::vector<char> inSet(g.numNodes(), 0);
  for (NodeId v : members) inSet[v] = 1;
  Mass m;
  const auto n = static_cast<NodeId>(g.numNodes());
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      for (NodeId d = b + 1; d < n; ++d) {
        const double w = g.weight(a, b) * g.weight(a, d) * g.weight(b, d);
        if (w == 0.0) continue;
        const int k = inSet[a] + inSet[b] + inSet[d];
        if (k == 3) m.in += w;
        if (k == 2) m.out += w;
      }
    }
  }
  return m;
}

/// All triangles as sorted triples, for repeated membership queries.
struct TriangleList {
  std::vector<std::array<NodeId, 3>> triangles;

  explicit TriangleList(const Graph& g) {
    const auto n = static_cast<NodeId>(g.numNodes());
    for (NodeId a = 0; a < n; ++a)
      for (NodeId b = a + 1; b < n; ++b) {
        if (!g.hasEdge(a, b)) continue;
        for (NodeId d = b + 1; d < n; ++d)
          if (g.hasEdge(a, d) && g.hasEdge(b, d)) triangles.push_back({a, b, d});
      }
  }

  Counts count(const std::vector<char>& inSet) const {
    Counts c;
    for (const auto& t : triangles) {
      const int k = inSet[t[0]] + inSet[t[1]] + inSet[t[2]];
      if (k == 3) ++c.in;
      if (k == 2) ++c.out;
    }
    return c;
  }
};

/// Reduced fraction num/den as a pair of 128-bit integers.
inline std::pair<unsigned __int128, unsigned __int128> reduce(unsigned __int128 a,
                                                              unsigned __int128 b) {
  unsigned __int128 x = a, y = b;
  while (y != 0) {
    auto t = x % y;
    x = y;
    y = t;
  }
  if (x == 0) return {0, 1};
  return {a / x, b / x};
}

/// tri_in^2 / (C(n,3) (tri_in + tri_out)), zero for degenerate sets, reduced.
inline std::pair<unsigned __int128, unsigned __int128> cohesionFraction(Counts c, std::uint64_t n) {
  if (n < 3 || c.in == 0) return {0, 1};
  unsigned __int128 triples = 0;
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = a + 1; b < n; ++b) triples += n - b - 1;
  return reduce(static_cast<unsigned __int128>(c.in) * c.in, triples * (c.in + c.out));
}

/// Center "u" adjacent to `k` neighbors n00.. with i.i.d. edges among them.
inline Graph randomEgoGraph(std::size_t k, double prob, std::mt19937_64& rng) {
  Graph::Builder b;
  b.addNode("u");
  std::vector<NodeId> nbrs;
  for (std::size_t i = 0; i < k; ++i) {
    std::string label = "n" + std::string(i < 10 ? "0" : "") + std::to_string(i);
    nbrs.push_back(b.addNode(label));
    b.addEdge(0, nbrs.back());
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (unit(rng) < prob) b.addEdge(nbrs[i], nbrs[j]);
  return b.build();
}

}  // namespace ego::oracle
