#pragma once

#include <string_view>
#include <vector>

#include "ego/graph.hpp"

namespace ego {

/// The induced subgraph on a center node and its direct neighbors.
///
/// Nodes are re-indexed in label order, so a smaller local index always
/// means a lexicographically smaller label. `inducedDegree(v)` counts the
/// neighbors of v among the center's neighbors, i.e. the number of
/// triangles v forms with the center.
class EgoContext {
 public:
  EgoContext(const Graph& g, NodeId center);
  EgoContext(const Graph& g, std::string_view center) : EgoContext(g, g.id(center)) {}

  const Graph& graph() const noexcept { return graph_; }
  NodeId center() const noexcept { return center_; }
  const std::string& label(NodeId local) const { return graph_.label(local); }

  /// Local ids of every node except the center, ascending.
  const NodeSet& neighbors() const noexcept { return neighbors_; }
  std::size_t inducedDegree(NodeId local) const { return inducedDegree_.at(local); }

 private:
  Graph graph_;
  NodeId center_ = 0;
  NodeSet neighbors_;
  std::vector<std::size_t> inducedDegree_;
};

}  // namespace ego
