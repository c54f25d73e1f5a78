#include "ego/ego_context.hpp"

namespace ego {

EgoContext::EgoContext(const Graph& g, NodeId center) {
  g.checkNodes(std::span<const NodeId>(&center, 1));
  std::vector<NodeId> nodes(g.neighbors(center).begin(), g.neighbors(center).end());
  nodes.push_back(center);
  graph_ = inducedSubgraph(g, makeNodeSet(std::move(nodes)));
  center_ = graph_.id(g.label(center));

  inducedDegree_.assign(graph_.numNodes(), 0);
  for (NodeId v = 0; v < graph_.numNodes(); ++v) {
    if (v == center_) continue;
    neighbors_.push_back(v);
    // every node is adjacent to the center, so this is deg(v) minus the center edge
    inducedDegree_[v] = graph_.degree(v) - 1;
  }
}

}  // namespace ego
