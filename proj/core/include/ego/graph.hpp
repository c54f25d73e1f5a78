#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ego {

using NodeId = std::uint32_t;

/// Sorted, duplicate-free list of dense node indices.
using NodeSet = std::vector<NodeId>;

struct Edge {
  NodeId u;
  NodeId v;
  double weight;
};

/// Undirected simple graph over dense indices with external string labels.
///
/// Adjacency lists are sorted by index. A graph is weighted when any edge
/// was given an explicit weight; edges without one then carry weight 1.
/// Instances are immutable once built and safe to share between readers.
class Graph {
 public:
  class Builder;

  Graph() = default;

  std::size_t numNodes() const noexcept { return labels_.size(); }
  std::size_t numEdges() const noexcept { return numEdges_; }
  bool isWeighted() const noexcept { return weighted_; }

  const std::string& label(NodeId u) const { return labels_.at(u); }
  std::optional<NodeId> find(std::string_view label) const;
  /// Index of `label`; throws UnknownNodeError.
  NodeId id(std::string_view label) const;

  std::span<const NodeId> neighbors(NodeId u) const {
    return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
  }
  /// Weights parallel to neighbors(u); every entry is 1 for unweighted graphs.
  std::span<const double> neighborWeights(NodeId u) const {
    return {weights_.data() + offsets_[u], weights_.data() + offsets_[u + 1]};
  }
  std::size_t degree(NodeId u) const { return offsets_[u + 1] - offsets_[u]; }

  bool hasEdge(NodeId u, NodeId v) const;
  /// W(u, v); 0 when the edge is absent.
  double weight(NodeId u, NodeId v) const;

  /// Edges with u < v, ordered by (u, v).
  std::vector<Edge> edges() const;

  /// Throws UnknownNodeError if any index is out of range.
  void checkNodes(std::span<const NodeId> nodes) const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> adjacency_;
  std::vector<double> weights_;
  std::size_t numEdges_ = 0;
  bool weighted_ = false;
};

class Graph::Builder {
 public:
  Builder() = default;
  /// Starts from a copy of `g` (labels, edges and weights).
  explicit Builder(const Graph& g);

  NodeId addNode(std::string_view label);
  /// Adds or overwrites an undirected edge. Self-loops throw ValidationError;
  /// weights must lie in (0, 1].
  void addEdge(std::string_view u, std::string_view v, std::optional<double> weight = std::nullopt);
  void addEdge(NodeId u, NodeId v, std::optional<double> weight = std::nullopt);
  void removeEdge(NodeId u, NodeId v);
  bool hasEdge(NodeId u, NodeId v) const;

  std::size_t numNodes() const noexcept { return labels_.size(); }

  Graph build() const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  // key: (min, max) endpoint; value: weight (nullopt = unweighted)
  std::map<std::pair<NodeId, NodeId>, std::optional<double>> edges_;
};

/// Converts labels to a sorted NodeSet; throws UnknownNodeError naming the first miss.
NodeSet resolveNodes(const Graph& g, std::span<const std::string> labels);

/// Sorts and deduplicates in place, returning the result.
NodeSet makeNodeSet(std::vector<NodeId> nodes);

/// N(G, S): nodes outside S adjacent to at least one member.
NodeSet neighborhoodOfSet(const Graph& g, const NodeSet& members);

/// |N(u) ∩ N(v)| for an existing edge; throws ValidationError if (u, v) is not an edge.
std::size_t countTrianglesOnEdge(const Graph& g, NodeId u, NodeId v);

/// Drops every edge that belongs to no triangle (weak ties). Node set is kept.
Graph stripWeakTies(const Graph& g);

/// Induced subgraph on `nodes`. Local indices follow the label order of the
/// chosen nodes, so comparing local indices compares labels.
Graph inducedSubgraph(const Graph& g, const NodeSet& nodes);

/// Parses `u v [w]` lines (whitespace or comma separated, `#` comments).
/// Repeated edges collapse with the last weight winning.
Graph loadEdgeList(std::istream& in);
/// Writes `u v [w]` lines with u < v by label, sorted lexicographically.
void saveEdgeList(const Graph& g, std::ostream& out);

}  // namespace ego
