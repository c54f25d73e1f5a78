#include "ego/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "ego/errors.hpp"

namespace ego {

// ---------------------------------------------------------------------------
// Graph

std::optional<NodeId> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeId Graph::id(std::string_view label) const {
  if (auto u = find(label)) return *u;
  throw UnknownNodeError(std::string(label));
}

bool Graph::hasEdge(NodeId u, NodeId v) const {
  if (u >= numNodes() || v >= numNodes()) return false;
  auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

double Graph::weight(NodeId u, NodeId v) const {
  if (u >= numNodes() || v >= numNodes()) return 0.0;
  auto adj = neighbors(u);
  auto it = std::lower_bound(adj.begin(), adj.end(), v);
  if (it == adj.end() || *it != v) return 0.0;
  return neighborWeights(u)[static_cast<std::size_t>(it - adj.begin())];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(numEdges_);
  for (NodeId u = 0; u < numNodes(); ++u) {
    auto adj = neighbors(u);
    auto w = neighborWeights(u);
    for (std::size_t i = 0; i < adj.size(); ++i) {
      if (adj[i] > u) out.push_back({u, adj[i], w[i]});
    }
  }
  return out;
}

void Graph::checkNodes(std::span<const NodeId> nodes) const {
  for (NodeId u : nodes) {
    if (u >= numNodes()) throw UnknownNodeError("#" + std::to_string(u));
  }
}

// ---------------------------------------------------------------------------
// Graph::Builder

Graph::Builder::Builder(const Graph& g) {
  for (NodeId u = 0; u < g.numNodes(); ++u) addNode(g.label(u));
  for (const Edge& e : g.edges()) {
    edges_[{e.u, e.v}] = g.isWeighted() ? std::optional<double>(e.weight) : std::nullopt;
  }
}

NodeId Graph::Builder::addNode(std::string_view label) {
  std::string key(label);
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  auto id = static_cast<NodeId>(labels_.size());
  labels_.push_back(key);
  index_.emplace(std::move(key), id);
  return id;
}

void Graph::Builder::addEdge(std::string_view u, std::string_view v, std::optional<double> weight) {
  if (u == v) throw ValidationError("self-loop on node '" + std::string(u) + "'");
  addEdge(addNode(u), addNode(v), weight);
}

void Graph::Builder::addEdge(NodeId u, NodeId v, std::optional<double> weight) {
  if (u >= labels_.size() || v >= labels_.size()) {
    throw UnknownNodeError("#" + std::to_string(std::max(u, v)));
  }
  if (u == v) throw ValidationError("self-loop on node '" + labels_[u] + "'");
  if (weight && !(*weight > 0.0 && *weight <= 1.0)) {
    std::ostringstream msg;
    msg << "edge weight " << *weight << " outside (0, 1]";
    throw ValidationError(msg.str());
  }
  edges_[{std::min(u, v), std::max(u, v)}] = weight;
}

void Graph::Builder::removeEdge(NodeId u, NodeId v) {
  edges_.erase({std::min(u, v), std::max(u, v)});
}

bool Graph::Builder::hasEdge(NodeId u, NodeId v) const {
  return edges_.contains({std::min(u, v), std::max(u, v)});
}

Graph Graph::Builder::build() const {
  Graph g;
  g.labels_ = labels_;
  g.index_ = index_;
  const std::size_t n = labels_.size();

  std::vector<std::size_t> degree(n, 0);
  for (const auto& [key, w] : edges_) {
    ++degree[key.first];
    ++degree[key.second];
    if (w) g.weighted_ = true;
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t u = 0; u < n; ++u) g.offsets_[u + 1] = g.offsets_[u] + degree[u];
  g.adjacency_.resize(g.offsets_[n]);
  g.weights_.resize(g.offsets_[n]);

  // edges_ is ordered by (min, max), so each list is filled in ascending order
  // for the "max" side; the "min" side needs the final sort below.
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [key, w] : edges_) {
    const double weight = w.value_or(1.0);
    g.adjacency_[cursor[key.first]] = key.second;
    g.weights_[cursor[key.first]++] = weight;
    g.adjacency_[cursor[key.second]] = key.first;
    g.weights_[cursor[key.second]++] = weight;
  }
  std::vector<std::size_t> perm;
  std::vector<NodeId> adj;
  std::vector<double> wts;
  for (std::size_t u = 0; u < n; ++u) {
    const std::size_t lo = g.offsets_[u], hi = g.offsets_[u + 1];
    perm.resize(hi - lo);
    std::iota(perm.begin(), perm.end(), lo);
    std::sort(perm.begin(), perm.end(),
              [&](std::size_t a, std::size_t b) { return g.adjacency_[a] < g.adjacency_[b]; });
    adj.clear();
    wts.clear();
    for (std::size_t i : perm) {
      adj.push_back(g.adjacency_[i]);
      wts.push_back(g.weights_[i]);
    }
    std::copy(adj.begin(), adj.end(), g.adjacency_.begin() + static_cast<std::ptrdiff_t>(lo));
    std::copy(wts.begin(), wts.end(), g.weights_.begin() + static_cast<std::ptrdiff_t>(lo));
  }
  g.numEdges_ = edges_.size();
  return g;
}

// ---------------------------------------------------------------------------
// Set helpers and triangle primitives

NodeSet makeNodeSet(std::vector<NodeId> nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

NodeSet resolveNodes(const Graph& g, std::span<const std::string> labels) {
  std::vector<NodeId> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(g.id(l));
  return makeNodeSet(std::move(out));
}

NodeSet neighborhoodOfSet(const Graph& g, const NodeSet& members) {
  g.checkNodes(members);
  std::vector<char> inSet(g.numNodes(), 0);
  for (NodeId u : members) inSet[u] = 1;
  std::vector<NodeId> out;
  for (NodeId u : members) {
    for (NodeId v : g.neighbors(u)) {
      if (!inSet[v]) out.push_back(v);
    }
  }
  return makeNodeSet(std::move(out));
}

namespace {

std::size_t intersectionSize(std::span<const NodeId> a, std::span<const NodeId> b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace

std::size_t countTrianglesOnEdge(const Graph& g, NodeId u, NodeId v) {
  if (!g.hasEdge(u, v)) {
    throw ValidationError("no edge between node indices " + std::to_string(u) + " and " +
                          std::to_string(v));
  }
  return intersectionSize(g.neighbors(u), g.neighbors(v));
}

Graph stripWeakTies(const Graph& g) {
  Graph::Builder b(g);
  for (const Edge& e : g.edges()) {
    if (intersectionSize(g.neighbors(e.u), g.neighbors(e.v)) == 0) b.removeEdge(e.u, e.v);
  }
  return b.build();
}

Graph inducedSubgraph(const Graph& g, const NodeSet& nodes) {
  g.checkNodes(nodes);
  std::vector<NodeId> order(nodes.begin(), nodes.end());
  std::sort(order.begin(), order.end(),
            [&](NodeId a, NodeId b) { return g.label(a) < g.label(b); });

  std::vector<NodeId> local(g.numNodes(), static_cast<NodeId>(-1));
  Graph::Builder b;
  for (NodeId u : order) local[u] = b.addNode(g.label(u));
  for (NodeId u : order) {
    auto adj = g.neighbors(u);
    auto w = g.neighborWeights(u);
    for (std::size_t i = 0; i < adj.size(); ++i) {
      const NodeId v = adj[i];
      if (local[v] == static_cast<NodeId>(-1) || local[v] < local[u]) continue;
      b.addEdge(local[u], local[v], g.isWeighted() ? std::optional<double>(w[i]) : std::nullopt);
    }
  }
  return b.build();
}

// ---------------------------------------------------------------------------
// Edge-list text format

namespace {

std::vector<std::string_view> splitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  auto isSep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\r'; };
  while (i < line.size()) {
    while (i < line.size() && isSep(line[i])) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !isSep(line[j])) ++j;
    fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

}  // namespace

Graph loadEdgeList(std::istream& in) {
  Graph::Builder b;
  std::string raw;
  std::size_t lineNo = 0;
  while (std::getline(in, raw)) {
    ++lineNo;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto fields = splitFields(line);
    if (fields.empty()) continue;
    if (fields.size() < 2 || fields.size() > 3) {
      throw ParseError(lineNo, "expected 'u v [w]', got " + std::to_string(fields.size()) +
                                   " field(s)");
    }
    if (fields[0] == fields[1]) {
      throw ParseError(lineNo, "self-loop on node '" + std::string(fields[0]) + "'");
    }
    std::optional<double> weight;
    if (fields.size() == 3) {
      double w = 0.0;
      auto [ptr, ec] = std::from_chars(fields[2].data(), fields[2].data() + fields[2].size(), w);
      if (ec != std::errc() || ptr != fields[2].data() + fields[2].size()) {
        throw ParseError(lineNo, "invalid weight '" + std::string(fields[2]) + "'");
      }
      weight = w;
    }
    try {
      b.addEdge(fields[0], fields[1], weight);
    } catch (const ValidationError& e) {
      throw ValidationError("line " + std::to_string(lineNo) + ": " + e.what());
    }
  }
  return b.build();
}

void saveEdgeList(const Graph& g, std::ostream& out) {
  struct Line {
    const std::string* u;
    const std::string* v;
    double w;
  };
  std::vector<Line> lines;
  lines.reserve(g.numEdges());
  for (const Edge& e : g.edges()) {
    const std::string* a = &g.label(e.u);
    const std::string* b = &g.label(e.v);
    if (*b < *a) std::swap(a, b);
    lines.push_back({a, b, e.weight});
  }
  std::sort(lines.begin(), lines.end(), [](const Line& x, const Line& y) {
    if (*x.u != *y.u) return *x.u < *y.u;
    return *x.v < *y.v;
  });
  char buf[64];
  for (const Line& l : lines) {
    out << *l.u << ' ' << *l.v;
    if (g.isWeighted()) {
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, l.w);
      out << ' ' << std::string_view(buf, static_cast<std::size_t>(ptr - buf));
    }
    out << '\n';
  }
}

}  // namespace ego
