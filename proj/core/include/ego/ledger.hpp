#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include "ego/cohesion.hpp"
#include "ego/cohesion_value.hpp"
#include "ego/ego_context.hpp"
#include "ego/errors.hpp"

namespace ego {

/// Incremental state of one greedy expansion inside an ego context.
///
/// Tracks tri_in/tri_out of the current member set and, for every candidate
/// (a non-member adjacent to some member), the exact change I(v) of tri_in
/// and O(v) of tri_out that adding v would cause. Adding v touches only the
/// non-member neighbors of v.
///
/// `Mass` is std::int64_t for plain triangle counts (scores are exact
/// CohesionValue) or double for weighted triangle masses (scores are real).
template <typename Mass>
class BasicExpansionLedger {
  static_assert(std::is_same_v<Mass, std::int64_t> || std::is_same_v<Mass, double>);

 public:
  static constexpr bool kWeighted = std::is_same_v<Mass, double>;
  using Score = std::conditional_t<kWeighted, double, CohesionValue>;

  /// Members start as {center, seed}. Throws ValidationError if `seed` is the
  /// center and UnknownNodeError if it is out of range.
  BasicExpansionLedger(const EgoContext& ctx, NodeId seed)
      : ctx_(&ctx),
        member_(ctx.graph().numNodes(), 0),
        memberNeighbors_(ctx.graph().numNodes(), 0),
        in_(ctx.graph().numNodes(), Mass{}),
        out_(ctx.graph().numNodes(), Mass{}),
        mark_(ctx.graph().numNodes(), 0.0) {
    const Graph& g = ctx.graph();
    g.checkNodes(std::span<const NodeId>(&seed, 1));
    if (seed == ctx.center()) {
      throw ValidationError("seed '" + g.label(seed) + "' is the center, not a neighbor");
    }

    // Members = {center}: no inbound triangles yet; a neighbor x would turn
    // every triangle (center, x, y) into an outbound one.
    const NodeId c = ctx.center();
    member_[c] = 1;
    members_.push_back(c);
    markNeighbors(c);
    for (NodeId x : g.neighbors(c)) {
      ++memberNeighbors_[x];
      auto adj = g.neighbors(x);
      auto w = g.neighborWeights(x);
      const double wcx = mark_[x];
      for (std::size_t i = 0; i < adj.size(); ++i) {
        if (mark_[adj[i]] > 0.0) out_[x] += product(wcx, mark_[adj[i]], w[i]);
      }
    }
    clearMarks(c);
    add(seed);
  }

  const EgoContext& context() const noexcept { return *ctx_; }
  /// Sorted member list, always containing the center.
  const NodeSet& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool isMember(NodeId v) const { return v < member_.size() && member_[v]; }
  bool isCandidate(NodeId v) const {
    return v < member_.size() && !member_[v] && memberNeighbors_[v] > 0;
  }

  /// Candidates in ascending index (label) order.
  NodeSet candidates() const {
    NodeSet out;
    for (NodeId v = 0; v < member_.size(); ++v) {
      if (isCandidate(v)) out.push_back(v);
    }
    return out;
  }

  Mass triIn() const noexcept { return triIn_; }
  Mass triOut() const noexcept { return triOut_; }
  Mass inboundDelta(NodeId v) const {
    requireCandidate(v);
    return in_[v];
  }
  Mass outboundDelta(NodeId v) const {
    requireCandidate(v);
    return out_[v];
  }

  Score current() const { return score(triIn_, triOut_, members_.size()); }

  /// Cohesion of members ∪ {v}, from cached counts only.
  Score prospective(NodeId v) const {
    requireCandidate(v);
    return score(triIn_ + in_[v], triOut_ + out_[v], members_.size() + 1);
  }

  void add(NodeId v) {
    requireCandidate(v);
    triIn_ += in_[v];
    triOut_ += out_[v];
    in_[v] = Mass{};
    out_[v] = Mass{};
    member_[v] = 1;
    members_.insert(std::upper_bound(members_.begin(), members_.end(), v), v);

    // For a non-member neighbor x, each common neighbor y of v and x closes a
    // triangle (v, x, y). If y is a member, that triangle moves from outbound
    // to inbound once x joins; otherwise it becomes newly outbound.
    const Graph& g = ctx_->graph();
    markNeighbors(v);
    for (NodeId x : g.neighbors(v)) {
      ++memberNeighbors_[x];
      if (member_[x]) continue;
      const double wvx = mark_[x];
      Mass closedInside{}, closedOutside{};
      auto adj = g.neighbors(x);
      auto w = g.neighborWeights(x);
      for (std::size_t i = 0; i < adj.size(); ++i) {
        const NodeId y = adj[i];
        if (mark_[y] == 0.0) continue;
        const Mass t = product(wvx, mark_[y], w[i]);
        if (member_[y]) {
          closedInside += t;
        } else {
          closedOutside += t;
        }
      }
      in_[x] += closedInside;
      out_[x] += closedOutside - 2 * closedInside;
    }
    clearMarks(v);
  }

 private:
  static Mass product(double a, double b, double c) {
    if constexpr (kWeighted) {
      return a * b * c;
    } else {
      return 1;
    }
  }

  static Score score(Mass in, Mass out, std::size_t size) {
    if constexpr (kWeighted) {
      return cohesionFromMass(in, out, size);
    } else {
      return CohesionValue::fromCounts(static_cast<std::uint64_t>(in),
                                       static_cast<std::uint64_t>(out), size);
    }
  }

  void requireCandidate(NodeId v) const {
    if (!isCandidate(v)) {
      const std::string name =
          v < member_.size() ? ctx_->graph().label(v) : "#" + std::to_string(v);
      throw ValidationError("node '" + name + "' is not an expansion candidate");
    }
  }

  void markNeighbors(NodeId v) {
    const Graph& g = ctx_->graph();
    auto adj = g.neighbors(v);
    auto w = g.neighborWeights(v);
    for (std::size_t i = 0; i < adj.size(); ++i) mark_[adj[i]] = w[i];
  }

  void clearMarks(NodeId v) {
    for (NodeId y : ctx_->graph().neighbors(v)) mark_[y] = 0.0;
  }

  const EgoContext* ctx_;
  NodeSet members_;
  std::vector<char> member_;
  std::vector<std::uint32_t> memberNeighbors_;
  std::vector<Mass> in_;
  std::vector<Mass> out_;
  std::vector<double> mark_;  // W(v, y) for y in N(v) during an update, else 0
  Mass triIn_{};
  Mass triOut_{};
};

using ExpansionLedger = BasicExpansionLedger<std::int64_t>;
using WeightedExpansionLedger = BasicExpansionLedger<double>;

}  // namespace ego
