#include "ego/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ego/cohesion.hpp"
#include "ego/errors.hpp"

namespace ego {

void DetectionParams::validate() const {
  if (!(overlapThreshold >= 0.0 && overlapThreshold <= 1.0)) {
    throw ValidationError("overlap threshold must lie in [0, 1]");
  }
  if (std::isnan(absorbRatio) || absorbRatio < 0.0) {
    throw ValidationError("absorption ratio must be non-negative");
  }
}

void refreshScores(const EgoContext& ctx, Egomunity& e, bool weighted) {
  const TriangleCounts counts = countTriangles(ctx.graph(), e.members);
  e.triIn = counts.in;
  e.triOut = counts.out;
  e.cohesion = CohesionValue::fromCounts(counts.in, counts.out, e.members.size());
  if (weighted) {
    e.weightedCohesion = weightedCohesion(ctx.graph(), e.members);
  } else {
    e.weightedCohesion.reset();
  }
}

template <typename Mass>
Expansion<Mass> runExpansion(const EgoContext& ctx, NodeId seed,
                             const ExpansionObserver<Mass>& observer) {
  BasicExpansionLedger<Mass> ledger(ctx, seed);
  if (observer) observer(ledger);

  std::vector<NodeId> trace;
  for (;;) {
    const auto now = ledger.current();
    std::optional<NodeId> best;
    // ascending order: on full ties the first (smallest label) wins
    for (NodeId v : ledger.candidates()) {
      if (!(ledger.prospective(v) > now)) continue;
      if (!best) {
        best = v;
        continue;
      }
      const Mass in = ledger.inboundDelta(v), bestIn = ledger.inboundDelta(*best);
      if (in > bestIn || (in == bestIn && ledger.outboundDelta(v) > ledger.outboundDelta(*best))) {
        best = v;
      }
    }
    if (!best) break;
    ledger.add(*best);
    trace.push_back(*best);
    if (observer) observer(ledger);
  }

  Egomunity e;
  e.center = ctx.center();
  e.seed = seed;
  e.seeds = {seed};
  e.members = ledger.members();
  e.trace = std::move(trace);
  if constexpr (BasicExpansionLedger<Mass>::kWeighted) {
    refreshScores(ctx, e, true);
  } else {
    e.triIn = static_cast<std::uint64_t>(ledger.triIn());
    e.triOut = static_cast<std::uint64_t>(ledger.triOut());
    e.cohesion = ledger.current();
  }
  return {std::move(e), std::move(ledger)};
}

template Expansion<std::int64_t> runExpansion(const EgoContext&, NodeId,
                                              const ExpansionObserver<std::int64_t>&);
template Expansion<double> runExpansion(const EgoContext&, NodeId, const ExpansionObserver<double>&);

Egomunity expandSeed(const EgoContext& ctx, NodeId seed) {
  return runExpansion<std::int64_t>(ctx, seed).egomunity;
}

template <typename Mass>
Egomunity absorb(const EgoContext& ctx, const Egomunity& egomunity,
                 const BasicExpansionLedger<Mass>& ledger, double ratio) {
  Egomunity out = egomunity;
  std::vector<NodeId> added;
  for (NodeId v : ledger.candidates()) {
    const double in = static_cast<double>(ledger.inboundDelta(v));
    const double outb = static_cast<double>(ledger.outboundDelta(v));
    if (!(in > 0.0)) continue;
    const double r = outb <= 0.0 ? std::numeric_limits<double>::infinity() : in / outb;
    if (r > ratio) added.push_back(v);
  }
  if (added.empty()) return out;
  std::vector<NodeId> members = out.members;
  members.insert(members.end(), added.begin(), added.end());
  out.members = makeNodeSet(std::move(members));
  out.absorbed = makeNodeSet(std::move(added));
  refreshScores(ctx, out, egomunity.weightedCohesion.has_value());
  return out;
}

template Egomunity absorb(const EgoContext&, const Egomunity&,
                          const BasicExpansionLedger<std::int64_t>&, double);
template Egomunity absorb(const EgoContext&, const Egomunity&, const BasicExpansionLedger<double>&,
                          double);

double overlap(const Egomunity& a, const Egomunity& b) {
  if (a.center != b.center) throw ValidationError("overlap requires a shared center");
  std::size_t sizeA = 0, sizeB = 0, shared = 0;
  auto i = a.members.begin();
  auto j = b.members.begin();
  while (i != a.members.end() || j != b.members.end()) {
    if (j == b.members.end() || (i != a.members.end() && *i < *j)) {
      if (*i != a.center) ++sizeA;
      ++i;
    } else if (i == a.members.end() || *j < *i) {
      if (*j != b.center) ++sizeB;
      ++j;
    } else {
      if (*i != a.center) {
        ++sizeA;
        ++sizeB;
        ++shared;
      }
      ++i;
      ++j;
    }
  }
  const std::size_t smaller = std::min(sizeA, sizeB);
  if (smaller == 0) return 0.0;
  return static_cast<double>(shared) / static_cast<double>(smaller);
}

namespace {

std::size_t findRoot(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

std::vector<Egomunity> mergeComponents(const EgoContext& ctx, std::vector<Egomunity> egomunities,
                                       double threshold) {
  const std::size_t n = egomunities.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (overlap(egomunities[i], egomunities[j]) > threshold) {
        const std::size_t a = findRoot(parent, i), b = findRoot(parent, j);
        // keep the earliest index as root so component order is stable
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }

  std::vector<std::vector<std::size_t>> groups(n);
  for (std::size_t i = 0; i < n; ++i) groups[findRoot(parent, i)].push_back(i);

  std::vector<Egomunity> out;
  for (std::size_t root = 0; root < n; ++root) {
    const auto& group = groups[root];
    if (group.empty()) continue;
    if (group.size() == 1) {
      out.push_back(std::move(egomunities[root]));
      continue;
    }
    Egomunity merged;
    merged.center = egomunities[root].center;
    merged.seed = egomunities[root].seed;
    std::vector<NodeId> members, absorbed;
    bool weighted = false;
    for (std::size_t idx : group) {
      const Egomunity& e = egomunities[idx];
      members.insert(members.end(), e.members.begin(), e.members.end());
      absorbed.insert(absorbed.end(), e.absorbed.begin(), e.absorbed.end());
      merged.seeds.insert(merged.seeds.end(), e.seeds.begin(), e.seeds.end());
      merged.trace.insert(merged.trace.end(), e.trace.begin(), e.trace.end());
      weighted = weighted || e.weightedCohesion.has_value();
    }
    merged.members = makeNodeSet(std::move(members));
    merged.absorbed = makeNodeSet(std::move(absorbed));
    refreshScores(ctx, merged, weighted);
    out.push_back(std::move(merged));
  }
  return out;
}

namespace {

template <typename Mass>
DetectionResult detectWith(const EgoContext& ctx, const DetectionParams& params) {
  std::vector<NodeId> order = ctx.neighbors();
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return ctx.inducedDegree(a) > ctx.inducedDegree(b);
  });

  std::vector<char> pending(ctx.graph().numNodes(), 0);
  for (NodeId v : ctx.neighbors()) pending[v] = 1;

  DetectionResult result;
  for (NodeId seed : order) {
    if (!pending[seed]) continue;
    pending[seed] = 0;
    auto expansion = runExpansion<Mass>(ctx, seed);
    if (expansion.ledger.triIn() <= Mass{}) continue;

    Egomunity e = std::move(expansion.egomunity);
    if (params.absorb) e = absorb(ctx, e, expansion.ledger, params.absorbRatio);
    for (NodeId m : e.members) pending[m] = 0;
    result.egomunities.push_back(std::move(e));
  }

  if (params.overlapThreshold < 1.0) {
    result.egomunities = mergeComponents(ctx, std::move(result.egomunities), params.overlapThreshold);
  }

  std::vector<char> covered(ctx.graph().numNodes(), 0);
  for (const Egomunity& e : result.egomunities) {
    for (NodeId m : e.members) covered[m] = 1;
  }
  for (NodeId v : ctx.neighbors()) {
    if (!covered[v]) result.unassigned.push_back(v);
  }
  return result;
}

}  // namespace

DetectionResult detect(const EgoContext& ctx, const DetectionParams& params) {
  params.validate();
  if (params.weighted) return detectWith<double>(ctx, params);
  return detectWith<std::int64_t>(ctx, params);
}

}  // namespace ego
