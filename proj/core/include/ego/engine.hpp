#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ego/cohesion_value.hpp"
#include "ego/ego_context.hpp"
#include "ego/ledger.hpp"

namespace ego {

struct DetectionParams {
  /// Egomunities whose overlap is strictly above this are merged.
  double overlapThreshold = 0.5;
  bool absorb = false;
  /// Minimum I(v)/O(v) ratio for absorption; O(v) <= 0 counts as infinite.
  double absorbRatio = 2.0;
  /// Drive expansion with weighted triangle masses instead of counts.
  bool weighted = false;

  /// Throws ValidationError for out-of-range thresholds.
  void validate() const;
};

/// One community around the center. Node ids are local to the EgoContext.
struct Egomunity {
  NodeId center = 0;
  NodeSet members;
  NodeId seed = 0;
  /// Seeds of every expansion merged into this one, in detection order.
  std::vector<NodeId> seeds;
  CohesionValue cohesion;
  std::uint64_t triIn = 0;
  std::uint64_t triOut = 0;
  /// Nodes added by greedy expansion, in order (seed and center excluded).
  std::vector<NodeId> trace;
  /// Nodes added by the absorption pass, ascending.
  std::vector<NodeId> absorbed;
  std::optional<double> weightedCohesion;
};

struct DetectionResult {
  std::vector<Egomunity> egomunities;
  /// Neighbors of the center that ended up in no egomunity.
  NodeSet unassigned;
};

template <typename Mass>
using ExpansionObserver = std::function<void(const BasicExpansionLedger<Mass>&)>;

template <typename Mass>
struct Expansion {
  Egomunity egomunity;
  BasicExpansionLedger<Mass> ledger;
};

/// Greedy expansion from {center, seed}: while some candidate raises the
/// cohesion strictly, add the one with the largest I(v), then largest O(v),
/// then smallest label. `observer` sees the ledger after initialisation and
/// after every addition.
template <typename Mass>
Expansion<Mass> runExpansion(const EgoContext& ctx, NodeId seed,
                             const ExpansionObserver<Mass>& observer = {});

/// Unweighted expansion, returning only the community.
Egomunity expandSeed(const EgoContext& ctx, NodeId seed);

/// Single snapshot pass adding every candidate v with I(v) > 0 and
/// I(v)/O(v) > ratio (O(v) <= 0 is an infinite ratio). Counts and cohesion
/// are recomputed afterwards and may go down.
template <typename Mass>
Egomunity absorb(const EgoContext& ctx, const Egomunity& egomunity,
                 const BasicExpansionLedger<Mass>& ledger, double ratio);

/// |A ∩ B| / min(|A|, |B|) over members with the shared center removed.
/// Throws ValidationError when the centers differ.
double overlap(const Egomunity& a, const Egomunity& b);

/// Collapses each connected component of the "overlap > threshold" graph
/// into one egomunity with recomputed cohesion. Component order follows the
/// first constituent; singletons pass through unchanged.
std::vector<Egomunity> mergeComponents(const EgoContext& ctx, std::vector<Egomunity> egomunities,
                                       double threshold);

/// Full detection around the context's center. Seeds are taken by
/// decreasing induced degree (ties: smallest label); expansions stuck
/// without an inbound triangle are dropped.
DetectionResult detect(const EgoContext& ctx, const DetectionParams& params = {});

/// Recomputes counts and cohesion of `e` from its member set.
void refreshScores(const EgoContext& ctx, Egomunity& e, bool weighted);

}  // namespace ego
