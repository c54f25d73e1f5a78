#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ego/ego_context.hpp"
#include "ego/engine.hpp"

namespace ego {

/// Per-node attributes keyed by external label.
struct AttributeTable {
  /// key -> node -> labels (e.g. "like" -> "alice" -> {"jazz", "chess"})
  std::map<std::string, std::map<std::string, std::set<std::string>>> categorical;
  /// key -> node -> value (e.g. "age" -> "alice" -> 31)
  std::map<std::string, std::map<std::string, double>> numeric;
};

/// Reads `node,key,value` rows. Keys in `numericKeys` must carry finite
/// numbers; every other key is categorical. An optional header row
/// `node,key,value` is skipped. Throws ParseError with the line number.
AttributeTable loadAttributes(std::istream& in, const std::set<std::string>& numericKeys);

struct LabelProfile {
  std::string label;
  std::size_t holders = 0;   ///< neighbors holding the label
  double globalProp = 0.0;   ///< holders / neighbors
  double averageProp = 0.0;  ///< mean share over egomunities where it appears
  double maxProp = 0.0;      ///< largest share over all egomunities
};

/// Label statistics for labels held by at least `minCount` neighbors of the
/// center. Shares inside an egomunity are taken over its members without the
/// center. Output is sorted by label. Throws ValidationError if the center
/// has no neighbors or minCount is zero.
std::vector<LabelProfile> likeProfile(const EgoContext& ctx, const std::vector<Egomunity>& egomunities,
                                      const AttributeTable& table, const std::string& key,
                                      std::size_t minCount = 4);

/// Mean value over the center's neighbors that have one.
std::optional<double> globalNumericEstimate(const EgoContext& ctx, const AttributeTable& table,
                                            const std::string& key);

/// Mean of the most homogeneous qualifying egomunity: more than `minSize`
/// members besides the center and population standard deviation below
/// `maxStd`; the lowest std/|mean| wins (ties: smaller mean).
std::optional<double> egomunityNumericEstimate(const EgoContext& ctx,
                                               const std::vector<Egomunity>& egomunities,
                                               const AttributeTable& table, const std::string& key,
                                               std::size_t minSize = 10, double maxStd = 2.5);

}  // namespace ego
