#pragma once

#include <iosfwd>
#include <string>

#include "ego/ego_context.hpp"
#include "ego/engine.hpp"
#include "json.hpp"

namespace ego::cli {

enum class Format { Json, Csv };

/// Egomunities ordered by descending cohesion, then smallest seed label.
std::vector<Egomunity> presentationOrder(const EgoContext& ctx, std::vector<Egomunity> egomunities);

/// JSON document for one detection run; see docs/egomunity.schema.json.
nlohmann::json detectionToJson(const EgoContext& ctx, const DetectionParams& params,
                               const DetectionResult& result);

nlohmann::json cohesionToJson(const CohesionValue& value);

/// Writes the detection result. JSON output ends with a newline; CSV has one
/// row per egomunity with space-separated members.
void emitResult(const EgoContext& ctx, const DetectionParams& params, const DetectionResult& result,
                Format format, std::ostream& out);

}  // namespace ego::cli
