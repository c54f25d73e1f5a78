#include "report.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <ostream>

namespace ego::cli {

namespace {

nlohmann::json bigInt(uint128 v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return toDecimalString(v);
}

nlohmann::json labels(const EgoContext& ctx, const std::vector<NodeId>& nodes) {
  auto arr = nlohmann::json::array();
  for (NodeId v : nodes) arr.push_back(ctx.label(v));
  return arr;
}

std::string csvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::vector<Egomunity> presentationOrder(const EgoContext& ctx, std::vector<Egomunity> egomunities) {
  std::stable_sort(egomunities.begin(), egomunities.end(),
                   [&](const Egomunity& a, const Egomunity& b) {
                     if (a.cohesion != b.cohesion) return a.cohesion > b.cohesion;
                     return ctx.label(a.seed) < ctx.label(b.seed);
                   });
  return egomunities;
}

nlohmann::json cohesionToJson(const CohesionValue& value) {
  return {{"num", bigInt(value.numerator())},
          {"den", bigInt(value.denominator())},
          {"real", value.real()}};
}

nlohmann::json detectionToJson(const EgoContext& ctx, const DetectionParams& params,
                               const DetectionResult& result) {
  nlohmann::json doc;
  doc["center"] = ctx.label(ctx.center());
  doc["params"] = {{"o_min", params.overlapThreshold},
                   {"absorb", params.absorb},
                   {"absorb_ratio", params.absorbRatio},
                   {"weighted", params.weighted}};
  auto list = nlohmann::json::array();
  for (const Egomunity& e : presentationOrder(ctx, result.egomunities)) {
    nlohmann::json item;
    item["members"] = labels(ctx, e.members);
    item["seed"] = ctx.label(e.seed);
    item["seeds"] = labels(ctx, e.seeds);
    item["cohesion"] = cohesionToJson(e.cohesion);
    item["tri_in"] = e.triIn;
    item["tri_out"] = e.triOut;
    item["trace"] = labels(ctx, e.trace);
    item["absorbed"] = labels(ctx, e.absorbed);
    if (e.weightedCohesion) item["weighted_cohesion"] = *e.weightedCohesion;
    list.push_back(std::move(item));
  }
  doc["egomunities"] = std::move(list);
  doc["unassigned"] = labels(ctx, result.unassigned);
  return doc;
}

void emitResult(const EgoContext& ctx, const DetectionParams& params, const DetectionResult& result,
                Format format, std::ostream& out) {
  if (format == Format::Json) {
    out << detectionToJson(ctx, params, result).dump(2) << '\n';
    return;
  }
  char buf[64];
  out << "rank,seed,size,cohesion_num,cohesion_den,cohesion,tri_in,tri_out,members\n";
  std::size_t rank = 0;
  for (const Egomunity& e : presentationOrder(ctx, result.egomunities)) {
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, e.cohesion.real());
    std::string members;
    for (NodeId m : e.members) {
      if (!members.empty()) members += ' ';
      members += ctx.label(m);
    }
    out << ++rank << ',' << csvField(ctx.label(e.seed)) << ',' << e.members.size() << ','
        << toDecimalString(e.cohesion.numerator()) << ','
        << toDecimalString(e.cohesion.denominator()) << ','
        << std::string_view(buf, static_cast<std::size_t>(ptr - buf)) << ',' << e.triIn << ','
        << e.triOut << ',' << csvField(members) << '\n';
  }
}

}  // namespace ego::cli
