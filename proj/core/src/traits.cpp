#include "ego/traits.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <string_view>

#include "ego/errors.hpp"

namespace ego {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

struct Moments {
  std::size_t count = 0;
  double mean = 0.0;
  double stddev = 0.0;
};

Moments moments(const std::vector<double>& values) {
  Moments m;
  m.count = values.size();
  if (values.empty()) return m;
  double sum = 0.0;
  for (double v : values) sum += v;
  m.mean = sum / static_cast<double>(values.size());
  double sq = 0.0;
  for (double v : values) sq += (v - m.mean) * (v - m.mean);
  m.stddev = std::sqrt(sq / static_cast<double>(values.size()));
  return m;
}

const std::map<std::string, double>* numericColumn(const AttributeTable& table,
                                                   const std::string& key) {
  auto it = table.numeric.find(key);
  return it == table.numeric.end() ? nullptr : &it->second;
}

}  // namespace

AttributeTable loadAttributes(std::istream& in, const std::set<std::string>& numericKeys) {
  AttributeTable table;
  std::string raw;
  std::size_t lineNo = 0;
  while (std::getline(in, raw)) {
    ++lineNo;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string_view::npos) throw ParseError(lineNo, "expected 'node,key,value'");
    const std::string node(trim(line.substr(0, c1)));
    const std::string key(trim(line.substr(c1 + 1, c2 - c1 - 1)));
    const std::string_view value = trim(line.substr(c2 + 1));
    if (lineNo == 1 && node == "node" && key == "key" && value == "value") continue;
    if (node.empty() || key.empty()) throw ParseError(lineNo, "empty node or key");

    if (numericKeys.contains(key)) {
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
      if (ec != std::errc() || ptr != value.data() + value.size() || !std::isfinite(v)) {
        throw ParseError(lineNo, "'" + std::string(value) + "' is not a finite number");
      }
      table.numeric[key][node] = v;
    } else {
      table.categorical[key][node].insert(std::string(value));
    }
  }
  return table;
}

std::vector<LabelProfile> likeProfile(const EgoContext& ctx, const std::vector<Egomunity>& egomunities,
                                      const AttributeTable& table, const std::string& key,
                                      std::size_t minCount) {
  if (minCount == 0) throw ValidationError("min_count must be at least 1");
  if (ctx.neighbors().empty()) throw ValidationError("center has no neighbors");

  std::vector<LabelProfile> out;
  auto column = table.categorical.find(key);
  if (column == table.categorical.end()) return out;
  const auto& byNode = column->second;
  auto holds = [&](NodeId v, const std::string& label) {
    auto it = byNode.find(ctx.label(v));
    return it != byNode.end() && it->second.contains(label);
  };

  std::map<std::string, std::size_t> holders;
  for (NodeId v : ctx.neighbors()) {
    auto it = byNode.find(ctx.label(v));
    if (it == byNode.end()) continue;
    for (const auto& label : it->second) ++holders[label];
  }

  const double neighborCount = static_cast<double>(ctx.neighbors().size());
  for (const auto& [label, count] : holders) {
    if (count < minCount) continue;
    LabelProfile prof;
    prof.label = label;
    prof.holders = count;
    prof.globalProp = static_cast<double>(count) / neighborCount;
    double shareSum = 0.0;
    std::size_t appearing = 0;
    for (const Egomunity& e : egomunities) {
      std::size_t size = 0, with = 0;
      for (NodeId m : e.members) {
        if (m == e.center) continue;
        ++size;
        if (holds(m, label)) ++with;
      }
      if (size == 0) continue;
      const double share = static_cast<double>(with) / static_cast<double>(size);
      prof.maxProp = std::max(prof.maxProp, share);
      if (with > 0) {
        shareSum += share;
        ++appearing;
      }
    }
    if (appearing > 0) prof.averageProp = shareSum / static_cast<double>(appearing);
    out.push_back(std::move(prof));
  }
  return out;
}

std::optional<double> globalNumericEstimate(const EgoContext& ctx, const AttributeTable& table,
                                            const std::string& key) {
  const auto* column = numericColumn(table, key);
  if (!column) return std::nullopt;
  std::vector<double> values;
  for (NodeId v : ctx.neighbors()) {
    auto it = column->find(ctx.label(v));
    if (it != column->end()) values.push_back(it->second);
  }
  if (values.empty()) return std::nullopt;
  return moments(values).mean;
}

std::optional<double> egomunityNumericEstimate(const EgoContext& ctx,
                                               const std::vector<Egomunity>& egomunities,
                                               const AttributeTable& table, const std::string& key,
                                               std::size_t minSize, double maxStd) {
  const auto* column = numericColumn(table, key);
  if (!column) return std::nullopt;

  std::optional<std::pair<double, double>> best;  // (relative std, mean)
  for (const Egomunity& e : egomunities) {
    std::size_t size = 0;
    std::vector<double> values;
    for (NodeId m : e.members) {
      if (m == e.center) continue;
      ++size;
      auto it = column->find(ctx.label(m));
      if (it != column->end()) values.push_back(it->second);
    }
    if (size <= minSize || values.empty()) continue;
    const Moments mo = moments(values);
    if (!(mo.stddev < maxStd)) continue;
    double relative = 0.0;
    if (mo.stddev > 0.0) {
      relative = mo.mean == 0.0 ? std::numeric_limits<double>::infinity()
                                : mo.stddev / std::abs(mo.mean);
    }
    const std::pair<double, double> candidate{relative, mo.mean};
    if (!best || candidate < *best) best = candidate;
  }
  if (!best) return std::nullopt;
  return best->second;
}

}  // namespace ego
