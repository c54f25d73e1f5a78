#include "run.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "ego/analytic.hpp"
#include "ego/cohesion.hpp"
#include "ego/ego_context.hpp"
#include "ego/engine.hpp"
#include "ego/errors.hpp"
#include "ego/generators.hpp"
#include "ego/graph.hpp"
#include "ego/traits.hpp"
#include "json.hpp"
#include "report.hpp"

namespace ego::cli {

namespace {

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DetectionOptions {
  double oMin = 0.5;
  std::optional<double> absorbRatio;
  bool weighted = false;

  DetectionParams params() const {
    DetectionParams p;
    p.overlapThreshold = oMin;
    p.absorb = absorbRatio.has_value();
    if (absorbRatio) p.absorbRatio = *absorbRatio;
    p.weighted = weighted;
    return p;
  }
};

void addDetectionOptions(CLI::App* cmd, DetectionOptions& opts) {
  cmd->add_option("--o-min", opts.oMin, "merge egomunities whose overlap exceeds this")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--absorb", opts.absorbRatio,
                  "enable absorption with this minimum I/O ratio")
      ->check(CLI::NonNegativeNumber);
  cmd->add_flag("--weighted", opts.weighted, "expand with weighted triangle masses");
}

Graph readGraph(const std::string& path, std::istream& stdinStream) {
  if (path == "-") return loadEdgeList(stdinStream);
  std::ifstream file(path);
  if (!file) throw DataError("cannot open graph file '" + path + "'");
  try {
    return loadEdgeList(file);
  } catch (const ParseError& e) {
    throw DataError(path + ": " + e.what());
  } catch (const ValidationError& e) {
    throw DataError(path + ": " + e.what());
  }
}

std::vector<std::string> splitList(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<double> parseReals(const std::string& s, const char* flag) {
  std::vector<double> out;
  for (const auto& item : splitList(s)) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      throw CLI::ValidationError(flag, "'" + item + "' is not a number");
    }
    out.push_back(v);
  }
  if (out.empty()) throw CLI::ValidationError(flag, "empty list");
  return out;
}

std::string formatReal(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, static_cast<std::size_t>(ptr - buf)};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Cohesion scoring and ego-centered community detection", "egomunity"};
  app.require_subcommand(1);

  // egomunities
  std::string graphPath, node, format = "json";
  DetectionOptions detection;
  auto* egoCmd = app.add_subcommand("egomunities", "detect the egomunities of one node");
  egoCmd->add_option("--graph", graphPath, "edge list ('-' for stdin)")->required();
  egoCmd->add_option("--node", node, "center node label")->required();
  egoCmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  addDetectionOptions(egoCmd, detection);

  // cohesion
  std::string setList, cohFormat = "text";
  bool cohWeighted = false;
  auto* cohCmd = app.add_subcommand("cohesion", "score an arbitrary node set");
  cohCmd->add_option("--graph", graphPath, "edge list ('-' for stdin)")->required();
  cohCmd->add_option("--set", setList, "comma-separated node labels")->required();
  cohCmd->add_option("--format", cohFormat, "text or json")->check(CLI::IsMember({"text", "json"}));
  cohCmd->add_flag("--weighted", cohWeighted, "also report weighted cohesion");

  // synth
  auto* synthCmd = app.add_subcommand("synth", "write a synthetic graph as an edge list");
  synthCmd->require_subcommand(1);
  std::string synthOut;
  PlantedSpec planted{60, 60, 0.8, 0.2};
  std::uint64_t seed = 1;
  std::string plantedOut;
  auto* plantedCmd = synthCmd->add_subcommand("planted", "random set planted among external nodes");
  plantedCmd->add_option("--s", planted.s, "planted set size")->check(CLI::Range(3, 1 << 20));
  plantedCmd->add_option("--g-ext", planted.gExt, "external node count");
  plantedCmd->add_option("--p-in", planted.pIn, "internal edge probability")->check(CLI::Range(0.0, 1.0));
  plantedCmd->add_option("--p-out", planted.pOut, "cross edge probability")->check(CLI::Range(0.0, 1.0));
  plantedCmd->add_option("--seed", seed, "random seed");
  plantedCmd->add_option("--out", synthOut, "output file (default stdout)");
  plantedCmd->add_option("--planted-out", plantedOut, "write planted labels, one per line");

  CliquePairSpec cliques{8, 5, 2};
  auto* cliquesCmd = synthCmd->add_subcommand("two-cliques", "two cliques sharing p nodes");
  cliquesCmd->add_option("--n1", cliques.n1, "size of the larger clique");
  cliquesCmd->add_option("--n2", cliques.n2, "size of the smaller clique");
  cliquesCmd->add_option("--p", cliques.p, "shared nodes");
  cliquesCmd->add_option("--out", synthOut, "output file (default stdout)");

  // sweep
  auto* sweepCmd = app.add_subcommand("sweep", "CSV grids for the closed-form models");
  sweepCmd->require_subcommand(1);
  std::size_t compatS = 60, compatG = 60, trials = 200;
  std::string pInList = "0.2,0.5,0.8", pOutList = "0.1,0.3,0.5";
  auto* compatCmd = sweepCmd->add_subcommand("compat", "planted-set cohesion vs densities");
  compatCmd->add_option("--s", compatS, "planted set size")->check(CLI::Range(3, 1 << 20));
  compatCmd->add_option("--g-ext", compatG, "external node count");
  compatCmd->add_option("--p-in", pInList, "comma-separated p_in values");
  compatCmd->add_option("--p-out", pOutList, "comma-separated p_out values");
  compatCmd->add_option("--trials", trials, "Monte Carlo trials per point")->check(CLI::PositiveNumber);
  compatCmd->add_option("--seed", seed, "random seed");

  std::size_t n1 = 500, n2Min = 3, n2Max = 0, pMin = 0, pMax = 0;
  auto* cliquesSweep = sweepCmd->add_subcommand("cliques", "two-clique dominance grid");
  cliquesSweep->add_option("--n1", n1, "larger clique size")->check(CLI::Range(3, 1 << 20));
  cliquesSweep->add_option("--n2-min", n2Min, "smallest n2");
  cliquesSweep->add_option("--n2-max", n2Max, "largest n2 (default n1)");
  cliquesSweep->add_option("--p-min", pMin, "smallest overlap");
  cliquesSweep->add_option("--p-max", pMax, "largest overlap (default n2)");

  // infer
  std::string attrsPath;
  std::vector<std::string> numericKeys;
  std::vector<std::string> labelKeys;
  std::size_t minCount = 4, minSize = 10;
  double maxStd = 2.5;
  auto* inferCmd = app.add_subcommand("infer", "attribute inference from egomunities");
  inferCmd->add_option("--graph", graphPath, "edge list ('-' for stdin)")->required();
  inferCmd->add_option("--node", node, "center node label")->required();
  inferCmd->add_option("--attrs", attrsPath, "node,key,value CSV")->required();
  inferCmd->add_option("--numeric", numericKeys, "numeric attribute key (repeatable)");
  inferCmd->add_option("--labels", labelKeys, "categorical key to profile (default: all)");
  inferCmd->add_option("--min-count", minCount, "minimum holders for a label")->check(CLI::PositiveNumber);
  inferCmd->add_option("--min-size", minSize, "egomunity size must exceed this");
  inferCmd->add_option("--max-std", maxStd, "egomunity std must be below this");
  addDetectionOptions(inferCmd, detection);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (egoCmd->parsed()) {
      const Graph g = readGraph(graphPath, in);
      const EgoContext ctx(g, node);
      const DetectionParams params = detection.params();
      const DetectionResult result = detect(ctx, params);
      emitResult(ctx, params, result, format == "csv" ? Format::Csv : Format::Json, out);
    } else if (cohCmd->parsed()) {
      const Graph g = readGraph(graphPath, in);
      const auto labelsIn = splitList(setList);
      const NodeSet members = resolveNodes(g, labelsIn);
      const TriangleCounts counts = countTriangles(g, members);
      const CohesionValue value = CohesionValue::fromCounts(counts.in, counts.out, members.size());
      if (cohFormat == "json") {
        nlohmann::json doc{{"size", members.size()},
                           {"tri_in", counts.in},
                           {"tri_out", counts.out},
                           {"cohesion", cohesionToJson(value)}};
        if (cohWeighted) doc["weighted_cohesion"] = weightedCohesion(g, members);
        out << doc.dump(2) << '\n';
      } else {
        out << "size " << members.size() << '\n'
            << "tri_in " << counts.in << '\n'
            << "tri_out " << counts.out << '\n'
            << "cohesion " << value.toString() << ' ' << formatReal(value.real()) << '\n';
        if (cohWeighted) out << "weighted_cohesion " << formatReal(weightedCohesion(g, members)) << '\n';
      }
    } else if (plantedCmd->parsed()) {
      const auto sample = generatePlanted(planted, seed);
      if (synthOut.empty()) {
        saveEdgeList(sample.graph, out);
      } else {
        std::ofstream f(synthOut);
        if (!f) throw DataError("cannot write '" + synthOut + "'");
        saveEdgeList(sample.graph, f);
      }
      if (!plantedOut.empty()) {
        std::ofstream f(plantedOut);
        if (!f) throw DataError("cannot write '" + plantedOut + "'");
        for (NodeId v : sample.planted) f << sample.graph.label(v) << '\n';
      }
    } else if (cliquesCmd->parsed()) {
      const auto sample = generateTwoCliques(cliques);
      if (synthOut.empty()) {
        saveEdgeList(sample.graph, out);
      } else {
        std::ofstream f(synthOut);
        if (!f) throw DataError("cannot write '" + synthOut + "'");
        saveEdgeList(sample.graph, f);
      }
    } else if (compatCmd->parsed()) {
      const auto points = compatibilitySweep(compatS, compatG, parseReals(pInList, "--p-in"),
                                             parseReals(pOutList, "--p-out"), trials, seed);
      writeCompatibilityCsv(points, out);
    } else if (cliquesSweep->parsed()) {
      const std::size_t hi = n2Max == 0 ? n1 : n2Max;
      const std::size_t pHi = pMax == 0 ? hi : pMax;
      writeDominanceCsv(n1, dominanceRegion(n1, n2Min, hi, pMin, pHi), out);
    } else if (inferCmd->parsed()) {
      const Graph g = readGraph(graphPath, in);
      const EgoContext ctx(g, node);
      std::ifstream attrs(attrsPath);
      if (!attrs) throw DataError("cannot open attribute file '" + attrsPath + "'");
      AttributeTable table;
      try {
        table = loadAttributes(attrs, std::set<std::string>(numericKeys.begin(), numericKeys.end()));
      } catch (const ParseError& e) {
        throw DataError(attrsPath + ": " + e.what());
      }
      const DetectionParams params = detection.params();
      const DetectionResult result = detect(ctx, params);

      nlohmann::json doc;
      doc["center"] = ctx.label(ctx.center());
      doc["egomunity_count"] = result.egomunities.size();
      nlohmann::json estimates = nlohmann::json::object();
      for (const auto& key : numericKeys) {
        auto global = globalNumericEstimate(ctx, table, key);
        auto local = egomunityNumericEstimate(ctx, result.egomunities, table, key, minSize, maxStd);
        estimates[key] = {{"global", global ? nlohmann::json(*global) : nlohmann::json(nullptr)},
                          {"egomunity", local ? nlohmann::json(*local) : nlohmann::json(nullptr)}};
      }
      doc["numeric"] = std::move(estimates);
      std::vector<std::string> keys = labelKeys;
      if (keys.empty()) {
        for (const auto& [key, column] : table.categorical) keys.push_back(key);
      }
      nlohmann::json profiles = nlohmann::json::object();
      for (const auto& key : keys) {
        auto arr = nlohmann::json::array();
        if (!ctx.neighbors().empty()) {
          for (const auto& p : likeProfile(ctx, result.egomunities, table, key, minCount)) {
            arr.push_back({{"label", p.label},
                           {"holders", p.holders},
                           {"global", p.globalProp},
                           {"average", p.averageProp},
                           {"max", p.maxProp}});
          }
        }
        profiles[key] = std::move(arr);
      }
      doc["labels"] = std::move(profiles);
      out << doc.dump(2) << '\n';
    }
  } catch (const UnknownNodeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace ego::cli
