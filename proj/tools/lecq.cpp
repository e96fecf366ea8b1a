#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "lecq/Errors.h"
#include "lecq/LecFeature.h"
#include "lecq/LocalMatcher.h"
#include "lecq/NTriples.h"
#include "lecq/Partitioner.h"
#include "lecq/Engine.h"

using namespace lecq;

namespace {

constexpr int kExitOther = 1;
constexpr int kExitData = 2;
constexpr int kExitQuery = 3;
constexpr int kExitPartition = 4;

struct RunConfig {
  std::string data;
  std::string query;
  std::uint32_t hashParts = 0;
  std::vector<std::string> partitionFiles;
  std::uint32_t bits = kDefaultCandidateBits;
  bool noCandidates = false;
  bool noPrune = false;
  bool basicAssembly = false;
  bool coordinatorPrune = false;
  bool timings = false;
  int threads = 0;
  std::string out;
  std::string cost;
  std::string stats;
  std::string matches;
  std::string json;
};

void addPartitionSource(CLI::App* cmd, RunConfig& c, bool manyFiles) {
  auto* hash = cmd->add_option("--hash-parts", c.hashParts,
                               "Hash-partition into k fragments")
                   ->check(CLI::Range(1u, 1u << 20));
  auto* file = cmd->add_option("--partition-file", c.partitionFiles,
                               manyFiles ? "Partition file; repeat to rank"
                                         : "Partition file");
  if (!manyFiles) file->expected(1);
  hash->excludes(file);
  file->excludes(hash);
  cmd->callback([cmd] {
    if (cmd->count("--hash-parts") + cmd->count("--partition-file") == 0) {
      throw CLI::RequiredError("--hash-parts or --partition-file");
    }
  });
}

void addEngineFlags(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--query", c.query, "SPARQL basic graph pattern file")
      ->required();
  cmd->add_option("--bits", c.bits, "Candidate bit vector length")
      ->check(CLI::Range(1u, 1u << 30));
  cmd->add_flag("--no-candidates", c.noCandidates,
                "Disable candidate filtering");
  cmd->add_flag("--no-prune", c.noPrune, "Disable feature pruning");
  cmd->add_flag("--basic-assembly", c.basicAssembly,
                "Join all partial matches instead of grouped assembly");
  cmd->add_flag("--coordinator-prune", c.coordinatorPrune,
                "Ship all partial matches and prune at the coordinator");
  cmd->add_option("--threads", c.threads,
                  "Worker threads (default: LECQ_THREADS or all cores)")
      ->check(CLI::Range(1, 1024));
  cmd->add_flag("--timings", c.timings,
                "Include stage timings (output is then not reproducible)");
}

unsigned threadCount(const RunConfig& c) {
  if (c.threads > 0) return static_cast<unsigned>(c.threads);
  if (const char* env = std::getenv("LECQ_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

EngineOptions engineOptions(const RunConfig& c) {
  EngineOptions o;
  o.useCandidates = !c.noCandidates;
  o.prune = !c.noPrune;
  o.lecAssembly = !c.basicAssembly;
  o.coordinatorPrune = c.coordinatorPrune;
  o.candidateBits = c.bits;
  o.threads = threadCount(c);
  return o;
}

VertexAssignment partitionOf(const RdfGraph& g, const RunConfig& c,
                             const std::string& file) {
  return c.hashParts ? hashPartition(g, c.hashParts) : loadPartitionFile(file);
}

std::ofstream openOutput(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

// Writes to `path`, or to stdout when it is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
  } else {
    openOutput(path) << text;
  }
}

// ____________________________________________________________________________
void cmdPartition(const RunConfig& c) {
  auto g = loadNTriplesFile(c.data);
  if (c.hashParts || c.partitionFiles.size() == 1) {
    std::string source = c.hashParts ? "" : c.partitionFiles.front();
    auto a = partitionOf(g, c, source);
    auto report = partitionCost(buildDistributed(g, a));
    if (!c.out.empty()) {
      auto out = openOutput(c.out);
      writePartitionFile(g, a, out);
    }
    emit(c.cost, toJson(report, g.dictionary()) + "\n");
    return;
  }

  struct Ranked {
    std::string file;
    PartitionCostReport report;
  };
  std::vector<Ranked> ranked;
  for (const auto& f : c.partitionFiles) {
    ranked.push_back(
        {f, partitionCost(buildDistributed(g, loadPartitionFile(f)))});
  }
  std::stable_sort(ranked.begin(), ranked.end(), [](auto& a, auto& b) {
    return a.report.cost < b.report.cost;
  });
  nlohmann::ordered_json json = nlohmann::ordered_json::array();
  std::ostringstream text;
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    const auto& r = ranked[i];
    nlohmann::ordered_json row;
    row["rank"] = i + 1;
    row["partition_file"] = r.file;
    row["report"] = nlohmann::ordered_json::parse(toJson(r.report, g.dictionary()));
    json.push_back(std::move(row));
    text << i + 1 << '\t' << formatRational(r.report.cost) << '\t'
         << toDouble(r.report.cost) << '\t' << r.file << '\n';
  }
  if (!c.cost.empty()) openOutput(c.cost) << json.dump(2) << '\n';
  std::cout << text.str();
}

struct Loaded {
  RdfGraph graph;
  DistributedGraph dist;
  QueryGraph query;
};

Loaded load(const RunConfig& c) {
  auto g = loadNTriplesFile(c.data);
  auto q = loadQueryFile(c.query);
  auto a = partitionOf(g, c, c.hashParts ? "" : c.partitionFiles.front());
  auto d = buildDistributed(g, a);
  return {std::move(g), std::move(d), std::move(q)};
}

void cmdQuery(const RunConfig& c) {
  auto in = load(c);
  auto result = runQuery(in.dist, in.query, engineOptions(c));
  std::string lines;
  for (const auto& m : result.matches) {
    lines += matchToJsonLine(m, in.query, in.dist.dictionary()) + "\n";
  }
  emit(c.matches, lines);
  if (!c.stats.empty()) {
    openOutput(c.stats) << statsToJson(result.stats, c.timings) << '\n';
  }
}

void cmdBench(const RunConfig& c) {
  auto in = load(c);
  auto rows = runBaselines(in.dist, in.query, engineOptions(c));
  if (!c.json.empty()) {
    openOutput(c.json) << baselinesToJson(rows, c.timings) << '\n';
  }
  std::cout << baselinesToText(rows, c.timings);
}

// Local partial matches and their features per fragment, for inspection.
void cmdLpms(const RunConfig& c) {
  auto in = load(c);
  const auto& dict = in.dist.dictionary();
  for (const auto& f : in.dist.fragments()) {
    auto lpms = findLocalPartialMatches(f, in.query);
    std::cout << "fragment " << f.id() << ": " << lpms.size()
              << " local partial matches\n";
    for (const auto& m : lpms) std::cout << "  " << dumpLpm(m, dict) << '\n';
    if (lpms.empty()) continue;
    for (const auto& feature : computeLecFeatures(lpms, in.query)) {
      std::cout << "  " << describeFeature(feature, in.query, dict) << '\n';
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distributed basic graph pattern evaluation over fragmented RDF"};
  app.require_subcommand(1);
  RunConfig c;

  auto* partition = app.add_subcommand(
      "partition", "Partition a graph and report its cost; rank several files");
  partition->add_option("--data", c.data, "N-Triples file")->required();
  addPartitionSource(partition, c, true);
  partition->add_option("--out", c.out, "Write the partition file here");
  partition->add_option("--cost", c.cost, "Write the cost JSON here");

  std::vector<CLI::App*> engineCommands = {
      app.add_subcommand("query", "Evaluate a query"),
      app.add_subcommand("bench", "Compare the optimisation baselines"),
      app.add_subcommand("lpms", "Print local partial matches and features")};
  for (auto* cmd : engineCommands) {
    cmd->add_option("--data", c.data, "N-Triples file")->required();
    addPartitionSource(cmd, c, false);
    addEngineFlags(cmd, c);
  }
  engineCommands[0]->add_option("--stats", c.stats, "Write statistics JSON here");
  engineCommands[0]->add_option("--matches", c.matches,
                                "Write JSON lines matches here (default stdout)");
  engineCommands[1]->add_option("--json", c.json, "Write the table as JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*partition) cmdPartition(c);
    if (*engineCommands[0]) cmdQuery(c);
    if (*engineCommands[1]) cmdBench(c);
    if (*engineCommands[2]) cmdLpms(c);
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const QueryError& e) {
    std::cerr << "query error: " << e.what() << '\n';
    return kExitQuery;
  } catch (const PartitionError& e) {
    std::cerr << "partition error: " << e.what() << '\n';
    return kExitPartition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitOther;
  }
  return 0;
}
