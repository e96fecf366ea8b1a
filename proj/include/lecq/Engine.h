#pragma once

#include <array>
#include <cstdint>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "lecq/Candidates.h"
#include "lecq/DistributedGraph.h"
#include "lecq/LecFeature.h"
#include "lecq/LocalPartialMatch.h"
#include "lecq/Match.h"
#include "lecq/QueryGraph.h"

namespace lecq {

enum class Phase : std::uint8_t {
  kCandidateUp,
  kCandidateDown,
  kFeatureUp,
  kPruneDown,
  kLpmUp
};
inline constexpr std::array<Phase, 5> kAllPhases = {
    Phase::kCandidateUp, Phase::kCandidateDown, Phase::kFeatureUp,
    Phase::kPruneDown, Phase::kLpmUp};
std::string_view phaseName(Phase p);

// Endpoint id of the coordinator; sites use their fragment id.
inline constexpr int kCoordinator = -1;

struct LedgerEntry {
  Phase phase;
  int from;
  int to;
  std::size_t bytes;

  auto operator<=>(const LedgerEntry&) const = default;
};

// Every message exchanged during one query, with its encoded size.
class ShipmentLedger {
 public:
  ShipmentLedger() = default;
  ShipmentLedger(const ShipmentLedger& other);
  ShipmentLedger& operator=(const ShipmentLedger& other);

  void record(const LedgerEntry& e);
  // Entries sorted by phase, sender and receiver.
  std::vector<LedgerEntry> entries() const;
  std::size_t bytes(Phase p) const;
  std::size_t messages(Phase p) const;
  std::size_t totalBytes() const;

 private:
  mutable std::mutex mutex_;
  std::vector<LedgerEntry> entries_;
};

struct EngineOptions {
  bool useCandidates = true;
  bool prune = true;
  bool lecAssembly = true;
  // Ship every local partial match and prune at the coordinator instead of
  // sending survivor lists back to the sites.
  bool coordinatorPrune = false;
  std::uint32_t candidateBits = kDefaultCandidateBits;
  unsigned threads = 1;
};

struct StageTimes {
  double candidatesMs = 0;
  double lpmMs = 0;
  double featuresMs = 0;
  double pruneMs = 0;
  double assemblyMs = 0;
};

struct QueryCounts {
  std::size_t lpms = 0;
  std::size_t shippedLpms = 0;
  std::size_t features = 0;
  std::size_t survivors = 0;
  std::size_t intraMatches = 0;
  std::size_t crossingMatches = 0;
  std::size_t totalMatches = 0;
};

struct QueryStats {
  StageTimes times;
  std::array<std::size_t, kAllPhases.size()> shipment{};
  QueryCounts counts;
};

struct QueryResult {
  // Canonically sorted, duplicate free.
  std::vector<Match> matches;
  std::vector<Match> crossingMatches;
  QueryStats stats;
  ShipmentLedger ledger;
  // Local partial matches computed at the sites, by site.
  std::vector<std::vector<LocalPartialMatch>> lpms;
  // Features computed at the sites and those that survived pruning. Empty
  // when pruning is off.
  std::vector<LecFeature> features;
  std::vector<LecFeature> survivors;
};

QueryResult runQuery(const DistributedGraph& d, const QueryGraph& q,
                     const EngineOptions& options = {});

// With `withTimes` false the stage timings are left out so that the output
// only depends on the input.
std::string statsToJson(const QueryStats& s, bool withTimes = true);

struct BaselineRow {
  std::string name;
  EngineOptions options;
  QueryStats stats;
};

// Basic, LA (grouped assembly), LO (plus pruning) and full (plus candidate
// filtering). Threads and bit length come from `base`.
std::vector<BaselineRow> runBaselines(const DistributedGraph& d,
                                      const QueryGraph& q,
                                      const EngineOptions& base = {});
std::string baselinesToJson(const std::vector<BaselineRow>& rows,
                            bool withTimes = true);
std::string baselinesToText(const std::vector<BaselineRow>& rows,
                            bool withTimes = true);

}  // namespace lecq
