#include "lecq/Engine.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <deque>
#include <functional>
#include <iomanip>
#include <json.hpp>
#include <map>
#include <set>
#include <sstream>
#include <thread>
#include <variant>

#include "lecq/Assembly.h"
#include "lecq/FeaturePruning.h"
#include "lecq/LocalMatcher.h"
#include "lecq/Wire.h"

namespace lecq {

std::string_view phaseName(Phase p) {
  switch (p) {
    case Phase::kCandidateUp: return "candidate-up";
    case Phase::kCandidateDown: return "candidate-down";
    case Phase::kFeatureUp: return "feature-up";
    case Phase::kPruneDown: return "prune-down";
    case Phase::kLpmUp: return "lpm-up";
  }
  return "unknown";
}

ShipmentLedger::ShipmentLedger(const ShipmentLedger& other)
    : entries_(other.entries()) {}

ShipmentLedger& ShipmentLedger::operator=(const ShipmentLedger& other) {
  if (this != &other) {
    auto copy = other.entries();
    std::lock_guard lock(mutex_);
    entries_ = std::move(copy);
  }
  return *this;
}

void ShipmentLedger::record(const LedgerEntry& e) {
  std::lock_guard lock(mutex_);
  entries_.push_back(e);
}

std::vector<LedgerEntry> ShipmentLedger::entries() const {
  std::lock_guard lock(mutex_);
  auto out = entries_;
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t ShipmentLedger::bytes(Phase p) const {
  std::lock_guard lock(mutex_);
  std::size_t n = 0;
  for (const auto& e : entries_) n += e.phase == p ? e.bytes : 0;
  return n;
}

std::size_t ShipmentLedger::messages(Phase p) const {
  std::lock_guard lock(mutex_);
  return std::count_if(entries_.begin(), entries_.end(),
                       [&](const LedgerEntry& e) { return e.phase == p; });
}

std::size_t ShipmentLedger::totalBytes() const {
  std::size_t n = 0;
  for (auto p : kAllPhases) n += bytes(p);
  return n;
}

// ____________________________________________________________________________
namespace {

using Payload = std::variant<CandidateBitVector, std::vector<LecFeature>,
                             std::vector<std::uint32_t>,
                             std::vector<LocalPartialMatch>>;

struct Message {
  Phase phase;
  int from;
  int to;
  Payload payload;
};

// In-process stand-in for the network between sites and the coordinator.
// Every send is charged to the ledger with its exact wire size.
class MessageBus {
 public:
  MessageBus(std::size_t sites, const QueryGraph& q, ShipmentLedger& ledger)
      : q_(q), ledger_(ledger), inboxes_(sites + 1) {}

  void send(Message m) {
    ledger_.record({m.phase, m.from, m.to, encodedSize(m.payload)});
    auto& box = inboxes_[slot(m.to)];
    std::lock_guard lock(box.mutex);
    box.messages.push_back(std::move(m));
  }

  // Pending messages for an endpoint, ordered by sender.
  std::vector<Message> drain(int endpoint) {
    auto& box = inboxes_[slot(endpoint)];
    std::lock_guard lock(box.mutex);
    std::vector<Message> out(std::make_move_iterator(box.messages.begin()),
                             std::make_move_iterator(box.messages.end()));
    box.messages.clear();
    std::stable_sort(out.begin(), out.end(), [](auto& a, auto& b) {
      return a.from < b.from;
    });
    return out;
  }

 private:
  struct Inbox {
    std::mutex mutex;
    std::deque<Message> messages;
  };

  static std::size_t slot(int endpoint) {
    return static_cast<std::size_t>(endpoint + 1);
  }

  std::size_t encodedSize(const Payload& p) const {
    return std::visit(
        [&](const auto& v) -> std::size_t {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, CandidateBitVector>) {
            return wire::encodeCandidates(v).size();
          } else if constexpr (std::is_same_v<T, std::vector<LecFeature>>) {
            std::size_t n = 0;
            for (const auto& f : v) n += wire::encodeFeature(f, q_).size();
            return n;
          } else if constexpr (std::is_same_v<T, std::vector<std::uint32_t>>) {
            return wire::encodeSurvivors(v).size();
          } else {
            std::size_t n = 0;
            for (const auto& m : v) n += wire::encodeLpm(m, q_).size();
            return n;
          }
        },
        p);
  }

  const QueryGraph& q_;
  ShipmentLedger& ledger_;
  std::vector<Inbox> inboxes_;
};

void parallelFor(std::size_t n, unsigned threads,
                 const std::function<void(std::size_t)>& body) {
  unsigned workers = std::max(1u, std::min<unsigned>(threads, n));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < n; i = next++) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

class Stopwatch {
 public:
  double lapMs() {
    auto now = std::chrono::steady_clock::now();
    double ms =
        std::chrono::duration<double, std::milli>(now - start_).count();
    start_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

}  // namespace

QueryResult runQuery(const DistributedGraph& d, const QueryGraph& q,
                     const EngineOptions& options) {
  QueryResult result;
  const auto& fragments = d.fragments();
  std::size_t k = fragments.size();
  MessageBus bus(k, q, result.ledger);
  Stopwatch clock;
  auto& times = result.stats.times;
  auto& counts = result.stats.counts;

  // Candidate exchange: each site summarises its internal candidates per
  // variable, the coordinator ORs them and returns the union.
  std::vector<std::unique_ptr<CandidateFilter>> filters(k);
  auto variables = q.variableVertices();
  if (options.useCandidates && !variables.empty()) {
    parallelFor(k, options.threads, [&](std::size_t site) {
      for (auto v : variables) {
        auto local = localCandidates(fragments[site], q, v);
        bus.send({Phase::kCandidateUp, static_cast<int>(site), kCoordinator,
                  compressCandidates(local, d.dictionary(), v,
                                     options.candidateBits)});
      }
    });
    std::map<std::uint16_t, std::vector<CandidateBitVector>> byVariable;
    for (auto& m : bus.drain(kCoordinator)) {
      auto& v = std::get<CandidateBitVector>(m.payload);
      byVariable[v.variable].push_back(std::move(v));
    }
    for (auto& [variable, vectors] : byVariable) {
      auto merged = aggregateCandidates(vectors);
      for (std::size_t site = 0; site < k; ++site) {
        bus.send({Phase::kCandidateDown, kCoordinator, static_cast<int>(site),
                  merged});
      }
    }
    parallelFor(k, options.threads, [&](std::size_t site) {
      std::vector<CandidateBitVector> vectors;
      for (auto& m : bus.drain(static_cast<int>(site))) {
        vectors.push_back(std::get<CandidateBitVector>(std::move(m.payload)));
      }
      filters[site] =
          std::make_unique<CandidateFilter>(d.dictionary(), std::move(vectors));
    });
  }
  times.candidatesMs = clock.lapMs();

  std::vector<std::vector<Match>> intra(k);
  result.lpms.resize(k);
  bool star = q.starCenter().has_value();
  parallelFor(k, options.threads, [&](std::size_t site) {
    intra[site] = findIntraFragmentMatches(fragments[site], q);
    if (!star) {
      result.lpms[site] =
          findLocalPartialMatches(fragments[site], q, filters[site].get());
    }
  });
  for (const auto& m : intra) counts.intraMatches += m.size();
  for (const auto& l : result.lpms) counts.lpms += l.size();
  times.lpmMs = clock.lapMs();

  std::vector<LocalPartialMatch> shipped;
  if (!star) {
    // Features are numbered per site in their sorted order; survivor lists
    // refer to these indices.
    std::vector<std::vector<LecFeature>> siteFeatures(k);
    if (options.prune) {
      parallelFor(k, options.threads, [&](std::size_t site) {
        if (result.lpms[site].empty()) return;
        siteFeatures[site] = computeLecFeatures(result.lpms[site], q);
        bus.send({Phase::kFeatureUp, static_cast<int>(site), kCoordinator,
                  siteFeatures[site]});
        if (options.coordinatorPrune) {
          bus.send({Phase::kLpmUp, static_cast<int>(site), kCoordinator,
                    result.lpms[site]});
        }
      });
    }
    times.featuresMs = clock.lapMs();

    if (options.prune) {
      std::vector<LecFeature> all;
      std::vector<std::vector<LocalPartialMatch>> received(k);
      for (auto& m : bus.drain(kCoordinator)) {
        if (m.phase == Phase::kFeatureUp) {
          auto& batch = std::get<std::vector<LecFeature>>(m.payload);
          all.insert(all.end(), batch.begin(), batch.end());
        } else {
          received[m.from] =
              std::get<std::vector<LocalPartialMatch>>(std::move(m.payload));
        }
      }
      auto groups = groupFeatures(all);
      auto graph = buildFeatureJoinGraph(groups);
      result.survivors = pruneFeatures(groups, graph, q);
      std::set<LecFeature> keep(result.survivors.begin(),
                                result.survivors.end());
      result.features = std::move(all);
      std::sort(result.features.begin(), result.features.end());
      counts.features = result.features.size();
      counts.survivors = result.survivors.size();

      if (options.coordinatorPrune) {
        for (auto& batch : received) {
          for (auto& m : batch) {
            if (keep.contains(featureOf(m, q))) shipped.push_back(std::move(m));
          }
        }
      } else {
        for (std::size_t site = 0; site < k; ++site) {
          if (siteFeatures[site].empty()) continue;
          std::vector<std::uint32_t> ids;
          for (std::size_t i = 0; i < siteFeatures[site].size(); ++i) {
            if (keep.contains(siteFeatures[site][i])) {
              ids.push_back(static_cast<std::uint32_t>(i));
            }
          }
          bus.send({Phase::kPruneDown, kCoordinator, static_cast<int>(site),
                    std::move(ids)});
        }
        parallelFor(k, options.threads, [&](std::size_t site) {
          auto inbox = bus.drain(static_cast<int>(site));
          if (inbox.empty()) return;
          const auto& ids = std::get<std::vector<std::uint32_t>>(
              inbox.front().payload);
          std::set<LecFeature> allowed;
          for (auto id : ids) allowed.insert(siteFeatures[site][id]);
          std::vector<LocalPartialMatch> out;
          for (const auto& m : result.lpms[site]) {
            if (allowed.contains(featureOf(m, q))) out.push_back(m);
          }
          if (!out.empty()) {
            bus.send({Phase::kLpmUp, static_cast<int>(site), kCoordinator,
                      std::move(out)});
          }
        });
      }
    } else {
      parallelFor(k, options.threads, [&](std::size_t site) {
        if (result.lpms[site].empty()) return;
        bus.send({Phase::kLpmUp, static_cast<int>(site), kCoordinator,
                  result.lpms[site]});
      });
    }
    for (auto& m : bus.drain(kCoordinator)) {
      auto& batch = std::get<std::vector<LocalPartialMatch>>(m.payload);
      shipped.insert(shipped.end(), std::make_move_iterator(batch.begin()),
                     std::make_move_iterator(batch.end()));
    }
    times.pruneMs = clock.lapMs();
    counts.shippedLpms = shipped.size();
    if (!options.prune) {
      std::set<LecFeature> distinct;
      for (const auto& m : shipped) distinct.insert(featureOf(m, q));
      counts.features = counts.survivors = distinct.size();
    }

    if (options.lecAssembly) {
      auto groups = groupLpms(shipped, q);
      auto graph = buildLpmJoinGraph(groups, q);
      result.crossingMatches = assembleLec(groups, graph, q);
    } else {
      result.crossingMatches = assembleBasic(shipped, q);
    }
    times.assemblyMs = clock.lapMs();
  }

  for (auto& m : intra) {
    result.matches.insert(result.matches.end(), m.begin(), m.end());
  }
  result.matches.insert(result.matches.end(), result.crossingMatches.begin(),
                        result.crossingMatches.end());
  sortCanonically(result.matches, q, d.dictionary());
  sortCanonically(result.crossingMatches, q, d.dictionary());
  counts.crossingMatches = result.crossingMatches.size();
  counts.totalMatches = result.matches.size();
  for (std::size_t i = 0; i < kAllPhases.size(); ++i) {
    result.stats.shipment[i] = result.ledger.bytes(kAllPhases[i]);
  }
  return result;
}

// ____________________________________________________________________________
namespace {

nlohmann::ordered_json statsJson(const QueryStats& s, bool withTimes) {
  nlohmann::ordered_json out;
  if (withTimes) {
    out["stages"] = {{"candidates_ms", s.times.candidatesMs},
                     {"lpm_ms", s.times.lpmMs},
                     {"features_ms", s.times.featuresMs},
                     {"prune_ms", s.times.pruneMs},
                     {"assembly_ms", s.times.assemblyMs}};
  }
  nlohmann::ordered_json shipment;
  std::size_t total = 0;
  for (std::size_t i = 0; i < kAllPhases.size(); ++i) {
    shipment[std::string(phaseName(kAllPhases[i]))] = s.shipment[i];
    total += s.shipment[i];
  }
  shipment["total"] = total;
  out["shipment"] = shipment;
  out["counts"] = {{"lpms", s.counts.lpms},
                   {"shipped_lpms", s.counts.shippedLpms},
                   {"features", s.counts.features},
                   {"survivors", s.counts.survivors},
                   {"intra_matches", s.counts.intraMatches},
                   {"crossing_matches", s.counts.crossingMatches},
                   {"total_matches", s.counts.totalMatches}};
  return out;
}

double totalMs(const StageTimes& t) {
  return t.candidatesMs + t.lpmMs + t.featuresMs + t.pruneMs + t.assemblyMs;
}

}  // namespace

std::string statsToJson(const QueryStats& s, bool withTimes) {
  return statsJson(s, withTimes).dump(2);
}

std::vector<BaselineRow> runBaselines(const DistributedGraph& d,
                                      const QueryGraph& q,
                                      const EngineOptions& base) {
  std::vector<BaselineRow> rows;
  auto add = [&](std::string name, bool lec, bool prune, bool candidates) {
    EngineOptions o = base;
    o.lecAssembly = lec;
    o.prune = prune;
    o.useCandidates = candidates;
    o.coordinatorPrune = false;
    rows.push_back({std::move(name), o, runQuery(d, q, o).stats});
  };
  add("Basic", false, false, false);
  add("LA", true, false, false);
  add("LO", true, true, false);
  add("full", true, true, true);
  return rows;
}

std::string baselinesToJson(const std::vector<BaselineRow>& rows,
                            bool withTimes) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["name"] = r.name;
    row["lec_assembly"] = r.options.lecAssembly;
    row["prune"] = r.options.prune;
    row["candidates"] = r.options.useCandidates;
    row.update(statsJson(r.stats, withTimes));
    out.push_back(std::move(row));
  }
  return out.dump(2);
}

std::string baselinesToText(const std::vector<BaselineRow>& rows,
                            bool withTimes) {
  std::vector<std::string> header = {"config", "lpms", "shipped", "features",
                                     "survivors", "matches"};
  for (auto p : kAllPhases) header.emplace_back(phaseName(p));
  header.emplace_back("total_bytes");
  if (withTimes) header.emplace_back("total_ms");
  std::vector<std::vector<std::string>> table{header};
  for (const auto& r : rows) {
    const auto& c = r.stats.counts;
    std::vector<std::string> line = {
        r.name, std::to_string(c.lpms), std::to_string(c.shippedLpms),
        std::to_string(c.features), std::to_string(c.survivors),
        std::to_string(c.totalMatches)};
    std::size_t total = 0;
    for (auto b : r.stats.shipment) {
      line.push_back(std::to_string(b));
      total += b;
    }
    line.push_back(std::to_string(total));
    if (withTimes) {
      std::ostringstream ms;
      ms << std::fixed << std::setprecision(3) << totalMs(r.stats.times);
      line.push_back(ms.str());
    }
    table.push_back(std::move(line));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : table) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      width[i] = std::max(width[i], line[i].size());
    }
  }
  std::ostringstream out;
  for (const auto& line : table) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) out << "  ";
      out << std::setw(static_cast<int>(width[i])) << line[i];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace lecq
