#include "lecq/Assembly.h"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>

namespace lecq {

std::optional<LocalPartialMatch> lpmJoin(const LocalPartialMatch& a,
                                         const LocalPartialMatch& b,
                                         const QueryGraph& q) {
  if (!joinable(featureOf(a, q), featureOf(b, q))) return std::nullopt;
  LocalPartialMatch out;
  out.bindings.resize(a.bindings.size());
  out.edgeMap.resize(a.edgeMap.size());
  for (std::size_t v = 0; v < a.bindings.size(); ++v) {
    const auto& x = a.bindings[v];
    const auto& y = b.bindings[v];
    if (x.vertex != kNullTerm && y.vertex != kNullTerm &&
        x.vertex != y.vertex) {
      return std::nullopt;
    }
    out.bindings[v].vertex = x.vertex != kNullTerm ? x.vertex : y.vertex;
    if (x.state == SlotState::kInternal || y.state == SlotState::kInternal) {
      out.bindings[v].state = SlotState::kInternal;
    } else if (out.bindings[v].vertex != kNullTerm) {
      out.bindings[v].state = SlotState::kExtended;
    }
  }
  for (std::size_t i = 0; i < a.edgeMap.size(); ++i) {
    if (a.edgeMap[i] && b.edgeMap[i] && *a.edgeMap[i] != *b.edgeMap[i]) {
      return std::nullopt;
    }
    out.edgeMap[i] = a.edgeMap[i] ? a.edgeMap[i] : b.edgeMap[i];
  }
  out.fragment = nextSyntheticFragmentId();
  std::set_union(a.sourceFragments.begin(), a.sourceFragments.end(),
                 b.sourceFragments.begin(), b.sourceFragments.end(),
                 std::back_inserter(out.sourceFragments));
  return out;
}

std::vector<LpmGroup> groupLpms(std::span<const LocalPartialMatch> matches,
                                const QueryGraph& q) {
  std::map<LecSign, std::set<LocalPartialMatch>> bySign;
  for (const auto& m : matches) bySign[featureOf(m, q).sign].insert(m);
  std::vector<LpmGroup> out;
  for (auto& [sign, members] : bySign) {
    out.push_back({sign, {members.begin(), members.end()}});
  }
  return out;
}

FeatureJoinGraph buildLpmJoinGraph(std::span<const LpmGroup> groups,
                                   const QueryGraph& q) {
  std::vector<FeatureGroup> featureGroups;
  for (const auto& g : groups) {
    std::set<LecFeature> features;
    for (const auto& m : g.members) features.insert(featureOf(m, q));
    featureGroups.push_back({g.sign, {features.begin(), features.end()}});
  }
  return buildFeatureJoinGraph(featureGroups);
}

namespace {

using PartialKey =
    std::pair<std::vector<Binding>, std::vector<std::optional<DataEdge>>>;

PartialKey keyOf(const LocalPartialMatch& m) { return {m.bindings, m.edgeMap}; }

bool allInternal(const LocalPartialMatch& m) {
  return std::all_of(m.bindings.begin(), m.bindings.end(), [](const auto& b) {
    return b.state == SlotState::kInternal;
  });
}

class LecAssembler {
 public:
  LecAssembler(std::span<const LpmGroup> groups, const FeatureJoinGraph& graph,
               const QueryGraph& q, const AssemblyOptions& options)
      : groups_(groups),
        graph_(graph),
        q_(q),
        options_(options),
        alive_(groups.size(), true) {
    for (const auto& g : groups) {
      std::vector<LecFeature> features;
      for (const auto& m : g.members) features.push_back(featureOf(m, q));
      features_.push_back(std::move(features));
    }
  }

  std::vector<Match> run() {
    while (true) {
      std::optional<std::size_t> pick;
      for (std::size_t g = 0; g < groups_.size(); ++g) {
        if (alive_[g] && (!pick || before(g, *pick))) pick = g;
      }
      if (!pick) break;
      std::vector<bool> inV(groups_.size(), false);
      inV[*pick] = true;
      extend(inV, groups_[*pick].members);
      alive_[*pick] = false;
      for (std::size_t g = 0; g < groups_.size(); ++g) {
        if (!alive_[g]) continue;
        bool any = std::any_of(graph_.adjacency[g].begin(),
                               graph_.adjacency[g].end(),
                               [&](std::size_t n) { return alive_[n]; });
        if (!any) alive_[g] = false;
      }
    }
    return {matches_.begin(), matches_.end()};
  }

 private:
  bool before(std::size_t a, std::size_t b) const {
    if (options_.pickRank) {
      return (*options_.pickRank)[a] < (*options_.pickRank)[b];
    }
    auto sa = groups_[a].members.size();
    auto sb = groups_[b].members.size();
    if (sa != sb) return sa < sb;
    return groups_[a].sign < groups_[b].sign;
  }

  void extend(std::vector<bool>& inV,
              const std::vector<LocalPartialMatch>& partials) {
    LecSign used = featureOf(partials.front(), q_).sign;
    std::vector<std::size_t> next;
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      if (!alive_[g] || inV[g] || used.intersects(groups_[g].sign)) continue;
      for (std::size_t v = 0; v < groups_.size(); ++v) {
        if (inV[v] && graph_.adjacent(v, g)) {
          next.push_back(g);
          break;
        }
      }
    }
    for (auto g : next) {
      std::map<PartialKey, LocalPartialMatch> incomplete;
      for (const auto& p : partials) {
        LecFeature pf = featureOf(p, q_);
        for (std::size_t i = 0; i < groups_[g].members.size(); ++i) {
          if (!joinable(pf, features_[g][i])) continue;
          auto joined = lpmJoin(p, groups_[g].members[i], q_);
          if (!joined) continue;
          if (allInternal(*joined)) {
            matches_.insert(joined->toMatch());
          } else {
            incomplete.try_emplace(keyOf(*joined), std::move(*joined));
          }
        }
      }
      if (incomplete.empty()) continue;
      std::vector<LocalPartialMatch> nextPartials;
      for (auto& [key, m] : incomplete) nextPartials.push_back(std::move(m));
      inV[g] = true;
      extend(inV, nextPartials);
      inV[g] = false;
    }
  }

  std::span<const LpmGroup> groups_;
  const FeatureJoinGraph& graph_;
  const QueryGraph& q_;
  const AssemblyOptions& options_;
  std::vector<bool> alive_;
  std::vector<std::vector<LecFeature>> features_;
  std::set<Match> matches_;
};

}  // namespace

std::vector<Match> assembleLec(std::span<const LpmGroup> groups,
                               const FeatureJoinGraph& graph,
                               const QueryGraph& q,
                               const AssemblyOptions& options) {
  if (groups.empty()) return {};
  return LecAssembler(groups, graph, q, options).run();
}

std::vector<Match> assembleBasic(std::span<const LocalPartialMatch> matches,
                                 const QueryGraph& q) {
  std::set<Match> results;
  std::set<PartialKey> seen;
  std::vector<LocalPartialMatch> frontier(matches.begin(), matches.end());
  for (const auto& m : frontier) seen.insert(keyOf(m));
  while (!frontier.empty()) {
    std::vector<LocalPartialMatch> next;
    for (const auto& p : frontier) {
      for (const auto& atom : matches) {
        auto joined = lpmJoin(p, atom, q);
        if (!joined) continue;
        if (allInternal(*joined)) {
          results.insert(joined->toMatch());
        } else if (seen.insert(keyOf(*joined)).second) {
          next.push_back(std::move(*joined));
        }
      }
    }
    frontier = std::move(next);
  }
  return {results.begin(), results.end()};
}

}  // namespace lecq
