#include "lecq/FeaturePruning.h"

#include <algorithm>
#include <map>
#include <set>

namespace lecq {

std::vector<FeatureGroup> groupFeatures(std::span<const LecFeature> features) {
  std::map<LecSign, std::set<LecFeature>> bySign;
  for (const auto& f : features) bySign[f.sign].insert(f);
  std::vector<FeatureGroup> out;
  for (auto& [sign, members] : bySign) {
    out.push_back({sign, {members.begin(), members.end()}});
  }
  return out;
}

bool FeatureJoinGraph::adjacent(std::size_t a, std::size_t b) const {
  return std::binary_search(adjacency[a].begin(), adjacency[a].end(), b);
}

FeatureJoinGraph buildFeatureJoinGraph(std::span<const FeatureGroup> groups) {
  FeatureJoinGraph g;
  g.adjacency.resize(groups.size());
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      if (groups[i].sign.intersects(groups[j].sign)) continue;
      bool any = false;
      for (const auto& a : groups[i].members) {
        for (const auto& b : groups[j].members) {
          if (joinable(a, b)) {
            any = true;
            break;
          }
        }
        if (any) break;
      }
      if (any) {
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
      }
    }
  }
  return g;
}

namespace {

// A partially joined feature and the original features it was built from.
struct Partial {
  LecFeature feature;
  std::vector<std::size_t> parts;  // indices into the flat feature list

  bool operator<(const Partial& o) const {
    return std::tie(feature.crossing, feature.sign, parts) <
           std::tie(o.feature.crossing, o.feature.sign, o.parts);
  }
};

class Pruner {
 public:
  Pruner(std::span<const FeatureGroup> groups, const FeatureJoinGraph& graph,
         const QueryGraph& q)
      : groups_(groups), graph_(graph), q_(q), alive_(groups.size(), true) {
    for (std::size_t g = 0; g < groups.size(); ++g) {
      offsets_.push_back(flat_.size());
      for (const auto& f : groups[g].members) flat_.push_back(&f);
    }
  }

  std::vector<LecFeature> run() {
    while (true) {
      std::optional<std::size_t> pick;
      for (std::size_t g = 0; g < groups_.size(); ++g) {
        if (!alive_[g]) continue;
        if (!pick || smaller(g, *pick)) pick = g;
      }
      if (!pick) break;
      std::vector<Partial> seeds;
      for (std::size_t i = 0; i < groups_[*pick].members.size(); ++i) {
        seeds.push_back({groups_[*pick].members[i], {offsets_[*pick] + i}});
      }
      std::vector<bool> inV(groups_.size(), false);
      inV[*pick] = true;
      extend(inV, seeds);
      alive_[*pick] = false;
      for (std::size_t g = 0; g < groups_.size(); ++g) {
        if (alive_[g] && !hasAliveNeighbour(g)) alive_[g] = false;
      }
    }
    std::vector<LecFeature> out;
    for (auto i : survivors_) out.push_back(*flat_[i]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  bool smaller(std::size_t a, std::size_t b) const {
    auto sa = groups_[a].members.size();
    auto sb = groups_[b].members.size();
    if (sa != sb) return sa < sb;
    return groups_[a].sign < groups_[b].sign;
  }

  bool hasAliveNeighbour(std::size_t g) const {
    return std::any_of(graph_.adjacency[g].begin(), graph_.adjacency[g].end(),
                       [&](std::size_t n) { return alive_[n]; });
  }

  // Tries to join every partial with every member of each alive group next
  // to the groups already used, recursing on the incomplete results.
  void extend(std::vector<bool>& inV, const std::vector<Partial>& partials) {
    std::vector<std::size_t> next;
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      if (!alive_[g] || inV[g]) continue;
      bool adjacentToV = false;
      for (std::size_t v = 0; v < groups_.size() && !adjacentToV; ++v) {
        adjacentToV = inV[v] && graph_.adjacent(v, g);
      }
      if (adjacentToV) next.push_back(g);
    }
    std::sort(next.begin(), next.end(), [&](std::size_t a, std::size_t b) {
      if (groups_[a].sign != groups_[b].sign) {
        return groups_[a].sign < groups_[b].sign;
      }
      return groups_[a].members.size() < groups_[b].members.size();
    });
    for (auto g : next) {
      if (partials.front().feature.sign.intersects(groups_[g].sign)) continue;
      std::set<Partial> incomplete;
      for (const auto& p : partials) {
        for (std::size_t i = 0; i < groups_[g].members.size(); ++i) {
          const auto& member = groups_[g].members[i];
          if (!joinable(p.feature, member)) continue;
          LecFeature joined = featureJoin(p.feature, member, q_);
          if (joined.sign.all()) {
            survivors_.insert(p.parts.begin(), p.parts.end());
            survivors_.insert(offsets_[g] + i);
          } else {
            Partial np{std::move(joined), p.parts};
            np.parts.push_back(offsets_[g] + i);
            std::sort(np.parts.begin(), np.parts.end());
            incomplete.insert(std::move(np));
          }
        }
      }
      if (!incomplete.empty()) {
        inV[g] = true;
        extend(inV, {incomplete.begin(), incomplete.end()});
        inV[g] = false;
      }
    }
  }

  std::span<const FeatureGroup> groups_;
  const FeatureJoinGraph& graph_;
  const QueryGraph& q_;
  std::vector<bool> alive_;
  std::vector<const LecFeature*> flat_;
  std::vector<std::size_t> offsets_;
  std::set<std::size_t> survivors_;
};

}  // namespace

std::vector<LecFeature> pruneFeatures(std::span<const FeatureGroup> groups,
                                      const FeatureJoinGraph& graph,
                                      const QueryGraph& q) {
  if (groups.empty()) return {};
  return Pruner(groups, graph, q).run();
}

}  // namespace lecq
