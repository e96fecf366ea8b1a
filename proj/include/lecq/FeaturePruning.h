#pragma once

#include <span>
#include <vector>

#include "lecq/LecFeature.h"

namespace lecq {

struct FeatureGroup {
  LecSign sign;
  std::vector<LecFeature> members;  // sorted
};

// One group per distinct sign, ordered by sign.
std::vector<FeatureGroup> groupFeatures(std::span<const LecFeature> features);

// Undirected graph over group indices; groups are adjacent when some pair of
// their members is joinable.
struct FeatureJoinGraph {
  std::vector<std::vector<std::size_t>> adjacency;  // sorted neighbour lists

  bool adjacent(std::size_t a, std::size_t b) const;
};

FeatureJoinGraph buildFeatureJoinGraph(std::span<const FeatureGroup> groups);

// Features that take part in at least one join chain whose signs cover the
// whole query. Everything else cannot contribute to a crossing match.
std::vector<LecFeature> pruneFeatures(std::span<const FeatureGroup> groups,
                                      const FeatureJoinGraph& graph,
                                      const QueryGraph& q);

}  // namespace lecq
