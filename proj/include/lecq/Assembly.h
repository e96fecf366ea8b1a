#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lecq/FeaturePruning.h"
#include "lecq/LecFeature.h"
#include "lecq/LocalPartialMatch.h"
#include "lecq/Match.h"

namespace lecq {

// Joins two (possibly already joined) local partial matches when their
// features are joinable and their bindings and edge maps agree wherever both
// are set. The result has a fresh synthetic fragment id.
std::optional<LocalPartialMatch> lpmJoin(const LocalPartialMatch& a,
                                         const LocalPartialMatch& b,
                                         const QueryGraph& q);

struct LpmGroup {
  LecSign sign;
  std::vector<LocalPartialMatch> members;
};

// One group per distinct feature sign, ordered by sign.
std::vector<LpmGroup> groupLpms(std::span<const LocalPartialMatch> matches,
                                const QueryGraph& q);

// Groups are adjacent when the features of some member pair are joinable.
FeatureJoinGraph buildLpmJoinGraph(std::span<const LpmGroup> groups,
                                   const QueryGraph& q);

struct AssemblyOptions {
  // Overrides the default smallest-group-first pick order: the alive group
  // with the lowest rank is processed next.
  std::optional<std::vector<std::size_t>> pickRank;
};

// Crossing matches from grouped local partial matches. Partial results are
// only joined with groups adjacent to the groups they already use.
std::vector<Match> assembleLec(std::span<const LpmGroup> groups,
                               const FeatureJoinGraph& graph,
                               const QueryGraph& q,
                               const AssemblyOptions& options = {});

// Crossing matches by repeatedly joining partial results with every local
// partial match until nothing new appears.
std::vector<Match> assembleBasic(std::span<const LocalPartialMatch> matches,
                                 const QueryGraph& q);

}  // namespace lecq
