#pragma once

#include <vector>

#include "lecq/DistributedGraph.h"
#include "lecq/LocalPartialMatch.h"
#include "lecq/Match.h"
#include "lecq/QueryGraph.h"

namespace lecq {

// Decides whether a variable query vertex may be bound to an extended
// vertex. Used to plug in candidate filtering.
class ExtendedVertexFilter {
 public:
  virtual ~ExtendedVertexFilter() = default;
  virtual bool admits(std::size_t queryVertex, TermId vertex) const = 0;
};

// All local partial matches of `q` in `f`, sorted. The internally matched
// query vertices form a connected proper subset of the query, every query
// edge touching them is mapped, their other endpoints are bound to extended
// vertices and at least one crossing edge is used.
std::vector<LocalPartialMatch> findLocalPartialMatches(
    const Fragment& f, const QueryGraph& q,
    const ExtendedVertexFilter* filter = nullptr);

// Complete matches answerable by `f` alone. For star queries the centre is
// internal and the leaves may be extended, otherwise every vertex is
// internal.
std::vector<Match> findIntraFragmentMatches(const Fragment& f,
                                            const QueryGraph& q);

// The local partial matches a crossing match is assembled from, one per
// connected group of query vertices sharing a home fragment. Empty if the
// match lies inside one fragment.
std::vector<LocalPartialMatch> decomposeCrossingMatch(
    const DistributedGraph& d, const QueryGraph& q, const Match& m);

}  // namespace lecq
