#pragma once

#include <vector>

#include "lecq/Match.h"
#include "lecq/QueryGraph.h"
#include "lecq/RdfGraph.h"

namespace lecq {

// All homomorphic matches of `q` in `g`, sorted by id order.
std::vector<Match> findMatchesCentralized(const RdfGraph& g,
                                          const QueryGraph& q);

// Same, over an explicit edge list whose ids come from `dict`.
std::vector<Match> findMatchesCentralized(const std::vector<DataEdge>& edges,
                                          const Dictionary& dict,
                                          const QueryGraph& q);

// Checks the match definition directly: constants respected, every query
// edge mapped to an existing data edge with a compatible label, and query
// edges between the same ordered vertex pair using distinct data edges.
bool isValidMatch(const AdjacencyIndex& edges, const ResolvedQuery& rq,
                  const Match& m);

}  // namespace lecq
