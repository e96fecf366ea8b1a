#pragma once

#include <functional>
#include <span>
#include <vector>

#include "lecq/Match.h"
#include "lecq/QueryGraph.h"
#include "lecq/RdfGraph.h"

namespace lecq {

// Where a backtracking search may place query vertices.
struct MatchDomain {
  const AdjacencyIndex* edges = nullptr;
  // Candidates for the first vertex of the search order when it is a
  // variable.
  std::span<const TermId> vertices;
  // Optional extra restriction per query vertex.
  std::function<bool(std::size_t, TermId)> admits;
};

// Calls `emit` once per homomorphic match inside the domain.
void enumerateMatches(const ResolvedQuery& rq, const MatchDomain& domain,
                      const std::function<void(Match&&)>& emit);

// Calls `emit` once per injective-per-vertex-pair edge mapping for a fixed
// complete vertex assignment.
void enumerateEdgeMaps(const ResolvedQuery& rq, const AdjacencyIndex& edges,
                       const std::vector<TermId>& assignment,
                       const std::function<void(Match&&)>& emit);

// The data edges that a query edge may use for given endpoint images.
std::vector<DataEdge> compatibleEdges(const ResolvedQuery& rq,
                                      const AdjacencyIndex& edges,
                                      std::size_t queryEdge, TermId src,
                                      TermId dst);

}  // namespace lecq
