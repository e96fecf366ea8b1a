#pragma once

#include <compare>
#include <string>
#include <vector>

#include "lecq/QueryGraph.h"
#include "lecq/RdfGraph.h"

namespace lecq {

// A complete homomorphic match: one data vertex per query vertex and one data
// edge per query edge.
struct Match {
  std::vector<TermId> assignment;
  std::vector<DataEdge> edgeMap;

  auto operator<=>(const Match&) const = default;
};

// Terms of the vertex assignment followed by the bound predicate variables,
// rendered in N-Triples form.
std::vector<std::string> serializeMatch(const Match& m, const QueryGraph& q,
                                        const Dictionary& dict);

// One JSON object per match mapping variable names to terms.
std::string matchToJsonLine(const Match& m, const QueryGraph& q,
                            const Dictionary& dict);

// Sorts by serialized form and removes duplicates.
void sortCanonically(std::vector<Match>& matches, const QueryGraph& q,
                     const Dictionary& dict);

}  // namespace lecq
