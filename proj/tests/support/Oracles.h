#pragma once

#include <vector>

#include "lecq/DistributedGraph.h"
#include "lecq/LocalPartialMatch.h"
#include "lecq/Match.h"
#include "lecq/QueryGraph.h"

// Exhaustive reference implementations. They enumerate every assignment and
// check the definitions literally, so they only scale to tiny inputs.
namespace lecq::test {

// Every |V|^|V^Q| assignment times every edge choice. Refuses graphs with
// more than 12 vertices or queries with more than 6 vertices.
std::vector<Match> bruteForceMatches(const std::vector<DataEdge>& edges,
                                     const QueryGraph& q,
                                     const Dictionary& dict);

// Checks the local partial match conditions one by one.
bool isLocalPartialMatch(const Fragment& f, const QueryGraph& q,
                         const LocalPartialMatch& m);

// Every assignment of fragment vertices or NULL to the query vertices,
// filtered by isLocalPartialMatch. Refuses fragments with more than 12
// vertices or queries with more than 5 vertices.
std::vector<LocalPartialMatch> bruteForceLpms(const Fragment& f,
                                              const QueryGraph& q);

}  // namespace lecq::test
