#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lecq/DistributedGraph.h"
#include "lecq/LocalPartialMatch.h"
#include "lecq/Partitioner.h"
#include "lecq/QueryGraph.h"
#include "lecq/RdfGraph.h"

namespace lecq::test {

std::string dataPath(const std::string& name);

struct Dataset {
  RdfGraph graph;
  VertexAssignment assignment;
  std::unique_ptr<DistributedGraph> dist;
  std::unique_ptr<QueryGraph> query;
};

Dataset loadDataset(const std::string& nt, const std::string& part,
                    const std::string& rq);

// The philosopher graph of the worked example, split over three fragments.
// Vertices are referred to by the three-digit numbers used there.
Dataset runningExample();
TermId exampleVertex(const Dataset& d, const std::string& number);
const std::map<std::string, Term>& exampleTerms();

// The eight local partial matches of the worked example by name, "PM11"
// for the first match of the first fragment through "PM32".
LocalPartialMatch exampleLpm(const Dataset& d, const std::string& name);
std::vector<std::string> exampleLpmNames();

// Query vertex index for the worked example's v1..v5 numbering.
inline std::size_t qv(int oneBased) { return static_cast<std::size_t>(oneBased - 1); }

// Two partitionings of one 17-edge graph: (a) puts all four crossing edges on
// one vertex, (b) spreads five crossing edges over two vertices.
Dataset costExample(char variant);

}  // namespace lecq::test
