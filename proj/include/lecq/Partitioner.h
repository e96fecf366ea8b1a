#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lecq/DistributedGraph.h"
#include "lecq/QueryGraph.h"
#include "lecq/RdfGraph.h"

namespace lecq {

using Rational = boost::multiprecision::cpp_rational;

// Home fragment per vertex, keyed by the N-Triples rendering of the vertex.
class VertexAssignment {
 public:
  explicit VertexAssignment(FragmentId fragmentCount = 0)
      : fragmentCount_(fragmentCount) {}

  // Throws PartitionError for a negative id. Grows the fragment count.
  void assign(const Term& vertex, FragmentId fragment);
  std::optional<FragmentId> find(const Term& vertex) const;
  FragmentId fragmentCount() const { return fragmentCount_; }
  const std::map<std::string, FragmentId>& entries() const { return homes_; }

 private:
  FragmentId fragmentCount_;
  std::map<std::string, FragmentId> homes_;
};

// FNV-1a 64 of each vertex rendering modulo k. Throws PartitionError for
// k == 0.
VertexAssignment hashPartition(const RdfGraph& g, std::uint32_t k);

// Throws PartitionError naming the first vertex without a home.
DistributedGraph buildDistributed(const RdfGraph& g,
                                  const VertexAssignment& a);

// Lines of "<rendering>\t<fragment-id>"; vertex order follows the graph.
void writePartitionFile(const RdfGraph& g, const VertexAssignment& a,
                        std::ostream& out);
VertexAssignment readPartitionFile(std::istream& in);
VertexAssignment loadPartitionFile(const std::string& path);

struct VertexCost {
  TermId vertex;
  std::uint64_t crossingDegree;
  Rational probability;
  Rational expectation;
};

struct PartitionCostReport {
  std::vector<VertexCost> perVertex;
  std::uint64_t crossingEdges = 0;
  Rational totalExpectation;
  std::uint64_t maxFragmentEdges = 0;
  Rational cost;
};

// Expected crossing-edge load times the largest fragment size, in exact
// arithmetic. With no crossing edges every probability is zero.
PartitionCostReport partitionCost(const DistributedGraph& d);

std::string toJson(const PartitionCostReport& r, const Dictionary& dict);
std::string formatRational(const Rational& r);
double toDouble(const Rational& r);

struct LecCountBound {
  std::vector<std::uint64_t> perFragment;
  std::uint64_t total = 0;
};

// Sum over fragments of |crossing edges|^|query edges|, saturating at
// UINT64_MAX.
LecCountBound estimateLecCount(const DistributedGraph& d, const QueryGraph& q);
LecCountBound estimateLecCount(const DistributedGraph& d,
                               std::size_t queryEdges);

}  // namespace lecq
