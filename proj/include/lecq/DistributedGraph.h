#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lecq/RdfGraph.h"

namespace lecq {

using FragmentId = std::int32_t;

// One fragment of a vertex-disjoint partitioning. Crossing edges are stored
// in both fragments that own one of their endpoints.
class Fragment {
 public:
  // Throws std::invalid_argument if the parts are inconsistent.
  Fragment(FragmentId id, std::shared_ptr<const Dictionary> dict,
           std::vector<TermId> internal, std::vector<TermId> extended,
           std::vector<DataEdge> internalEdges,
           std::vector<DataEdge> crossingEdges);

  FragmentId id() const { return id_; }
  const Dictionary& dictionary() const { return *dict_; }
  const std::vector<TermId>& internalVertices() const { return internal_; }
  const std::vector<TermId>& extendedVertices() const { return extended_; }
  const std::vector<DataEdge>& internalEdges() const { return internalEdges_; }
  const std::vector<DataEdge>& crossingEdges() const { return crossingEdges_; }
  // Sorted labels of internal and crossing edges.
  const std::vector<TermId>& labels() const { return labels_; }

  bool isInternal(TermId v) const { return internalSet_.contains(v); }
  bool isExtended(TermId v) const { return extendedSet_.contains(v); }
  bool contains(TermId v) const { return isInternal(v) || isExtended(v); }
  // All vertices: internal ones first, then extended ones.
  const std::vector<TermId>& allVertices() const { return all_; }
  // Index over internal and crossing edges.
  const AdjacencyIndex& index() const { return index_; }
  std::size_t edgeCount() const {
    return internalEdges_.size() + crossingEdges_.size();
  }

 private:
  FragmentId id_;
  std::shared_ptr<const Dictionary> dict_;
  std::vector<TermId> internal_;
  std::vector<TermId> extended_;
  std::vector<TermId> all_;
  std::vector<DataEdge> internalEdges_;
  std::vector<DataEdge> crossingEdges_;
  std::vector<TermId> labels_;
  std::unordered_set<TermId> internalSet_;
  std::unordered_set<TermId> extendedSet_;
  AdjacencyIndex index_;
};

class DistributedGraph {
 public:
  DistributedGraph(std::shared_ptr<const Dictionary> dict,
                   std::vector<Fragment> fragments,
                   std::unordered_map<TermId, FragmentId> home);

  const Dictionary& dictionary() const { return *dict_; }
  std::shared_ptr<const Dictionary> sharedDictionary() const { return dict_; }
  const std::vector<Fragment>& fragments() const { return fragments_; }
  const Fragment& fragment(FragmentId id) const { return fragments_.at(id); }
  FragmentId home(TermId v) const { return home_.at(v); }
  const std::unordered_map<TermId, FragmentId>& homes() const { return home_; }
  std::size_t crossingEdgeCount() const;

  // Union of all internal edges and each crossing edge once, as a graph
  // sharing this dictionary's ids.
  std::vector<DataEdge> flattenEdges() const;

 private:
  std::shared_ptr<const Dictionary> dict_;
  std::vector<Fragment> fragments_;
  std::unordered_map<TermId, FragmentId> home_;
};

}  // namespace lecq
