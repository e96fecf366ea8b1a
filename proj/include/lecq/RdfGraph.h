#pragma once

#include <compare>
#include <memory>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lecq/Dictionary.h"

namespace lecq {

struct DataEdge {
  TermId src;
  TermId label;
  TermId dst;

  auto operator<=>(const DataEdge&) const = default;
};

struct DataEdgeHash {
  std::size_t operator()(const DataEdge& e) const noexcept {
    std::size_t h = e.src;
    h = h * 0x9E3779B97F4A7C15ull + e.label;
    h = h * 0x9E3779B97F4A7C15ull + e.dst;
    return h ^ (h >> 29);
  }
};

// Edge lookup by source, target, or ordered endpoint pair.
class AdjacencyIndex {
 public:
  AdjacencyIndex() = default;
  explicit AdjacencyIndex(std::span<const DataEdge> edges);

  // Sorted by (dst, label).
  std::span<const DataEdge> outgoing(TermId v) const;
  // Sorted by (src, label).
  std::span<const DataEdge> incoming(TermId v) const;
  std::span<const DataEdge> between(TermId src, TermId dst) const;
  bool contains(const DataEdge& e) const;

 private:
  using Range = std::pair<std::size_t, std::size_t>;
  std::vector<DataEdge> out_;  // sorted by (src, dst, label)
  std::vector<DataEdge> in_;   // sorted by (dst, src, label)
  std::unordered_map<TermId, Range> outRange_;
  std::unordered_map<TermId, Range> inRange_;
};

// A directed, edge-labelled RDF graph with set semantics on triples.
class RdfGraph {
 public:
  RdfGraph();
  RdfGraph(const RdfGraph& other);
  RdfGraph& operator=(const RdfGraph& other);
  RdfGraph(RdfGraph&&) noexcept = default;
  RdfGraph& operator=(RdfGraph&&) noexcept = default;

  // Returns false if the triple was already present.
  bool addTriple(const Term& s, const Term& p, const Term& o);

  const Dictionary& dictionary() const { return *dict_; }
  std::shared_ptr<const Dictionary> sharedDictionary() const { return dict_; }
  // Vertices in first-seen order.
  const std::vector<TermId>& vertices() const { return vertices_; }
  // Edges in insertion order.
  const std::vector<DataEdge>& edges() const { return edges_; }
  bool isVertex(TermId id) const { return vertexSet_.contains(id); }
  std::size_t vertexCount() const { return vertices_.size(); }
  std::size_t edgeCount() const { return edges_.size(); }

  AdjacencyIndex buildIndex() const { return AdjacencyIndex(edges_); }

 private:
  std::shared_ptr<Dictionary> dict_;
  std::vector<TermId> vertices_;
  std::unordered_set<TermId> vertexSet_;
  std::vector<DataEdge> edges_;
  std::unordered_set<DataEdge, DataEdgeHash> edgeSet_;
};

}  // namespace lecq
