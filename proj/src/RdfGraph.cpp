#include "lecq/RdfGraph.h"

#include <algorithm>
#include <tuple>

namespace lecq {

AdjacencyIndex::AdjacencyIndex(std::span<const DataEdge> edges)
    : out_(edges.begin(), edges.end()), in_(edges.begin(), edges.end()) {
  std::sort(out_.begin(), out_.end(), [](const auto& a, const auto& b) {
    return std::tie(a.src, a.dst, a.label) < std::tie(b.src, b.dst, b.label);
  });
  out_.erase(std::unique(out_.begin(), out_.end()), out_.end());
  std::sort(in_.begin(), in_.end(), [](const auto& a, const auto& b) {
    return std::tie(a.dst, a.src, a.label) < std::tie(b.dst, b.src, b.label);
  });
  in_.erase(std::unique(in_.begin(), in_.end()), in_.end());
  for (std::size_t i = 0; i < out_.size(); ++i) {
    auto [it, fresh] = outRange_.try_emplace(out_[i].src, i, i);
    it->second.second = i + 1;
  }
  for (std::size_t i = 0; i < in_.size(); ++i) {
    auto [it, fresh] = inRange_.try_emplace(in_[i].dst, i, i);
    it->second.second = i + 1;
  }
}

std::span<const DataEdge> AdjacencyIndex::outgoing(TermId v) const {
  auto it = outRange_.find(v);
  if (it == outRange_.end()) return {};
  return std::span(out_).subspan(it->second.first,
                                 it->second.second - it->second.first);
}

std::span<const DataEdge> AdjacencyIndex::incoming(TermId v) const {
  auto it = inRange_.find(v);
  if (it == inRange_.end()) return {};
  return std::span(in_).subspan(it->second.first,
                                it->second.second - it->second.first);
}

std::span<const DataEdge> AdjacencyIndex::between(TermId src,
                                                  TermId dst) const {
  auto out = outgoing(src);
  auto lo = std::lower_bound(
      out.begin(), out.end(), dst,
      [](const DataEdge& e, TermId d) { return e.dst < d; });
  auto hi = std::upper_bound(
      lo, out.end(), dst, [](TermId d, const DataEdge& e) { return d < e.dst; });
  return {lo, hi};
}

bool AdjacencyIndex::contains(const DataEdge& e) const {
  auto range = between(e.src, e.dst);
  return std::any_of(range.begin(), range.end(),
                     [&](const DataEdge& x) { return x.label == e.label; });
}

// ____________________________________________________________________________
RdfGraph::RdfGraph() : dict_(std::make_shared<Dictionary>()) {}

RdfGraph::RdfGraph(const RdfGraph& other)
    : dict_(std::make_shared<Dictionary>(*other.dict_)),
      vertices_(other.vertices_),
      vertexSet_(other.vertexSet_),
      edges_(other.edges_),
      edgeSet_(other.edgeSet_) {}

RdfGraph& RdfGraph::operator=(const RdfGraph& other) {
  if (this != &other) {
    RdfGraph copy(other);
    *this = std::move(copy);
  }
  return *this;
}

bool RdfGraph::addTriple(const Term& s, const Term& p, const Term& o) {
  DataEdge e{dict_->intern(s), dict_->intern(p), dict_->intern(o)};
  if (!edgeSet_.insert(e).second) return false;
  edges_.push_back(e);
  for (TermId v : {e.src, e.dst}) {
    if (vertexSet_.insert(v).second) vertices_.push_back(v);
  }
  return true;
}

}  // namespace lecq
