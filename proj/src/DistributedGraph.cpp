#include "lecq/DistributedGraph.h"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lecq {

Fragment::Fragment(FragmentId id, std::shared_ptr<const Dictionary> dict,
                   std::vector<TermId> internal, std::vector<TermId> extended,
                   std::vector<DataEdge> internalEdges,
                   std::vector<DataEdge> crossingEdges)
    : id_(id),
      dict_(std::move(dict)),
      internal_(std::move(internal)),
      extended_(std::move(extended)),
      internalEdges_(std::move(internalEdges)),
      crossingEdges_(std::move(crossingEdges)),
      internalSet_(internal_.begin(), internal_.end()),
      extendedSet_(extended_.begin(), extended_.end()) {
  for (auto v : extended_) {
    if (internalSet_.contains(v)) {
      throw std::invalid_argument("vertex both internal and extended");
    }
  }
  for (const auto& e : internalEdges_) {
    if (!isInternal(e.src) || !isInternal(e.dst)) {
      throw std::invalid_argument("internal edge leaves the fragment");
    }
  }
  for (const auto& e : crossingEdges_) {
    bool ok = (isInternal(e.src) && isExtended(e.dst)) ||
              (isExtended(e.src) && isInternal(e.dst));
    if (!ok) throw std::invalid_argument("malformed crossing edge");
  }
  all_ = internal_;
  all_.insert(all_.end(), extended_.begin(), extended_.end());
  std::set<TermId> labels;
  for (const auto& e : internalEdges_) labels.insert(e.label);
  for (const auto& e : crossingEdges_) labels.insert(e.label);
  labels_.assign(labels.begin(), labels.end());
  std::vector<DataEdge> all = internalEdges_;
  all.insert(all.end(), crossingEdges_.begin(), crossingEdges_.end());
  index_ = AdjacencyIndex(all);
}

DistributedGraph::DistributedGraph(std::shared_ptr<const Dictionary> dict,
                                   std::vector<Fragment> fragments,
                                   std::unordered_map<TermId, FragmentId> home)
    : dict_(std::move(dict)),
      fragments_(std::move(fragments)),
      home_(std::move(home)) {
  for (std::size_t i = 0; i < fragments_.size(); ++i) {
    if (fragments_[i].id() != static_cast<FragmentId>(i)) {
      throw std::invalid_argument("fragment ids must be 0-based contiguous");
    }
  }
}

std::size_t DistributedGraph::crossingEdgeCount() const {
  std::size_t twice = 0;
  for (const auto& f : fragments_) twice += f.crossingEdges().size();
  return twice / 2;
}

std::vector<DataEdge> DistributedGraph::flattenEdges() const {
  std::set<DataEdge> crossing;
  std::vector<DataEdge> out;
  for (const auto& f : fragments_) {
    out.insert(out.end(), f.internalEdges().begin(), f.internalEdges().end());
    crossing.insert(f.crossingEdges().begin(), f.crossingEdges().end());
  }
  out.insert(out.end(), crossing.begin(), crossing.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lecq
