#include "lecq/Homomorphism.h"

#include <algorithm>

namespace lecq {

std::vector<DataEdge> compatibleEdges(const ResolvedQuery& rq,
                                      const AdjacencyIndex& edges,
                                      std::size_t queryEdge, TermId src,
                                      TermId dst) {
  std::vector<DataEdge> out;
  for (const auto& e : edges.between(src, dst)) {
    if (rq.admitsLabel(queryEdge, e.label)) out.push_back(e);
  }
  return out;
}

namespace {

bool sameOrderedPair(const QueryEdge& a, const QueryEdge& b) {
  return a.src == b.src && a.dst == b.dst;
}

void edgeMapStep(const ResolvedQuery& rq, const AdjacencyIndex& edges,
                 std::size_t i, Match& current,
                 const std::function<void(Match&&)>& emit) {
  const auto& qEdges = rq.query->edges();
  if (i == qEdges.size()) {
    emit(Match(current));
    return;
  }
  const auto& qe = qEdges[i];
  for (const auto& e : compatibleEdges(rq, edges, i, current.assignment[qe.src],
                                       current.assignment[qe.dst])) {
    bool used = false;
    for (std::size_t j = 0; j < i && !used; ++j) {
      used = sameOrderedPair(qEdges[j], qe) && current.edgeMap[j] == e;
    }
    if (used) continue;
    current.edgeMap[i] = e;
    edgeMapStep(rq, edges, i + 1, current, emit);
  }
}

}  // namespace

void enumerateEdgeMaps(const ResolvedQuery& rq, const AdjacencyIndex& edges,
                       const std::vector<TermId>& assignment,
                       const std::function<void(Match&&)>& emit) {
  Match current{assignment,
                std::vector<DataEdge>(rq.query->edgeCount(), DataEdge{})};
  edgeMapStep(rq, edges, 0, current, emit);
}

namespace {

struct SearchPlan {
  std::vector<std::size_t> order;
  // For each position after the first, an edge linking the vertex to an
  // earlier one.
  std::vector<std::size_t> anchor;
};

SearchPlan plan(const ResolvedQuery& rq) {
  const auto& q = *rq.query;
  std::size_t n = q.vertexCount();
  SearchPlan p;
  std::vector<bool> placed(n, false);
  std::size_t first = 0;
  bool haveConstant = false;
  for (std::size_t v = 0; v < n; ++v) {
    bool constant = rq.vertexConstant[v] != kNullTerm;
    if (constant && !haveConstant) {
      first = v;
      haveConstant = true;
    } else if (!haveConstant &&
               q.incidentEdges(v).size() > q.incidentEdges(first).size()) {
      first = v;
    }
  }
  p.order.push_back(first);
  p.anchor.push_back(0);
  placed[first] = true;
  while (p.order.size() < n) {
    std::size_t best = n;
    std::size_t bestLinks = 0;
    std::size_t bestAnchor = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v]) continue;
      std::size_t links = 0;
      std::size_t anchor = 0;
      for (auto ei : q.incidentEdges(v)) {
        const auto& e = q.edges()[ei];
        std::size_t other = e.src == v ? e.dst : e.src;
        if (other != v && placed[other]) {
          if (links++ == 0) anchor = ei;
        }
      }
      bool constant = rq.vertexConstant[v] != kNullTerm;
      bool bestConstant = best < n && rq.vertexConstant[best] != kNullTerm;
      if (links > 0 && (best == n || (constant && !bestConstant) ||
                        (constant == bestConstant && links > bestLinks))) {
        best = v;
        bestLinks = links;
        bestAnchor = anchor;
      }
    }
    p.order.push_back(best);
    p.anchor.push_back(bestAnchor);
    placed[best] = true;
  }
  return p;
}

class Search {
 public:
  Search(const ResolvedQuery& rq, const MatchDomain& domain,
         const std::function<void(Match&&)>& emit)
      : rq_(rq),
        domain_(domain),
        emit_(emit),
        plan_(plan(rq)),
        assignment_(rq.query->vertexCount(), kNullTerm) {}

  void run() { step(0); }

 private:
  bool consistent(std::size_t v) const {
    const auto& q = *rq_.query;
    for (auto ei : q.incidentEdges(v)) {
      const auto& e = q.edges()[ei];
      TermId s = assignment_[e.src];
      TermId d = assignment_[e.dst];
      if (s == kNullTerm || d == kNullTerm) continue;
      auto range = domain_.edges->between(s, d);
      bool found = std::any_of(range.begin(), range.end(), [&](auto& x) {
        return rq_.admitsLabel(ei, x.label);
      });
      if (!found) return false;
    }
    return true;
  }

  void tryValue(std::size_t depth, TermId value) {
    std::size_t v = plan_.order[depth];
    if (!rq_.admitsVertex(v, value)) return;
    if (domain_.admits && !domain_.admits(v, value)) return;
    assignment_[v] = value;
    if (consistent(v)) step(depth + 1);
    assignment_[v] = kNullTerm;
  }

  void step(std::size_t depth) {
    if (depth == plan_.order.size()) {
      enumerateEdgeMaps(rq_, *domain_.edges, assignment_, emit_);
      return;
    }
    std::size_t v = plan_.order[depth];
    if (rq_.vertexConstant[v] == kAbsentTerm) return;
    if (depth == 0) {
      if (rq_.vertexConstant[v] != kNullTerm) {
        tryValue(0, rq_.vertexConstant[v]);
      } else {
        for (TermId value : domain_.vertices) tryValue(0, value);
      }
      return;
    }
    const auto& ae = rq_.query->edges()[plan_.anchor[depth]];
    std::vector<TermId> candidates;
    if (ae.dst == v) {
      for (const auto& e : domain_.edges->outgoing(assignment_[ae.src])) {
        if (rq_.admitsLabel(plan_.anchor[depth], e.label)) {
          candidates.push_back(e.dst);
        }
      }
    } else {
      for (const auto& e : domain_.edges->incoming(assignment_[ae.dst])) {
        if (rq_.admitsLabel(plan_.anchor[depth], e.label)) {
          candidates.push_back(e.src);
        }
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    for (TermId value : candidates) tryValue(depth, value);
  }

  const ResolvedQuery& rq_;
  const MatchDomain& domain_;
  const std::function<void(Match&&)>& emit_;
  SearchPlan plan_;
  std::vector<TermId> assignment_;
};

}  // namespace

void enumerateMatches(const ResolvedQuery& rq, const MatchDomain& domain,
                      const std::function<void(Match&&)>& emit) {
  Search(rq, domain, emit).run();
}

}  // namespace lecq
