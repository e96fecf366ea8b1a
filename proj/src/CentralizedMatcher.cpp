#include "lecq/CentralizedMatcher.h"

#include <algorithm>
#include <set>

#include "lecq/Homomorphism.h"

namespace lecq {

std::vector<Match> findMatchesCentralized(const std::vector<DataEdge>& edges,
                                          const Dictionary& dict,
                                          const QueryGraph& q) {
  AdjacencyIndex index(edges);
  std::set<TermId> vertexSet;
  for (const auto& e : edges) {
    vertexSet.insert(e.src);
    vertexSet.insert(e.dst);
  }
  std::vector<TermId> vertices(vertexSet.begin(), vertexSet.end());
  ResolvedQuery rq(q, dict);
  MatchDomain domain{&index, vertices, {}};
  std::vector<Match> out;
  enumerateMatches(rq, domain, [&](Match&& m) { out.push_back(std::move(m)); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Match> findMatchesCentralized(const RdfGraph& g,
                                          const QueryGraph& q) {
  return findMatchesCentralized(g.edges(), g.dictionary(), q);
}

bool isValidMatch(const AdjacencyIndex& edges, const ResolvedQuery& rq,
                  const Match& m) {
  const auto& q = *rq.query;
  if (m.assignment.size() != q.vertexCount() ||
      m.edgeMap.size() != q.edgeCount()) {
    return false;
  }
  for (std::size_t v = 0; v < q.vertexCount(); ++v) {
    if (m.assignment[v] == kNullTerm || !rq.admitsVertex(v, m.assignment[v])) {
      return false;
    }
  }
  for (std::size_t i = 0; i < q.edgeCount(); ++i) {
    const auto& qe = q.edges()[i];
    const auto& e = m.edgeMap[i];
    if (e.src != m.assignment[qe.src] || e.dst != m.assignment[qe.dst] ||
        !rq.admitsLabel(i, e.label) || !edges.contains(e)) {
      return false;
    }
    for (std::size_t j = 0; j < i; ++j) {
      const auto& other = q.edges()[j];
      if (other.src == qe.src && other.dst == qe.dst && m.edgeMap[j] == e) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace lecq
