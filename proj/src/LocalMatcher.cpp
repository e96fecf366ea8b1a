#include "lecq/LocalMatcher.h"

#include <algorithm>
#include <set>

#include "lecq/Homomorphism.h"

namespace lecq {

std::vector<TermId> LocalPartialMatch::serialization() const {
  std::vector<TermId> out;
  out.reserve(bindings.size());
  for (const auto& b : bindings) out.push_back(b.vertex);
  return out;
}

bool LocalPartialMatch::isComplete() const {
  return std::all_of(bindings.begin(), bindings.end(),
                     [](const Binding& b) { return b.vertex != kNullTerm; }) &&
         std::all_of(edgeMap.begin(), edgeMap.end(),
                     [](const auto& e) { return e.has_value(); });
}

Match LocalPartialMatch::toMatch() const {
  Match m;
  m.assignment = serialization();
  for (const auto& e : edgeMap) m.edgeMap.push_back(e.value());
  return m;
}

std::string dumpLpm(const LocalPartialMatch& m, const Dictionary& dict) {
  std::string out = "F" + std::to_string(m.fragment) + ": [";
  for (std::size_t i = 0; i < m.bindings.size(); ++i) {
    if (i) out += ", ";
    const auto& b = m.bindings[i];
    if (b.vertex == kNullTerm) {
      out += "NULL";
    } else {
      out += dict.term(b.vertex).toNTriples();
      if (b.state == SlotState::kExtended) out += '*';
    }
  }
  return out + "]";
}

// ____________________________________________________________________________
namespace {

class LpmSearch {
 public:
  LpmSearch(const Fragment& f, const ResolvedQuery& rq,
            const ExtendedVertexFilter* filter)
      : f_(f),
        rq_(rq),
        q_(*rq.query),
        filter_(filter),
        bindings_(q_.vertexCount()),
        edgeMap_(q_.edgeCount()) {}

  std::vector<LocalPartialMatch> run() {
    for (const auto& e : f_.crossingEdges()) {
      for (std::size_t i = 0; i < q_.edgeCount(); ++i) {
        const auto& qe = q_.edges()[i];
        if (qe.src == qe.dst || !rq_.admitsLabel(i, e.label)) continue;
        if (bind(qe.src, e.src) && bind(qe.dst, e.dst)) {
          edgeMap_[i] = e;
          grow();
        }
        std::fill(bindings_.begin(), bindings_.end(), Binding{});
        std::fill(edgeMap_.begin(), edgeMap_.end(), std::nullopt);
      }
    }
    return {found_.begin(), found_.end()};
  }

 private:
  bool bind(std::size_t v, TermId value) {
    if (!rq_.admitsVertex(v, value)) return false;
    SlotState state;
    if (f_.isInternal(value)) {
      state = SlotState::kInternal;
    } else if (f_.isExtended(value)) {
      state = SlotState::kExtended;
      if (filter_ && q_.vertices()[v].isVariable() &&
          !filter_->admits(v, value)) {
        return false;
      }
    } else {
      return false;
    }
    bindings_[v] = {value, state};
    return true;
  }

  bool internal(std::size_t v) const {
    return bindings_[v].state == SlotState::kInternal;
  }

  std::optional<std::size_t> pendingEdge() const {
    for (std::size_t i = 0; i < q_.edgeCount(); ++i) {
      const auto& qe = q_.edges()[i];
      if (!edgeMap_[i] && (internal(qe.src) || internal(qe.dst))) return i;
    }
    return std::nullopt;
  }

  bool usedBySamePair(std::size_t i, const DataEdge& e) const {
    const auto& qe = q_.edges()[i];
    for (std::size_t j = 0; j < q_.edgeCount(); ++j) {
      const auto& other = q_.edges()[j];
      if (j != i && other.src == qe.src && other.dst == qe.dst &&
          edgeMap_[j] == e) {
        return true;
      }
    }
    return false;
  }

  void grow() {
    auto pending = pendingEdge();
    if (!pending) {
      found_.insert(LocalPartialMatch{f_.id(), bindings_, edgeMap_, {f_.id()}});
      return;
    }
    std::size_t i = *pending;
    const auto& qe = q_.edges()[i];
    TermId src = bindings_[qe.src].vertex;
    TermId dst = bindings_[qe.dst].vertex;
    if (src != kNullTerm && dst != kNullTerm) {
      for (const auto& e : compatibleEdges(rq_, f_.index(), i, src, dst)) {
        if (usedBySamePair(i, e)) continue;
        edgeMap_[i] = e;
        grow();
      }
      edgeMap_[i].reset();
      return;
    }
    bool forward = src != kNullTerm;
    std::size_t open = forward ? qe.dst : qe.src;
    auto edges = forward ? f_.index().outgoing(src) : f_.index().incoming(dst);
    for (const auto& e : edges) {
      if (!rq_.admitsLabel(i, e.label)) continue;
      if (!bind(open, forward ? e.dst : e.src)) continue;
      edgeMap_[i] = e;
      grow();
      bindings_[open] = Binding{};
    }
    edgeMap_[i].reset();
  }

  const Fragment& f_;
  const ResolvedQuery& rq_;
  const QueryGraph& q_;
  const ExtendedVertexFilter* filter_;
  std::vector<Binding> bindings_;
  std::vector<std::optional<DataEdge>> edgeMap_;
  std::set<LocalPartialMatch> found_;
};

}  // namespace

std::vector<LocalPartialMatch> findLocalPartialMatches(
    const Fragment& f, const QueryGraph& q,
    const ExtendedVertexFilter* filter) {
  ResolvedQuery rq(q, f.dictionary());
  return LpmSearch(f, rq, filter).run();
}

std::vector<Match> findIntraFragmentMatches(const Fragment& f,
                                            const QueryGraph& q) {
  ResolvedQuery rq(q, f.dictionary());
  auto center = q.starCenter();
  MatchDomain domain{&f.index(), f.allVertices(),
                     [&](std::size_t v, TermId value) {
                       if (!center || v == *center) return f.isInternal(value);
                       return f.contains(value);
                     }};
  std::vector<Match> out;
  enumerateMatches(rq, domain, [&](Match&& m) { out.push_back(std::move(m)); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<LocalPartialMatch> decomposeCrossingMatch(
    const DistributedGraph& d, const QueryGraph& q, const Match& m) {
  std::size_t n = q.vertexCount();
  std::vector<FragmentId> home(n);
  for (std::size_t v = 0; v < n; ++v) home[v] = d.home(m.assignment[v]);
  std::vector<LocalPartialMatch> out;
  std::vector<bool> done(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (done[start]) continue;
    std::vector<bool> inComponent(n, false);
    std::vector<std::size_t> stack{start};
    inComponent[start] = true;
    std::size_t size = 0;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      done[v] = true;
      ++size;
      for (auto ei : q.incidentEdges(v)) {
        const auto& e = q.edges()[ei];
        std::size_t w = e.src == v ? e.dst : e.src;
        if (!inComponent[w] && home[w] == home[start]) {
          inComponent[w] = true;
          stack.push_back(w);
        }
      }
    }
    if (size == n) return {};
    LocalPartialMatch lpm{home[start],
                          std::vector<Binding>(n),
                          std::vector<std::optional<DataEdge>>(q.edgeCount()),
                          {home[start]}};
    for (std::size_t i = 0; i < q.edgeCount(); ++i) {
      const auto& e = q.edges()[i];
      if (!inComponent[e.src] && !inComponent[e.dst]) continue;
      lpm.edgeMap[i] = m.edgeMap[i];
      for (auto v : {e.src, e.dst}) {
        lpm.bindings[v] = {m.assignment[v], inComponent[v]
                                                ? SlotState::kInternal
                                                : SlotState::kExtended};
      }
    }
    out.push_back(std::move(lpm));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lecq
