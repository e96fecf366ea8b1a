#include "lecq/Candidates.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace lecq {

std::size_t CandidateBitVector::popcount() const {
  std::size_t n = 0;
  for (auto b : bytes) n += std::popcount(b);
  return n;
}

std::uint32_t candidateBit(const Term& t, std::uint32_t bits) {
  return static_cast<std::uint32_t>(
      fnv1a64(t.toNTriples(), kCandidateHashBasis) % bits);
}

std::vector<TermId> localCandidates(const Fragment& f, const QueryGraph& q,
                                    std::size_t variable) {
  ResolvedQuery rq(q, f.dictionary());
  const auto& index = f.index();
  auto satisfies = [&](TermId u, std::size_t ei) {
    const auto& qe = q.edges()[ei];
    if (qe.src == qe.dst) {
      for (const auto& e : index.between(u, u)) {
        if (rq.admitsLabel(ei, e.label)) return true;
      }
      return false;
    }
    bool outgoing = qe.src == variable;
    std::size_t other = outgoing ? qe.dst : qe.src;
    for (const auto& e : outgoing ? index.outgoing(u) : index.incoming(u)) {
      if (!rq.admitsLabel(ei, e.label)) continue;
      if (rq.admitsVertex(other, outgoing ? e.dst : e.src)) return true;
    }
    return false;
  };
  std::vector<TermId> out;
  for (auto u : f.internalVertices()) {
    bool ok = true;
    for (auto ei : q.incidentEdges(variable)) {
      if (!satisfies(u, ei)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CandidateBitVector compressCandidates(std::span<const TermId> candidates,
                                      const Dictionary& dict,
                                      std::size_t variable,
                                      std::uint32_t bits) {
  if (bits == 0) throw std::invalid_argument("bit vector length must be > 0");
  CandidateBitVector v{static_cast<std::uint16_t>(variable), bits,
                       std::vector<std::uint8_t>((bits + 7) / 8, 0)};
  for (auto c : candidates) v.set(candidateBit(dict.term(c), bits));
  return v;
}

CandidateBitVector aggregateCandidates(
    std::span<const CandidateBitVector> vectors) {
  if (vectors.empty()) throw std::invalid_argument("nothing to aggregate");
  CandidateBitVector out = vectors.front();
  for (const auto& v : vectors.subspan(1)) {
    if (v.variable != out.variable || v.bits != out.bits) {
      throw std::invalid_argument("mismatched candidate vectors");
    }
    for (std::size_t i = 0; i < out.bytes.size(); ++i) out.bytes[i] |= v.bytes[i];
  }
  return out;
}

bool admits(const CandidateBitVector& v, const Term& t) {
  return v.test(candidateBit(t, v.bits));
}

CandidateFilter::CandidateFilter(const Dictionary& dict,
                                 std::vector<CandidateBitVector> vectors)
    : dict_(dict) {
  for (auto& v : vectors) vectors_.emplace(v.variable, std::move(v));
}

bool CandidateFilter::admits(std::size_t queryVertex, TermId vertex) const {
  auto it = vectors_.find(queryVertex);
  if (it == vectors_.end()) return true;
  return lecq::admits(it->second, dict_.term(vertex));
}

}  // namespace lecq
