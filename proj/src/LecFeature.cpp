#include "lecq/LecFeature.h"

#include <algorithm>
#include <atomic>
#include <iterator>
#include <limits>
#include <map>
#include <stdexcept>

#include "lecq/LocalMatcher.h"

namespace lecq {

LecSign LecSign::fromString(std::string_view bits) {
  LecSign s(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      s.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("sign must consist of 0 and 1");
    }
  }
  return s;
}

bool LecSign::intersects(const LecSign& other) const {
  for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

bool LecSign::all() const {
  for (std::size_t i = 0; i < size_; ++i) {
    if (!test(i)) return false;
  }
  return true;
}

bool LecSign::none() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

LecSign LecSign::operator|(const LecSign& other) const {
  if (size_ != other.size_) throw std::invalid_argument("sign size mismatch");
  LecSign out(*this);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] |= other.words_[i];
  return out;
}

std::string LecSign::toString() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (test(i)) out[i] = '1';
  }
  return out;
}

std::strong_ordering LecSign::operator<=>(const LecSign& other) const {
  std::size_t n = std::min(size_, other.size_);
  for (std::size_t i = 0; i < n; ++i) {
    bool a = test(i);
    bool b = other.test(i);
    if (a != b) return a ? std::strong_ordering::greater
                         : std::strong_ordering::less;
  }
  return size_ <=> other.size_;
}

// ____________________________________________________________________________
FragmentId nextSyntheticFragmentId() {
  static std::atomic<FragmentId> next{-1};
  FragmentId id = next.fetch_sub(1);
  if (id == std::numeric_limits<FragmentId>::min()) next.store(-1);
  return id;
}

LecFeature featureOf(const LocalPartialMatch& m, const QueryGraph& q) {
  LecFeature f;
  f.fragment = m.fragment;
  f.sign = LecSign(q.vertexCount());
  f.sourceFragments = m.sourceFragments;
  for (std::size_t i = 0; i < q.edgeCount(); ++i) {
    if (!m.edgeMap[i]) continue;
    const auto& qe = q.edges()[i];
    bool srcExtended = m.bindings[qe.src].state == SlotState::kExtended;
    bool dstExtended = m.bindings[qe.dst].state == SlotState::kExtended;
    if (srcExtended || dstExtended) {
      f.crossing.push_back({*m.edgeMap[i], static_cast<std::uint32_t>(i)});
    }
    if (!srcExtended) f.sign.set(qe.src);
    if (!dstExtended) f.sign.set(qe.dst);
  }
  std::sort(f.crossing.begin(), f.crossing.end());
  return f;
}

std::vector<LecFeature> computeLecFeatures(
    std::span<const LocalPartialMatch> matches, const QueryGraph& q) {
  std::vector<LecFeature> out;
  for (const auto& m : matches) {
    if (m.fragment != matches.front().fragment) {
      throw std::invalid_argument("matches from several fragments");
    }
    out.push_back(featureOf(m, q));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<std::size_t>> equivalenceClasses(
    std::span<const LocalPartialMatch> matches) {
  using Key = std::pair<FragmentId, std::vector<CrossingMapping>>;
  std::map<Key, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < matches.size(); ++i) {
    const auto& m = matches[i];
    Key key{m.fragment, {}};
    for (std::size_t e = 0; e < m.edgeMap.size(); ++e) {
      if (!m.edgeMap[e]) continue;
      // A crossing edge is one with exactly one internal endpoint binding.
      const auto& de = *m.edgeMap[e];
      bool srcInternal = false;
      bool dstInternal = false;
      for (const auto& b : m.bindings) {
        if (b.state != SlotState::kInternal) continue;
        srcInternal |= b.vertex == de.src;
        dstInternal |= b.vertex == de.dst;
      }
      if (srcInternal != dstInternal) {
        key.second.push_back({de, static_cast<std::uint32_t>(e)});
      }
    }
    std::sort(key.second.begin(), key.second.end());
    classes[key].push_back(i);
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto& [key, members] : classes) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

bool joinable(const LecFeature& a, const LecFeature& b) {
  if (a.fragment == b.fragment) return false;
  if (a.sign.intersects(b.sign)) return false;
  bool shared = false;
  // Both lists are sorted by edge; compare mappings per query edge.
  std::map<std::uint32_t, DataEdge> byQueryEdge;
  for (const auto& m : a.crossing) byQueryEdge.emplace(m.queryEdge, m.edge);
  for (const auto& m : b.crossing) {
    auto it = byQueryEdge.find(m.queryEdge);
    if (it == byQueryEdge.end()) continue;
    if (it->second != m.edge) return false;
    shared = true;
  }
  return shared;
}

LecFeature featureJoin(const LecFeature& a, const LecFeature& b,
                       const QueryGraph& q) {
  if (!joinable(a, b)) throw std::invalid_argument("features not joinable");
  LecFeature out;
  out.fragment = nextSyntheticFragmentId();
  out.sign = a.sign | b.sign;
  std::set_union(a.sourceFragments.begin(), a.sourceFragments.end(),
                 b.sourceFragments.begin(), b.sourceFragments.end(),
                 std::back_inserter(out.sourceFragments));
  std::vector<CrossingMapping> all;
  std::set_union(a.crossing.begin(), a.crossing.end(), b.crossing.begin(),
                 b.crossing.end(), std::back_inserter(all));
  for (const auto& m : all) {
    const auto& qe = q.edges()[m.queryEdge];
    if (!(out.sign.test(qe.src) && out.sign.test(qe.dst))) {
      out.crossing.push_back(m);
    }
  }
  return out;
}

std::string describeFeature(const LecFeature& f, const QueryGraph& q,
                            const Dictionary& dict) {
  std::string out = "{F" + std::to_string(f.fragment) + ", {";
  for (std::size_t i = 0; i < f.crossing.size(); ++i) {
    if (i) out += ", ";
    const auto& m = f.crossing[i];
    const auto& qe = q.edges()[m.queryEdge];
    out += dict.term(m.edge.src).toNTriples() + "->" +
           dict.term(m.edge.dst).toNTriples() + " |-> v" +
           std::to_string(qe.src + 1) + "v" + std::to_string(qe.dst + 1);
  }
  return out + "}, [" + f.sign.toString() + "]}";
}

std::size_t countLecFeatures(const DistributedGraph& d, const QueryGraph& q) {
  std::size_t total = 0;
  for (const auto& f : d.fragments()) {
    auto lpms = findLocalPartialMatches(f, q);
    if (!lpms.empty()) total += computeLecFeatures(lpms, q).size();
  }
  return total;
}

}  // namespace lecq
