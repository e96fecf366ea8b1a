#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lecq/DistributedGraph.h"
#include "lecq/LocalPartialMatch.h"
#include "lecq/QueryGraph.h"

namespace lecq {

// One bit per query vertex; bit i is rendered as the i-th character.
class LecSign {
 public:
  LecSign() = default;
  explicit LecSign(std::size_t size) : size_(size), words_((size + 63) / 64) {}
  static LecSign fromString(std::string_view bits);

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool intersects(const LecSign& other) const;
  bool all() const;
  bool none() const;
  LecSign operator|(const LecSign& other) const;
  std::string toString() const;

  bool operator==(const LecSign&) const = default;
  // Lexicographic order of the rendered bit string.
  std::strong_ordering operator<=>(const LecSign& other) const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// A crossing edge together with the query edge it is mapped from.
struct CrossingMapping {
  DataEdge edge;
  std::uint32_t queryEdge;

  auto operator<=>(const CrossingMapping&) const = default;
};

// The compressed summary of an equivalence class of local partial matches:
// its fragment, its crossing-edge mapping and which query vertices it
// matches internally. Joined features carry a synthetic negative fragment id.
struct LecFeature {
  FragmentId fragment = 0;
  std::vector<CrossingMapping> crossing;  // sorted, unique
  LecSign sign;
  std::vector<FragmentId> sourceFragments;

  friend bool operator==(const LecFeature& a, const LecFeature& b) {
    return a.fragment == b.fragment && a.crossing == b.crossing &&
           a.sign == b.sign;
  }
  friend std::strong_ordering operator<=>(const LecFeature& a,
                                          const LecFeature& b) {
    if (auto c = a.fragment <=> b.fragment; c != 0) return c;
    if (auto c = a.crossing <=> b.crossing; c != 0) return c;
    return a.sign <=> b.sign;
  }
};

// A fresh negative id, distinct from every real fragment id.
FragmentId nextSyntheticFragmentId();

// The feature of one match: every mapped edge with an extended endpoint goes
// into the crossing mapping, every internal endpoint sets its sign bit.
LecFeature featureOf(const LocalPartialMatch& m, const QueryGraph& q);

// Distinct features of local partial matches of one fragment, sorted.
// Throws std::invalid_argument for input spanning several fragments.
std::vector<LecFeature> computeLecFeatures(
    std::span<const LocalPartialMatch> matches, const QueryGraph& q);

// Partition of the input indices into equivalence classes: same fragment,
// same crossing edges, and each crossing edge mapped from the same query
// edges.
std::vector<std::vector<std::size_t>> equivalenceClasses(
    std::span<const LocalPartialMatch> matches);

// Different fragments, a shared crossing mapping, no query edge mapped to
// different crossing edges, and disjoint signs.
bool joinable(const LecFeature& a, const LecFeature& b);

// Union of the crossing mappings minus those now matched on both ends, OR of
// the signs. Throws std::invalid_argument if not joinable.
LecFeature featureJoin(const LecFeature& a, const LecFeature& b,
                       const QueryGraph& q);

// Renders as {F<i>, {src->dst |-> v<a>v<b>, ...}, [bits]} using the given
// vertex names.
std::string describeFeature(const LecFeature& f, const QueryGraph& q,
                            const Dictionary& dict);

// Number of distinct features over all fragments of `d`.
std::size_t countLecFeatures(const DistributedGraph& d, const QueryGraph& q);

}  // namespace lecq
