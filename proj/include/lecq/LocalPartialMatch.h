#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "lecq/DistributedGraph.h"
#include "lecq/Match.h"
#include "lecq/QueryGraph.h"

namespace lecq {

enum class SlotState : std::uint8_t { kNull, kInternal, kExtended };

struct Binding {
  TermId vertex = kNullTerm;
  SlotState state = SlotState::kNull;

  auto operator<=>(const Binding&) const = default;
};

// A local partial match, or the join of several. Identity is the fragment,
// the bindings and the edge map; `sourceFragments` is bookkeeping only.
struct LocalPartialMatch {
  // A real fragment id, or a negative synthetic id for joined matches.
  FragmentId fragment = 0;
  std::vector<Binding> bindings;
  // Unset for query edges that are not mapped.
  std::vector<std::optional<DataEdge>> edgeMap;
  std::vector<FragmentId> sourceFragments;

  std::vector<TermId> serialization() const;
  bool isComplete() const;
  Match toMatch() const;

  friend bool operator==(const LocalPartialMatch& a,
                         const LocalPartialMatch& b) {
    return a.fragment == b.fragment && a.bindings == b.bindings &&
           a.edgeMap == b.edgeMap;
  }
  friend std::weak_ordering operator<=>(const LocalPartialMatch& a,
                                        const LocalPartialMatch& b) {
    if (auto c = a.fragment <=> b.fragment; c != 0) return c;
    if (auto c = a.bindings <=> b.bindings; c != 0) return c;
    return a.edgeMap <=> b.edgeMap;
  }
};

// "F<i>: [t1, t2*, NULL]" with extended vertices marked by '*'.
std::string dumpLpm(const LocalPartialMatch& m, const Dictionary& dict);

}  // namespace lecq
