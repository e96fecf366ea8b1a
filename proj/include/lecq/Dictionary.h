#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lecq/Term.h"

namespace lecq {

using TermId = std::uint32_t;

// Sentinel for an unmatched query vertex. Matches the NULL slot value of the
// wire encoding.
inline constexpr TermId kNullTerm = 0xFFFFFFFFu;
// A query constant that does not occur in the data dictionary.
inline constexpr TermId kAbsentTerm = 0xFFFFFFFEu;
// Label of a query edge whose predicate is a variable.
inline constexpr TermId kAnyLabel = 0xFFFFFFFDu;

// Dense ids for vertices and edge labels, assigned in first-seen order.
class Dictionary {
 public:
  TermId intern(const Term& term);
  std::optional<TermId> find(const Term& term) const;
  const Term& term(TermId id) const { return terms_.at(id); }
  std::size_t size() const { return terms_.size(); }

 private:
  std::vector<Term> terms_;
  std::unordered_map<std::string, TermId> ids_;
};

}  // namespace lecq
