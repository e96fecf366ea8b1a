#include "lecq/Dictionary.h"

#include <stdexcept>

namespace lecq {

TermId Dictionary::intern(const Term& term) {
  auto key = term.toNTriples();
  if (auto it = ids_.find(key); it != ids_.end()) return it->second;
  if (terms_.size() >= kAnyLabel) {
    throw std::length_error("dictionary is full");
  }
  auto id = static_cast<TermId>(terms_.size());
  terms_.push_back(term);
  ids_.emplace(std::move(key), id);
  return id;
}

std::optional<TermId> Dictionary::find(const Term& term) const {
  if (auto it = ids_.find(term.toNTriples()); it != ids_.end()) {
    return it->second;
  }
  return std::nullopt;
}

}  // namespace lecq
