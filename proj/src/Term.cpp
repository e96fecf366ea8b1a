#include "lecq/Term.h"

#include <stdexcept>

namespace lecq {

Term::Term(TermKind kind, std::string lexical)
    : kind_(kind), lexical_(std::move(lexical)) {
  if (lexical_.empty()) {
    throw std::invalid_argument("term with empty lexical form");
  }
  if (kind_ == TermKind::kLiteral &&
      (lexical_.size() < 2 || lexical_.front() != '"')) {
    throw std::invalid_argument("malformed literal token: " + lexical_);
  }
}

Term Term::iri(std::string iri) { return Term(TermKind::kIri, std::move(iri)); }

Term Term::blank(std::string label) {
  return Term(TermKind::kBlank, std::move(label));
}

Term Term::literal(std::string_view value, std::string_view lang,
                   std::string_view datatype) {
  std::string token = "\"";
  for (char c : value) {
    switch (c) {
      case '"': token += "\\\""; break;
      case '\\': token += "\\\\"; break;
      case '\n': token += "\\n"; break;
      case '\r': token += "\\r"; break;
      case '\t': token += "\\t"; break;
      default: token += c;
    }
  }
  token += '"';
  if (!lang.empty()) {
    token += '@';
    token += lang;
  } else if (!datatype.empty()) {
    token += "^^<";
    token += datatype;
    token += '>';
  }
  return Term(TermKind::kLiteral, std::move(token));
}

Term Term::literalToken(std::string token) {
  return Term(TermKind::kLiteral, std::move(token));
}

std::string Term::toNTriples() const {
  switch (kind_) {
    case TermKind::kIri: return "<" + lexical_ + ">";
    case TermKind::kBlank: return "_:" + lexical_;
    case TermKind::kLiteral: return lexical_;
  }
  return lexical_;
}

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t basis) {
  std::uint64_t h = basis;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

}  // namespace lecq
