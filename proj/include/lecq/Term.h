#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace lecq {

enum class TermKind : std::uint8_t { kIri, kLiteral, kBlank };

// An RDF term. For IRIs `lexical` is the IRI without angle brackets, for blank
// nodes the label without "_:", and for literals the complete N-Triples token
// including quotes and any language tag or datatype.
class Term {
 public:
  Term(TermKind kind, std::string lexical);

  static Term iri(std::string iri);
  static Term blank(std::string label);
  // Builds a literal token from an unescaped value.
  static Term literal(std::string_view value, std::string_view lang = {},
                      std::string_view datatype = {});
  static Term literalToken(std::string token);

  TermKind kind() const { return kind_; }
  const std::string& lexical() const { return lexical_; }

  // The N-Triples rendering. This is also the key used for hashing and in
  // partition files.
  std::string toNTriples() const;

  auto operator<=>(const Term&) const = default;

 private:
  TermKind kind_;
  std::string lexical_;
};

inline constexpr std::uint64_t kFnvOffsetBasis = 14695981039346656037ull;
inline constexpr std::uint64_t kFnvPrime = 1099511628211ull;

std::uint64_t fnv1a64(std::string_view bytes,
                      std::uint64_t basis = kFnvOffsetBasis);

}  // namespace lecq
