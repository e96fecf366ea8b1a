#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "lecq/DistributedGraph.h"
#include "lecq/LocalMatcher.h"
#include "lecq/QueryGraph.h"

namespace lecq {

inline constexpr std::uint32_t kDefaultCandidateBits = 8192;
// Offset basis for candidate hashing, decorrelated from the partition hash.
inline constexpr std::uint64_t kCandidateHashBasis =
    kFnvOffsetBasis ^ 0x9E3779B97F4A7C15ull;

struct CandidateBitVector {
  std::uint16_t variable = 0;
  std::uint32_t bits = 0;
  std::vector<std::uint8_t> bytes;  // ceil(bits / 8), bit i in byte i / 8

  bool test(std::uint32_t i) const { return (bytes[i / 8] >> (i % 8)) & 1u; }
  void set(std::uint32_t i) {
    bytes[i / 8] |= static_cast<std::uint8_t>(1u << (i % 8));
  }
  std::size_t popcount() const;
  bool operator==(const CandidateBitVector&) const = default;
};

std::uint32_t candidateBit(const Term& t, std::uint32_t bits);

// Internal vertices of `f` that satisfy every triple pattern incident to
// the query vertex locally. Sorted.
std::vector<TermId> localCandidates(const Fragment& f, const QueryGraph& q,
                                    std::size_t variable);

// Throws std::invalid_argument for bits == 0.
CandidateBitVector compressCandidates(std::span<const TermId> candidates,
                                      const Dictionary& dict,
                                      std::size_t variable, std::uint32_t bits);

// Bitwise OR. Throws std::invalid_argument on mismatched variable or length.
CandidateBitVector aggregateCandidates(
    std::span<const CandidateBitVector> vectors);

bool admits(const CandidateBitVector& v, const Term& t);

// Rejects extended vertices whose bit is not set in the aggregated vector of
// their query variable. Variables without a vector are unrestricted.
class CandidateFilter : public ExtendedVertexFilter {
 public:
  CandidateFilter(const Dictionary& dict,
                  std::vector<CandidateBitVector> vectors);
  bool admits(std::size_t queryVertex, TermId vertex) const override;

 private:
  const Dictionary& dict_;
  std::map<std::size_t, CandidateBitVector> vectors_;
};

}  // namespace lecq
