#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lecq/Candidates.h"
#include "lecq/LecFeature.h"
#include "lecq/LocalPartialMatch.h"
#include "lecq/QueryGraph.h"

namespace lecq::wire {

// Little-endian encodings of the messages exchanged between sites and the
// coordinator.
//
// feature:   i32 fragment, u16 n, n * (u32 src, u32 dst, u32 qsrc, u32 qdst),
//            ceil(|V^Q| / 8) sign bytes
// candidate: u16 variable, u32 bit length, ceil(bits / 8) bytes
// lpm:       i32 fragment, |V^Q| * u32 vertex (0xFFFFFFFF for NULL), u16 n,
//            n edge entries as in features
// survivors: u32 n, n * u32 feature index

inline constexpr std::size_t kEdgeEntryBytes = 16;
inline constexpr std::size_t kFeatureHeaderBytes = 6;
inline constexpr std::size_t kCandidateHeaderBytes = 6;

std::vector<std::uint8_t> encodeFeature(const LecFeature& f,
                                        const QueryGraph& q);
std::vector<std::uint8_t> encodeCandidates(const CandidateBitVector& v);
std::vector<std::uint8_t> encodeLpm(const LocalPartialMatch& m,
                                    const QueryGraph& q);
std::vector<std::uint8_t> encodeSurvivors(std::span<const std::uint32_t> ids);

}  // namespace lecq::wire
