#include "lecq/Wire.h"

#include <limits>
#include <stdexcept>

namespace lecq::wire {

namespace {

class Writer {
 public:
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u16(std::uint16_t v) {
    for (int i = 0; i < 2; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void i32(std::int32_t v) { u32(static_cast<std::uint32_t>(v)); }
  void count16(std::size_t n) {
    if (n > std::numeric_limits<std::uint16_t>::max()) {
      throw std::length_error("too many entries for a u16 count");
    }
    u16(static_cast<std::uint16_t>(n));
  }
  void edgeEntry(const DataEdge& e, const QueryEdge& qe) {
    u32(e.src);
    u32(e.dst);
    u32(static_cast<std::uint32_t>(qe.src));
    u32(static_cast<std::uint32_t>(qe.dst));
  }
  std::vector<std::uint8_t> take() { return std::move(out_); }

 private:
  std::vector<std::uint8_t> out_;
};

}  // namespace

std::vector<std::uint8_t> encodeFeature(const LecFeature& f,
                                        const QueryGraph& q) {
  Writer w;
  w.i32(f.fragment);
  w.count16(f.crossing.size());
  for (const auto& m : f.crossing) w.edgeEntry(m.edge, q.edges()[m.queryEdge]);
  std::size_t n = q.vertexCount();
  for (std::size_t byte = 0; byte < (n + 7) / 8; ++byte) {
    std::uint8_t b = 0;
    for (std::size_t bit = 0; bit < 8 && byte * 8 + bit < n; ++bit) {
      if (f.sign.test(byte * 8 + bit)) b |= static_cast<std::uint8_t>(1u << bit);
    }
    w.u8(b);
  }
  return w.take();
}

std::vector<std::uint8_t> encodeCandidates(const CandidateBitVector& v) {
  Writer w;
  w.u16(v.variable);
  w.u32(v.bits);
  for (auto b : v.bytes) w.u8(b);
  return w.take();
}

std::vector<std::uint8_t> encodeLpm(const LocalPartialMatch& m,
                                    const QueryGraph& q) {
  Writer w;
  w.i32(m.fragment);
  for (const auto& b : m.bindings) w.u32(b.vertex);
  std::size_t mapped = 0;
  for (const auto& e : m.edgeMap) mapped += e.has_value();
  w.count16(mapped);
  for (std::size_t i = 0; i < m.edgeMap.size(); ++i) {
    if (m.edgeMap[i]) w.edgeEntry(*m.edgeMap[i], q.edges()[i]);
  }
  return w.take();
}

std::vector<std::uint8_t> encodeSurvivors(std::span<const std::uint32_t> ids) {
  Writer w;
  w.u32(static_cast<std::uint32_t>(ids.size()));
  for (auto id : ids) w.u32(id);
  return w.take();
}

}  // namespace lecq::wire
