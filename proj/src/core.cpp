#include "vcs/core.hpp"

#include <array>
#include <string>

namespace vcs {

BitDepth bit_depth_from_int(unsigned bits) {
  if (bits == 8) return BitDepth::Depth8;
  if (bits == 16) return BitDepth::Depth16;
  throw InvalidArgumentError("bit depth must be 8 or 16, got " + std::to_string(bits));
}

ChannelWord::ChannelWord(std::uint16_t v, BitDepth d) : value(v), depth(d) {
  if (v > depth_mask(d)) {
    throw InvalidArgumentError("channel word value " + std::to_string(v) +
                               " exceeds " + std::to_string(bit_count(d)) + "-bit depth");
  }
}

RandomPair::RandomPair(ChannelWord a, ChannelWord b) : r1(a), r2(b) {
  if (a.depth != b.depth) {
    throw DepthMismatchError("random pair words have different bit depths");
  }
}

SharePair share_pair(ChannelWord p, const RandomPair& r) {
  if (p.depth != r.r1.depth) {
    throw DepthMismatchError("plaintext word and random pair have different bit depths");
  }
  const std::uint16_t mask = depth_mask(p.depth);
  const auto s1 = static_cast<std::uint16_t>(((p.value & r.r1.value) | (~p.value & r.r2.value)) & mask);
  const auto s2 = static_cast<std::uint16_t>((p.value ^ s1) & mask);
  return {ChannelWord(s1, p.depth), ChannelWord(s2, p.depth)};
}

ChannelWord restore(ChannelWord s1, ChannelWord s2) {
  if (s1.depth != s2.depth) {
    throw DepthMismatchError("shares have different bit depths");
  }
  return ChannelWord(static_cast<std::uint16_t>(s1.value ^ s2.value), s1.depth);
}

BitVerdict BitVerdict::determined(unsigned bit) {
  if (bit != 1) {
    throw InvalidArgumentError("a determined verdict can only carry the value 1");
  }
  BitVerdict v;
  v.determined_ = true;
  v.value_ = 1;
  return v;
}

unsigned BitVerdict::value() const {
  if (!determined_) throw Error("value() called on an undetermined verdict");
  return value_;
}

BitVerdict partial_knowledge_bit([[maybe_unused]] bool r1, bool r2, bool q) {
  // p = 0 forces both shares to r2, while p = 1 makes them {r1, NOT r1},
  // which covers both bit values. Observing q != r2 therefore excludes
  // p = 0, and nothing else is ever excluded.
  if (q != r2) return BitVerdict::determined(1);
  return BitVerdict::undetermined();
}

BitPair share_bit_oracle(bool p, bool r1, bool r2) {
  // Truth table of s1 = (p AND r1) OR (NOT p AND r2), s2 = p XOR s1, written
  // out by hand; deliberately not evaluated through share_pair.
  static constexpr std::array<BitPair, 8> kTable = {{
      {false, false},  // p=0 r1=0 r2=0
      {true, true},    // p=0 r1=0 r2=1
      {false, false},  // p=0 r1=1 r2=0
      {true, true},    // p=0 r1=1 r2=1
      {false, true},   // p=1 r1=0 r2=0
      {false, true},   // p=1 r1=0 r2=1
      {true, false},   // p=1 r1=1 r2=0
      {true, false},   // p=1 r1=1 r2=1
  }};
  const unsigned row = (p ? 4u : 0u) | (r1 ? 2u : 0u) | (r2 ? 1u : 0u);
  return kTable[row];
}

}  // namespace vcs
