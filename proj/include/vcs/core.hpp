#pragma once

#include <cstdint>

#include "vcs/errors.hpp"

namespace vcs {

enum class BitDepth : std::uint8_t { Depth8 = 8, Depth16 = 16 };

constexpr unsigned bit_count(BitDepth d) noexcept { return static_cast<unsigned>(d); }

constexpr std::uint16_t depth_mask(BitDepth d) noexcept {
  return d == BitDepth::Depth8 ? 0x00FFu : 0xFFFFu;
}

// Throws InvalidArgumentError for anything other than 8 or 16.
BitDepth bit_depth_from_int(unsigned bits);

// One channel sample of one pixel; the unit all boolean algebra runs on.
// value always fits in depth bits.
struct ChannelWord {
  std::uint16_t value = 0;
  BitDepth depth = BitDepth::Depth8;

  constexpr ChannelWord() = default;
  ChannelWord(std::uint16_t v, BitDepth d);

  friend bool operator==(const ChannelWord&, const ChannelWord&) = default;
};

// The two random words drawn for one sample of one encryption step.
struct RandomPair {
  ChannelWord r1;
  ChannelWord r2;

  RandomPair(ChannelWord a, ChannelWord b);
};

struct SharePair {
  ChannelWord s1;
  ChannelWord s2;
};

// s1 = (p AND r1) OR (NOT p AND r2), s2 = p XOR s1, with NOT taken within
// depth bits. s1 XOR s2 restores p.
SharePair share_pair(ChannelWord p, const RandomPair& r);

// XOR of the two shares; the inverse of share_pair for every p and r.
ChannelWord restore(ChannelWord s1, ChannelWord s2);

// Outcome of the partial-knowledge oracle for a single bit. A determined
// verdict can only carry the value 1; construction enforces it.
class BitVerdict {
 public:
  static BitVerdict determined(unsigned bit);
  static constexpr BitVerdict undetermined() noexcept { return BitVerdict(); }

  bool is_determined() const noexcept { return determined_; }

  // Value of a determined verdict; throws on an undetermined one.
  unsigned value() const;

  friend bool operator==(const BitVerdict&, const BitVerdict&) = default;

 private:
  constexpr BitVerdict() = default;

  bool determined_ = false;
  std::uint8_t value_ = 0;
};

// The attacker of the worst-case scenario: knows the drawn (r1, r2) and holds
// one share whose bit reads q, without knowing whether it is s1 or s2.
// Returns Determined(1) exactly when q rules out p = 0.
BitVerdict partial_knowledge_bit(bool r1, bool r2, bool q);

struct BitPair {
  bool s1 = false;
  bool s2 = false;

  friend bool operator==(const BitPair&, const BitPair&) = default;
};

// Single-bit reference evaluation, table-driven and deliberately independent
// of the word-level kernel, so each can check the other.
BitPair share_bit_oracle(bool p, bool r1, bool r2);

}  // namespace vcs
