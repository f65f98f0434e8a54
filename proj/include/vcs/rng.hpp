#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "vcs/core.hpp"

namespace vcs {

using Seed32 = std::array<std::uint8_t, 32>;

// Best-effort zeroization through a volatile pointer so the store is not
// elided by the optimizer.
void secure_zero(void* p, std::size_t n) noexcept;

// Exactly 64 hex characters; throws InvalidArgumentError otherwise.
Seed32 seed_from_hex(std::string_view hex);
std::string seed_to_hex(const Seed32& seed);

// Child seed for per-trial randomness in the statistical suites. The
// derivation input is disjoint from every pixel draw address, so subseeded
// draws never collide with draws from the base seed.
Seed32 derive_subseed(const Seed32& base, std::uint64_t index) noexcept;

enum class RngMode { OsEntropy, Deterministic };

// Addressable domain of a context; draws outside it are refused.
struct AddressBounds {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::uint32_t channels = 0;
};

// Source of the per-sample (r1, r2) draws.
//
// Deterministic mode evaluates a ChaCha20 block keyed by the seed over the
// address tuple (x, y, channel, level): every address yields the same pair
// regardless of draw order, so rows can be processed in parallel and an
// attack simulation can replay the exact values later. OsEntropy mode
// streams from a ChaCha20 generator keyed from the operating system entropy
// source and is the only mode fit for real use.
//
// Thread model: concurrent draws are allowed on a shared context; wipe
// requires exclusivity (no draws in flight).
class RandomnessContext {
 public:
  static RandomnessContext os_entropy(AddressBounds bounds);
  static RandomnessContext deterministic(const Seed32& seed, AddressBounds bounds);

  RandomnessContext(RandomnessContext&&) noexcept;
  RandomnessContext& operator=(RandomnessContext&&) noexcept;
  RandomnessContext(const RandomnessContext&) = delete;
  RandomnessContext& operator=(const RandomnessContext&) = delete;
  ~RandomnessContext();  // wipes

  // Slot 0 of the returned pair is r1, slot 1 is r2.
  RandomPair draw_pair(std::uint32_t x, std::uint32_t y, std::uint32_t channel,
                       BitDepth depth, std::uint32_t level = 0);

  // Overwrites key material and buffered words with zeros; idempotent.
  // Every later draw fails with ContextWipedError.
  void wipe() noexcept;
  bool wiped() const noexcept;

  RngMode mode() const noexcept;
  AddressBounds bounds() const noexcept;

 private:
  struct Impl;
  explicit RandomnessContext(std::unique_ptr<Impl> impl) noexcept;

  std::unique_ptr<Impl> impl_;
};

}  // namespace vcs
