#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace qent {

/// Philox4x32-10 counter-based generator (Salmon et al., Random123).
///
/// The 128-bit counter is split into a 64-bit block index (words 0-1) and a
/// 64-bit stream id (words 2-3); the key is the 64-bit seed. For a fixed key
/// the block function is a bijection of the counter, so distinct streams
/// never share an input block.
class Philox4x32 {
 public:
  using result_type = std::uint64_t;
  using Block = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  Philox4x32() : Philox4x32(0, 0) {}
  Philox4x32(std::uint64_t seed, std::uint64_t stream)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)}, stream_(stream) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    if (lane_ == 0) {
      const Block ctr{static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
                      static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)};
      buffer_ = generate(ctr, key_);
      ++block_;
    }
    const result_type out =
        (static_cast<result_type>(buffer_[2 * lane_ + 1]) << 32) | buffer_[2 * lane_];
    lane_ ^= 1;
    return out;
  }

  /// Skips `n` blocks (each block yields two outputs).
  void discard_blocks(std::uint64_t n) {
    block_ += n;
    lane_ = 0;
  }

  std::uint64_t stream() const { return stream_; }

  /// The raw ten-round block function.
  static constexpr Block generate(Block ctr, Key key) {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += 0x9E3779B9u;
        key[1] += 0xBB67AE85u;
      }
      const std::uint64_t p0 = std::uint64_t{0xD2511F53u} * ctr[0];
      const std::uint64_t p1 = std::uint64_t{0xCD9E8D57u} * ctr[2];
      ctr = Block{static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
                  static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
    }
    return ctr;
  }

  friend bool operator==(const Philox4x32&, const Philox4x32&) = default;

 private:
  Key key_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  Block buffer_{};
  unsigned lane_ = 0;
};

using Rng = Philox4x32;

/// Independent reproducible stream for one worker of a run seeded with `seed`.
inline Rng derive_substream(std::uint64_t seed, std::uint64_t worker_index) { return Rng(seed, worker_index); }

}  // namespace qent
