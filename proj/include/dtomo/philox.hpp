#pragma once

#include <array>
#include <cstdint>

namespace dtomo {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter block(Counter ctr, Key key);

  /// Key = seed; counter = (shot index, stream id) as 64-bit halves.
  Philox4x32(std::uint64_t seed, std::uint64_t stream);

  Counter at(std::uint64_t index) const;
  /// Uniform double in [0, 1) with 53 random bits, drawn from block `index`.
  double uniform(std::uint64_t index) const;

 private:
  Key key_;
  std::uint64_t stream_;
};

/// Packs three small identifiers into a 64-bit stream id.
std::uint64_t stream_id(std::uint32_t point, std::uint32_t repetition, std::uint32_t observable);

}  // namespace dtomo
