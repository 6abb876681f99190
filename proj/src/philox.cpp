#include "dtomo/philox.hpp"

namespace dtomo {

namespace {

constexpr std::uint32_t kM0 = 0xD2511F53u;
constexpr std::uint32_t kM1 = 0xCD9E8D57u;
constexpr std::uint32_t kW0 = 0x9E3779B9u;
constexpr std::uint32_t kW1 = 0xBB67AE85u;

}  // namespace

Philox4x32::Counter Philox4x32::block(Counter c, Key k) {
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = std::uint64_t(kM0) * c[0];
    const std::uint64_t p1 = std::uint64_t(kM1) * c[2];
    c = {std::uint32_t(p1 >> 32) ^ c[1] ^ k[0], std::uint32_t(p1),
         std::uint32_t(p0 >> 32) ^ c[3] ^ k[1], std::uint32_t(p0)};
    k[0] += kW0;
    k[1] += kW1;
  }
  return c;
}

Philox4x32::Philox4x32(std::uint64_t seed, std::uint64_t stream)
    : key_{std::uint32_t(seed), std::uint32_t(seed >> 32)}, stream_(stream) {}

Philox4x32::Counter Philox4x32::at(std::uint64_t index) const {
  return block({std::uint32_t(index), std::uint32_t(index >> 32), std::uint32_t(stream_),
                std::uint32_t(stream_ >> 32)},
               key_);
}

double Philox4x32::uniform(std::uint64_t index) const {
  const Counter r = at(index);
  const std::uint64_t bits = (std::uint64_t(r[0]) << 21) ^ (std::uint64_t(r[1]) >> 11);
  return double(bits & ((std::uint64_t(1) << 53) - 1)) * 0x1.0p-53;
}

std::uint64_t stream_id(std::uint32_t point, std::uint32_t repetition, std::uint32_t observable) {
  return (std::uint64_t(point) << 40) ^ (std::uint64_t(repetition) << 8) ^ observable;
}

}  // namespace dtomo
