#pragma once

#include <cstdint>
#include <random>

namespace chaosrates::detail {

/// Generator for stream `stream` under `seed`. Each (seed, stream) pair gets
/// its own seed_seq state, so results do not depend on how streams are
/// scheduled across threads.
inline std::mt19937_64 stream_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace chaosrates::detail
