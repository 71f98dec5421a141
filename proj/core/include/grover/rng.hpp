#pragma once

#include <cstdint>
#include <random>

namespace grover {

// Reproducible per-trajectory random substreams.
//
// A stream is identified by (master_seed, stream_index). The per-stream
// seed is derived by running both identifiers through splitmix64, which
// decorrelates nearby indices, and feeds a mt19937_64 engine. The same
// pair always reproduces the same draw sequence; distinct indices give
// independent streams for any practical trajectory count.
class RandomStream {
 public:
  static constexpr const char* kGeneratorName = "mt19937_64+splitmix64-substream";

  RandomStream(std::uint64_t master_seed, std::uint64_t stream_index)
      : engine_(mix_seed(master_seed, stream_index)) {}

  // Uniform double in [0, 1).
  double uniform() {
    return std::generate_canonical<double, 53>(engine_);
  }

  // Uniform integer in [0, bound).
  std::uint64_t uniform_int(std::uint64_t bound) {
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
  }

  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

 private:
  static std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
  }

  std::mt19937_64 engine_;
};

}  // namespace grover
