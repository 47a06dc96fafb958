#pragma once

#include <cstdint>

namespace tritail {

// splitmix64 finalizer (Steele et al.), full-avalanche 64-bit mixer.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Deterministic RNG addressed by (master_seed, stream_index).
//
// The same pair always yields the same sequence regardless of host, thread
// schedule, or how many other streams exist.  Monte Carlo code assigns one
// stream per sample index, which makes every estimate reproducible and
// independent of the worker count.  Generator is splitmix64; streams are
// decorrelated by running both seed words through the finalizer before use.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t master_seed, std::uint64_t stream_index = 0)
      : master_seed_(master_seed),
        stream_index_(stream_index),
        state_(mix64(master_seed + 0x9E3779B97F4A7C15ULL) ^
               mix64(stream_index * 0xBF58476D1CE4E5B9ULL + 0x94D049BB133111EBULL)) {}

  // Fresh stream under the same master seed.
  SeededRng stream(std::uint64_t stream_index) const {
    return SeededRng(master_seed_, stream_index);
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  // Uniform on [0,1) with 53 random bits.
  double next_u01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool next_bernoulli(double p) { return next_u01() < p; }

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_index_;
  std::uint64_t state_;
};

}  // namespace tritail
