#pragma once

#include <cstdint>

namespace bwprob {

// Deterministic 64-bit stream (SplitMix64, Steele et al.).  The generator is
// fully specified here so that seeded runs are reproducible for a given
// build: state advances by the golden-gamma constant and each output is the
// standard finalizer applied to the state.  Instances are single-owner; do
// not share one stream across threads.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return scramble(state_);
  }

  // Uniform in [0, bound) without modulo bias (rejection sampling).
  std::uint64_t below(std::uint64_t bound);

  // Finalizer used both for output scrambling and for deriving per-trial
  // seeds: z ^= z>>30; z *= 0xBF58476D1CE4E5B9; z ^= z>>27;
  // z *= 0x94D049BB133111EB; z ^= z>>31.
  static std::uint64_t scramble(std::uint64_t z);

 private:
  std::uint64_t state_;
};

// Derives the seed for trial j from a master seed.  Fixed map, part of the
// reproducibility contract: scramble(master + (j+1) * golden-gamma).
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t trial);

}  // namespace bwprob
