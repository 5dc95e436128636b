#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace pancyclic {

// Seeded bit source. The engine is std::mt19937_64, whose output sequence is
// fixed by the standard; every derived draw below uses only raw engine output
// (no std distributions), so streams are identical across platforms.
class RandomSource {
 public:
  static constexpr std::uint64_t kDefaultSeed = 1;
  static constexpr const char* kAlgorithm = "mt19937_64";

  explicit RandomSource(std::uint64_t seed = kDefaultSeed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next() { return engine_(); }

  bool coin() { return (next() >> 63) != 0; }

  // Uniform integer in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return r % bound;
  }

  // True with probability 1/denominator.
  bool one_in(std::uint64_t denominator) { return below(denominator) == 0; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// Retry cap shared by every randomized partition.
inline constexpr int kRetryCap = 100;

}  // namespace pancyclic
