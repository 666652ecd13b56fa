#pragma once

#include <cstdint>
#include <initializer_list>

namespace uldpack {

// SplitMix64. Uniform doubles and bounded integers are derived here instead of
// through <random> distributions so that streams are identical across
// standard library implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next();
  // Uniform in [0, 1).
  double uniform01();
  // Uniform in (0, 1].
  double uniform_open_closed() { return 1.0 - uniform01(); }
  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

// Mixes a base seed with a list of discriminators into a fresh seed.
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> parts);

}  // namespace uldpack
