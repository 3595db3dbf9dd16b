#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace hcb {

// Seedable deterministic stream. Identical seed => identical trajectory.
// Bounded draws use rejection sampling so trajectories do not depend on
// the standard library's distribution implementations.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t raw() { return engine_(); }

  // Uniform draw from [0, n). n must be positive.
  std::size_t below(std::size_t n);

  bool coin() { return (raw() & 1u) != 0; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

  // Independent stream for run k, reproducible from the base seed.
  RngStream derive(std::uint64_t k) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace hcb
