#include "hcb/rng.hpp"

namespace hcb {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

std::size_t RngStream::below(std::size_t n) {
  // Rejection from the top to avoid modulo bias.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = raw();
  } while (x >= limit);
  return static_cast<std::size_t>(x % n);
}

RngStream RngStream::derive(std::uint64_t k) const {
  return RngStream(splitmix64(seed_ ^ splitmix64(k + 1)));
}

}  // namespace hcb
