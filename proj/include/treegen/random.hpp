#pragma once

#include <concepts>
#include <cstdint>
#include <random>

namespace treegen {

/// Anything that can draw a uniform integer in [0, bound).
template <typename R>
concept BoundedRandom = requires(R& r, std::uint64_t bound) {
  { r.next_below(bound) } -> std::convertible_to<std::uint64_t>;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for an independent stream number `stream` derived from `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream));
}

// Seedable generator over std::mt19937_64, whose output sequence is fixed by
// the standard. Bounded draws use rejection instead of
// std::uniform_int_distribution so results do not depend on the standard
// library in use.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next() { return engine_(); }

  // bound must be positive.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t x = engine_();
      if (x >= threshold) return x % bound;
    }
  }

  // Child generator reseeded from this one's stream.
  RandomSource split() { return RandomSource(splitmix64(next())); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

static_assert(BoundedRandom<RandomSource>);

}  // namespace treegen
