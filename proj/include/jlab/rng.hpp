#pragma once
// Counter-based pseudorandom stream "jlab-ctr-splitmix64-v1".
//
//   mix64(z)          = SplitMix64 finalizer:
//                         z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
//                         z ^= z >> 27; z *= 0x94D049BB133111EB;
//                         z ^= z >> 31
//   draw(key, ctr)    = mix64(key ^ mix64(ctr ^ 0x9E3779B97F4A7C15))
//   uniform01(bits)   = (bits >> 11) * 2^-53            in [0, 1)
//   derive_seed(m, i) = draw(m, i)
//
// Every random decision in the lab is draw(key, counter) for an explicit key
// and counter, so results depend only on (seed, counter), never on iteration
// order or thread schedule. Changing any constant here changes every golden
// output; bump the version suffix if that ever happens.

#include <cstdint>
#include <set>
#include <string_view>
#include <vector>

namespace jlab::rng {

inline constexpr std::string_view kStreamName = "jlab-ctr-splitmix64-v1";

constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

constexpr std::uint64_t draw(std::uint64_t key, std::uint64_t counter) {
  return mix64(key ^ mix64(counter ^ 0x9E3779B97F4A7C15ULL));
}

constexpr double uniform01(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) { return draw(master, index); }

// Canonical id of the unordered pair {u, v}, u != v: position in the strict
// lower triangle, max*(max-1)/2 + min.
constexpr std::uint64_t edge_id(std::uint64_t u, std::uint64_t v) {
  const std::uint64_t lo = u < v ? u : v;
  const std::uint64_t hi = u < v ? v : u;
  return hi * (hi - 1) / 2 + lo;
}

/// Sequential view of the stream for generators: the k-th call returns draw(key, k).
class CounterStream {
 public:
  explicit constexpr CounterStream(std::uint64_t key, std::uint64_t start = 0) : key_(key), counter_(start) {}

  constexpr std::uint64_t next() { return draw(key_, counter_++); }
  constexpr double next_uniform() { return uniform01(next()); }

  // Uniform integer in [0, bound) by rejection; bound must be positive.
  constexpr std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
      const std::uint64_t x = next();
      if (x < limit) return x % bound;
    }
  }

  constexpr std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_;
};

// Floyd's sampling: `count` distinct values from [0, bound), ascending.
inline std::vector<std::uint64_t> sample_distinct(CounterStream& stream, std::uint64_t bound, std::uint64_t count) {
  std::set<std::uint64_t> chosen;
  for (std::uint64_t j = bound - count; j < bound; ++j) {
    const std::uint64_t t = stream.below(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  return {chosen.begin(), chosen.end()};
}

}  // namespace jlab::rng
