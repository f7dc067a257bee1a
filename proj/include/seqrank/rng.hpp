#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace seqrank {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Hashes (seed, stream) into one well-mixed 64-bit engine seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t s = seed;
  std::uint64_t z = splitmix64(s);
  s = z ^ (stream * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull);
  return splitmix64(s);
}

}  // namespace detail

/// Seedable, splittable random generator with reproducible output.
///
/// Stream `k` of a given seed is statistically independent of stream `j != k`
/// and bit-identical across runs and platforms: the engine is std::mt19937_64
/// (whose output sequence the standard pins down) and all conversions below
/// avoid std::uniform_*_distribution, whose algorithms are
/// implementation-defined.
class rng {
 public:
  explicit rng(std::uint64_t seed, std::uint64_t stream = 0)
      : engine_(detail::mix_seed(seed, stream)) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [lo, hi], inclusive. Exact (rejection sampling).
  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t bound = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t threshold = (-bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return lo + static_cast<std::int64_t>(r % bound);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// n i.i.d. uniform values on [0, 1), redrawn in full on the (astronomically
/// rare) event of an exact 64-bit collision, so the result is always pairwise
/// distinct and still a deterministic function of the generator state.
inline std::vector<double> sample_distinct_uniform(rng& gen, std::size_t n) {
  std::vector<double> x(n);
  std::vector<double> sorted(n);
  for (;;) {
    for (auto& v : x) v = gen.next_double();
    sorted = x;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end())
      return x;
  }
}

}  // namespace seqrank
