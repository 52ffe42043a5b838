// Deterministic random streams. mt19937_64 is fully specified by the
// standard; the helpers below avoid std::*_distribution, whose output is
// implementation-defined, so identical seeds give identical runs on any
// conforming toolchain.
#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace mobicache {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(splitmix64(seed)) {}

  // Substream i of a base seed; independent streams for parallel trials.
  static Rng substream(std::uint64_t seed, std::uint64_t index) {
    return Rng(splitmix64(seed) ^ splitmix64(index * 0xd1342543de82ef95ULL + 1));
  }

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, n) by rejection; exact, no modulo bias.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % n;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

  template <class T>
  std::vector<T> permutation(T n) {
    std::vector<T> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), T{0});
    shuffle(p);
    return p;
  }

 private:
  std::mt19937_64 eng_;
};

// Order-independent mean of per-trial values (pairwise summation).
inline double pairwise_sum(const std::vector<double>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 8) {
    double s = 0;
    for (std::size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

inline double pairwise_mean(const std::vector<double>& v) {
  if (v.empty()) return 0;
  return pairwise_sum(v, 0, v.size()) / static_cast<double>(v.size());
}

}  // namespace mobicache
