#pragma once

// splitmix64-based RNG. Instance generation must be byte-reproducible across
// platforms, which rules out <random> distributions.

#include <cstdint>
#include <vector>

namespace misap {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n = 0 yields 0.
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  // Uniform in [lo, hi], inclusive.
  int range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool chance(double p) { return (next() >> 11) * 0x1.0p-53 < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

  // k distinct values from [0, n), in random order.
  std::vector<std::uint64_t> sample(std::uint64_t n, std::size_t k) {
    std::vector<std::uint64_t> pool(n);
    for (std::uint64_t i = 0; i < n; ++i) pool[i] = i;
    shuffle(pool);
    pool.resize(k);
    return pool;
  }

private:
  std::uint64_t state_;
};

}  // namespace misap
