#pragma once

// Shared helpers for the test suites: a seed-stable RNG, random matroid
// construction over small ground sets, and brute-force reference oracles.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "misap/bitset.hpp"
#include "misap/matroid.hpp"

namespace misap::test {

// splitmix64; stable across platforms, unlike <random> distributions.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool chance(double p) { return (next() >> 11) * 0x1.0p-53 < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

private:
  std::uint64_t state_;
};

inline ElementSet random_subset(Rng& rng, std::size_t n, double p = 0.5) {
  ElementSet s(n);
  for (std::size_t e = 0; e < n; ++e)
    if (rng.chance(p)) s.insert(static_cast<ElementId>(e));
  return s;
}

inline ElementSet subset_from_mask(std::size_t n, std::uint64_t mask) {
  ElementSet s(n);
  for (std::size_t e = 0; e < n; ++e)
    if ((mask >> e) & 1) s.insert(static_cast<ElementId>(e));
  return s;
}

struct NamedMatroid {
  std::string name;
  MatroidPtr m;
};

// A random matroid of the requested family over exactly n ground elements.
inline NamedMatroid random_matroid(Rng& rng, std::size_t n, int family) {
  switch (family) {
    case 0:
      return {"uniform", make_uniform_matroid(n, rng.range(0, static_cast<int>(n)))};
    case 1: {
      std::vector<ElementId> order(n);
      std::iota(order.begin(), order.end(), 0u);
      rng.shuffle(order);
      std::size_t nblocks = 1 + rng.below(n);
      std::vector<std::vector<ElementId>> blocks(nblocks);
      for (std::size_t i = 0; i < n; ++i) blocks[rng.below(nblocks)].push_back(order[i]);
      blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                                  [](const auto& b) { return b.empty(); }),
                   blocks.end());
      std::vector<int> caps;
      for (const auto& b : blocks) caps.push_back(rng.range(0, static_cast<int>(b.size())));
      return {"partition", make_partition_matroid(n, blocks, caps)};
    }
    case 2: {
      // Random laminar family: recursive splits of [0, n).
      std::vector<LaminarSet> sets;
      std::function<void(std::size_t, std::size_t)> split = [&](std::size_t lo, std::size_t hi) {
        if (hi - lo < 1) return;
        LaminarSet ls;
        for (std::size_t e = lo; e < hi; ++e) ls.elements.push_back(static_cast<ElementId>(e));
        ls.capacity = rng.range(0, static_cast<int>(hi - lo));
        if (rng.chance(0.8)) sets.push_back(ls);
        if (hi - lo >= 2 && rng.chance(0.7)) {
          std::size_t mid = lo + 1 + rng.below(hi - lo - 1);
          split(lo, mid);
          split(mid, hi);
        }
      };
      split(0, n);
      if (sets.empty()) {
        LaminarSet all;
        for (std::size_t e = 0; e < n; ++e) all.elements.push_back(static_cast<ElementId>(e));
        all.capacity = rng.range(1, static_cast<int>(n));
        sets.push_back(all);
      }
      return {"laminar", make_laminar_matroid(n, sets)};
    }
    case 3: {
      std::size_t nv = 2 + rng.below(n + 1);
      std::vector<std::pair<int, int>> edges;
      for (std::size_t e = 0; e < n; ++e)
        edges.push_back({static_cast<int>(rng.below(nv)), static_cast<int>(rng.below(nv))});
      return {"graphic", make_graphic_matroid(nv, edges)};
    }
    case 4: {
      std::size_t nr = 1 + rng.below(n + 2);
      std::vector<std::vector<int>> adj(n);
      for (std::size_t e = 0; e < n; ++e) {
        int deg = rng.range(0, 3);
        for (int d = 0; d < deg; ++d) adj[e].push_back(static_cast<int>(rng.below(nr)));
      }
      return {"transversal", make_transversal_matroid(n, nr, adj)};
    }
    default: {
      // Gammoid on a small random digraph; ground vertices are the last n.
      std::size_t nv = n + 1 + rng.below(4);
      std::vector<std::pair<int, int>> arcs;
      std::size_t narcs = rng.below(2 * nv + 1);
      for (std::size_t a = 0; a < narcs; ++a)
        arcs.push_back({static_cast<int>(rng.below(nv)), static_cast<int>(rng.below(nv))});
      std::vector<int> sources;
      for (std::size_t v = 0; v < nv; ++v)
        if (rng.chance(0.3)) sources.push_back(static_cast<int>(v));
      std::vector<int> gv(n);
      std::iota(gv.begin(), gv.end(), static_cast<int>(nv - n));
      return {"gammoid", make_gammoid(nv, arcs, sources, gv)};
    }
  }
}

inline NamedMatroid random_matroid(Rng& rng, std::size_t n) {
  return random_matroid(rng, n, rng.range(0, 5));
}

// Brute-force maximum common independent set size over the elements of
// `universe_mask`, by subset enumeration. Reference oracle for the online
// maintainer; deliberately independent of the augmenting-path machinery.
inline int brute_force_max_common(const Matroid& a, const Matroid& b,
                                  const ElementSet& allowed) {
  std::vector<ElementId> ids = allowed.to_vector();
  int best = 0;
  std::uint64_t lim = 1ull << ids.size();
  for (std::uint64_t mask = 0; mask < lim; ++mask) {
    int sz = std::popcount(mask);
    if (sz <= best) continue;
    ElementSet s(a.universe());
    for (std::size_t i = 0; i < ids.size(); ++i)
      if ((mask >> i) & 1) s.insert(ids[i]);
    if (a.independent(s) && b.independent(s)) best = sz;
  }
  return best;
}

}  // namespace misap::test
