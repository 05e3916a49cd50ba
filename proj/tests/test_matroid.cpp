#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>
#include <vector>

#include "misap/matroid.hpp"
#include "test_util.hpp"

using namespace misap;
using test::Rng;

namespace {

// Triangle graph a-b (0), b-c (1), c-a (2).
MatroidPtr triangle() {
  return make_graphic_matroid(3, {{0, 1}, {1, 2}, {2, 0}});
}

// Acyclicity predicate for the same triangle, used as an independent oracle.
bool triangle_acyclic(const ElementSet& s) {
  return s.count() < 3;  // any two of the three edges are a forest
}

void check_rank_axioms_sampled(const Matroid& m, Rng& rng, int trials) {
  const std::size_t n = m.universe();
  CHECK(m.rank(ElementSet(n)) == 0);
  for (int t = 0; t < trials; ++t) {
    ElementSet s = test::random_subset(rng, n);
    ElementSet u = test::random_subset(rng, n);
    int rs = m.rank(s), ru = m.rank(u);
    CHECK(rs >= 0);
    CHECK(rs <= static_cast<int>(s.count()));
    // monotonicity on s vs s|u
    int rsu = m.rank(s | u);
    CHECK(rs <= rsu);
    // submodularity
    CHECK(rsu + m.rank(s & u) <= rs + ru);
    // unit increase
    ElementId e = static_cast<ElementId>(rng.below(n));
    int diff = m.rank(s.plus(e)) - rs;
    CHECK(diff >= 0);
    CHECK(diff <= 1);
    // independence <-> rank
    CHECK(m.independent(s) == (rs == static_cast<int>(s.count())));
  }
}

void check_rank_axioms_exhaustive(const Matroid& m) {
  const std::size_t n = m.universe();
  REQUIRE(n <= 6);
  std::uint64_t lim = 1ull << n;
  for (std::uint64_t a = 0; a < lim; ++a) {
    ElementSet s = test::subset_from_mask(n, a);
    int rs = m.rank(s);
    CHECK(rs <= static_cast<int>(s.count()));
    for (std::uint64_t b = 0; b < lim; ++b) {
      ElementSet u = test::subset_from_mask(n, b);
      int ru = m.rank(u);
      if (s.is_subset_of(u)) CHECK(rs <= ru);
      CHECK(m.rank(s | u) + m.rank(s & u) <= rs + ru);
    }
  }
}

}  // namespace

TEST_CASE("rank: frozen examples") {
  auto u = make_uniform_matroid(4, 2);
  CHECK(u->rank(ElementSet(4)) == 0);
  CHECK(u->rank(ElementSet::of(4, {0, 1, 2})) == 2);

  auto g = triangle();
  CHECK(g->rank(ElementSet(3)) == 0);
  CHECK(g->rank(ElementSet::full(3)) == 2);

  // Same value from the greedy-over-predicate derivation.
  auto p = make_predicate_matroid(3, triangle_acyclic);
  CHECK(p->rank(ElementSet::full(3)) == 2);
}

TEST_CASE("span: frozen examples") {
  auto g = triangle();
  CHECK(g->span(ElementSet(3)) == ElementSet(3));  // loop-free
  CHECK(g->span(ElementSet::of(3, {0, 1})) == ElementSet::full(3));

  auto u1 = make_uniform_matroid(3, 1);
  CHECK(u1->span(ElementSet::of(3, {0})) == ElementSet::full(3));

  // span of the empty set is exactly the loops
  auto g2 = make_graphic_matroid(2, {{0, 0}, {0, 1}});
  CHECK(g2->span(ElementSet(2)) == ElementSet::of(2, {0}));
}

TEST_CASE("circuit_in: frozen examples") {
  auto fr = make_free_matroid(4);
  CHECK(fr->circuit_in(3, ElementSet::of(4, {0, 1})) == ElementSet(4));

  auto u1 = make_uniform_matroid(2, 1);
  CHECK(u1->circuit_in(1, ElementSet::of(2, {0})) == ElementSet::of(2, {0}));

  auto g = triangle();
  CHECK(g->circuit_in(2, ElementSet::of(3, {0, 1})) == ElementSet::of(3, {0, 1}));

  CHECK_THROWS_AS(g->circuit_in(2, ElementSet::full(3)), std::invalid_argument);
}

TEST_CASE("contract: frozen examples") {
  auto g = triangle();
  auto g0 = contract_view(g, ElementSet(3));
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    ElementSet s = test::subset_from_mask(3, mask);
    CHECK(g0->rank(s) == g->rank(s));
  }

  auto gc = contract_view(g, ElementSet::of(3, {0}));
  CHECK(gc->rank(ElementSet::of(3, {1, 2})) == 1);

  auto u = make_uniform_matroid(4, 2);
  auto uc = contract_view(u, ElementSet::of(4, {0}));
  CHECK(uc->rank(ElementSet::of(4, {1, 2, 3})) == 1);
}

TEST_CASE("restrict: frozen examples") {
  auto g = triangle();
  auto gr = restrict_view(g, ElementSet::full(3));
  CHECK(gr->rank(ElementSet::full(3)) == g->rank(ElementSet::full(3)));

  auto g2 = restrict_view(g, ElementSet::of(3, {0, 1}));
  CHECK(g2->rank(ElementSet::of(3, {0, 1})) == 2);
  CHECK_THROWS_AS(g2->rank(ElementSet::full(3)), std::invalid_argument);

  auto ge = restrict_view(g, ElementSet(3));
  CHECK(ge->rank(ElementSet(3)) == 0);
}

TEST_CASE("rank axioms across families") {
  Rng rng(20260811);
  for (int family = 0; family < 6; ++family) {
    for (int trial = 0; trial < 12; ++trial) {
      std::size_t n = 4 + rng.below(9);  // 4..12
      auto nm = test::random_matroid(rng, n, family);
      INFO(nm.name, " n=", n, " trial=", trial);
      check_rank_axioms_sampled(*nm.m, rng, 120);
    }
    std::size_t n = 4 + rng.below(3);  // 4..6, exhaustive pairs
    auto nm = test::random_matroid(rng, n, family);
    INFO(nm.name, " exhaustive n=", n);
    check_rank_axioms_exhaustive(*nm.m);
  }
}

TEST_CASE("greedy-derived rank agrees with native rank") {
  Rng rng(7301);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 3 + rng.below(7);
    auto nm = test::random_matroid(rng, n);
    auto native = nm.m;
    auto derived = make_predicate_matroid(
        n, [native](const ElementSet& s) { return native->independent(s); });
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      ElementSet s = test::subset_from_mask(n, mask);
      CHECK(native->rank(s) == derived->rank(s));
    }
  }
}

TEST_CASE("circuit soundness across families") {
  Rng rng(424242);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 3 + rng.below(8);
    auto nm = test::random_matroid(rng, n);
    const Matroid& m = *nm.m;
    // Grow a random independent set.
    ElementSet i(n);
    std::vector<ElementId> order(n);
    std::iota(order.begin(), order.end(), 0u);
    rng.shuffle(order);
    for (ElementId e : order)
      if (rng.chance(0.6) && m.extends(e, i)) i.insert(e);
    for (ElementId e = 0; e < n; ++e) {
      if (i.test(e)) continue;
      ElementSet c = m.circuit_in(e, i);
      INFO(nm.name, " e=", e, " I=", i.str(), " C=", c.str());
      if (m.extends(e, i)) {
        CHECK(c.empty());
        continue;
      }
      CHECK(c.is_subset_of(i));
      i.for_each([&](ElementId y) {
        bool swap_ok = m.independent(i.plus(e).minus(y));
        CHECK(swap_ok == c.test(y));
      });
    }
  }
}

TEST_CASE("contraction and restriction algebra") {
  Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 4 + rng.below(7);  // 4..10
    auto nm = test::random_matroid(rng, n);
    ElementSet a = test::random_subset(rng, n, 0.3);
    ElementSet b = test::random_subset(rng, n, 0.3) - a;
    auto c1 = contract_view(contract_view(nm.m, a), b);
    auto c2 = contract_view(nm.m, a | b);
    ElementSet rest = ElementSet::full(n) - a - b;
    std::vector<ElementId> ids = rest.to_vector();
    for (std::uint64_t mask = 0; mask < (1ull << ids.size()); ++mask) {
      ElementSet s(n);
      for (std::size_t k = 0; k < ids.size(); ++k)
        if ((mask >> k) & 1) s.insert(ids[k]);
      CHECK(c1->rank(s) == c2->rank(s));
    }
    // restriction composes the same way
    auto r1 = restrict_view(restrict_view(nm.m, ElementSet::full(n) - a), rest);
    auto r2 = restrict_view(nm.m, rest);
    for (int t = 0; t < 20; ++t) {
      ElementSet s = test::random_subset(rng, n) & rest;
      CHECK(r1->rank(s) == r2->rank(s));
    }
  }
}

TEST_CASE("gammoid rank equals brute-force disjoint path packing") {
  Rng rng(5150);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + rng.below(4);  // ground elements
    std::size_t nv = n + 1 + rng.below(4);
    std::vector<std::pair<int, int>> arcs;
    for (std::size_t a = 0; a < 2 * nv; ++a)
      if (rng.chance(0.5))
        arcs.push_back({static_cast<int>(rng.below(nv)), static_cast<int>(rng.below(nv))});
    std::vector<int> sources;
    for (std::size_t v = 0; v < nv; ++v)
      if (rng.chance(0.4)) sources.push_back(static_cast<int>(v));
    std::vector<int> gv;
    for (std::size_t v = 0; v < nv && gv.size() < n; ++v) gv.push_back(static_cast<int>(v));
    auto gm = make_gammoid(nv, arcs, sources, gv);

    // Independent oracle: enumerate all simple paths from any source to each
    // target, then search for the largest vertex-disjoint subfamily.
    auto disjoint_paths = [&](const ElementSet& s) {
      std::vector<std::vector<std::vector<int>>> paths_per_target;
      std::vector<std::vector<int>> adj(nv);
      for (auto [u, v] : arcs) adj[u].push_back(v);
      s.for_each([&](ElementId e) {
        int target = gv[e];
        std::vector<std::vector<int>> acc;
        std::vector<int> cur;
        std::vector<bool> on(nv, false);
        std::function<void(int)> dfs = [&](int v) {
          cur.push_back(v);
          on[v] = true;
          if (v == target) acc.push_back(cur);
          // paths may continue through the target? vertex-disjoint paths end there
          if (v != target)
            for (int w : adj[v])
              if (!on[w]) dfs(w);
          on[v] = false;
          cur.pop_back();
        };
        for (int src : sources)
          if (!on[src]) dfs(src);
        paths_per_target.push_back(acc);
      });
      int best = 0;
      std::vector<bool> used(nv, false);
      std::function<void(std::size_t, int)> pick = [&](std::size_t idx, int got) {
        best = std::max(best, got);
        if (idx == paths_per_target.size()) return;
        pick(idx + 1, got);  // skip this target
        for (const auto& p : paths_per_target[idx]) {
          bool free = true;
          for (int v : p)
            if (used[v]) {
              free = false;
              break;
            }
          if (!free) continue;
          for (int v : p) used[v] = true;
          pick(idx + 1, got + 1);
          for (int v : p) used[v] = false;
        }
      };
      pick(0, 0);
      return best;
    };

    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      ElementSet s = test::subset_from_mask(n, mask);
      CHECK(gm->rank(s) == disjoint_paths(s));
    }
  }
}

TEST_CASE("direct sum splits ranks and circuits per component") {
  Rng rng(31337);
  auto a = make_uniform_matroid(3, 1);
  auto b = triangle();
  auto d = make_direct_sum({a, b});
  CHECK(d->universe() == 6);
  CHECK(d->rank(ElementSet::full(6)) == 1 + 2);
  CHECK(d->rank(ElementSet::of(6, {3, 4, 5})) == 2);
  CHECK(d->circuit_in(1, ElementSet::of(6, {0, 3, 4})) == ElementSet::of(6, {0}));
  CHECK(d->circuit_in(5, ElementSet::of(6, {0, 3, 4})) == ElementSet::of(6, {3, 4}));
}

TEST_CASE("loops are permitted and spanned by the empty set") {
  auto u0 = make_uniform_matroid(3, 0);
  CHECK(u0->is_loop(0));
  CHECK(u0->span(ElementSet(3)) == ElementSet::full(3));
  auto pm = make_partition_matroid(2, {{0}, {1}}, {0, 1});
  CHECK(pm->is_loop(0));
  CHECK_FALSE(pm->is_loop(1));
  CHECK(pm->span(ElementSet(2)) == ElementSet::of(2, {0}));
}
