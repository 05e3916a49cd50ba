#pragma once

// Seed-deterministic instance generators. Every generator plants a common
// independent set of size n (recorded in metadata["planted"]) so bound-check
// runs operate on feasible instances; gen_small_random is the exception and
// may emit infeasible instances for oracle comparisons.

#include <cstdint>
#include <string>

#include "misap/instance.hpp"

namespace misap {

// Bipartite matching instance: one capacity-1 block per offline item, part i
// holds the edges of online vertex i. Plants a perfect matching, then adds
// each remaining edge with probability `density`. Requires m >= n.
InstanceFile gen_random_bipartite(std::size_t n, std::size_t m, double density,
                                  std::uint64_t seed);

// Recursive server hierarchy with tight capacities; elements are
// (client, server) edges constrained by a laminar family.
InstanceFile gen_laminar(std::size_t n, std::uint64_t seed, int extra_choices = 2);

// Forest of planted edges plus random extra edges, grouped into parts.
InstanceFile gen_graphic(std::size_t n, std::uint64_t seed, int extra_per_part = 2);

// Parts of candidate left-nodes of a bipartite gadget graph.
InstanceFile gen_transversal(std::size_t n, std::uint64_t seed, int part_size = 2,
                             int degree = 2);

// Small layered digraph with planted disjoint lanes; desk scale.
InstanceFile gen_gammoid(std::size_t n, std::uint64_t seed);

// Adversarial bipartite instance built by simulating the maintainer and
// aiming each arrival at the two servers farthest (in alternating distance)
// from any free server. Deterministic; n must be a power of two. The
// per-arrival path lengths the construction forces are recorded in
// metadata["forced_lengths"].
InstanceFile gen_adversarial(std::size_t n);

// Lifts a matroid to (element, color) pairs: the offline matroid becomes the
// direct sum of `colors` copies, and the part of original element e contains
// its copies, so the maintained set encodes a coloring of arrived elements
// into independent sets. `order` permutes arrivals (default: by element id).
InstanceFile lift_partitioning(const MatroidDescription& m, int colors,
                               std::vector<ElementId> order = {});

// Random small instance over a random matroid family, |E| <= 16, <= 8 parts;
// not necessarily feasible.
InstanceFile gen_small_random(std::uint64_t seed);

// Name-based dispatch used by the sweep driver: "random_bipartite",
// "laminar", "graphic", "transversal", "gammoid", "adversarial".
InstanceFile generate_named(const std::string& family, std::size_t n, std::uint64_t seed);

}  // namespace misap
