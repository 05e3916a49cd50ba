#pragma once

// Finite-ground-set matroids: a rank/independence oracle interface plus the
// concrete families (uniform, partition, laminar, graphic, transversal,
// gammoid, direct sums) and lazy restriction/contraction views.
//
// Oracles are immutable after construction and safe to query from multiple
// threads; internal caches are mutex-guarded.

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "misap/bitset.hpp"

namespace misap {

class Matroid {
public:
  virtual ~Matroid() = default;

  // Width of the id space ElementSets must use.
  std::size_t universe() const { return universe_; }

  // Valid elements; equals the full universe except for restriction /
  // contraction views.
  const ElementSet& ground() const { return ground_; }

  // Rank of S. Requires S subseteq ground().
  int rank(const ElementSet& s) const;

  bool independent(const ElementSet& s) const {
    return rank(s) == static_cast<int>(s.count());
  }

  // Whether I + e is independent, given that I is. Families override this
  // with cheaper incremental checks.
  virtual bool extends(ElementId e, const ElementSet& independent_set) const;

  bool is_loop(ElementId e) const { return rank(ElementSet::single(universe_, e)) == 0; }

  // {e in ground : rank(S + e) == rank(S)}. Contains S and all loops.
  ElementSet span(const ElementSet& s) const;

  // Elements of I on the circuit created by adding e to independent I:
  // empty if I + e is independent, otherwise {y in I : I + e - y independent}.
  // Requires: I independent, e in ground \ I.
  ElementSet circuit_in(ElementId e, const ElementSet& independent_set) const;

  int rank_full() const { return rank(ground_); }

protected:
  Matroid(std::size_t universe, ElementSet ground, bool cache_ranks)
      : universe_(universe), ground_(std::move(ground)), cache_ranks_(cache_ranks) {}
  Matroid(std::size_t universe, bool cache_ranks)
      : Matroid(universe, ElementSet::full(universe), cache_ranks) {}

  virtual int rank_impl(const ElementSet& s) const = 0;
  virtual ElementSet circuit_impl(ElementId e, const ElementSet& independent_set) const;

private:
  bool known_independent(const ElementSet& s) const;

  std::size_t universe_;
  ElementSet ground_;
  bool cache_ranks_;
  mutable std::mutex cache_mu_;
  mutable std::unordered_map<ElementSet, int> rank_cache_;
  mutable bool have_last_indep_ = false;
  mutable ElementSet last_indep_;
};

using MatroidPtr = std::shared_ptr<const Matroid>;

// --- Concrete families -----------------------------------------------------

MatroidPtr make_free_matroid(std::size_t n);
MatroidPtr make_uniform_matroid(std::size_t n, int k);

// Blocks must partition [0, n); capacities nonnegative, one per block.
MatroidPtr make_partition_matroid(std::size_t n,
                                  const std::vector<std::vector<ElementId>>& blocks,
                                  const std::vector<int>& capacities);

// Laminar family over [0, n): any two sets nested or disjoint. Elements
// outside every set are unconstrained.
struct LaminarSet {
  std::vector<ElementId> elements;
  int capacity = 0;
};
MatroidPtr make_laminar_matroid(std::size_t n, const std::vector<LaminarSet>& sets);

// Element i is the i-th edge.
MatroidPtr make_graphic_matroid(std::size_t num_vertices,
                                const std::vector<std::pair<int, int>>& edges);

// Element i is the i-th left node; adj[i] lists its right-side neighbours.
MatroidPtr make_transversal_matroid(std::size_t n, std::size_t num_right,
                                    const std::vector<std::vector<int>>& adj);

// Element i is ground_vertices[i]; independence = vertex-disjoint linkage
// from the sources.
MatroidPtr make_gammoid(std::size_t num_vertices,
                        const std::vector<std::pair<int, int>>& arcs,
                        const std::vector<int>& sources,
                        const std::vector<int>& ground_vertices);

// Ground set is the concatenation of the components' ground sets.
MatroidPtr make_direct_sum(const std::vector<MatroidPtr>& components);

// Matroid given only by an independence predicate; rank is derived by greedy
// extension (|S| predicate calls per query) and memoized.
MatroidPtr make_predicate_matroid(std::size_t n,
                                  std::function<bool(const ElementSet&)> independent);

// --- Views ------------------------------------------------------------------

// Lazy views sharing the base oracle (and its cache). Ids are preserved:
// the view's ground set shrinks but the universe width stays the base's.
// Chained views collapse onto the root oracle.
MatroidPtr restrict_view(const MatroidPtr& base, const ElementSet& keep);
MatroidPtr contract_view(const MatroidPtr& base, const ElementSet& out);

// Dense reindexing of a minor: element i of the result is keep[i] in the
// base (keep strictly increasing); `contracted` is given in base ids.
MatroidPtr make_reindexed_minor(const MatroidPtr& base,
                                const std::vector<ElementId>& keep,
                                const ElementSet& contracted);

}  // namespace misap
