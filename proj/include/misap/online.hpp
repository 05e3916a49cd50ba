#pragma once

// Online maintenance of a maximum common independent set of an arbitrary
// matroid and an online-arriving partition matroid, via shortest augmenting
// paths in the exchange graph.

#include <cstddef>
#include <optional>
#include <vector>

#include "misap/matroid.hpp"

namespace misap {

// A partition matroid whose rank-1 parts arrive online, together with the
// offline matroid over the same ground set.
struct PartitionInstance {
  MatroidPtr matroid;
  std::vector<ElementSet> parts;  // arrival order
  std::vector<int> part_of;       // element id -> part index

  static PartitionInstance create(MatroidPtr m,
                                  const std::vector<std::vector<ElementId>>& parts);

  std::size_t ground_size() const { return matroid->universe(); }
  std::size_t num_parts() const { return parts.size(); }
};

struct ArrivalRecord {
  std::size_t part_index = 0;
  std::vector<ElementId> path;    // empty when the part went inert
  std::size_t recourse = 0;       // |I_t symdiff I_{t-1}|
  std::size_t path_length = 0;    // equals recourse when a path was applied
};

struct OnlineState {
  explicit OnlineState(const PartitionInstance& inst)
      : current(inst.ground_size()),
        revealed(inst.ground_size()),
        inert(inst.num_parts(), false),
        part_occupant(inst.num_parts(), -1) {}

  ElementSet current;               // I: independent in both matroids
  ElementSet revealed;
  std::vector<bool> inert;          // per part
  std::vector<int> part_occupant;   // part -> element of I occupying it, or -1
  std::vector<ArrivalRecord> log;
  std::size_t next_part = 0;
};

// Explicit exchange graph over (I, revealed \ I), with inert parts' elements
// excluded. Built by direct oracle queries on both arc rules; quadratic and
// intended for verification, not the hot path.
struct ExchangeGraph {
  ElementSet nodes;                        // revealed, non-inert
  ElementSet sinks;                        // free elements of the offline matroid
  std::vector<std::vector<ElementId>> arcs;  // indexed by element id
};

ExchangeGraph build_exchange_graph(const OnlineState& state, const PartitionInstance& inst);

// Minimum-hop augmenting path for the freshly revealed part, or nullopt when
// no sink is reachable. Ties break by exploring elements in increasing id
// order and keeping the first-discovered parent; the first free element
// popped ends the search.
std::optional<std::vector<ElementId>> shortest_augmenting_path(
    const OnlineState& state, const PartitionInstance& inst, std::size_t part);

// Applies a path returned by shortest_augmenting_path: I' = I symdiff path.
// Throws std::logic_error if the result is dependent in either matroid.
void apply_augmentation(OnlineState& state, const PartitionInstance& inst,
                        const std::vector<ElementId>& path);

// Reveals part t, augments if possible, otherwise marks the part inert.
// Arrivals must be processed in order.
ArrivalRecord process_arrival(OnlineState& state, const PartitionInstance& inst,
                              std::size_t t);

std::size_t total_recourse(const OnlineState& state);

// Convenience: process every part in arrival order.
OnlineState run_online(const PartitionInstance& inst);

}  // namespace misap
