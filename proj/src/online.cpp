#include "misap/online.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace misap {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

PartitionInstance PartitionInstance::create(
    MatroidPtr m, const std::vector<std::vector<ElementId>>& parts) {
  require(m != nullptr, "PartitionInstance: null matroid");
  PartitionInstance inst;
  inst.matroid = std::move(m);
  const std::size_t n = inst.matroid->universe();
  inst.part_of.assign(n, -1);
  ElementSet seen(n);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    ElementSet ps(n);
    for (ElementId e : parts[p]) {
      require(e < n, "PartitionInstance: element out of range");
      require(!seen.test(e), "PartitionInstance: parts must be disjoint");
      seen.insert(e);
      ps.insert(e);
      inst.part_of[e] = static_cast<int>(p);
    }
    inst.parts.push_back(std::move(ps));
  }
  require(seen == inst.matroid->ground(),
          "PartitionInstance: parts must cover the ground set");
  return inst;
}

ExchangeGraph build_exchange_graph(const OnlineState& state,
                                   const PartitionInstance& inst) {
  const Matroid& m = *inst.matroid;
  const std::size_t n = inst.ground_size();
  ExchangeGraph g;
  g.nodes = ElementSet(n);
  g.sinks = ElementSet(n);
  g.arcs.assign(n, {});

  state.revealed.for_each([&](ElementId e) {
    if (!state.inert[inst.part_of[e]]) g.nodes.insert(e);
  });

  const ElementSet& I = state.current;
  const ElementSet outside = g.nodes - I;

  outside.for_each([&](ElementId x) {
    if (m.extends(x, I)) g.sinks.insert(x);
  });

  // y -> x when I - y + x stays independent in the partition matroid;
  // x -> y when it stays independent in the offline matroid.
  I.for_each([&](ElementId y) {
    outside.for_each([&](ElementId x) {
      const ElementSet swapped = I.minus(y).plus(x);
      ElementSet part = inst.parts[inst.part_of[x]];
      if (!part.intersects(swapped.minus(x))) g.arcs[y].push_back(x);
      if (m.independent(swapped)) g.arcs[x].push_back(y);
    });
  });
  return g;
}

namespace {

std::optional<std::vector<ElementId>> bfs_augmenting_path(
    const OnlineState& state, const PartitionInstance& inst, std::size_t part) {
  const Matroid& m = *inst.matroid;
  const std::size_t n = inst.ground_size();
  const ElementSet& I = state.current;

  std::vector<int> parent(n, -1);  // -2 marks a source
  std::deque<ElementId> queue;
  inst.parts[part].for_each([&](ElementId x) {
    parent[x] = -2;
    queue.push_back(x);
  });

  while (!queue.empty()) {
    ElementId v = queue.front();
    queue.pop_front();
    if (!I.test(v)) {
      if (m.extends(v, I)) {
        std::vector<ElementId> path;
        for (int x = static_cast<int>(v); x != -2; x = parent[x])
          path.push_back(static_cast<ElementId>(x));
        std::reverse(path.begin(), path.end());
        return path;
      }
      // Swappable members of I: the circuit e closes.
      m.circuit_in(v, I).for_each([&](ElementId y) {
        if (parent[y] == -1) {
          parent[y] = static_cast<int>(v);
          queue.push_back(y);
        }
      });
    } else {
      // Dropping v frees its part for the other members.
      const ElementSet& own = inst.parts[inst.part_of[v]];
      own.for_each([&](ElementId x) {
        if (x != v && !I.test(x) && parent[x] == -1) {
          parent[x] = static_cast<int>(v);
          queue.push_back(x);
        }
      });
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<ElementId>> shortest_augmenting_path(
    const OnlineState& state, const PartitionInstance& inst, std::size_t part) {
  require(part < inst.num_parts(), "shortest_augmenting_path: bad part index");
  require(!state.inert[part], "shortest_augmenting_path: part is inert");
  return bfs_augmenting_path(state, inst, part);
}

void apply_augmentation(OnlineState& state, const PartitionInstance& inst,
                        const std::vector<ElementId>& path) {
  require(!path.empty(), "apply_augmentation: empty path");
  ElementSet next = state.current;
  for (ElementId e : path) {
    if (next.test(e))
      next.erase(e);
    else
      next.insert(e);
  }
  if (next.count() != state.current.count() + 1 || !inst.matroid->independent(next))
    throw std::logic_error("apply_augmentation: exchange produced a dependent set");

  // Partition-side occupancy.
  for (ElementId e : path) {
    int p = inst.part_of[e];
    if (state.current.test(e)) {
      if (state.part_occupant[p] == static_cast<int>(e)) state.part_occupant[p] = -1;
    }
  }
  for (ElementId e : path) {
    if (!state.current.test(e)) {
      int p = inst.part_of[e];
      if (state.part_occupant[p] != -1)
        throw std::logic_error("apply_augmentation: part occupied twice");
      state.part_occupant[p] = static_cast<int>(e);
    }
  }
  state.current = std::move(next);
}

ArrivalRecord process_arrival(OnlineState& state, const PartitionInstance& inst,
                              std::size_t t) {
  require(t == state.next_part, "process_arrival: arrivals must be in order");
  require(t < inst.num_parts(), "process_arrival: part index out of range");
  state.next_part++;
  state.revealed |= inst.parts[t];

  ArrivalRecord rec;
  rec.part_index = t;
  auto path = bfs_augmenting_path(state, inst, t);
  if (path) {
    apply_augmentation(state, inst, *path);
    rec.path = *path;
    rec.recourse = path->size();
    rec.path_length = path->size();
  } else {
    state.inert[t] = true;
  }
  state.log.push_back(rec);
  return rec;
}

std::size_t total_recourse(const OnlineState& state) {
  std::size_t total = 0;
  for (const auto& r : state.log) total += r.recourse;
  return total;
}

OnlineState run_online(const PartitionInstance& inst) {
  OnlineState state(inst);
  for (std::size_t t = 0; t < inst.num_parts(); ++t) process_arrival(state, inst, t);
  return state;
}

}  // namespace misap
