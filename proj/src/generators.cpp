#include "misap/generators.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "misap/rng.hpp"

namespace misap {

using nlohmann::json;

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

json base_metadata(const std::string& name, std::uint64_t seed, json params) {
  return json{{"generator", name}, {"seed", seed}, {"params", std::move(params)}};
}

}  // namespace

InstanceFile gen_random_bipartite(std::size_t n, std::size_t m, double density,
                                  std::uint64_t seed) {
  require(n >= 1 && m >= n, "gen_random_bipartite: need m >= n >= 1");
  require(density > 0.0 && density <= 1.0, "gen_random_bipartite: density in (0,1]");
  Rng rng(seed);

  auto planted_items = rng.sample(m, n);
  // edge list per buyer, ordered by item
  std::vector<std::vector<std::size_t>> nbr(n);
  for (std::size_t i = 0; i < n; ++i) {
    nbr[i].push_back(planted_items[i]);
    for (std::size_t j = 0; j < m; ++j)
      if (j != planted_items[i] && rng.chance(density)) nbr[i].push_back(j);
    std::sort(nbr[i].begin(), nbr[i].end());
  }

  std::vector<std::vector<ElementId>> parts(n);
  std::vector<std::vector<ElementId>> blocks(m);
  std::vector<ElementId> planted;
  ElementId next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : nbr[i]) {
      parts[i].push_back(next);
      blocks[j].push_back(next);
      if (j == planted_items[i]) planted.push_back(next);
      ++next;
    }
  }

  InstanceFile f;
  f.matroid = MatroidDescription::partition(next, blocks, std::vector<int>(m, 1));
  f.parts = parts;
  f.metadata = base_metadata("random_bipartite", seed,
                             json{{"n", n}, {"m", m}, {"density", density}});
  f.metadata["planted"] = planted;
  return f;
}

InstanceFile gen_laminar(std::size_t n, std::uint64_t seed, int extra_choices) {
  require(n >= 1, "gen_laminar: need n >= 1");
  Rng rng(seed);
  const std::size_t servers = n + 1 + n / 4;

  auto planted_servers = rng.sample(servers, n);
  std::vector<int> planted_count(servers, 0);
  for (std::size_t s : planted_servers) planted_count[s] = 1;

  // Random recursive interval split of the server range.
  struct Node {
    std::size_t lo, hi;
    int cap;
  };
  std::vector<Node> nodes;
  std::function<void(std::size_t, std::size_t)> split = [&](std::size_t lo, std::size_t hi) {
    int planted_in = 0;
    for (std::size_t s = lo; s < hi; ++s) planted_in += planted_count[s];
    int cap;
    if (hi - lo == 1) {
      cap = 1;  // per-server matching capacity
    } else {
      cap = planted_in + (rng.chance(0.4) ? 1 : 0);
      cap = std::max(1, std::min<int>(cap, static_cast<int>(hi - lo)));
    }
    nodes.push_back({lo, hi, cap});
    if (hi - lo >= 2) {
      std::size_t mid = lo + 1 + rng.below(hi - lo - 1);
      split(lo, mid);
      split(mid, hi);
    }
  };
  split(0, servers);

  // Client neighborhoods: planted server plus extras.
  std::vector<std::vector<std::size_t>> nbr(n);
  for (std::size_t i = 0; i < n; ++i) {
    nbr[i].push_back(planted_servers[i]);
    for (int x = 0; x < extra_choices; ++x) {
      std::size_t s = rng.below(servers);
      if (std::find(nbr[i].begin(), nbr[i].end(), s) == nbr[i].end()) nbr[i].push_back(s);
    }
    std::sort(nbr[i].begin(), nbr[i].end());
  }

  std::vector<std::vector<ElementId>> parts(n);
  std::vector<std::vector<ElementId>> edges_into(servers);
  std::vector<ElementId> planted;
  ElementId next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t s : nbr[i]) {
      parts[i].push_back(next);
      edges_into[s].push_back(next);
      if (s == planted_servers[i]) planted.push_back(next);
      ++next;
    }
  }

  std::vector<LaminarSet> sets;
  for (const auto& nd : nodes) {
    LaminarSet ls;
    for (std::size_t s = nd.lo; s < nd.hi; ++s)
      for (ElementId e : edges_into[s]) ls.elements.push_back(e);
    if (ls.elements.empty()) continue;
    std::sort(ls.elements.begin(), ls.elements.end());
    ls.capacity = nd.cap;
    sets.push_back(std::move(ls));
  }
  // Distinct intervals can hold identical edge sets once empty servers are
  // skipped; keep the tightest capacity.
  std::sort(sets.begin(), sets.end(), [](const LaminarSet& a, const LaminarSet& b) {
    return a.elements != b.elements ? a.elements < b.elements : a.capacity < b.capacity;
  });
  sets.erase(std::unique(sets.begin(), sets.end(),
                         [](const LaminarSet& a, const LaminarSet& b) {
                           return a.elements == b.elements;
                         }),
             sets.end());

  InstanceFile f;
  f.matroid = MatroidDescription::laminar(next, sets);
  f.parts = parts;
  f.metadata = base_metadata("laminar", seed,
                             json{{"n", n}, {"servers", servers},
                                  {"extra_choices", extra_choices}});
  f.metadata["planted"] = planted;
  return f;
}

InstanceFile gen_graphic(std::size_t n, std::uint64_t seed, int extra_per_part) {
  require(n >= 1, "gen_graphic: need n >= 1");
  Rng rng(seed);
  const std::size_t nv = n + 1;

  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<ElementId>> parts(n);
  std::vector<ElementId> planted;
  for (std::size_t t = 0; t < n; ++t) {
    // planted forest edge: vertex t+1 to an earlier vertex
    parts[t].push_back(static_cast<ElementId>(edges.size()));
    planted.push_back(static_cast<ElementId>(edges.size()));
    edges.push_back({static_cast<int>(t + 1), static_cast<int>(rng.below(t + 1))});
    for (int x = 0; x < extra_per_part; ++x) {
      int u = static_cast<int>(rng.below(nv));
      int v = static_cast<int>(rng.below(nv));
      if (u == v) continue;
      parts[t].push_back(static_cast<ElementId>(edges.size()));
      edges.push_back({u, v});
    }
  }

  InstanceFile f;
  f.matroid = MatroidDescription::graphic(nv, edges);
  f.parts = parts;
  f.metadata = base_metadata("graphic", seed,
                             json{{"n", n}, {"extra_per_part", extra_per_part}});
  f.metadata["planted"] = planted;
  return f;
}

InstanceFile gen_transversal(std::size_t n, std::uint64_t seed, int part_size,
                             int degree) {
  require(n >= 1 && part_size >= 1 && degree >= 1, "gen_transversal: bad parameters");
  Rng rng(seed);
  const std::size_t nr = n + 2 + n / 4;

  auto planted_rights = rng.sample(nr, n);
  std::vector<std::vector<int>> adj;
  std::vector<std::vector<ElementId>> parts(n);
  std::vector<ElementId> planted;
  for (std::size_t t = 0; t < n; ++t) {
    {
      std::vector<int> a{static_cast<int>(planted_rights[t])};
      for (int d = 1; d < degree; ++d) {
        int r = static_cast<int>(rng.below(nr));
        if (std::find(a.begin(), a.end(), r) == a.end()) a.push_back(r);
      }
      std::sort(a.begin(), a.end());
      parts[t].push_back(static_cast<ElementId>(adj.size()));
      planted.push_back(static_cast<ElementId>(adj.size()));
      adj.push_back(std::move(a));
    }
    for (int k = 1; k < part_size; ++k) {
      std::vector<int> a;
      int deg = rng.range(1, degree);
      for (int d = 0; d < deg; ++d) {
        int r = static_cast<int>(rng.below(nr));
        if (std::find(a.begin(), a.end(), r) == a.end()) a.push_back(r);
      }
      std::sort(a.begin(), a.end());
      parts[t].push_back(static_cast<ElementId>(adj.size()));
      adj.push_back(std::move(a));
    }
  }

  InstanceFile f;
  f.matroid = MatroidDescription::transversal(adj.size(), nr, adj);
  f.parts = parts;
  f.metadata = base_metadata(
      "transversal", seed,
      json{{"n", n}, {"right", nr}, {"part_size", part_size}, {"degree", degree}});
  f.metadata["planted"] = planted;
  return f;
}

InstanceFile gen_gammoid(std::size_t n, std::uint64_t seed) {
  require(n >= 1, "gen_gammoid: need n >= 1");
  Rng rng(seed);
  // Layered lanes: source_i -> mid_i -> target_i, plus spare targets and a
  // few random cross arcs. Vertices: [0,n) sources, [n,2n) mids,
  // [2n, 2n+n+2) targets.
  const std::size_t targets = n + 2;
  const std::size_t nv = 2 * n + targets;
  std::vector<std::pair<int, int>> arcs;
  for (std::size_t i = 0; i < n; ++i) {
    arcs.push_back({static_cast<int>(i), static_cast<int>(n + i)});
    arcs.push_back({static_cast<int>(n + i), static_cast<int>(2 * n + i)});
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.chance(0.5))
      arcs.push_back({static_cast<int>(n + i), static_cast<int>(2 * n + rng.below(targets))});
    if (rng.chance(0.3))
      arcs.push_back({static_cast<int>(rng.below(n)), static_cast<int>(n + rng.below(n))});
  }
  std::vector<int> sources(n);
  std::iota(sources.begin(), sources.end(), 0);
  std::vector<int> ground(targets);
  std::iota(ground.begin(), ground.end(), static_cast<int>(2 * n));

  // Parts: planted target t for part t; spare targets spread round-robin.
  std::vector<std::vector<ElementId>> parts(n);
  std::vector<ElementId> planted;
  for (std::size_t t = 0; t < n; ++t) {
    parts[t].push_back(static_cast<ElementId>(t));
    planted.push_back(static_cast<ElementId>(t));
  }
  for (std::size_t s = n; s < targets; ++s)
    parts[rng.below(n)].push_back(static_cast<ElementId>(s));
  for (auto& p : parts) std::sort(p.begin(), p.end());

  InstanceFile f;
  f.matroid = MatroidDescription::gammoid(nv, arcs, sources, ground);
  f.parts = parts;
  f.metadata = base_metadata("gammoid", seed, json{{"n", n}});
  f.metadata["planted"] = planted;
  return f;
}

InstanceFile gen_adversarial(std::size_t n) {
  require(n >= 2 && (n & (n - 1)) == 0, "gen_adversarial: n must be a power of two >= 2");

  // Bipartite, capacity-1 servers. Each arrival brings (at most) two edges;
  // the edge of part t toward its smaller server gets id 2t. The simulation
  // below mirrors the maintainer's BFS tie-break exactly (ascending ids,
  // FIFO, first free server popped), so the emitted file replays to the same
  // matching trajectory.
  std::vector<std::array<int, 2>> nb;  // per part: servers, ascending; [1] == -1 for singleton
  std::vector<int> occupant_server(n, -1);   // server -> part occupying it
  std::vector<int> matched_server(n, -1);    // part -> server it holds
  std::vector<std::vector<int>> choosers(n);  // server -> parts offering it
  std::vector<std::size_t> forced_lengths;

  auto alternating_dists = [&]() {
    // dist[s]: alternating steps from server s to a free server (0 when
    // free). Multi-source reverse BFS: a matched part can vacate its server
    // for any of its other choices.
    std::vector<int> dist(n, -1);
    std::deque<int> queue;
    for (std::size_t s = 0; s < n; ++s)
      if (occupant_server[s] < 0) {
        dist[s] = 0;
        queue.push_back(static_cast<int>(s));
      }
    while (!queue.empty()) {
      int s = queue.front();
      queue.pop_front();
      for (int t : choosers[s]) {
        int held = matched_server[t];
        if (held >= 0 && held != s && dist[held] < 0) {
          dist[held] = dist[s] + 1;
          queue.push_back(held);
        }
      }
    }
    return dist;
  };

  for (std::size_t t = 0; t < n; ++t) {
    auto dist = alternating_dists();
    // two reachable servers of maximum distance, ties to the smaller id
    int best = -1, second = -1;
    for (std::size_t s = 0; s < n; ++s) {
      if (dist[s] < 0) continue;
      if (best < 0 || dist[s] > dist[best])
        second = best, best = static_cast<int>(s);
      else if (second < 0 || dist[s] > dist[second])
        second = static_cast<int>(s);
    }
    require(best >= 0, "gen_adversarial: no augmenting choice left");
    std::array<int, 2> choice{best, second};
    if (second >= 0 && second < best) std::swap(choice[0], choice[1]);
    nb.push_back(choice);

    // Mirror of the maintainer's BFS over edge ids. Node encoding: edge of
    // part p toward choice slot k has id 2p + k.
    struct QItem {
      int part, slot;
      bool in_matching;
    };
    std::vector<std::array<int, 2>> parent_edge(t + 1, {-3, -3});  // -3 unvisited, -2 source
    std::deque<QItem> queue;
    for (int k = 0; k < 2; ++k) {
      if (nb[t][k] < 0) continue;
      parent_edge[t][k] = -2;
      queue.push_back({static_cast<int>(t), k, false});
    }
    int found_part = -1, found_slot = -1;
    while (!queue.empty()) {
      auto [p, k, in_matching] = queue.front();
      queue.pop_front();
      int server = nb[p][k];
      if (!in_matching) {
        if (occupant_server[server] < 0) {
          found_part = p;
          found_slot = k;
          break;
        }
        int q = occupant_server[server];
        int qk = nb[q][0] == server ? 0 : 1;
        if (parent_edge[q][qk] == -3) {
          parent_edge[q][qk] = 2 * p + k;
          queue.push_back({q, qk, true});
        }
      } else {
        int other = k == 0 ? 1 : 0;
        if (nb[p][other] >= 0 && parent_edge[p][other] == -3) {
          parent_edge[p][other] = 2 * p + k;
          queue.push_back({p, other, false});
        }
      }
    }
    require(found_part >= 0, "gen_adversarial: simulation lost an augmenting path");

    // Apply the augmentation along parent pointers.
    std::size_t length = 0;
    int cur = 2 * found_part + found_slot;
    bool add = true;
    while (cur != -2) {
      int p = cur / 2, k = cur % 2;
      if (add) {
        matched_server[p] = nb[p][k];
        occupant_server[nb[p][k]] = p;
      }
      // removals are overwritten by the next addition; explicit handling below
      ++length;
      int nxt = parent_edge[p][k];
      if (nxt >= 0 && !add) {
        // moving down the path: nothing to do here
      }
      add = !add;
      cur = nxt;
    }
    forced_lengths.push_back(length);
  }

  // Emit the instance: element ids 2t, 2t+1 per part (singleton parts use one).
  std::vector<std::vector<ElementId>> parts(n);
  std::vector<std::vector<ElementId>> blocks(n);
  std::vector<ElementId> planted;  // filled from the final matching
  ElementId next = 0;
  std::vector<std::array<int, 2>> edge_id(n, {-1, -1});
  for (std::size_t t = 0; t < n; ++t) {
    for (int k = 0; k < 2; ++k) {
      if (nb[t][k] < 0) continue;
      edge_id[t][k] = static_cast<int>(next);
      parts[t].push_back(next);
      blocks[nb[t][k]].push_back(next);
      ++next;
    }
  }
  for (std::size_t t = 0; t < n; ++t) {
    int s = matched_server[t];
    int k = nb[t][0] == s ? 0 : 1;
    planted.push_back(static_cast<ElementId>(edge_id[t][k]));
  }
  std::sort(planted.begin(), planted.end());

  InstanceFile f;
  f.matroid = MatroidDescription::partition(next, blocks, std::vector<int>(n, 1));
  f.parts = parts;
  f.metadata = base_metadata("adversarial", 0, json{{"n", n}});
  f.metadata["planted"] = planted;
  f.metadata["forced_lengths"] = forced_lengths;
  std::size_t total = 0;
  for (std::size_t L : forced_lengths) total += L;
  f.metadata["forced_total"] = total;
  return f;
}

InstanceFile lift_partitioning(const MatroidDescription& m, int colors,
                               std::vector<ElementId> order) {
  require(colors >= 1, "lift_partitioning: need at least one color");
  const std::size_t e0 = m.ground_size();
  if (order.empty()) {
    order.resize(e0);
    std::iota(order.begin(), order.end(), 0u);
  }
  require(order.size() == e0, "lift_partitioning: order must list every element once");

  std::vector<MatroidDescription> copies(static_cast<std::size_t>(colors), m);
  std::vector<std::vector<ElementId>> parts;
  for (ElementId e : order) {
    require(e < e0, "lift_partitioning: order entry out of range");
    std::vector<ElementId> part;
    for (int c = 0; c < colors; ++c)
      part.push_back(static_cast<ElementId>(c * e0 + e));
    parts.push_back(std::move(part));
  }

  InstanceFile f;
  f.matroid = MatroidDescription::direct_sum(copies);
  f.parts = parts;
  f.metadata = base_metadata("lift_partitioning", 0,
                             json{{"colors", colors}, {"base_family", m.family()}});
  return f;
}

InstanceFile gen_small_random(std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = 4 + rng.below(13);  // |E| in 4..16
  MatroidDescription desc;
  switch (rng.below(6)) {
    case 0:
      desc = MatroidDescription::uniform(n, rng.range(1, static_cast<int>(n)));
      break;
    case 1: {
      std::vector<ElementId> ids(n);
      std::iota(ids.begin(), ids.end(), 0u);
      rng.shuffle(ids);
      std::size_t nb = 1 + rng.below(n);
      std::vector<std::vector<ElementId>> blocks(nb);
      for (ElementId e : ids) blocks[rng.below(nb)].push_back(e);
      blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                                  [](const auto& b) { return b.empty(); }),
                   blocks.end());
      std::vector<int> caps;
      for (const auto& b : blocks) caps.push_back(rng.range(1, static_cast<int>(b.size())));
      for (auto& b : blocks) std::sort(b.begin(), b.end());
      desc = MatroidDescription::partition(n, blocks, caps);
      break;
    }
    case 2: {
      std::vector<LaminarSet> sets;
      std::function<void(std::size_t, std::size_t)> split = [&](std::size_t lo, std::size_t hi) {
        if (hi <= lo) return;
        LaminarSet ls;
        for (std::size_t e = lo; e < hi; ++e) ls.elements.push_back(static_cast<ElementId>(e));
        ls.capacity = rng.range(1, static_cast<int>(hi - lo));
        sets.push_back(ls);
        if (hi - lo >= 2 && rng.chance(0.6)) {
          std::size_t mid = lo + 1 + rng.below(hi - lo - 1);
          split(lo, mid);
          split(mid, hi);
        }
      };
      split(0, n);
      desc = MatroidDescription::laminar(n, sets);
      break;
    }
    case 3: {
      std::size_t nv = 2 + rng.below(n);
      std::vector<std::pair<int, int>> edges;
      for (std::size_t e = 0; e < n; ++e)
        edges.push_back({static_cast<int>(rng.below(nv)), static_cast<int>(rng.below(nv))});
      desc = MatroidDescription::graphic(nv, edges);
      break;
    }
    case 4: {
      std::size_t nr = 2 + rng.below(n);
      std::vector<std::vector<int>> adj(n);
      for (std::size_t e = 0; e < n; ++e) {
        int deg = rng.range(1, 3);
        for (int d = 0; d < deg; ++d) {
          int r = static_cast<int>(rng.below(nr));
          if (std::find(adj[e].begin(), adj[e].end(), r) == adj[e].end())
            adj[e].push_back(r);
        }
        std::sort(adj[e].begin(), adj[e].end());
      }
      desc = MatroidDescription::transversal(n, nr, adj);
      break;
    }
    default: {
      std::size_t nv = n + 2 + rng.below(4);
      std::vector<std::pair<int, int>> arcs;
      std::size_t narcs = nv + rng.below(nv);
      for (std::size_t a = 0; a < narcs; ++a)
        arcs.push_back({static_cast<int>(rng.below(nv)), static_cast<int>(rng.below(nv))});
      std::vector<int> sources;
      for (std::size_t v = 0; v < nv; ++v)
        if (rng.chance(0.3)) sources.push_back(static_cast<int>(v));
      if (sources.empty()) sources.push_back(0);
      std::vector<int> gv(n);
      std::iota(gv.begin(), gv.end(), static_cast<int>(nv - n));
      desc = MatroidDescription::gammoid(nv, arcs, sources, gv);
      break;
    }
  }

  std::size_t nparts = 1 + rng.below(std::min<std::size_t>(8, n));
  std::vector<ElementId> ids(n);
  std::iota(ids.begin(), ids.end(), 0u);
  rng.shuffle(ids);
  std::vector<std::vector<ElementId>> parts(nparts);
  for (std::size_t i = 0; i < n; ++i)
    parts[i < nparts ? i : rng.below(nparts)].push_back(ids[i]);
  for (auto& p : parts) std::sort(p.begin(), p.end());

  InstanceFile f;
  f.matroid = desc;
  f.parts = parts;
  f.metadata = base_metadata("small_random", seed, json{{"E", n}, {"parts", nparts}});
  return f;
}

InstanceFile generate_named(const std::string& family, std::size_t n, std::uint64_t seed) {
  if (family == "random_bipartite") {
    std::size_t m = n + 1 + n / 4;
    double density = std::min(1.0, 3.0 / static_cast<double>(m));
    return gen_random_bipartite(n, m, density, seed);
  }
  if (family == "laminar") return gen_laminar(n, seed);
  if (family == "graphic") return gen_graphic(n, seed);
  if (family == "transversal") return gen_transversal(n, seed);
  if (family == "gammoid") return gen_gammoid(n, seed);
  if (family == "adversarial") return gen_adversarial(n);
  if (family == "small_random") return gen_small_random(seed);
  throw std::invalid_argument("unknown generator '" + family + "'");
}

}  // namespace misap
