#include "misap/matroid.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>
#include <utility>

namespace misap {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

int Matroid::rank(const ElementSet& s) const {
  require(s.universe() == universe_, "Matroid::rank: universe mismatch");
  require(s.is_subset_of(ground_), "Matroid::rank: query outside ground set");
  if (!cache_ranks_) return rank_impl(s);
  {
    std::lock_guard<std::mutex> lk(cache_mu_);
    auto it = rank_cache_.find(s);
    if (it != rank_cache_.end()) return it->second;
  }
  int r = rank_impl(s);
  std::lock_guard<std::mutex> lk(cache_mu_);
  rank_cache_.emplace(s, r);
  return r;
}

bool Matroid::extends(ElementId e, const ElementSet& independent_set) const {
  return rank(independent_set.plus(e)) ==
         static_cast<int>(independent_set.count()) + 1;
}

ElementSet Matroid::span(const ElementSet& s) const {
  int r = rank(s);
  ElementSet out = s;
  ground_.for_each([&](ElementId e) {
    if (!s.test(e) && rank(s.plus(e)) == r) out.insert(e);
  });
  return out;
}

ElementSet Matroid::circuit_in(ElementId e, const ElementSet& independent_set) const {
  require(independent_set.universe() == universe_, "circuit_in: universe mismatch");
  require(ground_.test(e), "circuit_in: element outside ground set");
  require(!independent_set.test(e), "circuit_in: element already in the set");
  require(known_independent(independent_set), "circuit_in: set is dependent");
  if (extends(e, independent_set)) return ElementSet(universe_);
  return circuit_impl(e, independent_set);
}

bool Matroid::known_independent(const ElementSet& s) const {
  {
    std::lock_guard<std::mutex> lk(cache_mu_);
    if (have_last_indep_ && last_indep_ == s) return true;
  }
  if (!independent(s)) return false;
  std::lock_guard<std::mutex> lk(cache_mu_);
  have_last_indep_ = true;
  last_indep_ = s;
  return true;
}

ElementSet Matroid::circuit_impl(ElementId e, const ElementSet& independent_set) const {
  ElementSet c(universe_);
  const ElementSet with_e = independent_set.plus(e);
  const int target = static_cast<int>(independent_set.count());
  independent_set.for_each([&](ElementId y) {
    if (rank(with_e.minus(y)) == target) c.insert(y);
  });
  return c;
}

// --- Uniform -----------------------------------------------------------------

namespace {

class UniformMatroid final : public Matroid {
public:
  UniformMatroid(std::size_t n, int k) : Matroid(n, false), k_(k) {
    require(k >= 0, "uniform matroid: negative rank bound");
  }

  bool extends(ElementId, const ElementSet& independent_set) const override {
    return static_cast<int>(independent_set.count()) < k_;
  }

protected:
  int rank_impl(const ElementSet& s) const override {
    return std::min(static_cast<int>(s.count()), k_);
  }

  ElementSet circuit_impl(ElementId, const ElementSet& independent_set) const override {
    return independent_set;  // set is at the rank bound; any member can swap out
  }

private:
  int k_;
};

// --- Partition ---------------------------------------------------------------

class PartitionMatroid final : public Matroid {
public:
  PartitionMatroid(std::size_t n, const std::vector<std::vector<ElementId>>& blocks,
                   const std::vector<int>& capacities)
      : Matroid(n, false), caps_(capacities) {
    require(blocks.size() == capacities.size(),
            "partition matroid: one capacity per block");
    block_of_.assign(n, -1);
    block_sets_.reserve(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      require(caps_[b] >= 0, "partition matroid: negative capacity");
      ElementSet bs(n);
      for (ElementId e : blocks[b]) {
        require(e < n, "partition matroid: element out of range");
        require(block_of_[e] < 0, "partition matroid: element in two blocks");
        block_of_[e] = static_cast<int>(b);
        bs.insert(e);
      }
      block_sets_.push_back(std::move(bs));
    }
    for (std::size_t e = 0; e < n; ++e)
      require(block_of_[e] >= 0, "partition matroid: blocks must cover the ground set");
  }

  bool extends(ElementId e, const ElementSet& independent_set) const override {
    int b = block_of_[e];
    return static_cast<int>((independent_set & block_sets_[b]).count()) < caps_[b];
  }

protected:
  int rank_impl(const ElementSet& s) const override {
    struct Scratch {
      std::vector<int> cnt, stamp;
      int cur = 0;
    };
    static thread_local Scratch sc;
    if (sc.cnt.size() < caps_.size()) {
      sc.cnt.resize(caps_.size(), 0);
      sc.stamp.resize(caps_.size(), 0);
    }
    ++sc.cur;
    int r = 0;
    s.for_each([&](ElementId e) {
      int b = block_of_[e];
      if (sc.stamp[b] != sc.cur) {
        sc.stamp[b] = sc.cur;
        sc.cnt[b] = 0;
      }
      if (sc.cnt[b] < caps_[b]) {
        ++sc.cnt[b];
        ++r;
      }
    });
    return r;
  }

  ElementSet circuit_impl(ElementId e, const ElementSet& independent_set) const override {
    return independent_set & block_sets_[block_of_[e]];
  }

private:
  std::vector<int> block_of_;
  std::vector<int> caps_;
  std::vector<ElementSet> block_sets_;
};

// --- Laminar -----------------------------------------------------------------

class LaminarMatroid final : public Matroid {
public:
  LaminarMatroid(std::size_t n, const std::vector<LaminarSet>& sets)
      : Matroid(n, false), covered_(n) {
    for (const auto& ls : sets) {
      require(ls.capacity >= 0, "laminar matroid: negative capacity");
      ElementSet es(n);
      for (ElementId e : ls.elements) {
        require(e < n, "laminar matroid: element out of range");
        es.insert(e);
      }
      node_set_.push_back(std::move(es));
      cap_.push_back(ls.capacity);
      covered_ |= node_set_.back();
    }
    const std::size_t k = node_set_.size();
    order_.resize(k);
    for (std::size_t i = 0; i < k; ++i) order_[i] = i;
    std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return node_set_[a].count() < node_set_[b].count();
    });
    // Parent = smallest strict superset; also validates laminarity.
    parent_.assign(k, -1);
    for (std::size_t ia = 0; ia < k; ++ia) {
      std::size_t a = order_[ia];
      for (std::size_t ib = ia + 1; ib < k; ++ib) {
        std::size_t b = order_[ib];
        if (node_set_[a].is_subset_of(node_set_[b])) {
          if (node_set_[a] == node_set_[b])
            require(false, "laminar matroid: duplicate set");
          parent_[a] = static_cast<int>(b);
          break;
        }
        require(!node_set_[a].intersects(node_set_[b]),
                "laminar matroid: family is not laminar");
      }
    }
    own_set_ = node_set_;
    for (std::size_t v = 0; v < k; ++v)
      if (parent_[v] >= 0) own_set_[parent_[v]] -= node_set_[v];
    leaf_of_.assign(n, -1);
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t v = order_[i];
      node_set_[v].for_each([&](ElementId e) {
        if (leaf_of_[e] < 0) leaf_of_[e] = static_cast<int>(v);
      });
    }
  }

  bool extends(ElementId e, const ElementSet& independent_set) const override {
    for (int v = leaf_of_[e]; v >= 0; v = parent_[v]) {
      if (static_cast<int>((independent_set & node_set_[v]).count()) >= cap_[v])
        return false;
    }
    return true;
  }

protected:
  int rank_impl(const ElementSet& s) const override {
    std::vector<int> contrib(node_set_.size(), 0);
    int r = static_cast<int>((s - covered_).count());
    for (std::size_t v : order_) {
      int c = contrib[v] + static_cast<int>((s & own_set_[v]).count());
      c = std::min(c, cap_[v]);
      if (parent_[v] >= 0)
        contrib[parent_[v]] += c;
      else
        r += c;
    }
    return r;
  }

  ElementSet circuit_impl(ElementId e, const ElementSet& independent_set) const override {
    // Smallest capacity-tight set containing e; every member can swap out.
    for (int v = leaf_of_[e]; v >= 0; v = parent_[v]) {
      ElementSet inside = independent_set & node_set_[v];
      if (static_cast<int>(inside.count()) >= cap_[v]) return inside;
    }
    return ElementSet(universe());  // unreachable when the add is dependent
  }

private:
  std::vector<ElementSet> node_set_, own_set_;
  std::vector<int> cap_, parent_, leaf_of_;
  std::vector<std::size_t> order_;
  ElementSet covered_;
};

// --- Graphic -----------------------------------------------------------------

class GraphicMatroid final : public Matroid {
public:
  GraphicMatroid(std::size_t num_vertices, const std::vector<std::pair<int, int>>& edges)
      : Matroid(edges.size(), false), nv_(num_vertices), edges_(edges) {
    for (auto [u, v] : edges_) {
      require(u >= 0 && v >= 0 && u < static_cast<int>(nv_) && v < static_cast<int>(nv_),
              "graphic matroid: edge endpoint out of range");
    }
  }

  bool extends(ElementId e, const ElementSet& independent_set) const override {
    std::lock_guard<std::mutex> lk(mu_);
    prepare(independent_set);
    auto [u, v] = edges_[e];
    if (u == v) return false;
    return comp_[u] == 0 || comp_[u] != comp_[v];
  }

protected:
  int rank_impl(const ElementSet& s) const override {
    struct Scratch {
      std::vector<int> parent, stamp;
      int cur = 0;
    };
    static thread_local Scratch sc;
    if (sc.parent.size() < nv_) {
      sc.parent.resize(nv_);
      sc.stamp.resize(nv_, 0);
    }
    ++sc.cur;
    auto find = [&](int x) {
      if (sc.stamp[x] != sc.cur) {
        sc.stamp[x] = sc.cur;
        sc.parent[x] = x;
      }
      while (sc.parent[x] != x) {
        sc.parent[x] = sc.parent[sc.parent[x]];
        x = sc.parent[x];
      }
      return x;
    };
    int r = 0;
    s.for_each([&](ElementId e) {
      auto [u, v] = edges_[e];
      int ru = find(u), rv = find(v);
      if (ru != rv) {
        sc.parent[ru] = rv;
        ++r;
      }
    });
    return r;
  }

  ElementSet circuit_impl(ElementId e, const ElementSet& independent_set) const override {
    std::lock_guard<std::mutex> lk(mu_);
    prepare(independent_set);
    auto [src, dst] = edges_[e];
    ElementSet c(universe());
    if (src == dst) return c;  // self-loop: no forest edge helps
    // Walk the unique forest path src -> dst.
    std::vector<int> prev_vertex(nv_, -1);
    std::vector<ElementId> prev_edge(nv_);
    std::deque<int> queue{src};
    prev_vertex[src] = src;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      if (x == dst) break;
      for (auto [y, ed] : adj_[x]) {
        if (prev_vertex[y] < 0) {
          prev_vertex[y] = x;
          prev_edge[y] = ed;
          queue.push_back(y);
        }
      }
    }
    for (int x = dst; x != src; x = prev_vertex[x]) c.insert(prev_edge[x]);
    return c;
  }

private:
  // Rebuilds component labels and forest adjacency for a new independent set;
  // keyed on the set so repeated queries against one set are cheap.
  void prepare(const ElementSet& independent_set) const {
    if (prepared_ && key_ == independent_set) return;
    key_ = independent_set;
    prepared_ = true;
    comp_.assign(nv_, 0);
    adj_.assign(nv_, {});
    independent_set.for_each([&](ElementId e) {
      auto [u, v] = edges_[e];
      adj_[u].push_back({v, e});
      adj_[v].push_back({u, e});
    });
    int next = 0;
    std::deque<int> queue;
    for (std::size_t s = 0; s < nv_; ++s) {
      if (comp_[s] != 0 || adj_[s].empty()) continue;
      comp_[s] = ++next;
      queue.push_back(static_cast<int>(s));
      while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (auto [y, ed] : adj_[x]) {
          (void)ed;
          if (comp_[y] == 0) {
            comp_[y] = next;
            queue.push_back(y);
          }
        }
      }
    }
  }

  std::size_t nv_;
  std::vector<std::pair<int, int>> edges_;
  mutable std::mutex mu_;
  mutable bool prepared_ = false;
  mutable ElementSet key_;
  mutable std::vector<int> comp_;
  mutable std::vector<std::vector<std::pair<int, ElementId>>> adj_;
};

// --- Transversal -------------------------------------------------------------

class TransversalMatroid final : public Matroid {
public:
  TransversalMatroid(std::size_t n, std::size_t num_right,
                     const std::vector<std::vector<int>>& adj)
      : Matroid(n, true), nr_(num_right), adj_(adj) {
    require(adj_.size() == n, "transversal matroid: one adjacency list per element");
    for (const auto& row : adj_)
      for (int r : row)
        require(r >= 0 && r < static_cast<int>(nr_),
                "transversal matroid: right vertex out of range");
  }

  bool extends(ElementId e, const ElementSet& independent_set) const override {
    std::lock_guard<std::mutex> lk(mu_);
    prepare(independent_set);
    std::vector<std::pair<int, int>> flips;
    bool ok = try_augment(static_cast<int>(e), flips);
    for (auto [r, prev] : flips) {  // roll back; the oracle is read-only
      match_right_[r] = prev;
    }
    return ok;
  }

protected:
  int rank_impl(const ElementSet& s) const override {
    std::vector<int> mr(nr_, -1);
    std::vector<int> seen(nr_, 0);
    int stamp = 0, r = 0;
    std::function<bool(int)> dfs = [&](int left) {
      for (int j : adj_[left]) {
        if (seen[j] == stamp) continue;
        seen[j] = stamp;
        if (mr[j] < 0 || dfs(mr[j])) {
          mr[j] = left;
          return true;
        }
      }
      return false;
    };
    s.for_each([&](ElementId e) {
      ++stamp;
      if (dfs(static_cast<int>(e))) ++r;
    });
    return r;
  }

  ElementSet circuit_impl(ElementId e, const ElementSet& independent_set) const override {
    std::lock_guard<std::mutex> lk(mu_);
    prepare(independent_set);
    std::vector<std::pair<int, int>> flips;
    bool ok = try_augment(static_cast<int>(e), flips);
    ElementSet c(universe());
    if (ok) {
      for (auto [r, prev] : flips) match_right_[r] = prev;
      return c;  // independent after all; callers guard this
    }
    // The failed search visited exactly the alternating-reachable right
    // vertices; their partners are the swappable members.
    for (std::size_t j = 0; j < nr_; ++j)
      if (seen_[j] == stamp_ && match_right_[j] >= 0)
        c.insert(static_cast<ElementId>(match_right_[j]));
    return c;
  }

private:
  void prepare(const ElementSet& independent_set) const {
    if (prepared_ && key_ == independent_set) return;
    key_ = independent_set;
    prepared_ = true;
    match_right_.assign(nr_, -1);
    seen_.assign(nr_, 0);
    stamp_ = 0;
    independent_set.for_each([&](ElementId e) {
      std::vector<std::pair<int, int>> flips;
      bool ok = try_augment(static_cast<int>(e), flips);
      if (!ok) throw std::invalid_argument("transversal matroid: set is dependent");
    });
  }

  bool try_augment(int left, std::vector<std::pair<int, int>>& flips) const {
    ++stamp_;
    return augment_dfs(left, flips);
  }

  bool augment_dfs(int left, std::vector<std::pair<int, int>>& flips) const {
    for (int j : adj_[left]) {
      if (seen_[j] == stamp_) continue;
      seen_[j] = stamp_;
      if (match_right_[j] < 0 || augment_dfs(match_right_[j], flips)) {
        flips.push_back({j, match_right_[j]});
        match_right_[j] = left;
        return true;
      }
    }
    return false;
  }

  std::size_t nr_;
  std::vector<std::vector<int>> adj_;
  mutable std::mutex mu_;
  mutable bool prepared_ = false;
  mutable ElementSet key_;
  mutable std::vector<int> match_right_;
  mutable std::vector<int> seen_;
  mutable int stamp_ = 0;
};

// --- Gammoid -----------------------------------------------------------------

class Gammoid final : public Matroid {
public:
  Gammoid(std::size_t num_vertices, const std::vector<std::pair<int, int>>& arcs,
          const std::vector<int>& sources, const std::vector<int>& ground_vertices)
      : Matroid(ground_vertices.size(), true),
        nv_(num_vertices),
        arcs_(arcs),
        sources_(sources),
        gv_(ground_vertices) {
    auto valid = [&](int v) { return v >= 0 && v < static_cast<int>(nv_); };
    for (auto [u, v] : arcs_) require(valid(u) && valid(v), "gammoid: arc out of range");
    for (int s : sources_) require(valid(s), "gammoid: source out of range");
    std::vector<bool> used(nv_, false);
    for (int v : gv_) {
      require(valid(v), "gammoid: ground vertex out of range");
      require(!used[v], "gammoid: duplicate ground vertex");
      used[v] = true;
    }
  }

protected:
  // Max number of vertex-disjoint source->S paths, as a unit-capacity flow on
  // the split graph (v_in -> v_out).
  int rank_impl(const ElementSet& s) const override {
    const int N = 2 * static_cast<int>(nv_) + 2;
    const int src = 2 * static_cast<int>(nv_), snk = src + 1;
    auto in = [](int v) { return 2 * v; };
    auto out = [](int v) { return 2 * v + 1; };

    struct Edge {
      int to, cap;
      std::size_t rev;
    };
    std::vector<std::vector<Edge>> g(N);
    auto add_edge = [&](int a, int b) {
      g[a].push_back({b, 1, g[b].size()});
      g[b].push_back({a, 0, g[a].size() - 1});
    };
    for (std::size_t v = 0; v < nv_; ++v) add_edge(in(static_cast<int>(v)), out(static_cast<int>(v)));
    for (auto [u, v] : arcs_) add_edge(out(u), in(v));
    for (int sv : sources_) add_edge(src, in(sv));
    s.for_each([&](ElementId e) { add_edge(out(gv_[e]), snk); });

    int flow = 0;
    while (true) {
      std::vector<std::pair<int, std::size_t>> prev(N, {-1, 0});
      std::deque<int> queue{src};
      prev[src] = {src, 0};
      while (!queue.empty() && prev[snk].first < 0) {
        int x = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < g[x].size(); ++i) {
          const Edge& ed = g[x][i];
          if (ed.cap > 0 && prev[ed.to].first < 0) {
            prev[ed.to] = {x, i};
            queue.push_back(ed.to);
          }
        }
      }
      if (prev[snk].first < 0) break;
      for (int x = snk; x != src;) {
        auto [p, i] = prev[x];
        g[p][i].cap -= 1;
        g[x][g[p][i].rev].cap += 1;
        x = p;
      }
      ++flow;
    }
    return flow;
  }

private:
  std::size_t nv_;
  std::vector<std::pair<int, int>> arcs_;
  std::vector<int> sources_;
  std::vector<int> gv_;
};

// --- Direct sum --------------------------------------------------------------

class DirectSumMatroid final : public Matroid {
public:
  explicit DirectSumMatroid(std::vector<MatroidPtr> components, std::size_t total,
                            ElementSet ground)
      : Matroid(total, std::move(ground), false), comps_(std::move(components)) {
    std::size_t off = 0;
    for (const auto& c : comps_) {
      offset_.push_back(off);
      off += c->universe();
    }
  }

  bool extends(ElementId e, const ElementSet& independent_set) const override {
    std::size_t c = comp_of(e);
    return comps_[c]->extends(static_cast<ElementId>(e - offset_[c]),
                              slice(independent_set, c));
  }

protected:
  int rank_impl(const ElementSet& s) const override {
    int r = 0;
    for (std::size_t c = 0; c < comps_.size(); ++c) r += comps_[c]->rank(slice(s, c));
    return r;
  }

  ElementSet circuit_impl(ElementId e, const ElementSet& independent_set) const override {
    std::size_t c = comp_of(e);
    ElementSet local = comps_[c]->circuit_in(static_cast<ElementId>(e - offset_[c]),
                                             slice(independent_set, c));
    ElementSet out(universe());
    local.for_each([&](ElementId x) {
      out.insert(static_cast<ElementId>(x + offset_[c]));
    });
    return out;
  }

private:
  std::size_t comp_of(ElementId e) const {
    std::size_t c = comps_.size() - 1;
    while (offset_[c] > e) --c;
    return c;
  }

  ElementSet slice(const ElementSet& s, std::size_t c) const {
    ElementSet local(comps_[c]->universe());
    std::size_t lo = offset_[c], hi = lo + comps_[c]->universe();
    s.for_each([&](ElementId e) {
      if (e >= lo && e < hi) local.insert(static_cast<ElementId>(e - lo));
    });
    return local;
  }

  std::vector<MatroidPtr> comps_;
  std::vector<std::size_t> offset_;
};

// --- Independence-predicate matroid ------------------------------------------

class PredicateMatroid final : public Matroid {
public:
  PredicateMatroid(std::size_t n, std::function<bool(const ElementSet&)> indep)
      : Matroid(n, true), indep_(std::move(indep)) {}

protected:
  int rank_impl(const ElementSet& s) const override {
    ElementSet t(universe());
    int r = 0;
    s.for_each([&](ElementId e) {
      ElementSet cand = t.plus(e);
      if (indep_(cand)) {
        t = std::move(cand);
        ++r;
      }
    });
    return r;
  }

private:
  std::function<bool(const ElementSet&)> indep_;
};

// --- Dense reindexed minor ------------------------------------------------------

class ReindexedMinor final : public Matroid {
public:
  ReindexedMinor(MatroidPtr base, std::vector<ElementId> keep, ElementSet contracted)
      : Matroid(keep.size(), false),
        base_(std::move(base)),
        keep_(std::move(keep)),
        contracted_(std::move(contracted)),
        contracted_rank_(base_->rank(contracted_)) {}

protected:
  int rank_impl(const ElementSet& s) const override {
    ElementSet lifted = contracted_;
    s.for_each([&](ElementId e) { lifted.insert(keep_[e]); });
    return base_->rank(lifted) - contracted_rank_;
  }

private:
  MatroidPtr base_;
  std::vector<ElementId> keep_;
  ElementSet contracted_;
  int contracted_rank_;
};

// --- Restriction/contraction view ---------------------------------------------

class MinorView final : public Matroid {
public:
  MinorView(MatroidPtr root, ElementSet contracted, ElementSet ground)
      : Matroid(root->universe(), std::move(ground), false),
        root_(std::move(root)),
        contracted_(std::move(contracted)),
        contracted_rank_(root_->rank(contracted_)) {}

  const MatroidPtr& root() const { return root_; }
  const ElementSet& contracted() const { return contracted_; }

protected:
  int rank_impl(const ElementSet& s) const override {
    return root_->rank(s | contracted_) - contracted_rank_;
  }

private:
  MatroidPtr root_;
  ElementSet contracted_;
  int contracted_rank_;
};

}  // namespace

// --- Factories ----------------------------------------------------------------

MatroidPtr make_free_matroid(std::size_t n) {
  return std::make_shared<UniformMatroid>(n, static_cast<int>(n));
}

MatroidPtr make_uniform_matroid(std::size_t n, int k) {
  return std::make_shared<UniformMatroid>(n, k);
}

MatroidPtr make_partition_matroid(std::size_t n,
                                  const std::vector<std::vector<ElementId>>& blocks,
                                  const std::vector<int>& capacities) {
  return std::make_shared<PartitionMatroid>(n, blocks, capacities);
}

MatroidPtr make_laminar_matroid(std::size_t n, const std::vector<LaminarSet>& sets) {
  return std::make_shared<LaminarMatroid>(n, sets);
}

MatroidPtr make_graphic_matroid(std::size_t num_vertices,
                                const std::vector<std::pair<int, int>>& edges) {
  return std::make_shared<GraphicMatroid>(num_vertices, edges);
}

MatroidPtr make_transversal_matroid(std::size_t n, std::size_t num_right,
                                    const std::vector<std::vector<int>>& adj) {
  return std::make_shared<TransversalMatroid>(n, num_right, adj);
}

MatroidPtr make_gammoid(std::size_t num_vertices,
                        const std::vector<std::pair<int, int>>& arcs,
                        const std::vector<int>& sources,
                        const std::vector<int>& ground_vertices) {
  return std::make_shared<Gammoid>(num_vertices, arcs, sources, ground_vertices);
}

MatroidPtr make_direct_sum(const std::vector<MatroidPtr>& components) {
  std::size_t total = 0;
  for (const auto& c : components) {
    require(c != nullptr, "direct sum: null component");
    total += c->universe();
  }
  ElementSet ground(total);
  std::size_t off = 0;
  for (const auto& c : components) {
    c->ground().for_each([&](ElementId e) {
      ground.insert(static_cast<ElementId>(e + off));
    });
    off += c->universe();
  }
  return std::make_shared<DirectSumMatroid>(components, total, std::move(ground));
}

MatroidPtr make_predicate_matroid(std::size_t n,
                                  std::function<bool(const ElementSet&)> independent) {
  return std::make_shared<PredicateMatroid>(n, std::move(independent));
}

MatroidPtr make_reindexed_minor(const MatroidPtr& base,
                                const std::vector<ElementId>& keep,
                                const ElementSet& contracted) {
  require(contracted.is_subset_of(base->ground()),
          "reindexed minor: contracted elements outside ground set");
  for (std::size_t i = 0; i < keep.size(); ++i) {
    require(base->ground().test(keep[i]), "reindexed minor: element outside ground set");
    require(!contracted.test(keep[i]), "reindexed minor: element both kept and contracted");
    require(i == 0 || keep[i - 1] < keep[i], "reindexed minor: keep must be increasing");
  }
  return std::make_shared<ReindexedMinor>(base, keep, contracted);
}

MatroidPtr restrict_view(const MatroidPtr& base, const ElementSet& keep) {
  require(keep.is_subset_of(base->ground()), "restrict: elements outside ground set");
  if (auto mv = std::dynamic_pointer_cast<const MinorView>(base))
    return std::make_shared<MinorView>(mv->root(), mv->contracted(), keep);
  return std::make_shared<MinorView>(base, ElementSet(base->universe()), keep);
}

MatroidPtr contract_view(const MatroidPtr& base, const ElementSet& out) {
  require(out.is_subset_of(base->ground()), "contract: elements outside ground set");
  if (auto mv = std::dynamic_pointer_cast<const MinorView>(base))
    return std::make_shared<MinorView>(mv->root(), mv->contracted() | out,
                                       mv->ground() - out);
  return std::make_shared<MinorView>(base, out, base->ground() - out);
}

}  // namespace misap
