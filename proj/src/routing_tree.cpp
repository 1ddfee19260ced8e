#include <algorithm>
#include <deque>

#include "matchnet/error.hpp"
#include "matchnet/routing.hpp"
#include "routing_internal.hpp"

namespace matchnet {

namespace {

class TreeRouter {
 public:
  TreeRouter(const Graph& tree, std::span<const int> dest)
      : tree_(tree), dest_(dest.begin(), dest.end()), at_(identity_permutation(tree.size())),
        in_set_(static_cast<std::size_t>(tree.size()), 0), region_(static_cast<std::size_t>(tree.size()), 0) {}

  std::vector<Stage> run() {
    std::vector<Vertex> all(static_cast<std::size_t>(tree_.size()));
    for (Vertex v = 0; v < tree_.size(); ++v) all[v] = v;
    solve(all, 0);
    for (Vertex v = 0; v < tree_.size(); ++v)
      if (dest_[at_[v]] != v) throw InternalError("tree routing left a pebble misplaced");
    return std::move(stages_);
  }

 private:
  void emit(int t, const std::vector<Edge>& pairs) {
    if (static_cast<int>(stages_.size()) <= t) stages_.resize(static_cast<std::size_t>(t) + 1);
    for (const auto& [a, b] : pairs) {
      std::swap(at_[a], at_[b]);
      stages_[t].cmp.push_back({std::min(a, b), std::max(a, b), CmpKind::Swap});
    }
  }

  // Neighbors of v inside the current vertex set (ascending).
  std::vector<Vertex> inner(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex w : tree_.neighbors(v))
      if (in_set_[w]) out.push_back(w);
    return out;
  }

  // Routes the pebbles of `set` (closed under their destinations) starting at stage t0.
  // Returns the first free stage index afterwards.
  int solve(const std::vector<Vertex>& set, int t0) {
    if (set.size() <= 1) return t0;
    for (Vertex v : set) in_set_[v] = 1;
    const Vertex root = *std::min_element(set.begin(), set.end());
    bool is_path = true;
    for (Vertex v : set) is_path = is_path && inner(v).size() <= 2;
    return is_path ? solve_path(set, t0) : solve_split(set, root, t0);
  }

  int solve_path(const std::vector<Vertex>& set, int t0) {
    Vertex start = -1;
    for (Vertex v : set)
      if (inner(v).size() <= 1 && (start < 0 || v < start)) start = v;
    std::vector<Vertex> path{start};
    Vertex prev = -1;
    while (path.size() < set.size()) {
      for (Vertex w : inner(path.back())) {
        if (w != prev) {
          prev = path.back();
          path.push_back(w);
          break;
        }
      }
    }
    for (Vertex v : set) in_set_[v] = 0;
    std::vector<int> idx(static_cast<std::size_t>(tree_.size()), -1);
    for (std::size_t i = 0; i < path.size(); ++i) idx[path[i]] = static_cast<int>(i);
    std::vector<int> key(path.size());
    for (std::size_t i = 0; i < path.size(); ++i) key[i] = idx[dest_[at_[path[i]]]];
    const auto rounds = detail::odd_even_route(path, key);
    int t = t0;
    for (const auto& st : rounds) {
      std::vector<Edge> pairs;
      for (const auto& c : st.cmp) pairs.emplace_back(c.u, c.v);
      emit(t++, pairs);
    }
    return t;
  }

  int solve_split(const std::vector<Vertex>& set, Vertex root, int t0) {
    const int n = static_cast<int>(set.size());
    // BFS from root to get subtree sizes, then the first vertex whose largest piece is <= n/2.
    std::vector<Vertex> order{root};
    std::vector<Vertex> parent(static_cast<std::size_t>(tree_.size()), -2);
    parent[root] = -1;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (Vertex w : inner(order[i]))
        if (parent[w] == -2) {
          parent[w] = order[i];
          order.push_back(w);
        }
    std::vector<int> size(static_cast<std::size_t>(tree_.size()), 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
      if (parent[*it] >= 0) size[parent[*it]] += size[*it];
    Vertex centre = -1;
    for (Vertex u : order) {
      int largest = n - size[u];
      for (Vertex w : inner(u))
        if (parent[w] == u) largest = std::max(largest, size[w]);
      if (2 * largest <= n) {
        centre = u;
        break;
      }
    }

    // Components hanging off the centre, each explored top-down from its root.
    std::vector<std::vector<Vertex>> comps;
    std::vector<Vertex> cparent(static_cast<std::size_t>(tree_.size()), -1);
    region_[centre] = -1;
    for (Vertex r : inner(centre)) {
      const int id = static_cast<int>(comps.size());
      std::vector<Vertex> comp{r};
      cparent[r] = centre;
      region_[r] = id;
      for (std::size_t i = 0; i < comp.size(); ++i)
        for (Vertex w : inner(comp[i]))
          if (w != cparent[comp[i]]) {
            cparent[w] = comp[i];
            region_[w] = id;
            comp.push_back(w);
          }
      comps.push_back(std::move(comp));
    }
    for (Vertex v : set) in_set_[v] = 0;

    auto improper = [&](Vertex v) { return region_[dest_[at_[v]]] != region_[v]; };
    int t = t0;
    const int guard_limit = 10 * n + 100;
    for (int guard = 0;; ++guard) {
      bool any = false;
      for (Vertex v : set) any = any || improper(v);
      if (!any) break;
      if (guard > guard_limit) throw InternalError("tree routing exchange phase did not converge");

      std::vector<Edge> pairs;
      std::vector<char> used(static_cast<std::size_t>(tree_.size()), 0);
      const int target_region = region_[dest_[at_[centre]]];
      if (target_region >= 0) {
        const Vertex r = comps[target_region][0];
        if (improper(r)) pairs.emplace_back(centre, r);
      } else {
        int best = -1;
        int best_count = -1;
        for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
          if (!improper(comps[i][0])) continue;
          int count = 0;
          for (Vertex v : comps[i]) count += improper(v) ? 1 : 0;
          if (count > best_count) {
            best = i;
            best_count = count;
          }
        }
        if (best >= 0) pairs.emplace_back(centre, comps[best][0]);
      }
      for (const auto& [a, b] : pairs) used[a] = used[b] = 1;
      for (const auto& comp : comps) {
        for (Vertex u : comp) {
          if (used[u] || improper(u)) continue;
          for (Vertex w : tree_.neighbors(u)) {
            if (cparent[w] != u || used[w] || !improper(w)) continue;
            pairs.emplace_back(u, w);
            used[u] = used[w] = 1;
            break;
          }
        }
      }
      emit(t++, pairs);
    }

    int t_end = t;
    for (const auto& comp : comps) t_end = std::max(t_end, solve(comp, t));
    return t_end;
  }

  const Graph& tree_;
  Permutation dest_;
  std::vector<int> at_;  // at_[v] = pebble (its start vertex) currently at v
  std::vector<char> in_set_;
  std::vector<int> region_;
  std::vector<Stage> stages_;
};

}  // namespace

RoutingPlan route_tree(const Graph& tree, std::span<const int> pi) {
  if (!tree.is_tree()) throw StructureError("route_tree needs a tree");
  if (static_cast<int>(pi.size()) != tree.size() || !is_permutation(pi)) throw InputError("bad permutation");
  TreeRouter router(tree, pi);
  auto plan = detail::finish_plan(tree.size(), router.run());
  if (plan.realized != Permutation(pi.begin(), pi.end())) throw InternalError("tree plan is wrong");
  return plan;
}

RoutingPlan route_generic(const Graph& g, std::span<const int> pi) {
  return route_tree(spanning_tree(g), pi);
}

}  // namespace matchnet
