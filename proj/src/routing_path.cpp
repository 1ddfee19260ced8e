#include <algorithm>
#include <set>
#include <tuple>

#include "matchnet/error.hpp"
#include "matchnet/routing.hpp"
#include "routing_internal.hpp"

namespace matchnet {

namespace {

struct AllPairs {
  std::vector<std::vector<int>> dist;
  std::vector<std::vector<Vertex>> toward;  // toward[u][v] = next hop from v toward u

  explicit AllPairs(const Graph& g) {
    for (Vertex u = 0; u < g.size(); ++u) {
      dist.push_back(bfs_distances(g, u));
      toward.push_back(bfs_parents(g, u));
    }
  }
  int d(Vertex a, Vertex b) const { return dist[a][b]; }
};

// Farthest remaining source takes its closest remaining target.
std::vector<Vertex> farthest_first(const AllPairs& ap, std::span<const Vertex> sources,
                                   std::span<const Vertex> targets, int n) {
  std::vector<Vertex> assigned(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> rem_s(sources.begin(), sources.end());
  std::set<Vertex> rem_t(targets.begin(), targets.end());
  while (!rem_s.empty()) {
    std::size_t best_i = 0;
    Vertex best_t = -1;
    int best_d = -1;
    for (std::size_t i = 0; i < rem_s.size(); ++i) {
      const Vertex v = rem_s[i];
      Vertex near = -1;
      for (Vertex t : rem_t)
        if (near < 0 || ap.d(v, t) < ap.d(v, near)) near = t;
      const int dv = ap.d(v, near);
      if (dv > best_d || (dv == best_d && v < rem_s[best_i])) {
        best_d = dv;
        best_i = i;
        best_t = near;
      }
    }
    assigned[rem_s[best_i]] = best_t;
    rem_t.erase(best_t);
    rem_s.erase(rem_s.begin() + static_cast<std::ptrdiff_t>(best_i));
  }
  return assigned;
}

}  // namespace

RoutingPlan route_to_path(const Graph& tree, std::span<const Vertex> sources, std::span<const Vertex> targets) {
  if (!tree.is_tree()) throw StructureError("route_to_path needs a tree");
  const int n = tree.size();
  const int k = static_cast<int>(sources.size());
  if (static_cast<int>(targets.size()) != k) throw TaskError("source and target counts differ");
  const auto path = tree_diameter_path(tree);
  const int d = static_cast<int>(path.size()) - 1;
  if (k > d && k > 0) throw TaskError("route_to_path takes at most d = " + std::to_string(d) + " pebbles");
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  for (Vertex v : path) on_path[v] = 1;
  std::vector<char> seen_s(static_cast<std::size_t>(n), 0), seen_t(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < k; ++i) {
    if (!on_path[targets[i]]) throw TaskError("target vertex " + std::to_string(targets[i] + 1) + " is off the path");
    if (seen_s[sources[i]]++ || seen_t[targets[i]]++) throw TaskError("repeated source or target");
  }

  const AllPairs ap(tree);
  // Token bookkeeping by current vertex: goal[v] is the target of the token sitting at v, or -1.
  std::vector<Vertex> goal = farthest_first(ap, sources, targets, n);
  std::vector<Stage> stages;
  const int bound = d + 2 * std::max(k - 1, 0);

  auto done = [&] {
    for (Vertex v = 0; v < n; ++v)
      if (goal[v] >= 0 && goal[v] != v) return false;
    return true;
  };
  while (!done()) {
    if (static_cast<int>(stages.size()) >= bound)
      throw InternalError("route_to_path exceeded d + 2(k-1) stages");

    // Exchange targets between a token and the token blocking its next hop when that shortens the pair.
    for (int pass = 0; pass < 10 * k + 10; ++pass) {
      bool changed = false;
      for (Vertex v = 0; v < n; ++v) {
        if (goal[v] < 0 || goal[v] == v) continue;
        const Vertex w = ap.toward[goal[v]][v];
        if (goal[w] < 0) continue;
        const auto swapped = std::make_tuple(ap.d(v, goal[w]) + ap.d(w, goal[v]), -ap.d(w, goal[v]));
        const auto kept = std::make_tuple(ap.d(v, goal[v]) + ap.d(w, goal[w]), -ap.d(w, goal[w]));
        if (swapped < kept) {
          std::swap(goal[v], goal[w]);
          changed = true;
        }
      }
      if (!changed) break;
    }

    std::vector<Vertex> tokens;
    for (Vertex v = 0; v < n; ++v)
      if (goal[v] >= 0) tokens.push_back(v);
    std::sort(tokens.begin(), tokens.end(), [&](Vertex a, Vertex b) {
      return std::make_pair(ap.d(a, goal[a]), a) < std::make_pair(ap.d(b, goal[b]), b);
    });
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    Stage st;
    for (Vertex v : tokens) {
      if (goal[v] == v) continue;
      const Vertex next = ap.toward[goal[v]][v];
      if (goal[next] >= 0 || used[v] || used[next]) continue;
      used[v] = used[next] = 1;
      st.cmp.push_back({std::min(v, next), std::max(v, next), CmpKind::Swap});
    }
    for (const auto& c : st.cmp) std::swap(goal[c.u], goal[c.v]);
    if (st.empty()) throw InternalError("route_to_path made no progress");
    stages.push_back(std::move(st));
  }
  return detail::finish_plan(n, std::move(stages));
}

}  // namespace matchnet
