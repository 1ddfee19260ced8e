#include <algorithm>
#include <limits>

#include "constructions_internal.hpp"
#include "matchnet/constructions.hpp"
#include "matchnet/error.hpp"

namespace matchnet {

SortingNetwork simulate_complete(const Graph& g, const SortingNetwork& base, const Router& router) {
  const int n = g.size();
  if (base.graph.size() != n) throw InputError("base network size differs from the graph");
  if (!(base.order == VertexOrder::identity(n))) throw InputError("base network must sort to the identity order");

  const Matching mg = maximal_matching(g);
  const int nu = std::max(mg.size(), 1);
  std::vector<std::vector<int>> dist;
  for (Vertex v = 0; v < n; ++v) dist.push_back(bfs_distances(g, v));

  SortingNetwork net;
  net.graph = g;
  net.order = VertexOrder::identity(n);
  PositionMap pm = PositionMap::identity(n);
  auto route = [&](const Permutation& perm) {
    if (is_identity(perm)) return;
    const auto plan = router.route(perm);
    for (const auto& st : plan.stages) net.stages.push_back(st);
    pm.apply_routing(plan.realized);
  };

  for (const auto& base_stage : base.stages) {
    for (std::size_t start = 0; start < base_stage.cmp.size(); start += static_cast<std::size_t>(nu)) {
      const std::size_t stop = std::min(base_stage.cmp.size(), start + static_cast<std::size_t>(nu));
      std::vector<Comparator> group(base_stage.cmp.begin() + static_cast<std::ptrdiff_t>(start),
                                    base_stage.cmp.begin() + static_cast<std::ptrdiff_t>(stop));
      for (const auto& c : group)
        if (c.kind != CmpKind::Dir) throw InputError("base network must use comparators only");

      // Pairs already on an edge stay put while enough matching edges remain for the rest.
      std::vector<char> in_place(group.size(), 0);
      for (std::size_t i = 0; i < group.size(); ++i) in_place[i] = g.has_edge(pm.at(group[i].u), pm.at(group[i].v));
      std::vector<char> pinned(static_cast<std::size_t>(n), 0);
      std::vector<Edge> free_edges;
      while (true) {
        std::fill(pinned.begin(), pinned.end(), 0);
        int movers = 0;
        for (std::size_t i = 0; i < group.size(); ++i) {
          if (in_place[i]) pinned[pm.at(group[i].u)] = pinned[pm.at(group[i].v)] = 1;
          else ++movers;
        }
        free_edges.clear();
        for (const auto& [x, y] : mg.edges)
          if (!pinned[x] && !pinned[y]) free_edges.push_back({x, y});
        if (static_cast<int>(free_edges.size()) >= movers) break;
        std::size_t last = group.size();
        while (last > 0 && !in_place[last - 1]) --last;
        in_place[last - 1] = 0;
      }

      PartialTask task;
      std::vector<char> edge_used(free_edges.size(), 0);
      for (std::size_t i = 0; i < group.size(); ++i) {
        const Vertex a = pm.at(group[i].u);
        const Vertex b = pm.at(group[i].v);
        if (in_place[i]) {
          task.sources.insert(task.sources.end(), {a, b});
          task.targets.insert(task.targets.end(), {a, b});
          continue;
        }
        int best = -1;
        bool flip = false;
        int best_cost = std::numeric_limits<int>::max();
        for (std::size_t e = 0; e < free_edges.size(); ++e) {
          if (edge_used[e]) continue;
          const auto [x, y] = free_edges[e];
          const int straight = dist[a][x] + dist[b][y];
          const int crossed = dist[a][y] + dist[b][x];
          if (std::min(straight, crossed) < best_cost) {
            best_cost = std::min(straight, crossed);
            best = static_cast<int>(e);
            flip = crossed < straight;
          }
        }
        edge_used[best] = 1;
        const auto [x, y] = free_edges[best];
        task.sources.insert(task.sources.end(), {a, b});
        task.targets.insert(task.targets.end(), {flip ? y : x, flip ? x : y});
      }
      route(complete_task(n, task));

      Stage st;
      for (const auto& c : group) st.cmp.push_back({pm.at(c.u), pm.at(c.v), CmpKind::Dir});
      validate_stage(g, st);
      net.stages.push_back(std::move(st));
    }
  }

  // Fix-up: logical index i returns to vertex i.
  Permutation home(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) home[v] = pm.logical_at(v);
  route(home);

  const long long groups = detail::ceil_div(n, nu);
  const long long bound = static_cast<long long>(base.depth()) * groups * (router.depth_bound + 1) + router.depth_bound;
  net.provenance = {"simulate", {{"n", n}, {"matching", mg.size()}, {"base_depth", base.depth()}},
                    {{"base", base.provenance.construction}, {"router", router.name}}};
  detail::certify(net, "depth(base) * ceil(n/nu) * (rt + 1) + rt",
                  {{"n", n}, {"nu", nu}, {"base_depth", base.depth()}, {"rt", router.depth_bound}}, bound);
  return net;
}

}  // namespace matchnet
