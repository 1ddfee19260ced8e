#include "matchnet/error.hpp"
#include "matchnet/routing.hpp"

namespace matchnet {

namespace {

// Wraps a planner so every plan is checked against the requested permutation.
Router checked(std::string name, long long bound, std::function<RoutingPlan(std::span<const int>)> fn) {
  return {name, bound, [name, fn = std::move(fn)](std::span<const int> pi) {
            auto plan = fn(pi);
            if (plan.realized != Permutation(pi.begin(), pi.end()))
              throw InternalError(name + " router realized a different permutation");
            return plan;
          }};
}

bool matches_family(const Graph& g) {
  if (g.family().empty()) return false;
  try {
    return generate(g.family()) == g;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

Router make_router(const Graph& g) {
  const int n = g.size();
  if (n == 1) return checked("trivial", 0, [](std::span<const int> pi) { return RoutingPlan{{}, Permutation(pi.begin(), pi.end())}; });
  if (matches_family(g)) {
    const auto& f = g.family();
    const auto& p = f.params;
    if (f.name == "complete") return checked("complete", 2, [n](std::span<const int> pi) { return route_complete(n, pi); });
    if (f.name == "path") return checked("path", n, [n](std::span<const int> pi) { return route_path(n, pi); });
    if (f.name == "multipartite") {
      const int parts = p[0], size = p[1];
      return checked("multipartite", 6, [parts, size](std::span<const int> pi) { return route_multipartite(parts, size, pi); });
    }
    if (f.name == "mesh" || f.name == "hypercube") {
      std::vector<int> lengths = f.name == "mesh" ? p : std::vector<int>(static_cast<std::size_t>(p[0]), 2);
      return checked("mesh", mesh_route_bound(lengths), [lengths](std::span<const int> pi) { return route_mesh(lengths, pi); });
    }
    if (f.name == "multigrid" || f.name == "pyramid") {
      const int levels = p[0], dim = p[1];
      return checked("multigrid", multigrid_route_bound(levels, dim),
                     [levels, dim](std::span<const int> pi) { return route_multigrid(levels, dim, pi); });
    }
  }
  if (g.is_tree()) return checked("tree", 3LL * n, [g](std::span<const int> pi) { return route_tree(g, pi); });
  const Graph tree = spanning_tree(g);
  return checked("spanning-tree", 3LL * n, [tree](std::span<const int> pi) { return route_tree(tree, pi); });
}

PartialRouter full_as_partial(const Router& r, int n) {
  return {r.name, r.depth_bound, [r, n](const PartialTask& task) { return r.route(complete_task(n, task)); }};
}

PartialRouter path_partial_router(const Graph& tree) {
  const long long d = static_cast<long long>(tree_diameter_path(tree).size()) - 1;
  return {"to-path", 3 * d, [tree](const PartialTask& task) {
            auto plan = route_to_path(tree, task.sources, task.targets);
            if (!plan_fills(plan, task)) throw InternalError("route_to_path missed its target set");
            return plan;
          }};
}

}  // namespace matchnet
