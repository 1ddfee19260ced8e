#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "matchnet/graph.hpp"
#include "matchnet/network.hpp"
#include "matchnet/permutation.hpp"

namespace matchnet {

/// Stages of unconditional swaps plus the physical map they realize:
/// the pebble starting at vertex i ends at realized[i].
struct RoutingPlan {
  std::vector<Stage> stages;
  Permutation realized;

  int depth() const { return static_cast<int>(stages.size()); }
};

/// Pebble at sources[i] must reach targets[i]; other pebbles are unconstrained.
struct PartialTask {
  std::vector<Vertex> sources;
  std::vector<Vertex> targets;

  int size() const { return static_cast<int>(sources.size()); }
};

/// Map realized by running swap stages from the identity placement.
Permutation simulate_swaps(int n, std::span<const Stage> stages);
/// Throws InternalError unless the plan's stages are valid swap matchings on g realizing plan.realized.
void check_plan(const Graph& g, const RoutingPlan& plan);
/// True when every tracked pebble of the task lands on its target.
bool plan_serves(const RoutingPlan& plan, const PartialTask& task);
/// True when the tracked pebbles land on the target set in some order.
bool plan_fills(const RoutingPlan& plan, const PartialTask& task);

/// Extends a partial task to a full permutation: untracked pebbles not sitting on
/// a target stay; the rest fill vacated vertices in ascending order.
Permutation complete_task(int n, const PartialTask& task);

/// Wraps a plan as a network (all-swap stages, identity order).
SortingNetwork plan_as_network(const Graph& g, const RoutingPlan& plan, std::string construction);

// ---- planners ----

/// K_n: at most two stages, one per involution factor.
RoutingPlan route_complete(int n, std::span<const int> pi);
/// Path 0-1-...-(n-1): odd-even transposition rounds with swaps; at most n stages.
RoutingPlan route_path(int n, std::span<const int> pi);
/// Any tree: centroid recursion; depth bounded by 3n.
RoutingPlan route_tree(const Graph& tree, std::span<const int> pi);
/// Moves the k pebbles at `sources` onto the vertex set `targets`, which must lie on
/// tree_diameter_path(tree), in at most d + 2(k-1) stages (d = path length).
/// Which pebble lands on which target follows a farthest-first assignment and is
/// reported in `realized`. TaskError when k > d.
RoutingPlan route_to_path(const Graph& tree, std::span<const Vertex> sources, std::span<const Vertex> targets);
/// K_{s,...,s} with p parts (part k = k*s ..): at most 6 stages.
RoutingPlan route_multipartite(int parts, int part_size, std::span<const int> pi);
/// route_tree on spanning_tree(g).
RoutingPlan route_generic(const Graph& g, std::span<const int> pi);

/// Full-permutation planner with an a-priori depth bound.
struct Router {
  std::string name;
  long long depth_bound = 0;
  std::function<RoutingPlan(std::span<const int>)> route;
};

/// Three-phase product routing on g1 □ g2 (numbering of cartesian_product).
RoutingPlan route_product(const Router& r1, int n1, const Router& r2, int n2, std::span<const int> pi);
/// Mesh with the given side lengths, routed as P_{l0} □ mesh(rest).
RoutingPlan route_mesh(std::span<const int> lengths, std::span<const int> pi);
long long mesh_route_bound(std::span<const int> lengths);
/// Multigrid (also valid on the pyramid): two involutions, five rounds each.
RoutingPlan route_multigrid(int levels, int dim, std::span<const int> pi);
long long multigrid_route_bound(int levels, int dim);

/// Router chosen by the graph's family tag; generic tree fallback otherwise.
Router make_router(const Graph& g);

/// Moves the task's source pebbles onto its target set; the exact assignment may differ
/// from the task's pairing and is read back from `realized`.
struct PartialRouter {
  std::string name;
  long long depth_bound = 0;
  std::function<RoutingPlan(const PartialTask&)> route;
};

/// Completes each task with complete_task and routes the full permutation.
PartialRouter full_as_partial(const Router& r, int n);
/// route_to_path on `tree`; tasks must target its diameter path.
PartialRouter path_partial_router(const Graph& tree);

}  // namespace matchnet
