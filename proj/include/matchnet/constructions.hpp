#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "matchnet/graph.hpp"
#include "matchnet/network.hpp"
#include "matchnet/routing.hpp"

namespace matchnet {

/// Logical comparison (lo, hi): after it, the smaller key sits at index lo.
using LogicalPair = std::pair<int, int>;

// ---- base sorters ----

/// Host P_n, identity order, depth n (0 when n = 1).
SortingNetwork odd_even_transposition(int n);
/// Host Q_dim, identity order, depth dim(dim+1)/2.
SortingNetwork bitonic_hypercube(int dim);
/// Merge-exchange rounds on indices 0..n-1; each round is a set of disjoint pairs.
std::vector<std::vector<LogicalPair>> merge_exchange_rounds(int n);
/// Host K_n, identity order, the merge-exchange rounds as stages.
SortingNetwork batcher_complete(int n);
/// The merge-exchange comparisons flattened into one sequential list.
std::vector<LogicalPair> sequential_sorter(int q);

// ---- tree contour sorter ----

/// Odd-even transposition over the marked contour order, emulated on the tree.
SortingNetwork contour_tree_sort(const Graph& tree);

// ---- complete-graph simulation ----

/// Runs `base` (a sorter on K_n with identity order) on g: each base stage is split into
/// groups of at most |M_G| comparisons, the pairs are routed onto a maximal matching M_G,
/// and a final routing restores the labels.
SortingNetwork simulate_complete(const Graph& g, const SortingNetwork& base, const Router& router);

// ---- subgraph sorters ----

struct SubgraphOptions {
  /// Capacity of one merge; blocks hold capacity / 2 pebbles. Zero means |H|.
  int capacity = 0;
  /// Append the routing that restores the identity target order (otherwise the order
  /// is whatever the block relabeling produced).
  bool fix_up = true;
};

/// Sorts g by merging blocks inside the connected subgraph H (local vertex i = h_vertices[i]),
/// following the sequential sorter on the blocks.
SortingNetwork subgraph_sort(const Graph& g, std::span<const Vertex> h_vertices, const SortingNetwork& h_net,
                             const PartialRouter& router, SubgraphOptions options = {});
/// Spanning tree, its diameter path as H, odd-even on H, route_to_path as router.
SortingNetwork longest_path_sort(const Graph& g);

/// Merges half-parts concurrently in the subgraphs H_k induced by `parts` (equal sizes),
/// following merge-exchange rounds on the half-parts.
SortingNetwork parallel_subgraph_sort(const Graph& g, const std::vector<std::vector<Vertex>>& parts,
                                      const std::vector<SortingNetwork>& nets, const Router& router,
                                      bool fix_up = true);

/// Sorter for g1 □ g2 with copies of one factor as the subgraphs and route_product as router.
SortingNetwork product_sort(const Graph& g1, const Graph& g2, bool fix_up = true);
/// Mesh P_{l0} □ ... with the numbering of mesh_graph.
SortingNetwork mesh_sort(std::span<const int> lengths, bool fix_up = true);

// ---- pyramid ----

/// Seven-step pyramid sorter; target order is apex first, each level in its local order.
SortingNetwork pyramid_sort(int levels, int dim);

// ---- dispatch ----

/// Names accepted by `build`.
std::vector<std::string> construction_names();
/// Builds a named construction on g ("auto" picks one from the family tag).
SortingNetwork build(const std::string& construction, const Graph& g);
/// Reasonable sorter for any connected graph (used for factors and subgraphs).
SortingNetwork default_sorter(const Graph& g);

}  // namespace matchnet
