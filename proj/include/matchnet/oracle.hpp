#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "matchnet/graph.hpp"
#include "matchnet/network.hpp"
#include "matchnet/permutation.hpp"
#include "matchnet/routing.hpp"

namespace matchnet {

enum class OracleQuantity { St, Rt, RtPartial };

std::string to_string(OracleQuantity q);

struct SearchStats {
  std::uint64_t states = 0;  // distinct states reached
  std::uint64_t moves = 0;   // stage options per state
  int depth = 0;             // deepest BFS layer expanded
};

struct OracleResult {
  OracleQuantity quantity = OracleQuantity::St;
  int value = 0;
  /// st: a minimum-depth sorting network.
  std::optional<SortingNetwork> network;
  /// rt / rt_partial: a minimum-depth routing plan for the extremal instance.
  std::optional<RoutingPlan> plan;
  /// rt without a permutation: a permutation attaining the maximum.
  std::optional<Permutation> argmax;
  /// rt_partial: the extremal tracked sources and their targets (targets[i] receives sources[i]).
  std::optional<PartialTask> task;
  SearchStats stats;
};

constexpr int kRtCap = 8;
constexpr int kRtPartialCap = 7;
constexpr int kStCap = 5;

/// Every non-empty matching of g, edges ascending.
std::vector<Matching> all_matchings(const Graph& g);

/// rt(g, pi) by BFS over arrangements; without pi, rt(g) with a worst permutation.
OracleResult exact_rt(const Graph& g, std::optional<Permutation> pi = std::nullopt);
/// rt(g, A, B): the maximum over bijections A -> B, BFS over tracked positions.
OracleResult exact_rt_partial(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b);
/// rt_p(g): maximum of rt(g, A, B) over |A| = |B| <= p.
OracleResult rt_p(const Graph& g, int p);

/// st(g, order), or st(g) minimized over all orders when none is given. The search state is
/// the set of 0-1 configurations still reachable; stages range over every matching with each
/// edge a comparator (either direction) or, unless `comparators_only`, a swap.
OracleResult exact_st(const Graph& g, std::optional<VertexOrder> order = std::nullopt, bool comparators_only = false);

/// st(g, order) for every order; entry k belongs to the k-th permutation in lexicographic order
/// of the rank vector.
std::vector<int> exact_st_all_orders(const Graph& g, bool comparators_only = false);

struct SandwichReport {
  VertexOrder order;
  int rt = 0;        // rt(g)
  int log_n = 0;     // ceil(log2 n)
  int st_min = 0;    // st(g)
  int st_order = 0;  // st(g, order)
  bool holds = false;
};

/// Checks max(rt(g), ceil(log2 n)) <= st(g, order) <= st(g) + rt(g) with exact values.
SandwichReport sandwich_check(const Graph& g, const VertexOrder& order);
/// The same check for every order of g.
std::vector<SandwichReport> sandwich_check_all(const Graph& g);

/// Connected graphs on 1..max_n vertices, one per isomorphism class.
std::vector<Graph> connected_graphs_up_to(int max_n);

}  // namespace matchnet
