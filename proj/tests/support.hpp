// Hand-rolled generators and independent reference checks shared by the test binaries.
#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <random>
#include <vector>

#include "matchnet/graph.hpp"
#include "matchnet/network.hpp"
#include "matchnet/permutation.hpp"
#include "matchnet/routing.hpp"

namespace testing_support {

using namespace matchnet;

inline Graph gen_tree(std::mt19937_64& rng, int min_n, int max_n) {
  const int n = min_n + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - min_n + 1));
  return random_tree(n, rng());
}

inline Graph gen_connected(std::mt19937_64& rng, int min_n, int max_n) {
  const int n = min_n + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - min_n + 1));
  const int extra = static_cast<int>(rng() % static_cast<std::uint64_t>(2 * n + 1));
  return random_connected(n, extra, rng());
}

/// Random stage list: each stage a random matching, each edge Dir in a random direction or (rarely) Swap.
inline SortingNetwork gen_network(std::mt19937_64& rng, const Graph& g, int depth, bool swaps) {
  SortingNetwork net;
  net.graph = g;
  net.order = VertexOrder::identity(g.size());
  for (int s = 0; s < depth; ++s) {
    auto edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    std::vector<char> used(static_cast<std::size_t>(g.size()), 0);
    Stage st;
    for (const auto& [u, v] : edges) {
      if (used[u] || used[v] || rng() % 3 == 0) continue;
      used[u] = used[v] = 1;
      const bool flip = rng() & 1;
      const CmpKind kind = swaps && rng() % 5 == 0 ? CmpKind::Swap : CmpKind::Dir;
      st.cmp.push_back({flip ? v : u, flip ? u : v, kind});
    }
    net.stages.push_back(std::move(st));
  }
  return net;
}

/// Reference simulation of swap stages, written independently of the library: tracks the
/// pebble held by every vertex and reads back where each pebble ended.
inline Permutation reference_realized(int n, const std::vector<Stage>& stages) {
  std::vector<int> holder(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) holder[v] = v;
  for (const auto& st : stages)
    for (const auto& c : st.cmp) std::swap(holder[c.u], holder[c.v]);
  Permutation where(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) where[holder[v]] = v;
  return where;
}

/// True when every stage is a matching of host edges made only of swaps.
inline bool swap_matchings_on(const Graph& g, const std::vector<Stage>& stages) {
  for (const auto& st : stages) {
    std::vector<char> used(static_cast<std::size_t>(g.size()), 0);
    for (const auto& c : st.cmp) {
      if (c.kind != CmpKind::Swap || !g.has_edge(c.u, c.v) || used[c.u] || used[c.v]) return false;
      used[c.u] = used[c.v] = 1;
    }
  }
  return true;
}

/// True when every stage is a matching of host edges.
inline bool matchings_on(const Graph& g, const std::vector<Stage>& stages) {
  for (const auto& st : stages) {
    std::vector<char> used(static_cast<std::size_t>(g.size()), 0);
    for (const auto& c : st.cmp) {
      if (!g.has_edge(c.u, c.v) || used[c.u] || used[c.v]) return false;
      used[c.u] = used[c.v] = 1;
    }
  }
  return true;
}

/// All-pairs distances by Floyd-Warshall (independent of the BFS helpers).
inline std::vector<std::vector<int>> all_pairs(const Graph& g) {
  const int n = g.size();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

/// Plain 0-1 check by direct execution of every input (no bitslicing, single thread).
inline bool reference_zero_one(const SortingNetwork& net) {
  const int n = net.graph.size();
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    std::vector<int> keys(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) keys[v] = static_cast<int>((x >> v) & 1);
    for (const auto& st : net.stages)
      for (const auto& c : st.cmp) {
        if (c.kind == CmpKind::Swap || keys[c.v] < keys[c.u]) std::swap(keys[c.u], keys[c.v]);
      }
    for (int r = 1; r < n; ++r)
      if (keys[net.order.vertex_at(r)] < keys[net.order.vertex_at(r - 1)]) return false;
  }
  return true;
}

}  // namespace testing_support
