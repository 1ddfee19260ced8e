#include <algorithm>
#include <array>

#include "matchnet/error.hpp"
#include "matchnet/routing.hpp"
#include "routing_internal.hpp"

namespace matchnet {

namespace detail {

std::vector<Stage> odd_even_route(std::span<const Vertex> path, std::vector<int> key) {
  std::vector<Stage> out;
  const int len = static_cast<int>(path.size());
  for (int round = 0; round < len; ++round) {
    if (std::is_sorted(key.begin(), key.end())) break;
    Stage st;
    for (int i = round % 2; i + 1 < len; i += 2) {
      if (key[i] > key[i + 1]) {
        std::swap(key[i], key[i + 1]);
        st.cmp.push_back({path[i], path[i + 1], CmpKind::Swap});
      }
    }
    if (!st.empty()) out.push_back(std::move(st));
  }
  if (!std::is_sorted(key.begin(), key.end())) throw InternalError("odd-even routing did not finish");
  return out;
}

std::vector<Stage> merge_parallel(const std::vector<std::vector<Stage>>& plans) {
  std::size_t depth = 0;
  for (const auto& p : plans) depth = std::max(depth, p.size());
  std::vector<Stage> out(depth);
  for (const auto& p : plans)
    for (std::size_t i = 0; i < p.size(); ++i)
      out[i].cmp.insert(out[i].cmp.end(), p[i].cmp.begin(), p[i].cmp.end());
  return out;
}

Stage involution_stage(std::span<const int> inv) {
  Stage st;
  for (int i = 0; i < static_cast<int>(inv.size()); ++i)
    if (i < inv[i]) st.cmp.push_back({i, inv[i], CmpKind::Swap});
  return st;
}

RoutingPlan finish_plan(int n, std::vector<Stage> stages) {
  stages.erase(std::remove_if(stages.begin(), stages.end(), [](const Stage& s) { return s.empty(); }),
               stages.end());
  RoutingPlan plan;
  plan.realized = simulate_swaps(n, stages);
  plan.stages = std::move(stages);
  return plan;
}

}  // namespace detail

Permutation simulate_swaps(int n, std::span<const Stage> stages) {
  std::vector<int> holder = identity_permutation(n);  // holder[v] = pebble at v
  for (const auto& st : stages)
    for (const auto& c : st.cmp) std::swap(holder[c.u], holder[c.v]);
  return inverse(holder);
}

void check_plan(const Graph& g, const RoutingPlan& plan) {
  for (int i = 0; i < plan.depth(); ++i) {
    validate_stage(g, plan.stages[i], i);
    for (const auto& c : plan.stages[i].cmp)
      if (c.kind != CmpKind::Swap) throw InternalError("routing stage contains a comparator");
  }
  if (simulate_swaps(g.size(), plan.stages) != plan.realized)
    throw InternalError("plan does not realize its recorded map");
}

bool plan_serves(const RoutingPlan& plan, const PartialTask& task) {
  for (int i = 0; i < task.size(); ++i)
    if (plan.realized[task.sources[i]] != task.targets[i]) return false;
  return true;
}

bool plan_fills(const RoutingPlan& plan, const PartialTask& task) {
  std::vector<Vertex> got, want(task.targets);
  for (Vertex s : task.sources) got.push_back(plan.realized[s]);
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  return got == want;
}

Permutation complete_task(int n, const PartialTask& task) {
  Permutation dest(static_cast<std::size_t>(n), -1);
  std::vector<char> is_target(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < task.size(); ++i) {
    if (dest[task.sources[i]] != -1 || is_target[task.targets[i]]) throw InputError("partial task is not a bijection");
    dest[task.sources[i]] = task.targets[i];
    is_target[task.targets[i]] = 1;
  }
  std::vector<char> taken = is_target;
  std::vector<Vertex> movers;
  for (Vertex v = 0; v < n; ++v) {
    if (dest[v] != -1) continue;
    if (!is_target[v]) {
      dest[v] = v;
      taken[v] = 1;
    } else {
      movers.push_back(v);
    }
  }
  Vertex free_v = 0;
  for (Vertex v : movers) {
    while (taken[free_v]) ++free_v;
    dest[v] = free_v;
    taken[free_v] = 1;
  }
  return dest;
}

SortingNetwork plan_as_network(const Graph& g, const RoutingPlan& plan, std::string construction) {
  SortingNetwork net;
  net.graph = g;
  net.stages = plan.stages;
  net.order = VertexOrder::identity(g.size());
  net.provenance.construction = std::move(construction);
  return net;
}

RoutingPlan route_complete(int n, std::span<const int> pi) {
  if (static_cast<int>(pi.size()) != n || !is_permutation(pi)) throw InputError("bad permutation");
  const auto [first, second] = two_cycle_decompose(pi);
  return detail::finish_plan(n, {detail::involution_stage(first), detail::involution_stage(second)});
}

RoutingPlan route_path(int n, std::span<const int> pi) {
  if (static_cast<int>(pi.size()) != n || !is_permutation(pi)) throw InputError("bad permutation");
  const Permutation path = identity_permutation(n);
  return detail::finish_plan(n, detail::odd_even_route(path, Permutation(pi.begin(), pi.end())));
}

namespace {

// Routes one involution of K_{s,...,s} in three swap stages.
std::array<Stage, 3> multipartite_involution(int parts, int s, std::span<const int> inv) {
  const int n = parts * s;
  auto part = [s](int v) { return v / s; };
  std::vector<std::vector<std::pair<int, int>>> same(static_cast<std::size_t>(parts));
  std::vector<std::pair<int, int>> cross;
  std::vector<int> fixed;
  for (int v = 0; v < n; ++v) {
    if (inv[v] == v) fixed.push_back(v);
    else if (v < inv[v]) (part(v) == part(inv[v]) ? same[part(v)] : cross).emplace_back(v, inv[v]);
  }

  std::array<Stage, 3> st;
  auto swap_at = [&](int stage, int a, int b) { st[stage].cmp.push_back({std::min(a, b), std::max(a, b), CmpKind::Swap}); };
  // (u v)(x y) with {u,v} and {x,y} in different parts, or x,y both outside the part of u,v.
  auto four_cycle = [&](std::pair<int, int> uv, std::pair<int, int> xy) {
    const auto [u, v] = uv;
    const auto [x, y] = xy;
    swap_at(0, u, x);
    swap_at(0, v, y);
    swap_at(1, x, v);
    swap_at(1, y, u);
  };

  // Pair same-part transpositions across parts, largest remaining counts first.
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> pairs;
  std::vector<std::array<int, 2>> pair_parts;
  while (true) {
    int a = -1, b = -1;
    for (int k = 0; k < parts; ++k) {
      const auto c = same[k].size();
      if (c == 0) continue;
      if (a < 0 || c > same[a].size()) { b = a; a = k; }
      else if (b < 0 || c > same[b].size()) b = k;
    }
    if (b < 0) break;
    pairs.push_back({same[a].back(), same[b].back()});
    pair_parts.push_back({a, b});
    same[a].pop_back();
    same[b].pop_back();
  }

  std::vector<char> pair_used(pairs.size(), 0);
  std::vector<char> cross_used(cross.size(), 0);
  std::size_t next_fixed = 0;
  for (int x = 0; x < parts; ++x) {
    for (const auto& t : same[x]) {
      bool done = false;
      for (std::size_t i = 0; i < cross.size() && !done; ++i) {
        if (!cross_used[i] && part(cross[i].first) != x && part(cross[i].second) != x) {
          cross_used[i] = 1;
          four_cycle(t, cross[i]);
          done = true;
        }
      }
      while (!done && next_fixed < fixed.size()) {
        const int w = fixed[next_fixed++];
        if (part(w) == x) continue;
        swap_at(0, t.first, w);
        swap_at(1, w, t.second);
        swap_at(2, t.first, w);
        done = true;
      }
      for (std::size_t i = 0; i < pairs.size() && !done; ++i) {
        if (pair_used[i] || pair_parts[i][0] == x || pair_parts[i][1] == x) continue;
        pair_used[i] = 1;
        // Three same-part transpositions in three distinct parts.
        const auto [a, a2] = t;
        const auto [b, b2] = pairs[i].first;
        const auto [c, c2] = pairs[i].second;
        swap_at(0, b, c2);
        swap_at(0, b2, c);
        swap_at(1, a, c2);
        swap_at(1, a2, b2);
        swap_at(2, a, b2);
        swap_at(2, a2, c2);
        swap_at(2, b, c);
        done = true;
      }
      if (!done) throw InternalError("multipartite routing ran out of gadget resources");
    }
  }
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (!pair_used[i]) four_cycle(pairs[i].first, pairs[i].second);
  for (std::size_t i = 0; i < cross.size(); ++i)
    if (!cross_used[i]) swap_at(0, cross[i].first, cross[i].second);
  // Fixed points skipped while scanning were never touched, so the stages stay matchings.
  return st;
}

}  // namespace

RoutingPlan route_multipartite(int parts, int part_size, std::span<const int> pi) {
  const int n = parts * part_size;
  if (parts < 2 || part_size < 1) throw ParameterError("multipartite needs p >= 2 parts of positive size");
  if (static_cast<int>(pi.size()) != n || !is_permutation(pi)) throw InputError("bad permutation");
  const auto [first, second] = two_cycle_decompose(pi);
  std::vector<Stage> stages;
  for (const auto& inv : {first, second}) {
    auto three = multipartite_involution(parts, part_size, inv);
    for (auto& s : three) stages.push_back(std::move(s));
  }
  auto plan = detail::finish_plan(n, std::move(stages));
  if (plan.realized != Permutation(pi.begin(), pi.end())) throw InternalError("multipartite plan is wrong");
  return plan;
}

}  // namespace matchnet
