#include "matchnet/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_map>

#include "matchnet/error.hpp"

namespace matchnet {

namespace {

// ---- permutation ranks (Lehmer code) ----

std::uint32_t perm_rank(std::span<const int> p) {
  const int n = static_cast<int>(p.size());
  std::uint32_t r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) smaller += p[j] < p[i];
    r = r * static_cast<std::uint32_t>(n - i) + static_cast<std::uint32_t>(smaller);
  }
  return r;
}

std::vector<int> perm_unrank(std::uint32_t r, int n) {
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    digits[i] = static_cast<int>(r % static_cast<std::uint32_t>(n - i));
    r /= static_cast<std::uint32_t>(n - i);
  }
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    p[i] = pool[digits[i]];
    pool.erase(pool.begin() + digits[i]);
  }
  return p;
}

std::uint32_t factorial(int n) {
  std::uint32_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint32_t>(i);
  return f;
}

// partner[v] is v's mate in the matching, or v itself.
std::vector<int> partner_of(const Matching& m, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  for (const auto& [u, v] : m.edges) {
    p[u] = v;
    p[v] = u;
  }
  return p;
}

Stage swap_stage(const Matching& m) {
  Stage st;
  for (const auto& [u, v] : m.edges) st.cmp.push_back({u, v, CmpKind::Swap});
  return st;
}

RoutingPlan plan_from(int n, const std::vector<Matching>& matchings, const std::vector<int>& moves) {
  RoutingPlan plan;
  for (int m : moves) plan.stages.push_back(swap_stage(matchings[m]));
  plan.realized = simulate_swaps(n, plan.stages);
  return plan;
}

void require_cap(int n, int cap, const char* what) {
  if (n > cap)
    throw CapError(std::string(what) + " refuses n = " + std::to_string(n) + " above cap " + std::to_string(cap));
}

// ---- tracked-pebble BFS for partial routing ----

struct TrackedSearch {
  int n;
  int k;
  std::vector<std::int8_t> dist;
  std::vector<std::uint32_t> parent;
  std::vector<std::int32_t> via;
  std::uint64_t states = 0;
  int depth = 0;

  std::uint32_t encode(std::span<const Vertex> pos) const {
    std::uint32_t c = 0;
    for (int i = k - 1; i >= 0; --i) c = c * static_cast<std::uint32_t>(n) + static_cast<std::uint32_t>(pos[i]);
    return c;
  }
  std::vector<Vertex> decode(std::uint32_t c) const {
    std::vector<Vertex> pos(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      pos[i] = static_cast<Vertex>(c % static_cast<std::uint32_t>(n));
      c /= static_cast<std::uint32_t>(n);
    }
    return pos;
  }
  std::vector<int> moves_to(std::uint32_t code) const {
    std::vector<int> moves;
    while (via[code] >= 0) {
      moves.push_back(via[code]);
      code = parent[code];
    }
    std::reverse(moves.begin(), moves.end());
    return moves;
  }
};

TrackedSearch tracked_bfs(int n, std::span<const Vertex> start, const std::vector<std::vector<int>>& partners) {
  TrackedSearch s{n, static_cast<int>(start.size()), {}, {}, {}, 0, 0};
  std::size_t space = 1;
  for (int i = 0; i < s.k; ++i) space *= static_cast<std::size_t>(n);
  s.dist.assign(space, -1);
  s.parent.assign(space, 0);
  s.via.assign(space, -1);
  std::deque<std::uint32_t> queue;
  const std::uint32_t root = s.encode(start);
  s.dist[root] = 0;
  queue.push_back(root);
  std::vector<Vertex> next(static_cast<std::size_t>(s.k));
  while (!queue.empty()) {
    const std::uint32_t cur = queue.front();
    queue.pop_front();
    ++s.states;
    s.depth = std::max<int>(s.depth, s.dist[cur]);
    const auto pos = s.decode(cur);
    for (std::size_t m = 0; m < partners.size(); ++m) {
      for (int i = 0; i < s.k; ++i) next[i] = partners[m][pos[i]];
      const std::uint32_t code = s.encode(next);
      if (s.dist[code] >= 0) continue;
      s.dist[code] = static_cast<std::int8_t>(s.dist[cur] + 1);
      s.parent[code] = cur;
      s.via[code] = static_cast<std::int32_t>(m);
      queue.push_back(code);
    }
  }
  return s;
}

// ---- sorting-number search over sets of 0-1 configurations ----

struct StageOption {
  Stage stage;
  std::vector<std::uint8_t> image;  // config -> config
};

std::vector<StageOption> stage_options(const Graph& g, bool comparators_only) {
  const int n = g.size();
  const int configs = 1 << n;
  const int kinds = comparators_only ? 2 : 3;
  std::vector<StageOption> out;
  for (const auto& m : all_matchings(g)) {
    const int e = m.size();
    int combos = 1;
    for (int i = 0; i < e; ++i) combos *= kinds;
    for (int code = 0; code < combos; ++code) {
      StageOption opt;
      int c = code;
      for (const auto& [u, v] : m.edges) {
        const int kind = c % kinds;
        c /= kinds;
        if (kind == 0) opt.stage.cmp.push_back({u, v, CmpKind::Dir});
        else if (kind == 1) opt.stage.cmp.push_back({v, u, CmpKind::Dir});
        else opt.stage.cmp.push_back({u, v, CmpKind::Swap});
      }
      opt.image.resize(static_cast<std::size_t>(configs));
      for (int x = 0; x < configs; ++x) {
        int y = x;
        for (const auto& cmp : opt.stage.cmp) {
          const int bu = (y >> cmp.u) & 1, bv = (y >> cmp.v) & 1;
          const int nu = cmp.kind == CmpKind::Swap ? bv : (bu & bv);
          const int nv = cmp.kind == CmpKind::Swap ? bu : (bu | bv);
          y = (y & ~(1 << cmp.u) & ~(1 << cmp.v)) | (nu << cmp.u) | (nv << cmp.v);
        }
        opt.image[x] = static_cast<std::uint8_t>(y);
      }
      out.push_back(std::move(opt));
    }
  }
  return out;
}

using ConfigSet = std::uint64_t;

ConfigSet apply_option(ConfigSet s, const StageOption& opt) {
  ConfigSet out = 0;
  while (s) {
    const int x = std::countr_zero(s);
    s &= s - 1;
    out |= ConfigSet{1} << opt.image[x];
  }
  return out;
}

// Sorted 0-1 configurations of an order: the ones occupy the highest ranks.
ConfigSet sorted_configs(const VertexOrder& order) {
  const int n = order.size();
  ConfigSet s = 1;  // all zeros
  int x = 0;
  for (int r = n - 1; r >= 0; --r) {
    x |= 1 << order.vertex_at(r);
    s |= ConfigSet{1} << x;
  }
  return s;
}

// The order whose sorted configurations contain s, if the configurations form a chain.
std::optional<VertexOrder> chain_order(ConfigSet s, int n) {
  std::vector<int> by_weight(static_cast<std::size_t>(n + 1), -1);
  while (s) {
    const int x = std::countr_zero(s);
    s &= s - 1;
    const int w = std::popcount(static_cast<unsigned>(x));
    if (by_weight[w] >= 0) return std::nullopt;
    by_weight[w] = x;
  }
  std::vector<int> ranks(static_cast<std::size_t>(n));
  for (int w = 1; w <= n; ++w) {
    const int added = by_weight[w] & ~by_weight[w - 1];
    if (by_weight[w - 1] & ~by_weight[w]) return std::nullopt;
    ranks[std::countr_zero(static_cast<unsigned>(added))] = n - w;
  }
  return VertexOrder(ranks);
}

struct StSearch {
  const Graph& g;
  std::vector<StageOption> options;
  std::unordered_map<ConfigSet, std::pair<ConfigSet, int>> parent;
  std::vector<ConfigSet> frontier;
  int depth = 0;

  StSearch(const Graph& graph, bool comparators_only) : g(graph), options(stage_options(graph, comparators_only)) {
    const ConfigSet all = (ConfigSet{1} << (1 << g.size())) - 1;
    parent.emplace(all, std::make_pair(all, -1));
    frontier.push_back(all);
  }

  // Expands one BFS layer; returns false when nothing new was reached.
  bool expand() {
    std::vector<ConfigSet> next;
    for (ConfigSet s : frontier)
      for (std::size_t o = 0; o < options.size(); ++o) {
        const ConfigSet t = apply_option(s, options[o]);
        if (parent.emplace(t, std::make_pair(s, static_cast<int>(o))).second) next.push_back(t);
      }
    frontier = std::move(next);
    ++depth;
    return !frontier.empty();
  }

  SortingNetwork witness(ConfigSet s, const VertexOrder& order) const {
    SortingNetwork net;
    net.graph = g;
    net.order = order;
    while (true) {
      const auto& [prev, opt] = parent.at(s);
      if (opt < 0) break;
      net.stages.push_back(options[opt].stage);
      s = prev;
    }
    std::reverse(net.stages.begin(), net.stages.end());
    net.provenance = {"oracle", {{"n", g.size()}}, {}};
    return net;
  }

  SearchStats stats() const { return {parent.size(), options.size(), depth}; }
};

int ceil_log2(int n) {
  int t = 0;
  while ((1 << t) < n) ++t;
  return t;
}

}  // namespace

std::string to_string(OracleQuantity q) {
  switch (q) {
    case OracleQuantity::St: return "st";
    case OracleQuantity::Rt: return "rt";
    case OracleQuantity::RtPartial: return "rt_partial";
  }
  return "unknown";
}

std::vector<Matching> all_matchings(const Graph& g) {
  std::vector<Matching> out;
  const auto& edges = g.edges();
  Matching cur;
  std::vector<char> used(static_cast<std::size_t>(g.size()), 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == edges.size()) {
      if (!cur.edges.empty()) out.push_back(cur);
      return;
    }
    const auto [u, v] = edges[i];
    if (!used[u] && !used[v]) {
      used[u] = used[v] = 1;
      cur.edges.push_back(edges[i]);
      self(self, i + 1);
      cur.edges.pop_back();
      used[u] = used[v] = 0;
    }
    self(self, i + 1);
  };
  rec(rec, 0);
  return out;
}

OracleResult exact_rt(const Graph& g, std::optional<Permutation> pi) {
  const int n = g.size();
  require_cap(n, kRtCap, "exact routing oracle");
  if (pi && (static_cast<int>(pi->size()) != n || !is_permutation(*pi))) throw InputError("not a permutation of the vertices");
  const auto matchings = all_matchings(g);
  std::vector<std::vector<int>> partners;
  for (const auto& m : matchings) partners.push_back(partner_of(m, n));

  const std::uint32_t total = factorial(n);
  std::vector<std::int8_t> dist(total, -1);
  std::vector<std::uint32_t> parent(total, 0);
  std::vector<std::int32_t> via(total, -1);
  std::deque<std::uint32_t> queue;
  const std::uint32_t root = perm_rank(identity_permutation(n));
  dist[root] = 0;
  queue.push_back(root);
  // A state is the arrangement: at[v] is the pebble sitting at v.
  std::vector<int> next(static_cast<std::size_t>(n));
  std::uint64_t states = 0;
  while (!queue.empty()) {
    const std::uint32_t cur = queue.front();
    queue.pop_front();
    ++states;
    const auto at = perm_unrank(cur, n);
    for (std::size_t m = 0; m < partners.size(); ++m) {
      for (int v = 0; v < n; ++v) next[v] = at[partners[m][v]];
      const std::uint32_t code = perm_rank(next);
      if (dist[code] >= 0) continue;
      dist[code] = static_cast<std::int8_t>(dist[cur] + 1);
      parent[code] = cur;
      via[code] = static_cast<std::int32_t>(m);
      queue.push_back(code);
    }
  }

  std::uint32_t target;
  if (pi) {
    target = perm_rank(inverse(*pi));
  } else {
    target = 0;
    for (std::uint32_t c = 0; c < total; ++c)
      if (dist[c] > dist[target]) target = c;
  }
  if (dist[target] < 0) throw InternalError("arrangement unreachable on a connected graph");
  std::vector<int> moves;
  for (std::uint32_t c = target; via[c] >= 0; c = parent[c]) moves.push_back(via[c]);
  std::reverse(moves.begin(), moves.end());

  OracleResult res;
  res.quantity = OracleQuantity::Rt;
  res.value = dist[target];
  res.plan = plan_from(n, matchings, moves);
  if (!pi) res.argmax = inverse(perm_unrank(target, n));
  int deepest = 0;
  for (auto d : dist) deepest = std::max<int>(deepest, d);
  res.stats = {states, partners.size(), deepest};
  return res;
}

OracleResult exact_rt_partial(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b) {
  const int n = g.size();
  require_cap(n, kRtPartialCap, "exact partial routing oracle");
  if (a.size() != b.size()) throw InputError("partial routing needs |A| = |B|");
  for (auto set : {a, b}) {
    std::vector<Vertex> s(set.begin(), set.end());
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InputError("partial routing sets must not repeat vertices");
    for (Vertex v : s)
      if (v < 0 || v >= n) throw InputError("partial routing vertex out of range");
  }
  const auto matchings = all_matchings(g);
  std::vector<std::vector<int>> partners;
  for (const auto& m : matchings) partners.push_back(partner_of(m, n));
  const auto search = tracked_bfs(n, a, partners);

  std::vector<Vertex> targets(b.begin(), b.end());
  std::sort(targets.begin(), targets.end());
  std::vector<Vertex> worst = targets;
  int value = -1;
  do {
    const int d = search.dist[search.encode(targets)];
    if (d > value) {
      value = d;
      worst = targets;
    }
  } while (std::next_permutation(targets.begin(), targets.end()));

  OracleResult res;
  res.quantity = OracleQuantity::RtPartial;
  res.value = value;
  res.plan = plan_from(n, matchings, search.moves_to(search.encode(worst)));
  res.task = PartialTask{std::vector<Vertex>(a.begin(), a.end()), worst};
  res.stats = {search.states, partners.size(), search.depth};
  return res;
}

OracleResult rt_p(const Graph& g, int p) {
  const int n = g.size();
  require_cap(n, kRtPartialCap, "exact partial routing oracle");
  if (p < 1 || p > n) throw ParameterError("rt_p needs 1 <= p <= n");
  const auto matchings = all_matchings(g);
  std::vector<std::vector<int>> partners;
  for (const auto& m : matchings) partners.push_back(partner_of(m, n));

  // Tracking more pebbles never helps, so the maximum is attained with exactly p of them.
  OracleResult res;
  res.quantity = OracleQuantity::RtPartial;
  res.value = -1;
  std::vector<char> pick(static_cast<std::size_t>(n), 0);
  std::fill(pick.begin(), pick.begin() + p, 1);
  do {
    std::vector<Vertex> a;
    for (int v = 0; v < n; ++v)
      if (pick[v]) a.push_back(v);
    const auto search = tracked_bfs(n, a, partners);
    res.stats.states += search.states;
    res.stats.depth = std::max(res.stats.depth, search.depth);
    for (std::uint32_t code = 0; code < search.dist.size(); ++code) {
      if (search.dist[code] <= res.value) continue;
      res.value = search.dist[code];
      res.plan = plan_from(n, matchings, search.moves_to(code));
      res.task = PartialTask{a, search.decode(code)};
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  res.stats.moves = partners.size();
  return res;
}

OracleResult exact_st(const Graph& g, std::optional<VertexOrder> order, bool comparators_only) {
  const int n = g.size();
  require_cap(n, kStCap, "exact sorting oracle");
  if (order && order->size() != n) throw InputError("order size differs from the graph");
  StSearch search(g, comparators_only);
  const ConfigSet goal = order ? sorted_configs(*order) : 0;
  while (true) {
    for (ConfigSet s : search.frontier) {
      if (order) {
        if ((s & ~goal) != 0) continue;
        OracleResult res;
        res.quantity = OracleQuantity::St;
        res.value = search.depth;
        res.network = search.witness(s, *order);
        res.stats = search.stats();
        return res;
      }
      if (auto found = chain_order(s, n)) {
        OracleResult res;
        res.quantity = OracleQuantity::St;
        res.value = search.depth;
        res.network = search.witness(s, *found);
        res.stats = search.stats();
        return res;
      }
    }
    if (!search.expand()) throw InternalError("sorting search exhausted without reaching the goal");
  }
}

std::vector<int> exact_st_all_orders(const Graph& g, bool comparators_only) {
  const int n = g.size();
  require_cap(n, kStCap, "exact sorting oracle");
  StSearch search(g, comparators_only);
  std::vector<int> value(factorial(n), -1);
  std::uint32_t open = factorial(n);
  while (true) {
    for (ConfigSet s : search.frontier) {
      // A state fits every order whose sorted configurations contain it; that order is unique.
      if (auto found = chain_order(s, n)) {
        const std::uint32_t idx = perm_rank(found->ranks());
        if (value[idx] < 0) {
          value[idx] = search.depth;
          --open;
        }
      }
    }
    if (open == 0) return value;
    if (!search.expand()) throw InternalError("sorting search exhausted before every order was reached");
  }
}

SandwichReport sandwich_check(const Graph& g, const VertexOrder& order) {
  for (auto& rep : sandwich_check_all(g))
    if (rep.order == order) return rep;
  throw InputError("order size differs from the graph");
}

std::vector<SandwichReport> sandwich_check_all(const Graph& g) {
  const int n = g.size();
  require_cap(n, kStCap, "sandwich check");
  const int rt = exact_rt(g).value;
  const auto st = exact_st_all_orders(g);
  const int st_min = *std::min_element(st.begin(), st.end());
  std::vector<SandwichReport> out;
  for (std::uint32_t idx = 0; idx < st.size(); ++idx) {
    SandwichReport rep;
    rep.order = VertexOrder(perm_unrank(idx, n));
    rep.rt = rt;
    rep.log_n = ceil_log2(n);
    rep.st_min = st_min;
    rep.st_order = st[idx];
    rep.holds = std::max(rt, rep.log_n) <= rep.st_order && rep.st_order <= st_min + rt;
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<Graph> connected_graphs_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    const int e = static_cast<int>(all.size());
    std::vector<std::vector<int>> relabelings;
    std::vector<int> perm = identity_permutation(n);
    do relabelings.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    auto edge_index = [&](int u, int v) {
      if (u > v) std::swap(u, v);
      return u * n - u * (u + 1) / 2 + (v - u - 1);
    };
    std::set<std::uint32_t> seen;
    for (std::uint32_t mask = 0; mask < (1u << e); ++mask) {
      std::vector<int> comp(static_cast<std::size_t>(n));
      std::iota(comp.begin(), comp.end(), 0);
      auto find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
      };
      int parts = n;
      for (int i = 0; i < e; ++i)
        if ((mask >> i) & 1) {
          const int a = find(all[i].first), b = find(all[i].second);
          if (a != b) {
            comp[a] = b;
            --parts;
          }
        }
      if (parts != 1) continue;
      std::uint32_t canon = ~0u;
      for (const auto& r : relabelings) {
        std::uint32_t m = 0;
        for (int i = 0; i < e; ++i)
          if ((mask >> i) & 1) m |= 1u << edge_index(r[all[i].first], r[all[i].second]);
        canon = std::min(canon, m);
      }
      if (!seen.insert(canon).second) continue;
      std::vector<Edge> edges;
      for (int i = 0; i < e; ++i)
        if ((mask >> i) & 1) edges.push_back(all[i]);
      out.emplace_back(n, std::move(edges));
    }
  }
  return out;
}

}  // namespace matchnet
