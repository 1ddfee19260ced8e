#include <algorithm>

#include "constructions_internal.hpp"
#include "matchnet/constructions.hpp"
#include "matchnet/error.hpp"
#include "routing_internal.hpp"

namespace matchnet {

namespace {

// Blocks of equal size over logical slots; slots past n hold virtual +inf values that
// never occupy a vertex. vertex_of[s] is where slot s's value sits (-1 when virtual).
class BlockState {
 public:
  BlockState(int n, int block) : n_(n), block_(block) {
    blocks_ = static_cast<int>(detail::ceil_div(n, block));
    vertex_of_.assign(static_cast<std::size_t>(blocks_ * block_), -1);
    slot_at_.assign(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
      vertex_of_[s] = s;
      slot_at_[s] = s;
    }
  }

  int blocks() const { return blocks_; }
  int block_size() const { return block_; }

  // Vertices holding the real values of the given blocks.
  std::vector<Vertex> reals(std::initializer_list<int> blks) const {
    std::vector<Vertex> out;
    for (int blk : blks)
      for (int k = 0; k < block_; ++k)
        if (vertex_of_[blk * block_ + k] >= 0) out.push_back(vertex_of_[blk * block_ + k]);
    return out;
  }

  // Every value moves from v to dest[v].
  void move(std::span<const Vertex> dest) {
    std::vector<int> next(slot_at_.size(), -1);
    for (Vertex v = 0; v < n_; ++v) {
      const int s = slot_at_[v];
      next[dest[v]] = s;
      vertex_of_[s] = dest[v];
    }
    slot_at_ = std::move(next);
  }

  void swap_vertices(Vertex a, Vertex b) {
    std::swap(slot_at_[a], slot_at_[b]);
    vertex_of_[slot_at_[a]] = a;
    vertex_of_[slot_at_[b]] = b;
  }

  // After a merge of blocks (lo, hi): ranked[r] holds the r-th smallest real value.
  void relabel(int lo, int hi, const std::vector<Vertex>& ranked) {
    for (int r = 0; r < 2 * block_; ++r) {
      const int s = r < block_ ? lo * block_ + r : hi * block_ + (r - block_);
      vertex_of_[s] = r < static_cast<int>(ranked.size()) ? ranked[r] : -1;
      if (vertex_of_[s] >= 0) slot_at_[vertex_of_[s]] = s;
    }
  }

  // Same for a single block sorted on its own.
  void relabel_single(int blk, const std::vector<Vertex>& ranked) {
    for (int r = 0; r < block_; ++r) {
      const int s = blk * block_ + r;
      vertex_of_[s] = r < static_cast<int>(ranked.size()) ? ranked[r] : -1;
      if (vertex_of_[s] >= 0) slot_at_[vertex_of_[s]] = s;
    }
  }

  // Final positions of slots 0..n-1 (must all be real).
  std::vector<Vertex> final_positions() const {
    std::vector<Vertex> out(vertex_of_.begin(), vertex_of_.begin() + n_);
    for (Vertex v : out)
      if (v < 0) throw InternalError("virtual slot ended inside the real range");
    return out;
  }

 private:
  int n_;
  int block_;
  int blocks_;
  std::vector<Vertex> vertex_of_;
  std::vector<int> slot_at_;
};

// Runs h_net inside H treating every vertex not in `real` as +inf. Returns the emitted
// stages (global ids), updates `state` for the data-independent swaps, and reports the
// vertices holding the real values in ascending rank.
std::vector<Stage> sentinel_sort(const SortingNetwork& h_net, std::span<const Vertex> h_vertices,
                                 const std::vector<Vertex>& real, BlockState& state, std::vector<Vertex>& ranked,
                                 int n) {
  const int p = static_cast<int>(h_vertices.size());
  std::vector<int> local_of(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < p; ++i) local_of[h_vertices[i]] = i;
  std::vector<char> tag(static_cast<std::size_t>(p), 0);
  for (Vertex v : real) {
    if (local_of[v] < 0) throw InternalError("merge value outside the sorting subgraph");
    tag[local_of[v]] = 1;
  }
  std::vector<Stage> out;
  for (const auto& st : h_net.stages) {
    Stage emitted;
    for (const auto& c : st.cmp) {
      const Vertex gu = h_vertices[c.u];
      const Vertex gv = h_vertices[c.v];
      const bool ru = tag[c.u], rv = tag[c.v];
      if (!ru && !rv) continue;
      if (ru && rv) {
        emitted.cmp.push_back({gu, gv, c.kind});
        continue;
      }
      // Exactly one real value: a comparator only moves it when it sits on the max side.
      if (c.kind == CmpKind::Dir && ru) continue;
      emitted.cmp.push_back({std::min(gu, gv), std::max(gu, gv), CmpKind::Swap});
      std::swap(tag[c.u], tag[c.v]);
    }
    // Data-independent bookkeeping: unconditional swaps move whole slots; comparators between
    // two real values only permute values that are relabeled by rank afterwards.
    for (const auto& c : emitted.cmp)
      if (c.kind == CmpKind::Swap) state.swap_vertices(c.u, c.v);
    out.push_back(std::move(emitted));
  }
  ranked.clear();
  for (int r = 0; r < p; ++r) {
    const int local = h_net.order.vertex_at(r);
    if (r < static_cast<int>(real.size())) {
      if (!tag[local]) throw InternalError("sentinel sort left a real value above a sentinel");
      ranked.push_back(h_vertices[local]);
    }
  }
  return out;
}

// Targets inside H for the given values: values already in H stay, the rest take the
// lowest free local vertices.
std::vector<Vertex> fill_targets(std::span<const Vertex> h_vertices, const std::vector<Vertex>& values,
                                 std::vector<char>& taken) {
  std::vector<Vertex> targets(values.size(), -1);
  std::vector<char> in_h(taken.size(), 0);
  for (Vertex v : h_vertices) in_h[v] = 1;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (in_h[values[i]] && !taken[values[i]]) {
      targets[i] = values[i];
      taken[values[i]] = 1;
    }
  std::size_t next = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (targets[i] >= 0) continue;
    while (taken[h_vertices[next]]) ++next;
    targets[i] = h_vertices[next];
    taken[targets[i]] = 1;
  }
  return targets;
}

void append(std::vector<Stage>& dst, std::vector<Stage> src) {
  for (auto& s : src) dst.push_back(std::move(s));
}

// Stages moving slot r's value to vertex r, and the order they leave behind.
void finish(SortingNetwork& net, const BlockState& state, const Router& full, bool fix_up) {
  const auto positions = state.final_positions();
  const int n = net.graph.size();
  if (!fix_up) {
    net.order = VertexOrder::from_sequence(positions);
    return;
  }
  Permutation home(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) home[positions[r]] = r;
  if (!is_identity(home)) append(net.stages, full.route(home).stages);
  net.order = VertexOrder::identity(n);
}

std::vector<Vertex> sorted_copy(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

SortingNetwork subgraph_sort(const Graph& g, std::span<const Vertex> h_vertices, const SortingNetwork& h_net,
                             const PartialRouter& router, SubgraphOptions options) {
  const int n = g.size();
  const int p = static_cast<int>(h_vertices.size());
  if (p < 1 || h_net.graph.size() != p) throw InputError("subgraph network size differs from |H|");
  const Graph h = induced_subgraph(g, h_vertices);
  for (const auto& [u, v] : h_net.graph.edges())
    if (!h.has_edge(u, v)) throw InputError("subgraph network uses an edge outside H");
  const int cap = options.capacity > 0 ? std::min(options.capacity, p) : p;
  const Router full = make_router(g);

  SortingNetwork net;
  net.graph = g;
  if (n == 1) {
    net.order = VertexOrder::identity(1);
    net.provenance = {"subgraph", {{"n", 1}}, {}};
    detail::certify(net, "trivial", {}, 0);
    return net;
  }
  const int block = cap >= n ? n : cap / 2;
  if (block < 1) throw ParameterError("subgraph capacity must be at least 2");
  BlockState state(n, block);
  const int q = state.blocks();
  const auto schedule = sequential_sorter(q);

  auto merge_into_h = [&](std::vector<Vertex> values) {
    std::vector<char> taken(static_cast<std::size_t>(n), 0);
    PartialTask task{values, fill_targets(h_vertices, values, taken)};
    bool settled = true;
    for (int i = 0; i < task.size(); ++i) settled = settled && task.sources[i] == task.targets[i];
    if (settled) return;
    const auto plan = router.route(task);
    if (!plan_fills(plan, task)) throw InternalError("partial router missed the subgraph");
    append(net.stages, plan.stages);
    state.move(plan.realized);
  };

  std::vector<Vertex> ranked;
  if (q == 1) {
    merge_into_h(state.reals({0}));
    append(net.stages, sentinel_sort(h_net, h_vertices, sorted_copy(state.reals({0})), state, ranked, n));
    state.relabel_single(0, ranked);
  } else {
    for (const auto& [lo, hi] : schedule) {
      merge_into_h(state.reals({lo, hi}));
      append(net.stages, sentinel_sort(h_net, h_vertices, sorted_copy(state.reals({lo, hi})), state, ranked, n));
      state.relabel(lo, hi, ranked);
    }
  }
  detail::drop_empty(net.stages);
  finish(net, state, full, options.fix_up);

  const long long merges = q == 1 ? 1 : static_cast<long long>(schedule.size());
  const long long bound = merges * (router.depth_bound + h_net.depth()) + (options.fix_up ? full.depth_bound : 0);
  net.provenance = {"subgraph",
                    {{"n", n}, {"h", p}, {"capacity", cap}, {"blocks", q}, {"merges", merges}},
                    {{"router", router.name}, {"h_net", h_net.provenance.construction}}};
  detail::certify(net, "merges * (rt_partial + st(H)) + rt",
                  {{"n", n}, {"q", q}, {"merges", merges}, {"rt_partial", router.depth_bound},
                   {"st_h", h_net.depth()}, {"rt", options.fix_up ? full.depth_bound : 0}},
                  bound);
  return net;
}

SortingNetwork longest_path_sort(const Graph& g) {
  const int n = g.size();
  const Graph tree = spanning_tree(g);
  const auto path = tree_diameter_path(tree);
  const int d = static_cast<int>(path.size()) - 1;
  SortingNetwork net;
  if (static_cast<int>(path.size()) == n) {
    // H is the whole graph: one odd-even pass along the path plus the fix-up.
    net = subgraph_sort(g, path, odd_even_transposition(n), full_as_partial(make_router(g), n));
  } else {
    const auto router = path_partial_router(tree);
    SubgraphOptions opt;
    opt.capacity = d;  // route_to_path carries at most d pebbles
    const PartialRouter bounded{router.name, d + 2LL * (2 * (d / 2) - 1), router.route};
    net = subgraph_sort(g, path, odd_even_transposition(d + 1), bounded, opt);
  }
  net.provenance.construction = "longest-path";
  net.provenance.params.push_back({"d", d});
  return net;
}

SortingNetwork parallel_subgraph_sort(const Graph& g, const std::vector<std::vector<Vertex>>& parts,
                                      const std::vector<SortingNetwork>& nets, const Router& router, bool fix_up) {
  const int n = g.size();
  const int q = static_cast<int>(parts.size());
  if (q < 1 || static_cast<int>(nets.size()) != q) throw ParameterError("partition error: one network per part");
  const int s = static_cast<int>(parts[0].size());
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < q; ++k) {
    if (static_cast<int>(parts[k].size()) != s) throw ParameterError("partition error: parts differ in size");
    if (nets[k].graph.size() != s) throw ParameterError("partition error: network size differs from its part");
    const Graph hk = induced_subgraph(g, parts[k]);
    for (const auto& [u, v] : nets[k].graph.edges())
      if (!hk.has_edge(u, v)) throw InputError("part network uses an edge outside its subgraph");
    for (Vertex v : parts[k]) {
      if (v < 0 || v >= n || covered[v]) throw ParameterError("partition error: parts overlap or leave range");
      covered[v] = 1;
    }
  }
  if (s * q != n) throw ParameterError("partition error: parts do not cover the graph");

  SortingNetwork net;
  net.graph = g;
  int max_st = 0;
  for (const auto& hn : nets) max_st = std::max(max_st, hn.depth());
  const int half = q == 1 ? n : s / 2;
  if (half < 1) throw ParameterError("parts need at least two vertices");
  BlockState state(n, half);
  const int blocks = state.blocks();
  long long sub_rounds = 0;
  long long base_depth = 0;

  std::vector<Vertex> ranked;
  if (blocks == 1) {
    append(net.stages, sentinel_sort(nets[0], parts[0], sorted_copy(state.reals({0})), state, ranked, n));
    state.relabel_single(0, ranked);
    sub_rounds = 1;
  } else {
    const auto rounds = merge_exchange_rounds(blocks);
    base_depth = static_cast<long long>(rounds.size());
    for (const auto& round : rounds) {
      for (std::size_t start = 0; start < round.size(); start += static_cast<std::size_t>(q)) {
        const std::size_t stop = std::min(round.size(), start + static_cast<std::size_t>(q));
        ++sub_rounds;
        // One routing brings every merge of this sub-round into its own subgraph.
        PartialTask task;
        std::vector<char> taken(static_cast<std::size_t>(n), 0);
        for (std::size_t m = start; m < stop; ++m) {
          const auto values = state.reals({round[m].first, round[m].second});
          const auto targets = fill_targets(parts[m - start], values, taken);
          task.sources.insert(task.sources.end(), values.begin(), values.end());
          task.targets.insert(task.targets.end(), targets.begin(), targets.end());
        }
        const auto perm = complete_task(n, task);
        if (!is_identity(perm)) {
          const auto plan = router.route(perm);
          append(net.stages, plan.stages);
          state.move(plan.realized);
        }
        std::vector<std::vector<Stage>> sorts;
        std::vector<std::vector<Vertex>> rankings;
        for (std::size_t m = start; m < stop; ++m) {
          const auto values = sorted_copy(state.reals({round[m].first, round[m].second}));
          sorts.push_back(sentinel_sort(nets[m - start], parts[m - start], values, state, ranked, n));
          rankings.push_back(ranked);
        }
        append(net.stages, detail::merge_parallel(sorts));
        for (std::size_t m = start; m < stop; ++m)
          state.relabel(round[m].first, round[m].second, rankings[m - start]);
      }
    }
  }
  detail::drop_empty(net.stages);
  finish(net, state, router, fix_up);

  const long long bound = sub_rounds * (router.depth_bound + max_st) + (fix_up ? router.depth_bound : 0);
  net.provenance = {"parallel-subgraph",
                    {{"n", n}, {"parts", q}, {"part_size", s}, {"blocks", blocks}, {"sub_rounds", sub_rounds}},
                    {{"router", router.name}}};
  detail::certify(net, "sub_rounds * (rt + max st(H_k)) + rt",
                  {{"n", n}, {"q", q}, {"base_depth", base_depth}, {"sub_rounds", sub_rounds},
                   {"rt", router.depth_bound}, {"max_st_h", max_st}},
                  bound, "merge-exchange on the half-parts replaces the logarithmic-depth base network");
  return net;
}

}  // namespace matchnet
