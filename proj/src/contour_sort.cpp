#include <algorithm>
#include <iterator>

#include "constructions_internal.hpp"
#include "matchnet/constructions.hpp"
#include "matchnet/error.hpp"

namespace matchnet {

namespace {

// Stage templates emulating one virtual comparison between walk indices a < b:
// walk the low pebble forward to walk[b-1], compare with walk[b], walk it back.
std::vector<Comparator> emulate(const std::vector<Vertex>& walk, int a, int b) {
  for (int i = a; i < b; ++i)
    if (walk[i] == walk[b]) throw InternalError("contour interval revisits its endpoint");
  std::vector<Comparator> ops;
  for (int i = a; i + 1 < b; ++i) ops.push_back({walk[i], walk[i + 1], CmpKind::Swap});
  ops.push_back({walk[b - 1], walk[b], CmpKind::Dir});
  for (int i = b - 2; i >= a; --i) ops.push_back({walk[i], walk[i + 1], CmpKind::Swap});
  return ops;
}

Comparator normalized(Comparator c) {
  if (c.kind == CmpKind::Swap && c.u > c.v) std::swap(c.u, c.v);
  return c;
}

}  // namespace

SortingNetwork contour_tree_sort(const Graph& tree) {
  if (!tree.is_tree()) throw StructureError("contour sorter needs a tree");
  const int n = tree.size();
  const int delta = std::max(tree.max_degree(), 1);  // a single vertex has degree 0
  const Contour contour = tree_contour(tree, 0);
  const auto seq = contour.marked_sequence();

  SortingNetwork net;
  net.graph = tree;
  net.order = VertexOrder::from_sequence(seq);
  int max_colors = 0;
  for (int round = 0; round < n && n > 1; ++round) {
    // Intervals of this odd-even round and their projected vertex sets.
    std::vector<std::vector<Comparator>> ops;
    std::vector<std::vector<Vertex>> touched;
    for (int j = round % 2; j + 1 < n; j += 2) {
      const int a = contour.marks[seq[j]];
      const int b = contour.marks[seq[j + 1]];
      if (b - a > 3 || b <= a) throw InternalError("contour mark gap out of range");
      ops.push_back(emulate(contour.walk, a, b));
      std::vector<Vertex> vs(contour.walk.begin() + a, contour.walk.begin() + b + 1);
      std::sort(vs.begin(), vs.end());
      vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
      touched.push_back(std::move(vs));
    }
    // Greedy colouring of the conflict graph, intervals taken in path order.
    std::vector<int> color(ops.size(), -1);
    int colors = 0;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      std::vector<char> banned(ops.size() + 1, 0);
      for (std::size_t k = 0; k < i; ++k) {
        std::vector<Vertex> common;
        std::set_intersection(touched[i].begin(), touched[i].end(), touched[k].begin(), touched[k].end(),
                              std::back_inserter(common));
        if (!common.empty()) banned[color[k]] = 1;
      }
      int c = 0;
      while (banned[c]) ++c;
      color[i] = c;
      colors = std::max(colors, c + 1);
    }
    if (colors > 4 * delta - 3) throw InternalError("contour colouring exceeds 4*delta-3 classes");
    max_colors = std::max(max_colors, colors);

    for (int c = 0; c < colors; ++c) {
      std::vector<Stage> sub;
      std::vector<char> used(static_cast<std::size_t>(n), 0);
      for (std::size_t i = 0; i < ops.size(); ++i) {
        if (color[i] != c) continue;
        for (Vertex v : touched[i]) {
          if (used[v]) throw InternalError("intervals in one colour class share a vertex");
          used[v] = 1;
        }
        if (sub.size() < ops[i].size()) sub.resize(ops[i].size());
        for (std::size_t k = 0; k < ops[i].size(); ++k) sub[k].cmp.push_back(normalized(ops[i][k]));
      }
      for (auto& st : sub) net.stages.push_back(std::move(st));
    }
  }
  net.provenance = {"contour", {{"n", n}, {"max_degree", delta}, {"max_colors", max_colors}}, {}};
  detail::certify(net, "contour: 5(4*delta-3)n", {{"n", n}, {"delta", delta}}, 5LL * (4 * delta - 3) * n);
  return net;
}

}  // namespace matchnet
