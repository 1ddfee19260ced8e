#include <algorithm>
#include <random>

#include "matchnet/error.hpp"
#include "matchnet/graph.hpp"

namespace matchnet {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw ParameterError(msg);
}

}  // namespace

PyramidLayout::PyramidLayout(int levels, int dim) : levels_(levels), dim_(dim) {
  require(levels >= 1, "pyramid needs at least one level");
  require(dim >= 1, "pyramid dimension must be positive");
  require(static_cast<long long>(levels - 1) * dim <= 24, "pyramid too large");
  offsets_.push_back(0);
  for (int l = 0; l < levels; ++l) offsets_.push_back(offsets_.back() + (1 << (l * dim)));
}

int PyramidLayout::level_of(Vertex v) const {
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), v);
  return static_cast<int>(it - offsets_.begin()) - 1;
}

std::vector<int> PyramidLayout::coords(Vertex v) const {
  const int l = level_of(v);
  int local = v - offsets_[l];
  std::vector<int> c(static_cast<std::size_t>(dim_));
  for (int i = dim_ - 1; i >= 0; --i) {
    c[i] = local & (side(l) - 1);
    local >>= l;
  }
  return c;
}

Vertex PyramidLayout::vertex(int level, std::span<const int> coords) const {
  int local = 0;
  for (int x : coords) local = (local << level) | x;
  return offsets_[level] + local;
}

Vertex PyramidLayout::parent(Vertex v) const {
  const int l = level_of(v);
  if (l == 0) return -1;
  auto c = coords(v);
  for (int& x : c) x >>= 1;
  return vertex(l - 1, c);
}

bool PyramidLayout::keeps_vertical_edge(Vertex v) const {
  if (level_of(v) == 0) return false;
  const auto c = coords(v);
  return std::all_of(c.begin(), c.end(), [](int x) { return x % 2 == 0; });
}

int PyramidLayout::maximal_paths_of_length(int k) const {
  const int start = levels_ - 1 - k;
  if (start < 0 || k < 0) return 0;
  if (start == 0) return 1;
  return level_size(start) - level_size(start - 1);
}

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e), {"path", {n}});
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return Graph(n, std::move(e), {"cycle", {n}});
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, std::move(e), {"complete", {n}});
}

Graph star_graph(int n) {
  require(n >= 2, "star needs n >= 2");
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(0, v);
  return Graph(n, std::move(e), {"star", {n}});
}

Graph multipartite_graph(int parts, int part_size) {
  require(parts >= 2, "multipartite needs at least two parts");
  require(part_size >= 1, "multipartite part size must be positive");
  const int n = parts * part_size;
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (u / part_size != v / part_size) e.emplace_back(u, v);
  return Graph(n, std::move(e), {"multipartite", {parts, part_size}});
}

Graph hypercube_graph(int dim) {
  require(dim >= 1 && dim <= 24, "hypercube dimension out of range");
  const int n = 1 << dim;
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < dim; ++b)
      if (!(v & (1 << b))) e.emplace_back(v, v | (1 << b));
  return Graph(n, std::move(e), {"hypercube", {dim}});
}

Graph mesh_graph(std::span<const int> lengths) {
  require(!lengths.empty(), "mesh needs at least one side length");
  long long total = 1;
  for (int l : lengths) {
    require(l >= 1, "mesh side lengths must be positive");
    total *= l;
    require(total <= (1 << 24), "mesh too large");
  }
  const int n = static_cast<int>(total);
  std::vector<Edge> e;
  int stride = n;
  for (int len : lengths) {
    stride /= len;
    for (int v = 0; v < n; ++v)
      if ((v / stride) % len + 1 < len) e.emplace_back(v, v + stride);
  }
  return Graph(n, std::move(e), {"mesh", std::vector<int>(lengths.begin(), lengths.end())});
}

Graph random_tree(int n, std::uint64_t seed) {
  require(n >= 1, "tree needs n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(static_cast<int>(rng() % static_cast<std::uint64_t>(v)), v);
  return Graph(n, std::move(e), {"random_tree", {n}});
}

Graph random_connected(int n, int extra, std::uint64_t seed) {
  require(n >= 1 && extra >= 0, "bad random graph parameters");
  std::mt19937_64 rng(seed);
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(static_cast<int>(rng() % static_cast<std::uint64_t>(v)), v);
  for (auto& edge : e) edge = make_edge(edge.first, edge.second);
  std::sort(e.begin(), e.end());
  for (int i = 0; i < extra && n >= 3; ++i) {
    const int u = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    const int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    if (u == v) continue;
    const Edge cand = make_edge(u, v);
    const auto it = std::lower_bound(e.begin(), e.end(), cand);
    if (it == e.end() || *it != cand) e.insert(it, cand);
  }
  return Graph(n, std::move(e), {"random_connected", {n, extra}});
}

namespace {

Graph pyramid_like(int levels, int dim, bool stripped) {
  const PyramidLayout layout(levels, dim);
  std::vector<Edge> e;
  for (Vertex v = 1; v < layout.total(); ++v) {
    const int l = layout.level_of(v);
    const auto c = layout.coords(v);
    for (int i = 0; i < dim; ++i) {
      if (c[i] + 1 < layout.side(l)) {
        auto next = c;
        ++next[i];
        e.emplace_back(v, layout.vertex(l, next));
      }
    }
    if (!stripped || layout.keeps_vertical_edge(v)) e.emplace_back(layout.parent(v), v);
  }
  return Graph(layout.total(), std::move(e), {stripped ? "multigrid" : "pyramid", {levels, dim}});
}

}  // namespace

Graph pyramid_graph(int levels, int dim) { return pyramid_like(levels, dim, false); }

Graph multigrid_graph(int levels, int dim) { return pyramid_like(levels, dim, true); }

Graph generate(const Family& family, std::uint64_t seed) {
  const auto& p = family.params;
  const auto& name = family.name;
  auto need = [&](std::size_t count) {
    if (p.size() != count)
      throw ParameterError("family '" + name + "' takes " + std::to_string(count) + " parameter(s)");
  };
  if (name == "path") return need(1), path_graph(p[0]);
  if (name == "cycle") return need(1), cycle_graph(p[0]);
  if (name == "complete") return need(1), complete_graph(p[0]);
  if (name == "star") return need(1), star_graph(p[0]);
  if (name == "multipartite") return need(2), multipartite_graph(p[0], p[1]);
  if (name == "hypercube") return need(1), hypercube_graph(p[0]);
  if (name == "mesh") return mesh_graph(p);
  if (name == "random_tree" || name == "tree") return need(1), random_tree(p[0], seed);
  if (name == "random_connected") return need(2), random_connected(p[0], p[1], seed);
  if (name == "pyramid") return need(2), pyramid_graph(p[0], p[1]);
  if (name == "multigrid") return need(2), multigrid_graph(p[0], p[1]);
  throw ParameterError("unknown graph family '" + name + "'");
}

}  // namespace matchnet
