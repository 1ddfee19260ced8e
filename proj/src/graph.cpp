#include "matchnet/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "matchnet/error.hpp"

namespace matchnet {

std::string Family::to_string() const {
  std::string out = name;
  for (std::size_t i = 0; i < params.size(); ++i) {
    out += (i == 0 ? ':' : ',');
    out += std::to_string(params[i]);
  }
  return out;
}

Family parse_family(const std::string& text) {
  Family f;
  const auto colon = text.find(':');
  f.name = text.substr(0, colon);
  if (f.name.empty()) throw ParameterError("empty family name in '" + text + "'");
  if (colon == std::string::npos) return f;
  std::stringstream ss(text.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      f.params.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParameterError("bad family parameter '" + item + "' in '" + text + "'");
    }
  }
  return f;
}

Graph::Graph(int n, std::vector<Edge> edges, Family family)
    : n_(n), edges_(std::move(edges)), family_(std::move(family)) {
  if (n_ < 1) throw ParameterError("graph needs at least one vertex");
  for (auto& e : edges_) {
    if (e.first < 0 || e.second < 0 || e.first >= n_ || e.second >= n_)
      throw StructureError("edge endpoint out of range");
    if (e.first == e.second) throw StructureError("self-loop on vertex " + std::to_string(e.first + 1));
    e = make_edge(e.first, e.second);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw StructureError("duplicate edge");
  adjacency_.assign(static_cast<std::size_t>(n_), {});
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());

  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : adjacency_[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n_) throw StructureError("graph is not connected");
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& adj : adjacency_) best = std::max(best, static_cast<int>(adj.size()));
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

Graph Graph::with_family(Family family) const {
  Graph copy = *this;
  copy.family_ = std::move(family);
  return copy;
}

VertexOrder::VertexOrder(std::vector<int> ranks) : rank_(std::move(ranks)) {
  vertex_.assign(rank_.size(), -1);
  for (std::size_t v = 0; v < rank_.size(); ++v) {
    const int r = rank_[v];
    if (r < 0 || r >= static_cast<int>(rank_.size()) || vertex_[r] != -1)
      throw InputError("vertex order is not a bijection");
    vertex_[r] = static_cast<Vertex>(v);
  }
}

VertexOrder VertexOrder::identity(int n) {
  std::vector<int> r(static_cast<std::size_t>(n));
  std::iota(r.begin(), r.end(), 0);
  return VertexOrder(std::move(r));
}

VertexOrder VertexOrder::from_sequence(std::span<const Vertex> vertices) {
  std::vector<int> r(vertices.size(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex v = vertices[i];
    if (v < 0 || v >= static_cast<int>(r.size())) throw InputError("vertex out of range in order");
    r[v] = static_cast<int>(i);
  }
  return VertexOrder(std::move(r));
}

std::vector<Vertex> Contour::marked_sequence() const {
  std::vector<Vertex> seq(marks.size());
  std::iota(seq.begin(), seq.end(), 0);
  std::sort(seq.begin(), seq.end(), [&](Vertex a, Vertex b) { return marks[a] < marks[b]; });
  return seq;
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
  const int n1 = g1.size();
  const int n2 = g2.size();
  std::vector<Edge> edges;
  edges.reserve(g1.edges().size() * n2 + g2.edges().size() * n1);
  for (int a = 0; a < n1; ++a)
    for (const auto& [u, v] : g2.edges()) edges.emplace_back(a * n2 + u, a * n2 + v);
  for (int b = 0; b < n2; ++b)
    for (const auto& [u, v] : g1.edges()) edges.emplace_back(u * n2 + b, v * n2 + b);
  Family fam{"product", {n1, n2}};
  if (g1.family().name == "path" && g2.family().name == "path") {
    fam = {"mesh", {n1, n2}};
  } else if (g1.family().name == "path" && g2.family().name == "mesh") {
    fam = {"mesh", {n1}};
    fam.params.insert(fam.params.end(), g2.family().params.begin(), g2.family().params.end());
  }
  return Graph(n1 * n2, std::move(edges), std::move(fam));
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> local(static_cast<std::size_t>(g.size()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (local[vertices[i]] != -1) throw InputError("repeated vertex in induced subgraph");
    local[vertices[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (local[u] >= 0 && local[v] >= 0) edges.emplace_back(local[u], local[v]);
  return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.size()), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<Vertex> bfs_parents(const Graph& g, Vertex source) {
  std::vector<Vertex> parent(static_cast<std::size_t>(g.size()), -2);
  std::deque<Vertex> queue{source};
  parent[source] = -1;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (parent[w] == -2) {
        parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  return parent;
}

int diameter(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.size(); ++v) {
    const auto d = bfs_distances(g, v);
    best = std::max(best, *std::max_element(d.begin(), d.end()));
  }
  return best;
}

namespace {

// Farthest vertex from `source`; ties resolved toward the smallest id.
Vertex farthest(const Graph& g, Vertex source) {
  const auto d = bfs_distances(g, source);
  Vertex best = source;
  for (Vertex v = 0; v < g.size(); ++v)
    if (d[v] > d[best]) best = v;
  return best;
}

std::vector<Vertex> bfs_path(const Graph& g, Vertex from, Vertex to) {
  const auto parent = bfs_parents(g, from);
  std::vector<Vertex> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::vector<Vertex> tree_diameter_path(const Graph& tree) {
  if (!tree.is_tree()) throw StructureError("diameter path requested on a non-tree");
  const Vertex a = farthest(tree, 0);
  const Vertex b = farthest(tree, a);
  return bfs_path(tree, a, b);
}

Graph spanning_tree(const Graph& g) {
  if (g.is_tree()) return g;
  const Vertex a = farthest(g, 0);
  const Vertex b = farthest(g, a);
  const auto spine = bfs_path(g, a, b);

  std::vector<char> in_tree(static_cast<std::size_t>(g.size()), 0);
  std::vector<Edge> edges;
  std::deque<Vertex> queue;
  for (std::size_t i = 0; i < spine.size(); ++i) {
    in_tree[spine[i]] = 1;
    queue.push_back(spine[i]);
    if (i > 0) edges.push_back(make_edge(spine[i - 1], spine[i]));
  }
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (!in_tree[w]) {
        in_tree[w] = 1;
        edges.push_back(make_edge(u, w));
        queue.push_back(w);
      }
    }
  }
  return Graph(g.size(), std::move(edges), {"tree", {g.size()}});
}

Contour tree_contour(const Graph& tree, Vertex root) {
  if (!tree.is_tree()) throw StructureError("contour requested on a non-tree");
  const int n = tree.size();
  Contour c;
  c.walk.reserve(static_cast<std::size_t>(2 * n - 1));
  std::vector<int> depth(static_cast<std::size_t>(n), -1);
  std::vector<int> first(static_cast<std::size_t>(n), -1);
  std::vector<int> last(static_cast<std::size_t>(n), -1);

  // Iterative DFS: (vertex, next neighbor index).
  std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
  depth[root] = 0;
  auto visit = [&](Vertex v) {
    const int idx = static_cast<int>(c.walk.size());
    c.walk.push_back(v);
    if (first[v] < 0) first[v] = idx;
    last[v] = idx;
  };
  visit(root);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto nbrs = tree.neighbors(v);
    while (next < nbrs.size() && depth[nbrs[next]] >= 0) ++next;
    if (next < nbrs.size()) {
      const Vertex w = nbrs[next++];
      depth[w] = depth[v] + 1;
      visit(w);
      stack.emplace_back(w, 0);
    } else {
      stack.pop_back();
      if (!stack.empty()) visit(stack.back().first);
    }
  }
  c.marks.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) c.marks[v] = (depth[v] % 2 == 0) ? first[v] : last[v];
  return c;
}

Matching maximal_matching(const Graph& g) {
  Matching m;
  std::vector<char> used(static_cast<std::size_t>(g.size()), 0);
  for (const auto& [u, v] : g.edges()) {
    if (!used[u] && !used[v]) {
      used[u] = used[v] = 1;
      m.edges.emplace_back(u, v);
    }
  }
  return m;
}

}  // namespace matchnet
