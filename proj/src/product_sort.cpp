#include <algorithm>
#include <queue>

#include "constructions_internal.hpp"
#include "matchnet/constructions.hpp"
#include "matchnet/error.hpp"

namespace matchnet {

namespace {

bool generated_as(const Graph& g, const std::string& name) {
  if (g.family().name != name) return false;
  try {
    return generate(g.family()) == g;
  } catch (const Error&) {
    return false;
  }
}

bool is_complete(const Graph& g) {
  const long long n = g.size();
  return static_cast<long long>(g.edges().size()) == n * (n - 1) / 2;
}

bool is_path(const Graph& g) { return g.size() >= 1 && g == path_graph(g.size()); }

int hypercube_dim(const Graph& g) {
  const int n = g.size();
  if (n < 2 || (n & (n - 1)) != 0) return 0;
  const int dim = detail::ceil_log2(n);
  return g == hypercube_graph(dim) ? dim : 0;
}

SortingNetwork trivial_network(const Graph& g) {
  SortingNetwork net;
  net.graph = g;
  net.order = VertexOrder::identity(1);
  net.provenance = {"trivial", {{"n", 1}}, {}};
  detail::certify(net, "trivial", {}, 0);
  return net;
}

// Sub-rounds of the half-part merge schedule when q subgraphs of size s work in parallel.
long long sub_round_count(int n, int q, int s) {
  if (q == 1) return 1;
  const int blocks = static_cast<int>(detail::ceil_div(n, s / 2));
  long long total = 0;
  for (const auto& round : merge_exchange_rounds(blocks)) total += detail::ceil_div(static_cast<long long>(round.size()), q);
  return total;
}

std::vector<int> without_unit_sides(std::span<const int> lengths) {
  std::vector<int> out;
  for (int l : lengths)
    if (l > 1) out.push_back(l);
  return out;
}

SortingNetwork subgraph_by_ball(const Graph& g) {
  const int n = g.size();
  const int p = std::max(2, (n + 1) / 2);
  // BFS from vertex 0 gives a connected ball.
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> ball;
  std::queue<Vertex> frontier;
  frontier.push(0);
  seen[0] = 1;
  while (!frontier.empty() && static_cast<int>(ball.size()) < p) {
    const Vertex v = frontier.front();
    frontier.pop();
    ball.push_back(v);
    for (Vertex w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        frontier.push(w);
      }
  }
  std::sort(ball.begin(), ball.end());
  const SortingNetwork h_net = default_sorter(induced_subgraph(g, ball));
  return subgraph_sort(g, ball, h_net, full_as_partial(make_router(g), n));
}

}  // namespace

SortingNetwork product_sort(const Graph& g1, const Graph& g2, bool fix_up) {
  const int n1 = g1.size();
  const int n2 = g2.size();
  if (n1 < 2 || n2 < 2) throw ParameterError("product sorter needs factors with at least two vertices");
  const Graph g = cartesian_product(g1, g2);
  const int n = g.size();
  const Router r1 = make_router(g1);
  const Router r2 = make_router(g2);
  const Router router{"product", std::min(r1.depth_bound, r2.depth_bound) + r1.depth_bound + r2.depth_bound,
                      [r1, r2, n1, n2](std::span<const int> pi) { return route_product(r1, n1, r2, n2, pi); }};

  const SortingNetwork s1 = default_sorter(g1);
  const SortingNetwork s2 = default_sorter(g2);
  // Copies of g2 are the rows u1 * n2 + (0..n2-1); copies of g1 are the columns.
  const long long row_estimate = sub_round_count(n, n1, n2) * (router.depth_bound + s2.depth());
  const long long col_estimate = sub_round_count(n, n2, n1) * (router.depth_bound + s1.depth());
  const bool rows = row_estimate <= col_estimate;

  std::vector<std::vector<Vertex>> parts;
  std::vector<SortingNetwork> nets;
  if (rows) {
    for (int u1 = 0; u1 < n1; ++u1) {
      std::vector<Vertex> part;
      for (int u2 = 0; u2 < n2; ++u2) part.push_back(u1 * n2 + u2);
      parts.push_back(std::move(part));
      nets.push_back(s2);
    }
  } else {
    for (int u2 = 0; u2 < n2; ++u2) {
      std::vector<Vertex> part;
      for (int u1 = 0; u1 < n1; ++u1) part.push_back(u1 * n2 + u2);
      parts.push_back(std::move(part));
      nets.push_back(s1);
    }
  }
  SortingNetwork net = parallel_subgraph_sort(g, parts, nets, router, fix_up);
  net.provenance.construction = "product";
  net.provenance.params.push_back({"n1", n1});
  net.provenance.params.push_back({"n2", n2});
  net.provenance.tags.push_back({"subgraphs", rows ? "rows" : "columns"});
  net.provenance.tags.push_back({"factor_sorter", rows ? s2.provenance.construction : s1.provenance.construction});
  return net;
}

SortingNetwork mesh_sort(std::span<const int> lengths, bool fix_up) {
  const Graph g = mesh_graph(lengths);
  const auto sides = without_unit_sides(lengths);
  SortingNetwork net;
  if (sides.empty()) {
    net = trivial_network(g);
  } else if (sides.size() == 1) {
    net = odd_even_transposition(sides[0]);
  } else {
    const std::vector<int> rest(sides.begin() + 1, sides.end());
    net = product_sort(path_graph(sides[0]), mesh_graph(rest), fix_up);
    net.provenance.construction = "mesh";
  }
  // Unit sides do not change the numbering, so the stages carry over verbatim.
  net.graph = g;
  return net;
}

std::vector<std::string> construction_names() {
  return {"odd-even", "bitonic", "batcher", "contour", "simulate", "longest-path", "subgraph", "product", "pyramid", "auto"};
}

SortingNetwork default_sorter(const Graph& g) {
  const int n = g.size();
  if (n == 1) return trivial_network(g);
  if (is_path(g)) return build("odd-even", g);
  if (is_complete(g)) return build("batcher", g);
  if (hypercube_dim(g) > 0) return build("bitonic", g);
  if (generated_as(g, "mesh")) {
    SortingNetwork net = mesh_sort(g.family().params, false);
    net.graph = g;
    return net;
  }
  if (generated_as(g, "pyramid")) return build("pyramid", g);
  if (g.is_tree()) return build("contour", g);
  if (generated_as(g, "multipartite")) return build("simulate", g);
  return longest_path_sort(g);
}

SortingNetwork build(const std::string& construction, const Graph& g) {
  const int n = g.size();
  SortingNetwork net;
  if (construction == "auto") {
    return default_sorter(g);
  } else if (construction == "odd-even") {
    if (!is_path(g)) throw StructureError("odd-even transposition needs the path numbering 1-2-...-n");
    net = odd_even_transposition(n);
  } else if (construction == "bitonic") {
    const int dim = hypercube_dim(g);
    if (dim == 0) throw StructureError("bitonic sorter needs a hypercube");
    net = bitonic_hypercube(dim);
  } else if (construction == "batcher") {
    if (!is_complete(g)) throw StructureError("batcher sorter needs a complete graph");
    net = batcher_complete(n);
  } else if (construction == "contour") {
    net = contour_tree_sort(g.is_tree() ? g : spanning_tree(g));
  } else if (construction == "simulate") {
    net = simulate_complete(g, batcher_complete(n), make_router(g));
  } else if (construction == "longest-path") {
    net = longest_path_sort(g);
  } else if (construction == "subgraph") {
    if (n < 2) throw ParameterError("subgraph sorter needs n >= 2");
    net = subgraph_by_ball(g);
  } else if (construction == "product") {
    if (generated_as(g, "mesh")) {
      net = mesh_sort(g.family().params);
    } else if (const int dim = hypercube_dim(g); dim >= 2) {
      net = product_sort(path_graph(2), hypercube_graph(dim - 1));
    } else {
      throw StructureError("product sorter needs a mesh or hypercube family graph");
    }
  } else if (construction == "pyramid") {
    if (!generated_as(g, "pyramid")) throw StructureError("pyramid sorter needs a pyramid family graph");
    net = pyramid_sort(g.family().params[0], g.family().params[1]);
  } else {
    throw ParameterError("unknown construction '" + construction + "'");
  }
  net.graph = g;
  return net;
}

}  // namespace matchnet
