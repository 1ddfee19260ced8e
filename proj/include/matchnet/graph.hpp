#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace matchnet {

/// Vertices are numbered 0..n-1 in memory; serialized forms are 1-based.
using Vertex = int;

/// Undirected edge stored with `first < second`.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Generator family tag with integer parameters, e.g. {"mesh", {3, 3}}.
struct Family {
  std::string name;
  std::vector<int> params;

  bool empty() const { return name.empty(); }
  /// "mesh:3,3" style spelling; also accepted by `parse_family`.
  std::string to_string() const;
  bool operator==(const Family&) const = default;
};

/// Parses "name:p1,p2,..." (parameters optional).
Family parse_family(const std::string& text);

/// Connected simple undirected graph. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  /// Validates range, self-loops, duplicates and connectivity.
  Graph(int n, std::vector<Edge> edges, Family family = {});

  int size() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  int max_degree() const;
  bool has_edge(Vertex u, Vertex v) const;
  bool is_tree() const { return static_cast<int>(edges_.size()) == n_ - 1; }
  const Family& family() const { return family_; }

  Graph with_family(Family family) const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  Family family_;
};

/// Bijection vertex -> rank in 0..n-1 (serialized 1-based).
class VertexOrder {
 public:
  VertexOrder() = default;
  /// `ranks[v]` is the rank of vertex v; throws InputError unless bijective.
  explicit VertexOrder(std::vector<int> ranks);
  static VertexOrder identity(int n);
  /// Order whose rank r is held by `vertices[r]`.
  static VertexOrder from_sequence(std::span<const Vertex> vertices);

  int size() const { return static_cast<int>(rank_.size()); }
  int rank(Vertex v) const { return rank_[static_cast<std::size_t>(v)]; }
  Vertex vertex_at(int r) const { return vertex_[static_cast<std::size_t>(r)]; }
  const std::vector<int>& ranks() const { return rank_; }

  bool operator==(const VertexOrder&) const = default;

 private:
  std::vector<int> rank_;
  std::vector<Vertex> vertex_;
};

struct Matching {
  std::vector<Edge> edges;
  int size() const { return static_cast<int>(edges.size()); }
};

/// Closed depth-first walk of a tree plus one marked walk index per vertex.
struct Contour {
  std::vector<Vertex> walk;  // 2n-1 entries
  std::vector<int> marks;    // marks[v] = index into walk
  /// Vertices sorted by their marked index; this is the virtual path order.
  std::vector<Vertex> marked_sequence() const;
};

/// Index arithmetic for the pyramid / multigrid numbering: levels from the apex,
/// each level a d-dimensional mesh of side 2^l in row-major order.
class PyramidLayout {
 public:
  PyramidLayout(int levels, int dim);

  int levels() const { return levels_; }
  int dim() const { return dim_; }
  int total() const { return offsets_.back(); }
  int side(int level) const { return 1 << level; }
  int level_size(int level) const { return offsets_[level + 1] - offsets_[level]; }
  int level_offset(int level) const { return offsets_[level]; }
  int level_of(Vertex v) const;
  std::vector<int> coords(Vertex v) const;
  Vertex vertex(int level, std::span<const int> coords) const;
  /// Parent on the level above (coordinate-wise halving); -1 for the apex.
  Vertex parent(Vertex v) const;
  /// True when v keeps its vertical edge in the multigrid (all coordinates even).
  bool keeps_vertical_edge(Vertex v) const;
  /// Number of maximal vertical multigrid paths of length k.
  int maximal_paths_of_length(int k) const;

 private:
  int levels_;
  int dim_;
  std::vector<int> offsets_;
};

// ---- generators (canonical numbering documented on each) ----

/// 0-1-2-...-(n-1).
Graph path_graph(int n);
/// Path plus edge (n-1, 0); n >= 3.
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// Vertex 0 is the center of K_{1,n-1}.
Graph star_graph(int n);
/// Part k holds vertices k*s .. k*s+s-1.
Graph multipartite_graph(int parts, int part_size);
/// Vertex bits are coordinates; same numbering as mesh(2,...,2).
Graph hypercube_graph(int dim);
/// Row-major, first coordinate slowest; mesh(a,b) == cartesian_product(path(a), path(b)).
Graph mesh_graph(std::span<const int> lengths);
/// Vertex i >= 1 attaches to a uniformly drawn earlier vertex.
Graph random_tree(int n, std::uint64_t seed);
/// random_tree plus `extra` attempted random chords.
Graph random_connected(int n, int extra, std::uint64_t seed);
Graph pyramid_graph(int levels, int dim);
Graph multigrid_graph(int levels, int dim);

/// Dispatches on `family.name`; random families consume `seed`.
Graph generate(const Family& family, std::uint64_t seed = 0);

/// (u1,u2) is numbered u1 * |V2| + u2.
Graph cartesian_product(const Graph& g1, const Graph& g2);

/// Subgraph induced by `vertices` (local vertex i = vertices[i]); StructureError if disconnected.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// ---- structural helpers ----

std::vector<int> bfs_distances(const Graph& g, Vertex source);
/// parent[v] on a BFS tree from `source` (neighbors scanned ascending); parent[source] = -1.
std::vector<Vertex> bfs_parents(const Graph& g, Vertex source);
int diameter(const Graph& g);

/// Spanning tree grown around a double-BFS diameter path; a tree maps to itself.
Graph spanning_tree(const Graph& g);
/// Diameter path of a tree by double BFS; StructureError on non-trees.
std::vector<Vertex> tree_diameter_path(const Graph& tree);
/// Depth-first contour from `root`, children visited in ascending order.
Contour tree_contour(const Graph& tree, Vertex root = 0);
/// Greedy maximal matching over the sorted edge list.
Matching maximal_matching(const Graph& g);

}  // namespace matchnet
