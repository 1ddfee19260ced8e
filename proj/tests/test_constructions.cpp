#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "matchnet/constructions.hpp"
#include "matchnet/error.hpp"
#include "matchnet/io.hpp"
#include "matchnet/verify.hpp"
#include "support.hpp"

using namespace matchnet;
using namespace testing_support;

namespace {

void expect_sorter(const SortingNetwork& net) {
  ASSERT_NO_THROW(validate(net));
  ASSERT_TRUE(matchings_on(net.graph, net.stages));
  ASSERT_TRUE(net.certificate.has_value());
  EXPECT_TRUE(net.certificate->holds()) << net.certificate->achieved_depth << " > " << net.certificate->claimed_bound;
  EXPECT_EQ(net.certificate->achieved_depth, net.depth());
  EXPECT_TRUE(reference_zero_one(net));
}

bool all_dir(const SortingNetwork& net) {
  for (const auto& st : net.stages)
    for (const auto& c : st.cmp)
      if (c.kind != CmpKind::Dir) return false;
  return true;
}

}  // namespace

TEST(OddEven, DepthAndSorts) {
  for (int n = 1; n <= 12; ++n) {
    const auto net = odd_even_transposition(n);
    EXPECT_EQ(net.depth(), n == 1 ? 0 : n);
    EXPECT_TRUE(net.order == VertexOrder::identity(n));
    EXPECT_TRUE(all_dir(net));
    expect_sorter(net);
  }
  const auto net = odd_even_transposition(3);
  EXPECT_EQ(execute(net, std::vector<int>{3, 1, 2}), (std::vector<int>{1, 2, 3}));
}

TEST(Bitonic, HypercubeEdgesAndDepth) {
  for (int dim = 1; dim <= 4; ++dim) {
    const auto net = bitonic_hypercube(dim);
    EXPECT_EQ(net.depth(), dim * (dim + 1) / 2);
    EXPECT_TRUE(net.graph == hypercube_graph(dim));
    expect_sorter(net);
  }
}

TEST(MergeExchange, RoundsAreDisjointAndSort) {
  for (int n = 1; n <= 17; ++n) {
    for (const auto& round : merge_exchange_rounds(n)) {
      std::vector<char> used(static_cast<std::size_t>(n), 0);
      for (const auto& [lo, hi] : round) {
        EXPECT_LT(lo, hi);
        EXPECT_FALSE(used[lo] || used[hi]);
        used[lo] = used[hi] = 1;
      }
    }
    const auto net = batcher_complete(n);
    expect_sorter(net);
    int count = 0;
    for (const auto& st : net.stages) count += st.size();
    EXPECT_EQ(static_cast<int>(sequential_sorter(n).size()), count);
  }
}

TEST(Contour, RandomTrees) {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 60; ++t) {
    const Graph tree = gen_tree(rng, 1, 12);
    const auto net = contour_tree_sort(tree);
    expect_sorter(net);
    EXPECT_LE(net.depth(), 5LL * (4 * std::max(tree.max_degree(), 1) - 3) * tree.size());
  }
  EXPECT_THROW(contour_tree_sort(cycle_graph(5)), StructureError);
}

TEST(Contour, TargetOrderFollowsFirstVisits) {
  const Graph tree = star_graph(5);
  const auto net = contour_tree_sort(tree);
  EXPECT_EQ(net.order.vertex_at(0), 0);
  expect_sorter(net);
}

TEST(Simulate, NamedGraphsAndRandom) {
  const auto k222 = build("simulate", multipartite_graph(3, 2));
  expect_sorter(k222);
  const auto star = build("simulate", star_graph(8));
  expect_sorter(star);
  std::mt19937_64 rng(103);
  for (int t = 0; t < 20; ++t) {
    const Graph g = gen_connected(rng, 2, 10);
    const auto net = simulate_complete(g, batcher_complete(g.size()), make_router(g));
    expect_sorter(net);
    EXPECT_TRUE(net.order == VertexOrder::identity(g.size()));
  }
}

TEST(Simulate, RejectsBadBase) {
  const Graph g = path_graph(4);
  EXPECT_THROW(simulate_complete(g, batcher_complete(5), make_router(g)), InputError);
}

TEST(Subgraph, LongestPathRandomGraphs) {
  std::mt19937_64 rng(107);
  for (int t = 0; t < 25; ++t) {
    const Graph g = gen_connected(rng, 1, 12);
    expect_sorter(longest_path_sort(g));
  }
  for (int t = 0; t < 15; ++t) expect_sorter(longest_path_sort(gen_tree(rng, 1, 14)));
}

TEST(Subgraph, StarCertificate) {
  const auto net = longest_path_sort(star_graph(8));
  expect_sorter(net);
  EXPECT_EQ(net.provenance.construction, "longest-path");
}

TEST(Subgraph, BallConstruction) {
  std::mt19937_64 rng(109);
  for (int t = 0; t < 15; ++t) expect_sorter(build("subgraph", gen_connected(rng, 2, 10)));
}

TEST(Subgraph, RejectsForeignNetwork) {
  const Graph g = star_graph(5);
  const auto router = full_as_partial(make_router(g), 5);
  const std::vector<Vertex> leaves{1, 2};  // not adjacent
  EXPECT_THROW(subgraph_sort(g, leaves, odd_even_transposition(2), router), StructureError);
  // Local path 0-1-2 maps to 0-1-2 in the star, but 1-2 is not an edge there.
  const std::vector<Vertex> h{0, 1, 2};
  EXPECT_THROW(subgraph_sort(g, h, odd_even_transposition(3), router), InputError);
}

TEST(Product, MeshesAndHypercubes) {
  for (const std::vector<int>& l : {std::vector<int>{2, 2}, {3, 3}, {2, 3}, {4, 2}, {2, 2, 2}, {4, 4}}) {
    const auto net = mesh_sort(l);
    expect_sorter(net);
    EXPECT_TRUE(net.order == VertexOrder::identity(net.graph.size()));
  }
  for (const std::vector<int>& l : {std::vector<int>{3, 3}, {1, 4}, {3, 1, 2}}) expect_sorter(mesh_sort(l, false));
  expect_sorter(build("product", hypercube_graph(3)));
  expect_sorter(build("product", hypercube_graph(4)));
}

TEST(Product, GeneralFactors) {
  std::mt19937_64 rng(113);
  for (int t = 0; t < 8; ++t) {
    const Graph g1 = gen_connected(rng, 2, 4), g2 = gen_connected(rng, 2, 4);
    expect_sorter(product_sort(g1, g2));
  }
  EXPECT_THROW(product_sort(path_graph(1), path_graph(3)), ParameterError);
}

TEST(Product, ParallelPartitionErrors) {
  const Graph g = mesh_graph(std::vector<int>{2, 2});
  const Router r = make_router(g);
  const std::vector<std::vector<Vertex>> overlap{{0, 1}, {1, 3}};
  const std::vector<SortingNetwork> nets{odd_even_transposition(2), odd_even_transposition(2)};
  EXPECT_THROW(parallel_subgraph_sort(g, overlap, nets, r), ParameterError);
  const std::vector<std::vector<Vertex>> uneven{{0, 1, 3}, {2}};
  EXPECT_THROW(parallel_subgraph_sort(g, uneven, nets, r), ParameterError);
}

TEST(Pyramid, SmallCases) {
  for (const auto& [m, d] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {3, 1}, {2, 2}, {4, 1}}) {
    const auto net = pyramid_sort(m, d);
    EXPECT_TRUE(net.graph == pyramid_graph(m, d));
    expect_sorter(net);
  }
  EXPECT_THROW(pyramid_sort(0, 1), ParameterError);
}

TEST(Pyramid, ThreeTwoZeroOne) {
  const auto net = pyramid_sort(3, 2);
  EXPECT_EQ(net.graph.size(), 21);
  const auto report = verify_zero_one(net, 21);
  EXPECT_TRUE(report.passed);
  EXPECT_TRUE(net.certificate->holds());
}

TEST(Build, EveryNameOnSuitableGraph) {
  const std::vector<std::pair<std::string, Graph>> cases{
      {"odd-even", path_graph(6)},        {"bitonic", hypercube_graph(3)}, {"batcher", complete_graph(6)},
      {"contour", random_tree(9, 3)},    {"contour", cycle_graph(6)},     {"simulate", star_graph(6)},
      {"longest-path", cycle_graph(7)},  {"subgraph", star_graph(7)},     {"product", generate(parse_family("mesh:3,2"))},
      {"pyramid", pyramid_graph(2, 2)},  {"auto", random_connected(9, 4, 5)}};
  for (const auto& [name, g] : cases) {
    SCOPED_TRACE(name);
    const auto net = build(name, g);
    EXPECT_TRUE(net.graph == g);
    expect_sorter(net);
  }
  EXPECT_THROW(build("odd-even", star_graph(4)), StructureError);
  EXPECT_THROW(build("bitonic", path_graph(3)), StructureError);
  EXPECT_THROW(build("no-such", path_graph(3)), ParameterError);
  EXPECT_EQ(construction_names().size(), 10u);
}

TEST(Build, AutoCoversFamilies) {
  for (const char* fam : {"path:5", "complete:5", "hypercube:3", "mesh:3,3", "pyramid:3,1", "star:6", "tree:10",
                          "multipartite:3,2", "cycle:6", "random_connected:9,3"}) {
    SCOPED_TRACE(fam);
    expect_sorter(build("auto", generate(parse_family(fam), 4)));
  }
}

TEST(Build, Deterministic) {
  for (const char* fam : {"mesh:3,3", "random_connected:10,4", "tree:12", "pyramid:3,1"}) {
    const Graph g = generate(parse_family(fam), 9);
    for (const auto& name : construction_names()) {
      std::string first, second;
      try {
        first = dump(network_to_json(build(name, g)));
      } catch (const Error&) {
        continue;
      }
      second = dump(network_to_json(build(name, generate(parse_family(fam), 9))));
      EXPECT_EQ(first, second) << fam << " " << name;
    }
  }
}
