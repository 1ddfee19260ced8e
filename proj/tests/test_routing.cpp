#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "matchnet/error.hpp"
#include "matchnet/oracle.hpp"
#include "matchnet/routing.hpp"
#include "support.hpp"

using namespace matchnet;
using namespace testing_support;

namespace {

void expect_realizes(const Graph& g, const RoutingPlan& plan, const Permutation& pi) {
  ASSERT_TRUE(swap_matchings_on(g, plan.stages));
  EXPECT_EQ(reference_realized(g.size(), plan.stages), pi);
  EXPECT_EQ(plan.realized, pi);
}

Permutation transposition(int n, int a, int b) {
  Permutation p = identity_permutation(n);
  std::swap(p[a], p[b]);
  return p;
}

}  // namespace

TEST(TwoCycle, Decomposition) {
  auto [a, b] = two_cycle_decompose(identity_permutation(5));
  EXPECT_TRUE(is_identity(a));
  EXPECT_TRUE(is_identity(b));
  const auto t = transposition(5, 1, 3);
  std::tie(a, b) = two_cycle_decompose(t);
  EXPECT_EQ(a, t);
  EXPECT_TRUE(is_identity(b));
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = random_permutation(9, rng);
    std::tie(a, b) = two_cycle_decompose(p);
    EXPECT_TRUE(is_involution(a));
    EXPECT_TRUE(is_involution(b));
    EXPECT_EQ(compose(b, a), p);
  }
}

TEST(RouteComplete, Cases) {
  EXPECT_EQ(route_complete(4, identity_permutation(4)).depth(), 0);
  EXPECT_EQ(route_complete(4, transposition(4, 0, 1)).depth(), 1);
  const Permutation cycle{1, 2, 3, 0};
  const auto plan = route_complete(4, cycle);
  EXPECT_EQ(plan.depth(), 2);
  expect_realizes(complete_graph(4), plan, cycle);
  // No single matching of K_4 realizes a 4-cycle.
  for (const auto& m : all_matchings(complete_graph(4))) {
    Stage st;
    for (const auto& [u, v] : m.edges) st.cmp.push_back({u, v, CmpKind::Swap});
    EXPECT_NE(reference_realized(4, {st}), cycle);
  }
}

TEST(RouteComplete, Fuzz) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + static_cast<int>(rng() % 20);
    const auto pi = random_permutation(n, rng);
    const auto plan = route_complete(n, pi);
    EXPECT_LE(plan.depth(), 2);
    expect_realizes(complete_graph(n), plan, pi);
  }
}

TEST(RoutePath, ReversalWithinN) {
  for (int n = 1; n <= 20; ++n) {
    Permutation rev(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rev[i] = n - 1 - i;
    const auto plan = route_path(n, rev);
    EXPECT_LE(plan.depth(), n);
    expect_realizes(path_graph(n), plan, rev);
  }
}

TEST(RouteTree, IdentityAndReversal) {
  const Graph t = random_tree(12, 4);
  EXPECT_EQ(route_tree(t, identity_permutation(12)).depth(), 0);
  for (int n = 2; n <= 16; ++n) {
    Permutation rev(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rev[i] = n - 1 - i;
    const auto plan = route_tree(path_graph(n), rev);
    EXPECT_LE(plan.depth(), n);
    expect_realizes(path_graph(n), plan, rev);
  }
}

TEST(RouteTree, FuzzDepthWithinThreeN) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 300; ++t) {
    const Graph tree = gen_tree(rng, 1, 64);
    const auto pi = random_permutation(tree.size(), rng);
    const auto plan = route_tree(tree, pi);
    EXPECT_LE(plan.depth(), 3 * tree.size());
    expect_realizes(tree, plan, pi);
  }
}

TEST(RouteGeneric, Cases) {
  std::mt19937_64 rng(19);
  const Graph k5 = complete_graph(5);
  EXPECT_EQ(route_generic(k5, identity_permutation(5)).depth(), 0);
  for (int t = 0; t < 200; ++t) {
    const auto pi = random_permutation(5, rng);
    const auto plan = route_generic(k5, pi);
    EXPECT_LE(plan.depth(), 15);
    expect_realizes(k5, plan, pi);
    const Graph mesh = mesh_graph(std::vector<int>{4, 4});
    const auto pm = random_permutation(16, rng);
    expect_realizes(mesh, route_generic(mesh, pm), pm);
    const Graph g = gen_connected(rng, 1, 30);
    const auto pg = random_permutation(g.size(), rng);
    const auto plan_g = route_generic(g, pg);
    EXPECT_LE(plan_g.depth(), 3 * g.size());
    expect_realizes(g, plan_g, pg);
  }
}

TEST(RouteToPath, SingleAndSettled) {
  const Graph tree = random_tree(20, 8);
  const auto path = tree_diameter_path(tree);
  const int d = static_cast<int>(path.size()) - 1;
  for (Vertex s = 0; s < tree.size(); ++s) {
    const std::vector<Vertex> src{s}, dst{path[0]};
    const auto plan = route_to_path(tree, src, dst);
    EXPECT_LE(plan.depth(), d);
    EXPECT_EQ(plan.realized[s], path[0]);
  }
  const std::vector<Vertex> on(path.begin(), path.begin() + 3);
  EXPECT_EQ(route_to_path(tree, on, on).depth(), 0);
}

TEST(RouteToPath, Errors) {
  const Graph tree = star_graph(6);
  const auto path = tree_diameter_path(tree);
  const std::vector<Vertex> three{1, 2, 3};
  const std::vector<Vertex> targets{path[0], path[1], path[2]};
  EXPECT_THROW(route_to_path(tree, three, targets), TaskError);  // k = 3 > d = 2
  Vertex off = 0;
  while (std::find(path.begin(), path.end(), off) != path.end()) ++off;
  const std::vector<Vertex> one{path[0]}, bad{off};
  EXPECT_THROW(route_to_path(tree, one, bad), TaskError);
}

TEST(RouteToPath, FuzzBoundAndPlacement) {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 300; ++t) {
    const Graph tree = gen_tree(rng, 2, 32);
    const auto path = tree_diameter_path(tree);
    const int d = static_cast<int>(path.size()) - 1;
    const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(d));
    std::vector<Vertex> all(static_cast<std::size_t>(tree.size()));
    for (int v = 0; v < tree.size(); ++v) all[v] = v;
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<Vertex> targets = path;
    std::shuffle(targets.begin(), targets.end(), rng);
    const std::vector<Vertex> src(all.begin(), all.begin() + k), dst(targets.begin(), targets.begin() + k);
    const auto plan = route_to_path(tree, src, dst);
    EXPECT_LE(plan.depth(), d + 2 * (k - 1));
    ASSERT_TRUE(swap_matchings_on(tree, plan.stages));
    const auto where = reference_realized(tree.size(), plan.stages);
    std::vector<Vertex> landed;
    for (Vertex s : src) landed.push_back(where[s]);
    std::vector<Vertex> expect = dst;
    std::sort(landed.begin(), landed.end());
    std::sort(expect.begin(), expect.end());
    EXPECT_EQ(landed, expect);
  }
}

TEST(RouteMultipartite, Cases) {
  EXPECT_EQ(route_multipartite(3, 2, identity_permutation(6)).depth(), 0);
  EXPECT_EQ(route_multipartite(3, 2, transposition(6, 0, 2)).depth(), 1);
}

TEST(RouteMultipartite, ExhaustiveThreeByTwo) {
  const Graph g = multipartite_graph(3, 2);
  Permutation pi = identity_permutation(6);
  do {
    const auto plan = route_multipartite(3, 2, pi);
    ASSERT_LE(plan.depth(), 6);
    expect_realizes(g, plan, pi);
  } while (std::next_permutation(pi.begin(), pi.end()));
}

TEST(RouteMultipartite, Fuzz) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 500; ++t) {
    const int parts = 2 + static_cast<int>(rng() % 6);
    const int size = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(1, 30 / parts)));
    const Graph g = multipartite_graph(parts, size);
    const auto pi = random_permutation(g.size(), rng);
    const auto plan = route_multipartite(parts, size, pi);
    EXPECT_LE(plan.depth(), 6);
    expect_realizes(g, plan, pi);
  }
}

TEST(RouteProduct, Cases) {
  const Graph p3 = path_graph(3);
  const Router r = make_router(p3);
  EXPECT_EQ(route_product(r, 3, r, 3, identity_permutation(9)).depth(), 0);
  // One pebble to an adjacent copy.
  const auto t = transposition(9, 0, 3);
  expect_realizes(mesh_graph(std::vector<int>{3, 3}), route_product(r, 3, r, 3, t), t);
}

TEST(RouteProduct, MeshFuzzWithinThreePhaseBound) {
  std::mt19937_64 rng(47);
  const Graph mesh = mesh_graph(std::vector<int>{3, 3});
  const Router r = make_router(path_graph(3));
  for (int t = 0; t < 200; ++t) {
    const auto pi = random_permutation(9, rng);
    const auto plan = route_product(r, 3, r, 3, pi);
    EXPECT_LE(plan.depth(), 3 * 3);
    expect_realizes(mesh, plan, pi);
  }
}

TEST(RouteProduct, MixedFactorsFuzz) {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 200; ++t) {
    const Graph g1 = gen_connected(rng, 1, 6), g2 = gen_connected(rng, 1, 6);
    const Router r1 = make_router(g1), r2 = make_router(g2);
    const Graph g = cartesian_product(g1, g2);
    const auto pi = random_permutation(g.size(), rng);
    const auto plan = route_product(r1, g1.size(), r2, g2.size(), pi);
    EXPECT_LE(plan.depth(), std::min(r1.depth_bound, r2.depth_bound) + r1.depth_bound + r2.depth_bound);
    expect_realizes(g, plan, pi);
  }
}

TEST(RouteMesh, HigherDimensions) {
  std::mt19937_64 rng(59);
  for (const std::vector<int>& l : {std::vector<int>{2, 2, 2}, {3, 4}, {2, 3, 2}, {5}, {4, 4}}) {
    const Graph g = mesh_graph(l);
    for (int t = 0; t < 50; ++t) {
      const auto pi = random_permutation(g.size(), rng);
      const auto plan = route_mesh(l, pi);
      EXPECT_LE(plan.depth(), mesh_route_bound(l));
      expect_realizes(g, plan, pi);
    }
  }
}

TEST(RouteMultigrid, Cases) {
  const Graph g = multigrid_graph(3, 1);
  EXPECT_EQ(route_multigrid(3, 1, identity_permutation(7)).depth(), 0);
  const auto t = transposition(7, 0, 3);  // apex and a bottom corner
  expect_realizes(g, route_multigrid(3, 1, t), t);
}

TEST(RouteMultigrid, ExhaustiveTwoByTwo) {
  const Graph g = multigrid_graph(2, 2);
  Permutation pi = identity_permutation(5);
  do {
    const auto plan = route_multigrid(2, 2, pi);
    EXPECT_LE(plan.depth(), multigrid_route_bound(2, 2));
    expect_realizes(g, plan, pi);
  } while (std::next_permutation(pi.begin(), pi.end()));
}

TEST(RouteMultigrid, Fuzz) {
  std::mt19937_64 rng(61);
  for (const auto& [m, d] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {4, 1}, {4, 2}, {2, 3}}) {
    const Graph g = multigrid_graph(m, d);
    const Graph pyr = pyramid_graph(m, d);
    for (int t = 0; t < 200; ++t) {
      const auto pi = random_permutation(g.size(), rng);
      const auto plan = route_multigrid(m, d, pi);
      EXPECT_LE(plan.depth(), multigrid_route_bound(m, d));
      expect_realizes(g, plan, pi);
      EXPECT_TRUE(swap_matchings_on(pyr, plan.stages));
    }
  }
}

TEST(MakeRouter, TrustsFamilyOnlyWhenGraphMatches) {
  const Graph k4 = complete_graph(4);
  EXPECT_EQ(make_router(k4).name, "complete");
  const Graph relabeled = Graph(4, {{0, 1}, {1, 2}, {2, 3}}, {"complete", {4}});
  EXPECT_NE(make_router(relabeled).name, "complete");
  const Permutation cycle{1, 2, 3, 0};
  expect_realizes(relabeled, make_router(relabeled).route(cycle), cycle);
}

TEST(PlanHelpers, CompleteTaskAndFills) {
  const PartialTask task{{0, 1}, {3, 0}};
  const auto perm = complete_task(4, task);
  EXPECT_TRUE(is_permutation(perm));
  EXPECT_EQ(perm[0], 3);
  EXPECT_EQ(perm[1], 0);
  const auto plan = route_complete(4, perm);
  EXPECT_TRUE(plan_serves(plan, task));
  EXPECT_TRUE(plan_fills(plan, task));
}

TEST(RouterVsOracle, PlansNeverBeatExactRouting) {
  std::mt19937_64 rng(67);
  for (int t = 0; t < 40; ++t) {
    const Graph g = gen_connected(rng, 2, 6);
    const auto pi = random_permutation(g.size(), rng);
    const auto plan = make_router(g).route(pi);
    EXPECT_GE(plan.depth(), exact_rt(g, pi).value);
  }
}
