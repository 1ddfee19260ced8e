// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "matchnet/bench.hpp"
#include "matchnet/constructions.hpp"
#include "matchnet/error.hpp"
#include "matchnet/oracle.hpp"
#include "matchnet/verify.hpp"
#include "support.hpp"

using namespace matchnet;
using namespace testing_support;

namespace {

// Pinned limits.
constexpr double kOddEvenSeconds = 60.0;
constexpr double kOracleSeconds = 300.0;
constexpr double kPyramidSeconds = 600.0;
constexpr int kMultipartiteDepth = 6;
constexpr int kCompleteRouteDepth = 2;
constexpr int kPyramidCap = 21;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Check {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

int failures = 0;

void report(int id, const std::string& title, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail << "exception: " << e.what() << "; ";
  }
  std::printf("%s %2d  %s  [%.1fs] %s\n", c.ok ? "PASS" : "FAIL", id, title.c_str(), seconds_since(t0),
              c.detail.str().c_str());
  std::fflush(stdout);
  if (!c.ok) ++failures;
}

std::string str(std::span<const int> v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i] + 1);
  return s + "]";
}

bool cert_holds(const SortingNetwork& net) {
  return net.certificate && net.certificate->holds() && net.certificate->achieved_depth == net.depth();
}

void odd_even(Check& c) {
  const auto t0 = Clock::now();
  for (int n = 2; n <= 18; ++n) {
    const auto net = odd_even_transposition(n);
    c.require(net.depth() == n, "depth of P_" + std::to_string(n));
    c.require(verify_zero_one(net).passed, "0-1 on P_" + std::to_string(n));
  }
  const double s = seconds_since(t0);
  c.require(s < kOddEvenSeconds, "runtime");
  c.detail << "n=2..18 depth n, 0-1 verified";
}

void bitonic(Check& c) {
  for (int dim = 1; dim <= 4; ++dim) {
    const auto net = bitonic_hypercube(dim);
    const Graph q = hypercube_graph(dim);
    c.require(net.graph == q && matchings_on(q, net.stages), "hypercube edges, dim " + std::to_string(dim));
    c.require(net.depth() == dim * (dim + 1) / 2, "depth, dim " + std::to_string(dim));
    c.require(verify_zero_one(net).passed, "0-1, dim " + std::to_string(dim));
  }
  c.detail << "dim=1..4";
}

void oracle_values(Check& c) {
  const auto t0 = Clock::now();
  const int st_p2 = exact_st(path_graph(2)).value;
  const int st_p3 = exact_st(path_graph(3)).value;
  const int st_k3 = exact_st(complete_graph(3)).value;
  c.require(st_p2 == 1, "st(P_2)=1");
  c.require(st_p3 == 3, "st(P_3)=3");
  c.require(st_k3 == 3, "st(K_3)=3");
  c.require(st_p3 >= 2 && st_p3 <= odd_even_transposition(3).depth(), "P_3 between n-1 and odd-even");
  std::mt19937_64 rng(0);
  for (int n = 3; n <= 7; ++n) {
    c.require(exact_rt(complete_graph(n)).value == 2, "rt(K_" + std::to_string(n) + ")=2");
    for (int t = 0; t < 200; ++t)
      c.require(route_complete(n, random_permutation(n, rng)).depth() <= kCompleteRouteDepth, "route_complete <= 2");
  }
  std::string rt2;
  for (int n = 3; n <= 6; ++n) {
    const auto r = rt_p(complete_graph(n), 2);
    if (r.value != 1 && rt2.empty() && r.task)
      rt2 = "rt_2(K_" + std::to_string(n) + ")=" + std::to_string(r.value) + " via " + str(r.task->sources) + "->" +
            str(r.task->targets);
    c.require(r.value == 1, "rt_2(K_" + std::to_string(n) + ")=1");
    for (int p = 3; p <= n; ++p)
      c.require(rt_p(complete_graph(n), p).value == 2, "rt_" + std::to_string(p) + "(K_" + std::to_string(n) + ")=2");
  }
  c.require(seconds_since(t0) < kOracleSeconds, "runtime");
  c.detail << "st(P_2)=" << st_p2 << " st(P_3)=" << st_p3 << " st(K_3)=" << st_k3;
  if (!rt2.empty()) c.detail << "; " << rt2;
}

void sandwich(Check& c) {
  int graphs = 0, orders = 0, violations = 0;
  for (const Graph& g : connected_graphs_up_to(5)) {
    ++graphs;
    for (const auto& rep : sandwich_check_all(g)) {
      ++orders;
      violations += !rep.holds;
    }
  }
  c.require(violations == 0, "sandwich violations");
  c.detail << graphs << " graphs, " << orders << " (graph, order) pairs, " << violations << " violations";
}

void longest_path_routing(Check& c) {
  std::mt19937_64 rng(5);
  int worst_slack = 1 << 30;
  for (int t = 0; t < 200; ++t) {
    const Graph tree = gen_tree(rng, 2, 32);
    const auto path = tree_diameter_path(tree);
    const int d = static_cast<int>(path.size()) - 1;
    const int k = d;
    std::vector<Vertex> all(static_cast<std::size_t>(tree.size()));
    for (int v = 0; v < tree.size(); ++v) all[v] = v;
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<Vertex> targets = path;
    std::shuffle(targets.begin(), targets.end(), rng);
    const std::vector<Vertex> src(all.begin(), all.begin() + k), dst(targets.begin(), targets.begin() + k);
    const auto plan = route_to_path(tree, src, dst);
    c.require(swap_matchings_on(tree, plan.stages) && reference_realized(tree.size(), plan.stages) == plan.realized,
              "plan stages");
    c.require(plan_fills(plan, PartialTask{src, dst}), "pebbles reach the targets");
    c.require(plan.depth() <= d + 2 * (k - 1) && d + 2 * (k - 1) <= 3 * d, "depth bound");
    worst_slack = std::min(worst_slack, d + 2 * (k - 1) - plan.depth());
  }
  c.detail << "200 trees, k=d, min slack to d+2(k-1): " << worst_slack;
}

void contour(Check& c) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 100; ++t) {
    const Graph tree = gen_tree(rng, 1, 12);
    // The construction throws if two intervals of one colour class share a vertex.
    const auto net = contour_tree_sort(tree);
    c.require(matchings_on(tree, net.stages), "stages are matchings");
    c.require(net.depth() <= 5LL * (4 * std::max(tree.max_degree(), 1) - 3) * tree.size(), "depth bound");
    c.require(verify_zero_one(net).passed, "0-1");
  }
  c.detail << "100 trees n<=12";
}

void simulate(Check& c) {
  std::vector<Graph> graphs{multipartite_graph(3, 2), star_graph(8)};
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) graphs.push_back(gen_connected(rng, 2, 12));
  for (const Graph& g : graphs) {
    const Router router = make_router(g);
    const auto base = batcher_complete(g.size());
    const auto net = simulate_complete(g, base, router);
    const long long nu = std::max(maximal_matching(g).size(), 1);
    const long long bound = base.depth() * ((g.size() + nu - 1) / nu) * (router.depth_bound + 1) + router.depth_bound;
    c.require(cert_holds(net) && net.certificate->claimed_bound == bound, "certificate");
    c.require(verify_zero_one(net).passed, "0-1");
  }
  c.detail << graphs.size() << " graphs";
}

void subgraph(Check& c) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 50; ++t) {
    const Graph g = gen_connected(rng, 2, 12);
    for (const char* name : {"longest-path", "subgraph"}) {
      const auto net = build(name, g);
      c.require(cert_holds(net), std::string(name) + " certificate");
      c.require(verify_zero_one(net).passed, std::string(name) + " 0-1");
    }
  }
  // Star K_{1,7}: path router and path sorter have constant depth, so the bound is
  // (number of block merges) * const + rt, with at most n ceil(log2 n) merges.
  const auto star = build("longest-path", star_graph(8));
  long long merges = -1;
  for (const auto& [k, v] : star.certificate->params)
    if (k == "merges") merges = v;
  c.require(verify_zero_one(star).passed && cert_holds(star), "star sorter");
  c.require(merges > 0 && merges <= 8 * 3, "star merges <= n log n");
  c.detail << "50 graphs x 2 sorters; star: " << star.certificate->formula << " = " << star.certificate->claimed_bound
           << " with merges=" << merges << ", depth " << star.depth();
}

void multipartite(Check& c) {
  const Graph g = multipartite_graph(3, 2);
  Permutation pi = identity_permutation(6);
  int count = 0;
  do {
    const auto plan = route_multipartite(3, 2, pi);
    c.require(plan.depth() <= kMultipartiteDepth && swap_matchings_on(g, plan.stages) &&
                  reference_realized(6, plan.stages) == pi,
              "p=3 s=2 permutation");
    ++count;
  } while (std::next_permutation(pi.begin(), pi.end()));
  std::mt19937_64 rng(9);
  int worst = 0;
  for (int t = 0; t < 1000; ++t) {
    const int parts = 2 + static_cast<int>(rng() % 14);
    const int size = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(30 / parts));
    const Graph h = multipartite_graph(parts, size);
    const auto p = random_permutation(h.size(), rng);
    const auto plan = route_multipartite(parts, size, p);
    c.require(plan.depth() <= kMultipartiteDepth && swap_matchings_on(h, plan.stages) &&
                  reference_realized(h.size(), plan.stages) == p,
              "fuzz permutation");
    worst = std::max(worst, plan.depth());
  }
  c.detail << count << " exhaustive + 1000 fuzz, max depth " << worst;
}

void multigrid(Check& c) {
  const Graph g22 = multigrid_graph(2, 2);
  Permutation pi = identity_permutation(5);
  int count = 0;
  do {
    const auto plan = route_multigrid(2, 2, pi);
    c.require(swap_matchings_on(g22, plan.stages) && reference_realized(5, plan.stages) == pi, "2,2 exact");
    ++count;
  } while (std::next_permutation(pi.begin(), pi.end()));
  std::mt19937_64 rng(10);
  for (const auto& [m, d] : {std::pair{3, 1}, std::pair{3, 2}}) {
    const Graph g = multigrid_graph(m, d);
    for (int t = 0; t < 1000; ++t) {
      const auto p = random_permutation(g.size(), rng);
      // The router throws if a level needs more than two vertical rounds.
      const auto plan = route_multigrid(m, d, p);
      c.require(swap_matchings_on(g, plan.stages) && reference_realized(g.size(), plan.stages) == p,
                "fuzz " + std::to_string(m) + "," + std::to_string(d));
      c.require(plan.depth() <= multigrid_route_bound(m, d), "depth bound");
    }
  }
  c.detail << count << " exhaustive on 2,2; 1000 fuzz each on 3,1 and 3,2; vertical accounting asserted";
}

void pyramid(Check& c) {
  for (const auto& [m, d] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}}) {
    const auto net = pyramid_sort(m, d);
    c.require(verify_zero_one(net).passed && verify_exhaustive(net).passed && cert_holds(net),
              "pyramid " + std::to_string(m) + "," + std::to_string(d));
  }
  const auto t0 = Clock::now();
  const auto net = pyramid_sort(3, 2);
  const auto rep = verify_zero_one(net, kPyramidCap);
  const double s = seconds_since(t0);
  c.require(rep.passed && rep.inputs_checked == (1u << 21), "pyramid 3,2 0-1");
  c.require(s < kPyramidSeconds, "runtime");
  c.require(cert_holds(net), "certificate");
  c.detail << "3,2: N=21 depth " << net.depth() << " <= " << net.certificate->claimed_bound << " ("
           << net.certificate->formula << ")";
}

void zero_one_consistency(Check& c) {
  std::mt19937_64 rng(12);
  int agree = 0, sorters = 0;
  for (int t = 0; t < 100; ++t) {
    const Graph g = gen_connected(rng, 1, 6);
    const auto net = gen_network(rng, g, 2 + static_cast<int>(rng() % 14), rng() % 2 == 0);
    const bool z = verify_zero_one(net).passed;
    const bool e = verify_exhaustive(net).passed;
    agree += z == e;
    sorters += e;
  }
  c.require(agree == 100, "verdicts agree");
  c.detail << agree << "/100 agree, " << sorters << " sorters";
}

void determinism(Check& c) {
  BenchOptions opt;
  opt.seed = 0;
  const std::string a = bench_csv(run_bench("all", opt), false);
  const std::string b = bench_csv(run_bench("all", opt), false);
  c.require(a == b, "identical CSV");
  c.detail << std::count(a.begin(), a.end(), '\n') - 1 << " rows";
}

}  // namespace

int main() {
  report(1, "odd-even transposition on paths", odd_even);
  report(2, "bitonic sorter on hypercubes", bitonic);
  report(3, "exact oracle values", oracle_values);
  report(4, "sorting/routing sandwich for n<=5", sandwich);
  report(5, "routing to the longest path", longest_path_routing);
  report(6, "contour tree sorter", contour);
  report(7, "complete-graph simulation", simulate);
  report(8, "subgraph and longest-path sorters", subgraph);
  report(9, "multipartite routing", multipartite);
  report(10, "multigrid routing", multigrid);
  report(11, "pyramid sorter", pyramid);
  report(12, "0-1 principle consistency", zero_one_consistency);
  report(13, "bench determinism", determinism);
  std::printf("%d of 13 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
