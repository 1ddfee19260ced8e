// Command-line front end: generate, build, verify, route, oracle, bench, export.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "matchnet/bench.hpp"
#include "matchnet/constructions.hpp"
#include "matchnet/error.hpp"
#include "matchnet/io.hpp"
#include "matchnet/oracle.hpp"
#include "matchnet/routing.hpp"
#include "matchnet/verify.hpp"

using namespace matchnet;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitCap = 2;
constexpr int kExitError = 3;

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") std::cout << text;
  else write_text(out, text);
}

SortingNetwork load_network(const std::string& path) { return network_from_json(parse_json(read_text(path))); }

Permutation load_permutation(const std::string& spec, int n) {
  const std::string text = std::filesystem::exists(spec) ? read_text(spec) : spec;
  Json j = Json::array();
  for (int x : parse_index_list(text)) j.push_back(x);
  return permutation_from_json(j, n);
}

VertexOrder load_order(const std::string& spec) {
  const std::string text = std::filesystem::exists(spec) ? read_text(spec) : spec;
  Json j = Json::array();
  for (int x : parse_index_list(text)) j.push_back(x);
  return order_from_json(j);
}

std::string report_text(const VerificationReport& rep, const SortingNetwork& net) {
  std::string s = "method: " + to_string(rep.method) + "\n";
  s += "verdict: " + std::string(rep.passed ? "pass" : "fail") + "\n";
  s += "inputs_checked: " + std::to_string(rep.inputs_checked) + "\n";
  if (rep.method == VerifyMethod::Randomized)
    s += "seed: " + std::to_string(rep.seed) + "\ntrials: " + std::to_string(rep.trials) + "\n";
  s += "depth: " + std::to_string(net.depth()) + "\n";
  if (net.certificate)
    s += "certificate: " + std::to_string(net.certificate->achieved_depth) + " <= " +
         std::to_string(net.certificate->claimed_bound) + " (" + net.certificate->formula + ")\n";
  if (rep.counterexample) {
    s += "counterexample:";
    for (int x : *rep.counterexample) s += " " + std::to_string(x);
    s += "\n";
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sorting networks and permutation routing restricted to graph edges"};
  app.require_subcommand(1);

  std::string graph_spec, out, net_path, construction = "auto", method = "zero-one", quantity = "st", order_spec, perm_spec,
                                            suite = "all", format = "json", csv_path;
  std::uint64_t seed = 0;
  std::uint64_t trials = 100000;
  int jobs = 0, p = 0, max_n = 16, cap = -1;
  bool comparators_only = false, timing = false;

  auto* gen = app.add_subcommand("generate", "Write a generated graph as JSON");
  gen->add_option("--graph,--family", graph_spec, "Family spelling, e.g. mesh:3,3")->required();
  gen->add_option("--seed", seed, "Seed for random families");
  gen->add_option("--out", out, "Output file (default stdout)");

  auto* bld = app.add_subcommand("build", "Build a sorting network");
  bld->add_option("--construction", construction, "Construction name")
      ->check(CLI::IsMember(construction_names()));
  bld->add_option("--graph", graph_spec, "Graph JSON file or family spelling")->required();
  bld->add_option("--seed", seed, "Seed for random families");
  bld->add_option("--out", out, "Output file (default stdout)");

  auto* ver = app.add_subcommand("verify", "Verify a network (exit 0 pass, 1 fail, 2 over cap)");
  ver->add_option("--net", net_path, "Network JSON file")->required();
  ver->add_option("--method", method, "zero-one, exhaustive or random")
      ->check(CLI::IsMember({"zero-one", "exhaustive", "random"}));
  ver->add_option("--seed", seed, "Seed for random verification");
  ver->add_option("--trials", trials, "Random permutations and bit vectors each");
  ver->add_option("--cap", cap, "Size cap for zero-one verification");
  ver->add_option("--jobs", jobs, "Worker threads (0 = all cores)");

  auto* rte = app.add_subcommand("route", "Plan a permutation routing");
  rte->add_option("--graph", graph_spec, "Graph JSON file or family spelling")->required();
  rte->add_option("--perm", perm_spec, "1-based destinations: file, JSON array or 2,1,3")->required();
  rte->add_option("--seed", seed, "Seed for random families");
  rte->add_option("--out", out, "Output file (default stdout)");

  auto* orc = app.add_subcommand("oracle", "Exact st, rt or rt_p on a small graph");
  orc->add_option("--quantity", quantity, "st, rt or rt_p")->check(CLI::IsMember({"st", "rt", "rt_p"}));
  orc->add_option("--graph", graph_spec, "Graph JSON file or family spelling")->required();
  orc->add_option("--order", order_spec, "Target order for st (1-based ranks)");
  orc->add_option("--perm", perm_spec, "Permutation for rt (1-based destinations)");
  orc->add_option("--p", p, "Tracked pebbles for rt_p");
  orc->add_flag("--comparators-only", comparators_only, "Forbid swaps in st search");
  orc->add_option("--seed", seed, "Seed for random families");
  orc->add_option("--out", out, "Write the witness JSON here");

  auto* bch = app.add_subcommand("bench", "Build and verify a suite; text table plus CSV");
  bch->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(bench_suites()));
  bch->add_option("--max-n", max_n, "Skip instances above this size");
  bch->add_option("--seed", seed, "Seed for random families");
  bch->add_option("--csv", csv_path, "CSV output file");
  bch->add_flag("--timing", timing, "Add wall-clock column");
  bch->add_option("--jobs", jobs, "Verification threads (0 = all cores)");

  auto* exp = app.add_subcommand("export", "Export a network as DOT or canonical JSON");
  exp->add_option("--net", net_path, "Network JSON file")->required();
  exp->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  exp->add_option("--out", out, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      emit(out, dump(graph_to_json(load_graph(graph_spec, seed))));
    } else if (*bld) {
      emit(out, dump(network_to_json(build(construction, load_graph(graph_spec, seed)))));
    } else if (*ver) {
      const SortingNetwork net = load_network(net_path);
      VerificationReport rep;
      if (method == "zero-one") rep = verify_zero_one(net, cap, jobs);
      else if (method == "exhaustive") rep = verify_exhaustive(net);
      else rep = verify_randomized(net, trials, seed);
      std::cout << report_text(rep, net);
      return rep.passed ? 0 : kExitFail;
    } else if (*rte) {
      const Graph g = load_graph(graph_spec, seed);
      const Permutation pi = load_permutation(perm_spec, g.size());
      const Router router = make_router(g);
      const RoutingPlan plan = router.route(pi);
      check_plan(g, plan);
      std::cerr << "router: " << router.name << ", depth " << plan.depth() << " (bound " << router.depth_bound << ")\n";
      emit(out, dump(plan_to_json(g, plan)));
    } else if (*orc) {
      const Graph g = load_graph(graph_spec, seed);
      OracleResult res;
      if (quantity == "st") {
        std::optional<VertexOrder> order;
        if (!order_spec.empty()) order = load_order(order_spec);
        res = exact_st(g, order, comparators_only);
      } else if (quantity == "rt") {
        std::optional<Permutation> pi;
        if (!perm_spec.empty()) pi = load_permutation(perm_spec, g.size());
        res = exact_rt(g, pi);
      } else {
        res = rt_p(g, p > 0 ? p : g.size());
      }
      std::cout << to_string(res.quantity) << " = " << res.value << "\n";
      std::cout << "states: " << res.stats.states << ", stage options: " << res.stats.moves << "\n";
      if (res.argmax) std::cout << "worst permutation: " << permutation_to_json(*res.argmax).dump() << "\n";
      if (res.task) {
        Json src = Json::array(), dst = Json::array();
        for (Vertex v : res.task->sources) src.push_back(v + 1);
        for (Vertex v : res.task->targets) dst.push_back(v + 1);
        std::cout << "worst task: " << src.dump() << " -> " << dst.dump() << "\n";
      }
      if (res.network) std::cout << "order: " << order_to_json(res.network->order).dump() << "\n";
      if (!out.empty()) {
        if (res.network) write_text(out, dump(network_to_json(*res.network)));
        else if (res.plan) write_text(out, dump(plan_to_json(g, *res.plan)));
      }
    } else if (*bch) {
      BenchOptions opt;
      opt.max_n = max_n;
      opt.seed = seed;
      opt.timing = timing;
      opt.jobs = jobs;
      const auto rows = run_bench(suite, opt);
      std::cout << bench_table(rows, timing, seed);
      if (!csv_path.empty()) write_text(csv_path, bench_csv(rows, timing));
      for (const auto& r : rows)
        if (r.verdict != "pass" || r.depth > r.bound) return kExitFail;
    } else if (*exp) {
      const SortingNetwork net = load_network(net_path);
      emit(out, format == "dot" ? network_to_dot(net) : dump(network_to_json(net)));
    }
  } catch (const CapError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return 0;
}
