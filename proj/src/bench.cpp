#include "matchnet/bench.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "matchnet/constructions.hpp"
#include "matchnet/error.hpp"
#include "matchnet/verify.hpp"

namespace matchnet {

namespace {

struct Instance {
  Family family;
  std::string construction;
};

std::vector<Instance> suite_instances(const std::string& suite) {
  std::vector<Instance> out;
  if (suite == "paths") {
    for (int n : {4, 8, 16}) out.push_back({{"path", {n}}, "odd-even"});
    for (int n : {8, 16}) out.push_back({{"path", {n}}, "contour"});
  } else if (suite == "trees") {
    for (int n : {8, 12, 16}) {
      out.push_back({{"random_tree", {n}}, "contour"});
      out.push_back({{"random_tree", {n}}, "longest-path"});
    }
    for (int n : {8, 16}) {
      out.push_back({{"star", {n}}, "longest-path"});
      out.push_back({{"star", {n}}, "simulate"});
    }
  } else if (suite == "meshes") {
    for (const std::vector<int>& l : {std::vector<int>{2, 2}, {3, 3}, {4, 4}, {2, 2, 2}, {2, 4}})
      out.push_back({{"mesh", l}, "product"});
    out.push_back({{"mesh", {3, 3}}, "longest-path"});
  } else if (suite == "hypercubes") {
    for (int d = 1; d <= 4; ++d) out.push_back({{"hypercube", {d}}, "bitonic"});
    for (int d = 3; d <= 4; ++d) out.push_back({{"hypercube", {d}}, "product"});
  } else if (suite == "multipartite") {
    for (const auto& [p, s] : std::vector<std::pair<int, int>>{{3, 2}, {2, 4}, {3, 3}, {4, 3}})
      out.push_back({{"multipartite", {p, s}}, "simulate"});
  } else if (suite == "pyramids") {
    for (const auto& [m, d] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {4, 1}, {2, 2}, {3, 2}})
      out.push_back({{"pyramid", {m, d}}, "pyramid"});
  } else {
    throw ParameterError("unknown bench suite '" + suite + "'");
  }
  return out;
}

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

}  // namespace

std::vector<std::string> bench_suites() { return {"paths", "trees", "meshes", "hypercubes", "multipartite", "pyramids", "all"}; }

std::vector<BenchRow> run_bench(const std::string& suite, const BenchOptions& options) {
  std::vector<Instance> instances;
  if (suite == "all") {
    for (const auto& s : bench_suites())
      if (s != "all") {
        auto part = suite_instances(s);
        instances.insert(instances.end(), part.begin(), part.end());
      }
  } else {
    instances = suite_instances(suite);
  }
  std::vector<BenchRow> rows;
  for (const auto& inst : instances) {
    const Graph g = generate(inst.family, options.seed);
    if (g.size() > options.max_n) continue;
    const auto start = std::chrono::steady_clock::now();
    const SortingNetwork net = build(inst.construction, g);
    BenchRow row;
    row.family = inst.family.to_string();
    row.construction = inst.construction;
    row.n = g.size();
    row.depth = net.depth();
    row.bound = net.certificate ? net.certificate->claimed_bound : net.depth();
    VerificationReport rep;
    if (g.size() <= zero_one_cap()) {
      rep = verify_zero_one(net, -1, options.jobs);
    } else {
      rep = verify_randomized(net, 10000, options.seed);
    }
    row.method = to_string(rep.method);
    row.verdict = rep.passed ? "pass" : "fail";
    row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows, bool timing) {
  std::ostringstream out;
  out << "family,construction,n,depth,bound,method,verdict";
  if (timing) out << ",wall_ms";
  out << "\n";
  for (const auto& r : rows) {
    out << '"' << r.family << "\"," << r.construction << ',' << r.n << ',' << r.depth << ',' << r.bound << ','
        << r.method << ',' << r.verdict;
    if (timing) out << ',' << format_ms(r.wall_ms);
    out << "\n";
  }
  return out.str();
}

std::string bench_table(const std::vector<BenchRow>& rows, bool timing, std::uint64_t seed) {
  std::ostringstream out;
  char buf[256];
  out << "seed " << seed << "\n";
  std::snprintf(buf, sizeof buf, "%-22s %-13s %5s %7s %9s %-10s %-7s", "family", "construction", "n", "depth", "bound",
                "method", "verdict");
  out << buf << (timing ? "  wall_ms" : "") << "\n";
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%-22s %-13s %5d %7d %9lld %-10s %-7s", r.family.c_str(), r.construction.c_str(), r.n,
                  r.depth, r.bound, r.method.c_str(), r.verdict.c_str());
    out << buf;
    if (timing) out << "  " << format_ms(r.wall_ms);
    out << "\n";
  }
  return out.str();
}

}  // namespace matchnet
