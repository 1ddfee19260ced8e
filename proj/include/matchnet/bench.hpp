#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace matchnet {

struct BenchRow {
  std::string family;
  std::string construction;
  int n = 0;
  int depth = 0;
  long long bound = 0;
  std::string method;   // zero-one, exhaustive or random
  std::string verdict;  // pass or fail
  double wall_ms = 0;   // only reported with timing enabled
};

struct BenchOptions {
  /// Instances with more vertices are skipped; 0 gives an empty table.
  int max_n = 16;
  std::uint64_t seed = 0;
  bool timing = false;
  /// Verification worker threads (0 = hardware concurrency).
  int jobs = 0;
};

/// paths, trees, meshes, hypercubes, multipartite, pyramids, all.
std::vector<std::string> bench_suites();
/// Rows in suite order; UsageError-style ParameterError for unknown suites.
std::vector<BenchRow> run_bench(const std::string& suite, const BenchOptions& options);

std::string bench_csv(const std::vector<BenchRow>& rows, bool timing);
std::string bench_table(const std::vector<BenchRow>& rows, bool timing, std::uint64_t seed);

}  // namespace matchnet
