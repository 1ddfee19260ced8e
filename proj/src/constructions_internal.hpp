#pragma once

#include <string>
#include <utility>
#include <vector>

#include "matchnet/network.hpp"

namespace matchnet::detail {

using Params = std::vector<std::pair<std::string, long long>>;

inline void certify(SortingNetwork& net, std::string formula, Params params, long long bound, std::string note = {}) {
  DepthCertificate c;
  c.formula = std::move(formula);
  c.params = std::move(params);
  c.claimed_bound = bound;
  c.achieved_depth = net.depth();
  c.note = std::move(note);
  net.certificate = std::move(c);
}

inline int ceil_log2(long long n) {
  int t = 0;
  while ((1LL << t) < n) ++t;
  return t;
}

inline long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

/// Drops empty stages (used where depth is not pinned exactly).
void drop_empty(std::vector<Stage>& stages);

}  // namespace matchnet::detail
