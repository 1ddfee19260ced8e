#include <algorithm>

#include "constructions_internal.hpp"
#include "matchnet/constructions.hpp"
#include "matchnet/error.hpp"

namespace matchnet {

namespace detail {

void drop_empty(std::vector<Stage>& stages) {
  stages.erase(std::remove_if(stages.begin(), stages.end(), [](const Stage& s) { return s.empty(); }), stages.end());
}

}  // namespace detail

SortingNetwork odd_even_transposition(int n) {
  if (n < 1) throw ParameterError("odd-even transposition needs n >= 1");
  SortingNetwork net;
  net.graph = path_graph(n);
  net.order = VertexOrder::identity(n);
  if (n > 1) {
    for (int s = 0; s < n; ++s) {
      Stage st;
      for (int i = s % 2; i + 1 < n; i += 2) st.cmp.push_back({i, i + 1, CmpKind::Dir});
      net.stages.push_back(std::move(st));
    }
  }
  net.provenance = {"odd-even", {{"n", n}}, {}};
  detail::certify(net, "odd-even transposition: depth n", {{"n", n}}, n > 1 ? n : 0);
  return net;
}

SortingNetwork bitonic_hypercube(int dim) {
  if (dim < 1) throw ParameterError("bitonic sorter needs dim >= 1");
  const int n = 1 << dim;
  SortingNetwork net;
  net.graph = hypercube_graph(dim);
  net.order = VertexOrder::identity(n);
  for (int k = 2; k <= n; k <<= 1) {
    for (int j = k >> 1; j > 0; j >>= 1) {
      Stage st;
      for (int i = 0; i < n; ++i) {
        const int l = i ^ j;
        if (l < i) continue;
        if ((i & k) == 0) st.cmp.push_back({i, l, CmpKind::Dir});
        else st.cmp.push_back({l, i, CmpKind::Dir});
      }
      net.stages.push_back(std::move(st));
    }
  }
  net.provenance = {"bitonic", {{"dim", dim}}, {}};
  detail::certify(net, "bitonic: dim(dim+1)/2", {{"dim", dim}}, dim * (dim + 1) / 2);
  return net;
}

std::vector<std::vector<LogicalPair>> merge_exchange_rounds(int n) {
  if (n < 1) throw ParameterError("sorter needs n >= 1");
  std::vector<std::vector<LogicalPair>> rounds;
  const int t = detail::ceil_log2(n);
  if (t == 0) return rounds;
  for (int p = 1 << (t - 1); p > 0; p >>= 1) {
    int q = 1 << (t - 1);
    int r = 0;
    int d = p;
    while (true) {
      std::vector<LogicalPair> round;
      for (int i = 0; i + d < n; ++i)
        if ((i & p) == r) round.emplace_back(i, i + d);
      if (!round.empty()) rounds.push_back(std::move(round));
      if (q == p) break;
      d = q - p;
      q >>= 1;
      r = p;
    }
  }
  return rounds;
}

SortingNetwork batcher_complete(int n) {
  SortingNetwork net;
  net.graph = complete_graph(n);
  net.order = VertexOrder::identity(n);
  for (const auto& round : merge_exchange_rounds(n)) {
    Stage st;
    for (const auto& [lo, hi] : round) st.cmp.push_back({lo, hi, CmpKind::Dir});
    net.stages.push_back(std::move(st));
  }
  const long long t = detail::ceil_log2(n);
  net.provenance = {"batcher", {{"n", n}}, {}};
  detail::certify(net, "merge-exchange: t(t+1)/2, t = ceil(log2 n)", {{"n", n}, {"t", t}}, t * (t + 1) / 2);
  return net;
}

std::vector<LogicalPair> sequential_sorter(int q) {
  std::vector<LogicalPair> out;
  for (const auto& round : merge_exchange_rounds(q)) out.insert(out.end(), round.begin(), round.end());
  return out;
}

}  // namespace matchnet
