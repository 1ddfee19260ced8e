#include "matchnet/network.hpp"

namespace matchnet {

long long SortingNetwork::size() const {
  long long total = 0;
  for (const auto& s : stages) total += s.size();
  return total;
}

void validate_stage(const Graph& g, const Stage& stage, int index) {
  std::vector<char> used(static_cast<std::size_t>(g.size()), 0);
  const std::string where = index >= 0 ? " in stage " + std::to_string(index) : "";
  for (const auto& c : stage.cmp) {
    if (!g.has_edge(c.u, c.v))
      throw InternalError("comparator (" + std::to_string(c.u + 1) + "," + std::to_string(c.v + 1) +
                          ") is not a graph edge" + where);
    if (used[c.u] || used[c.v])
      throw InternalError("comparators share a vertex" + where);
    used[c.u] = used[c.v] = 1;
  }
}

void validate(const SortingNetwork& net) {
  if (net.order.size() != net.graph.size()) throw InternalError("target order size mismatch");
  for (int i = 0; i < net.depth(); ++i) validate_stage(net.graph, net.stages[i], i);
}

SortingNetwork concatenate(const SortingNetwork& a, const SortingNetwork& b) {
  if (!(a.graph == b.graph)) throw InputError("cannot concatenate networks on different graphs");
  return concatenate(a, b.stages);
}

SortingNetwork concatenate(const SortingNetwork& a, std::span<const Stage> extra) {
  SortingNetwork out = a;
  out.stages.insert(out.stages.end(), extra.begin(), extra.end());
  out.certificate.reset();
  return out;
}

PositionMap PositionMap::identity(int n) {
  std::vector<Vertex> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[i] = i;
  return PositionMap(std::move(pos));
}

PositionMap::PositionMap(std::vector<Vertex> pos) : pos_(std::move(pos)) {
  inv_.assign(pos_.size(), -1);
  for (std::size_t i = 0; i < pos_.size(); ++i) {
    const Vertex v = pos_[i];
    if (v < 0 || v >= static_cast<int>(pos_.size()) || inv_[v] != -1)
      throw InternalError("position map is not a bijection");
    inv_[v] = static_cast<int>(i);
  }
}

void PositionMap::apply_swaps(const Stage& stage) {
  for (const auto& c : stage.cmp) {
    if (c.kind != CmpKind::Swap) continue;
    const int a = inv_[c.u];
    const int b = inv_[c.v];
    std::swap(inv_[c.u], inv_[c.v]);
    pos_[a] = c.v;
    pos_[b] = c.u;
  }
}

void PositionMap::apply_routing(std::span<const Vertex> dest) {
  std::vector<Vertex> next(pos_.size());
  for (std::size_t i = 0; i < pos_.size(); ++i) next[i] = dest[pos_[i]];
  *this = PositionMap(std::move(next));
}

Stage apply_position_map(const Stage& logical, const PositionMap& pm, const Graph& g) {
  Stage out;
  out.cmp.reserve(logical.cmp.size());
  for (const auto& c : logical.cmp) {
    const Vertex u = pm.at(c.u);
    const Vertex v = pm.at(c.v);
    if (!g.has_edge(u, v))
      throw InternalError("logical pair (" + std::to_string(c.u + 1) + "," + std::to_string(c.v + 1) +
                          ") maps to non-edge");
    out.cmp.push_back({u, v, c.kind});
  }
  return out;
}

}  // namespace matchnet
