#include "constructions_internal.hpp"
#include "matchnet/constructions.hpp"
#include "matchnet/error.hpp"

namespace matchnet {

namespace {

std::vector<Stage> shifted(const std::vector<Stage>& stages, int offset) {
  std::vector<Stage> out = stages;
  for (auto& st : out)
    for (auto& c : st.cmp) {
      c.u += offset;
      c.v += offset;
    }
  return out;
}

}  // namespace

SortingNetwork pyramid_sort(int levels, int dim) {
  if (levels < 1 || dim < 1) throw ParameterError("pyramid needs levels >= 1 and dim >= 1");
  const PyramidLayout layout(levels, dim);
  const int n = layout.total();
  SortingNetwork net;
  net.graph = pyramid_graph(levels, dim);
  if (levels == 1) {
    net.order = VertexOrder::identity(1);
    net.provenance = {"pyramid", {{"levels", 1}, {"dim", dim}}, {}};
    detail::certify(net, "trivial", {}, 0);
    return net;
  }

  const int bottom = levels - 1;
  const int upper = layout.level_offset(bottom);  // |levels 0..m-2|, also the bottom offset
  const int top_size = layout.level_size(bottom - 1);
  const int nb = layout.level_size(bottom);
  if (upper > 2 * top_size - 1) throw InternalError("upper pyramid larger than 2 n_{m-2} - 1");

  const std::vector<int> lengths(static_cast<std::size_t>(dim), layout.side(bottom));
  const SortingNetwork mesh_net = mesh_sort(lengths, false);
  const VertexOrder& mesh_order = mesh_net.order;
  const auto mesh_stages = shifted(mesh_net.stages, upper);

  auto append = [&](const std::vector<Stage>& stages) { net.stages.insert(net.stages.end(), stages.begin(), stages.end()); };
  auto route_pairs = [&](const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    Permutation inv = identity_permutation(n);
    for (const auto& [a, b] : pairs) {
      inv[a] = b;
      inv[b] = a;
    }
    append(route_multigrid(levels, dim, inv).stages);
  };

  // Step 1: the upper pebbles trade places with the first bottom vertices, then the bottom is sorted.
  std::vector<std::pair<Vertex, Vertex>> gather;
  for (int k = 0; k < upper; ++k) gather.emplace_back(k, upper + k);
  // Step 2: the smallest bottom pebbles return to the upper levels in rank order.
  std::vector<std::pair<Vertex, Vertex>> scatter;
  for (int r = 0; r < upper; ++r) scatter.emplace_back(r, upper + mesh_order.vertex_at(r));

  // Step 4: bottom rank i-1 goes below the upper-level vertex holding local rank n_{m-2} - i.
  std::vector<Vertex> partner(static_cast<std::size_t>(top_size));  // partner[i-1] = z_i
  PartialTask spread;
  for (int i = 1; i <= top_size; ++i) {
    const Vertex z = layout.level_offset(bottom - 1) + (top_size - i);
    auto c = layout.coords(z);
    for (int& x : c) x *= 2;
    partner[i - 1] = z;
    spread.sources.push_back(mesh_order.vertex_at(i - 1));
    spread.targets.push_back(layout.vertex(bottom, c) - upper);
  }
  const auto spread_plan = route_mesh(lengths, complete_task(nb, spread));
  const auto spread_stages = shifted(spread_plan.stages, upper);
  Stage merge;
  for (int i = 1; i <= top_size; ++i) merge.cmp.push_back({partner[i - 1], upper + spread.targets[i - 1], CmpKind::Dir});

  for (int rep = 0; rep < 3; ++rep) {
    route_pairs(gather);
    append(mesh_stages);
    route_pairs(scatter);
    append(mesh_stages);
    if (rep == 2) break;
    append(spread_stages);
    net.stages.push_back(merge);
  }
  detail::drop_empty(net.stages);

  std::vector<Vertex> sequence;
  for (Vertex v = 0; v < upper; ++v) sequence.push_back(v);
  for (int t = 0; t < nb; ++t) sequence.push_back(upper + mesh_order.vertex_at(t));
  net.order = VertexOrder::from_sequence(sequence);

  const long long rt_grid = multigrid_route_bound(levels, dim);
  const long long st_mesh = mesh_net.certificate ? mesh_net.certificate->claimed_bound : mesh_net.depth();
  const long long rt_mesh = mesh_route_bound(lengths);
  net.provenance = {"pyramid", {{"levels", levels}, {"dim", dim}, {"n", n}}, {{"mesh_sorter", mesh_net.provenance.construction}}};
  detail::certify(net, "6 rt(multigrid) + 6 st(bottom mesh) + 2 (rt(bottom mesh) + 1)",
                  {{"N", n}, {"rt_multigrid", rt_grid}, {"st_mesh", st_mesh}, {"rt_mesh", rt_mesh}},
                  6 * rt_grid + 6 * st_mesh + 2 * (rt_mesh + 1),
                  "product mesh sorter replaces the linear-depth mesh sorter; bound carries an extra log N factor");
  return net;
}

}  // namespace matchnet
