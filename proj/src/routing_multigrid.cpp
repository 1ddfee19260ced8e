#include <algorithm>
#include <array>

#include "matchnet/error.hpp"
#include "matchnet/routing.hpp"
#include "routing_internal.hpp"

namespace matchnet {

namespace {

struct LevelMesh {
  std::vector<int> lengths;
  int offset;
  int size;
};

class MultigridRouter {
 public:
  MultigridRouter(int levels, int dim) : layout_(levels, dim) {
    for (int l = 0; l < levels; ++l)
      meshes_.push_back({std::vector<int>(static_cast<std::size_t>(dim), layout_.side(l)), layout_.level_offset(l),
                         layout_.level_size(l)});
    // Maximal vertical paths, from a start vertex with no vertical edge down via coordinate doubling.
    for (Vertex s = 0; s < layout_.total(); ++s) {
      if (layout_.keeps_vertical_edge(s)) continue;
      std::vector<Vertex> path{s};
      auto c = layout_.coords(s);
      for (int l = layout_.level_of(s) + 1; l < levels; ++l) {
        for (int& x : c) x *= 2;
        path.push_back(layout_.vertex(l, c));
      }
      paths_.push_back(std::move(path));
    }
  }

  // Routes one involution in five rounds; returns the stage list.
  std::vector<Stage> route_involution(std::span<const int> inv) {
    const int n = layout_.total();
    std::vector<int> at = identity_permutation(n);  // pebble at each vertex
    std::vector<Stage> out;
    auto run = [&](std::vector<Stage> stages) {
      for (auto& st : stages) {
        for (const auto& c : st.cmp) std::swap(at[c.u], at[c.v]);
        out.push_back(std::move(st));
      }
    };

    // Cross-level pairs grouped by the upper endpoint's level.
    std::vector<std::vector<std::pair<Vertex, Vertex>>> by_level(static_cast<std::size_t>(layout_.levels()));
    for (Vertex v = 0; v < n; ++v) {
      const Vertex w = inv[v];
      if (layout_.level_of(v) < layout_.level_of(w)) by_level[layout_.level_of(v)].emplace_back(v, w);
    }
    // batch[b] lists (upper pebble, lower pebble, path index).
    std::vector<std::vector<std::array<int, 3>>> batch(2);
    for (int i = 0; i < layout_.levels(); ++i) {
      std::vector<int> starts;
      for (int p = 0; p < static_cast<int>(paths_.size()); ++p)
        if (layout_.level_of(paths_[p].front()) == i) starts.push_back(p);
      const int phi = layout_.maximal_paths_of_length(layout_.levels() - 1 - i);
      if (static_cast<int>(starts.size()) != phi) throw InternalError("vertical path count mismatch");
      const auto& pairs = by_level[i];
      if (static_cast<int>(pairs.size()) > 2 * phi)
        throw InternalError("level " + std::to_string(i) + " has more pairs than two vertical rounds can carry");
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        const int b = k < static_cast<std::size_t>(phi) ? 0 : 1;
        batch[b].push_back({pairs[k].first, pairs[k].second, starts[k % static_cast<std::size_t>(phi)]});
      }
    }

    for (int b = 0; b < 2; ++b) {
      // Intra-level round placing this batch's pebbles on their path vertices.
      std::vector<PartialTask> tasks(static_cast<std::size_t>(layout_.levels()));
      std::vector<Vertex> where = inverse(at);
      for (const auto& [up, low, p] : batch[b]) {
        for (Vertex pebble : {up, low}) {
          const int l = layout_.level_of(where[pebble]);
          tasks[l].sources.push_back(where[pebble]);
          tasks[l].targets.push_back(paths_[p][l - layout_.level_of(paths_[p].front())]);
        }
      }
      run(intra_round(tasks));

      // Vertical round: exchange the two pebbles along each used path.
      std::vector<std::vector<Stage>> vertical;
      for (const auto& [up, low, p] : batch[b]) {
        const auto& path = paths_[p];
        std::vector<int> key(path.size());
        for (std::size_t i = 0; i < path.size(); ++i) key[i] = static_cast<int>(i);
        const int top = layout_.level_of(up) - layout_.level_of(path.front());
        const int bottom = layout_.level_of(low) - layout_.level_of(path.front());
        if (at[path[top]] != up || at[path[bottom]] != low) throw InternalError("pair not placed on its path");
        std::swap(key[top], key[bottom]);
        vertical.push_back(detail::odd_even_route(path, key));
      }
      run(detail::merge_parallel(vertical));
    }

    // Final intra-level round: every pebble is on its destination level.
    std::vector<PartialTask> finals(static_cast<std::size_t>(layout_.levels()));
    for (Vertex v = 0; v < n; ++v) {
      const Vertex dest = inv[at[v]];
      if (layout_.level_of(dest) != layout_.level_of(v)) throw InternalError("pebble left on a wrong level");
      finals[layout_.level_of(v)].sources.push_back(v);
      finals[layout_.level_of(v)].targets.push_back(dest);
    }
    run(intra_round(finals));
    return out;
  }

  long long bound() const {
    long long mesh = 0;
    for (const auto& m : meshes_) mesh = std::max(mesh, mesh_route_bound(m.lengths));
    return 2 * (3 * mesh + 2LL * layout_.levels());
  }

 private:
  // One parallel routing inside every level; tasks use global vertex ids.
  std::vector<Stage> intra_round(const std::vector<PartialTask>& tasks) {
    std::vector<std::vector<Stage>> plans;
    for (int l = 0; l < layout_.levels(); ++l) {
      const auto& m = meshes_[l];
      if (m.size == 1 || tasks[l].size() == 0) continue;
      PartialTask local;
      for (Vertex v : tasks[l].sources) local.sources.push_back(v - m.offset);
      for (Vertex v : tasks[l].targets) local.targets.push_back(v - m.offset);
      const auto perm = complete_task(m.size, local);
      const auto plan = route_mesh(m.lengths, perm);
      std::vector<Stage> mapped;
      for (const auto& st : plan.stages) {
        Stage g;
        for (const auto& c : st.cmp) g.cmp.push_back({c.u + m.offset, c.v + m.offset, CmpKind::Swap});
        mapped.push_back(std::move(g));
      }
      plans.push_back(std::move(mapped));
    }
    return detail::merge_parallel(plans);
  }

  PyramidLayout layout_;
  std::vector<LevelMesh> meshes_;
  std::vector<std::vector<Vertex>> paths_;
};

}  // namespace

RoutingPlan route_multigrid(int levels, int dim, std::span<const int> pi) {
  MultigridRouter router(levels, dim);
  const int n = PyramidLayout(levels, dim).total();
  if (static_cast<int>(pi.size()) != n || !is_permutation(pi)) throw InputError("bad permutation");
  const auto [first, second] = two_cycle_decompose(pi);
  std::vector<Stage> stages = router.route_involution(first);
  // The second involution acts on the pebbles where the first left them.
  auto more = router.route_involution(second);
  for (auto& s : more) stages.push_back(std::move(s));
  auto plan = detail::finish_plan(n, std::move(stages));
  if (plan.realized != Permutation(pi.begin(), pi.end())) throw InternalError("multigrid plan is wrong");
  return plan;
}

long long multigrid_route_bound(int levels, int dim) { return MultigridRouter(levels, dim).bound(); }

}  // namespace matchnet
