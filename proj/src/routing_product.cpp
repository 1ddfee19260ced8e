#include <algorithm>
#include <functional>

#include "matchnet/error.hpp"
#include "matchnet/routing.hpp"
#include "routing_internal.hpp"

namespace matchnet {

namespace {

// Perfect matching (left -> right) in the support of a regular bipartite multigraph.
std::vector<int> perfect_matching(const std::vector<std::vector<int>>& count) {
  const int n = static_cast<int>(count.size());
  std::vector<int> match_right(static_cast<std::size_t>(n), -1);
  std::vector<char> seen;
  std::function<bool(int)> augment = [&](int left) {
    for (int right = 0; right < n; ++right) {
      if (count[left][right] == 0 || seen[right]) continue;
      seen[right] = 1;
      if (match_right[right] < 0 || augment(match_right[right])) {
        match_right[right] = left;
        return true;
      }
    }
    return false;
  };
  for (int left = 0; left < n; ++left) {
    seen.assign(static_cast<std::size_t>(n), 0);
    if (!augment(left)) throw InternalError("demand multigraph has no perfect matching");
  }
  std::vector<int> match_left(static_cast<std::size_t>(n));
  for (int right = 0; right < n; ++right) match_left[match_right[right]] = right;
  return match_left;
}

// Host numbering (major, minor) -> major * minors + minor, with a flag to swap axes.
struct Axes {
  int majors;
  int minors;
  bool transposed;  // true: vertex = minor * majors + major
  Vertex at(int major, int minor) const { return transposed ? minor * majors + major : major * minors + minor; }
};

// Routes permutations inside every copy of the minor axis (fixed major) in parallel.
std::vector<Stage> route_copies(const Router& r, const Axes& ax, const std::vector<Permutation>& perms) {
  std::vector<std::vector<Stage>> plans;
  for (int major = 0; major < ax.majors; ++major) {
    const auto local = r.route(perms[major]);
    std::vector<Stage> mapped;
    for (const auto& st : local.stages) {
      Stage g;
      for (const auto& c : st.cmp) {
        const Vertex a = ax.at(major, c.u);
        const Vertex b = ax.at(major, c.v);
        g.cmp.push_back({std::min(a, b), std::max(a, b), CmpKind::Swap});
      }
      mapped.push_back(std::move(g));
    }
    plans.push_back(std::move(mapped));
  }
  return detail::merge_parallel(plans);
}

// Three phases: along minor copies, along major copies, along minor copies.
std::vector<Stage> three_phase(const Router& minor_router, const Router& major_router, const Axes& ax,
                               std::span<const int> pi) {
  const int n = ax.majors * ax.minors;
  std::vector<int> major_of(static_cast<std::size_t>(n)), minor_of(static_cast<std::size_t>(n));
  for (int a = 0; a < ax.majors; ++a)
    for (int b = 0; b < ax.minors; ++b) {
      major_of[ax.at(a, b)] = a;
      minor_of[ax.at(a, b)] = b;
    }

  // Demand multigraph: source major -> destination major, minors-regular.
  std::vector<std::vector<int>> count(static_cast<std::size_t>(ax.majors), std::vector<int>(static_cast<std::size_t>(ax.majors), 0));
  for (Vertex v = 0; v < n; ++v) ++count[major_of[v]][major_of[pi[v]]];
  std::vector<int> mid_minor(static_cast<std::size_t>(n), -1);  // intermediate minor coordinate per pebble
  for (int layer = 0; layer < ax.minors; ++layer) {
    const auto m = perfect_matching(count);
    for (int a = 0; a < ax.majors; ++a) {
      --count[a][m[a]];
      for (int b = 0; b < ax.minors; ++b) {
        const Vertex v = ax.at(a, b);
        if (mid_minor[v] < 0 && major_of[pi[v]] == m[a]) {
          mid_minor[v] = layer;
          break;
        }
      }
    }
  }

  std::vector<Stage> stages;
  auto append = [&](std::vector<Stage> part) {
    for (auto& s : part) stages.push_back(std::move(s));
  };
  // Phase 1: within each minor copy, pebble at (a,b) moves to (a, mid_minor).
  std::vector<Permutation> p1(static_cast<std::size_t>(ax.majors), Permutation(static_cast<std::size_t>(ax.minors)));
  for (Vertex v = 0; v < n; ++v) p1[major_of[v]][minor_of[v]] = mid_minor[v];
  append(route_copies(minor_router, ax, p1));

  // Phase 2: within each major copy (fixed minor), move to the destination major.
  const Axes cross{ax.minors, ax.majors, !ax.transposed};
  std::vector<Permutation> p2(static_cast<std::size_t>(ax.minors), Permutation(static_cast<std::size_t>(ax.majors)));
  for (Vertex v = 0; v < n; ++v) p2[mid_minor[v]][major_of[v]] = major_of[pi[v]];
  append(route_copies(major_router, cross, p2));

  // Phase 3: within each minor copy, move to the destination minor.
  std::vector<Permutation> p3(static_cast<std::size_t>(ax.majors), Permutation(static_cast<std::size_t>(ax.minors)));
  for (Vertex v = 0; v < n; ++v) p3[major_of[pi[v]]][mid_minor[v]] = minor_of[pi[v]];
  append(route_copies(minor_router, ax, p3));
  return stages;
}

}  // namespace

RoutingPlan route_product(const Router& r1, int n1, const Router& r2, int n2, std::span<const int> pi) {
  const int n = n1 * n2;
  if (static_cast<int>(pi.size()) != n || !is_permutation(pi)) throw InputError("bad permutation");
  // Rows are copies of the second factor (vertex a*n2+b); columns are copies of the first.
  std::vector<Stage> stages;
  if (r2.depth_bound <= r1.depth_bound) stages = three_phase(r2, r1, Axes{n1, n2, false}, pi);
  else stages = three_phase(r1, r2, Axes{n2, n1, true}, pi);
  auto plan = detail::finish_plan(n, std::move(stages));
  if (plan.realized != Permutation(pi.begin(), pi.end())) throw InternalError("product plan is wrong");
  return plan;
}

namespace {

Router path_router(int len) {
  return {"path", len, [len](std::span<const int> p) { return route_path(len, p); }};
}

Router mesh_router(std::span<const int> lengths) {
  std::vector<int> ls(lengths.begin(), lengths.end());
  return {"mesh", mesh_route_bound(ls), [ls](std::span<const int> p) { return route_mesh(ls, p); }};
}

}  // namespace

long long mesh_route_bound(std::span<const int> lengths) {
  if (lengths.size() == 1) return lengths[0];
  const long long b1 = lengths[0];
  const long long b2 = mesh_route_bound(lengths.subspan(1));
  return std::min(b1, b2) + b1 + b2;
}

RoutingPlan route_mesh(std::span<const int> lengths, std::span<const int> pi) {
  if (lengths.empty()) throw ParameterError("mesh needs at least one side");
  if (lengths.size() == 1) return route_path(lengths[0], pi);
  int rest = 1;
  for (std::size_t i = 1; i < lengths.size(); ++i) rest *= lengths[i];
  return route_product(path_router(lengths[0]), lengths[0], mesh_router(lengths.subspan(1)), rest, pi);
}

}  // namespace matchnet
