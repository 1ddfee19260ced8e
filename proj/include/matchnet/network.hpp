#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "matchnet/error.hpp"
#include "matchnet/graph.hpp"

namespace matchnet {

enum class CmpKind : std::uint8_t {
  Dir,   // min lands at u, max at v
  Swap,  // unconditional exchange
};

struct Comparator {
  Vertex u;
  Vertex v;
  CmpKind kind = CmpKind::Dir;

  bool operator==(const Comparator&) const = default;
};

struct Stage {
  std::vector<Comparator> cmp;

  bool empty() const { return cmp.empty(); }
  int size() const { return static_cast<int>(cmp.size()); }
  bool operator==(const Stage&) const = default;
};

/// Named construction plus its integer parameters and free-form tags.
struct Provenance {
  std::string construction;
  std::vector<std::pair<std::string, long long>> params;
  std::vector<std::pair<std::string, std::string>> tags;

  bool operator==(const Provenance&) const = default;
};

/// Instantiated depth bound of the construction that built a network.
struct DepthCertificate {
  std::string formula;
  std::vector<std::pair<std::string, long long>> params;
  long long claimed_bound = 0;
  long long achieved_depth = 0;
  std::string note;

  bool holds() const { return achieved_depth <= claimed_bound; }
  bool operator==(const DepthCertificate&) const = default;
};

struct SortingNetwork {
  Graph graph;
  std::vector<Stage> stages;
  VertexOrder order;
  Provenance provenance;
  std::optional<DepthCertificate> certificate;

  int depth() const { return static_cast<int>(stages.size()); }
  /// Total comparator/swap count.
  long long size() const;

  bool operator==(const SortingNetwork&) const = default;
};

/// Throws InternalError if a comparator is off-graph or two comparators share a vertex.
void validate_stage(const Graph& g, const Stage& stage, int index = -1);
void validate(const SortingNetwork& net);

template <class Key>
void apply_stage(const Stage& stage, std::span<Key> keys) {
  for (const auto& c : stage.cmp) {
    Key& a = keys[static_cast<std::size_t>(c.u)];
    Key& b = keys[static_cast<std::size_t>(c.v)];
    if (c.kind == CmpKind::Swap || b < a) std::swap(a, b);
  }
}

template <class Key>
void run_stages(std::span<const Stage> stages, std::span<Key> keys) {
  for (const auto& s : stages) apply_stage(s, keys);
}

/// Returns the output configuration; `input[v]` is the key initially at vertex v.
template <class Key>
std::vector<Key> execute(const SortingNetwork& net, std::span<const Key> input) {
  if (static_cast<int>(input.size()) != net.graph.size())
    throw InputError("input has " + std::to_string(input.size()) + " keys, network has " +
                     std::to_string(net.graph.size()) + " vertices");
  std::vector<Key> keys(input.begin(), input.end());
  run_stages<Key>(net.stages, keys);
  return keys;
}

template <class Key>
std::vector<Key> execute(const SortingNetwork& net, const std::vector<Key>& input) {
  return execute<Key>(net, std::span<const Key>(input));
}

/// True when keys read along the order (rank 0 first) are non-decreasing.
template <class Key>
bool sorted_along(const VertexOrder& order, std::span<const Key> keys) {
  for (int r = 1; r < order.size(); ++r)
    if (keys[static_cast<std::size_t>(order.vertex_at(r))] < keys[static_cast<std::size_t>(order.vertex_at(r - 1))])
      return false;
  return true;
}

/// Appends b's stages to a; both must live on the same graph. Keeps a's order.
SortingNetwork concatenate(const SortingNetwork& a, const SortingNetwork& b);
SortingNetwork concatenate(const SortingNetwork& a, std::span<const Stage> extra);

/// Tracks where each logical index currently sits.
class PositionMap {
 public:
  PositionMap() = default;
  static PositionMap identity(int n);
  explicit PositionMap(std::vector<Vertex> pos);

  int size() const { return static_cast<int>(pos_.size()); }
  Vertex at(int logical) const { return pos_[static_cast<std::size_t>(logical)]; }
  int logical_at(Vertex v) const { return inv_[static_cast<std::size_t>(v)]; }
  const std::vector<Vertex>& positions() const { return pos_; }

  /// Follows the unconditional swaps of a stage; comparators leave labels in place.
  void apply_swaps(const Stage& stage);
  /// Replaces the map after a routing that sends the pebble at vertex v to dest[v].
  void apply_routing(std::span<const Vertex> dest);

 private:
  std::vector<Vertex> pos_;
  std::vector<int> inv_;
};

/// Maps logical comparators to the vertices currently holding those indices.
/// Throws InternalError when a mapped pair is not an edge of g.
Stage apply_position_map(const Stage& logical, const PositionMap& pm, const Graph& g);

}  // namespace matchnet
