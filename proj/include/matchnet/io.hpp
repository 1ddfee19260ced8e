#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "matchnet/graph.hpp"
#include "matchnet/network.hpp"
#include "matchnet/permutation.hpp"
#include "matchnet/routing.hpp"

namespace matchnet {

using Json = nlohmann::ordered_json;

constexpr int kFormatVersion = 1;

/// {"n","edges","family","order"}; vertices 1-based, edges (u < v) sorted.
Json graph_to_json(const Graph& g, const std::optional<VertexOrder>& order = std::nullopt);
Graph graph_from_json(const Json& j);
/// The "order" field of a graph document, if present.
std::optional<VertexOrder> order_from_graph_json(const Json& j);

/// {"version","graph","order","stages","provenance","certificate"}.
Json network_to_json(const SortingNetwork& net);
/// ParseError (with stage index where relevant) on malformed input or invalid stages.
SortingNetwork network_from_json(const Json& j);
/// A routing plan as a network document whose stages are all swaps.
Json plan_to_json(const Graph& g, const RoutingPlan& plan);

/// 1-based rank list, e.g. [2,1,3].
Json order_to_json(const VertexOrder& order);
VertexOrder order_from_json(const Json& j);
/// 1-based destination list: entry i is where the pebble at vertex i must go.
Json permutation_to_json(std::span<const int> p);
Permutation permutation_from_json(const Json& j, int n);
/// Comma-separated 1-based list ("2,1,3") or a JSON array.
std::vector<int> parse_index_list(const std::string& text);

/// Graph drawing with, on every edge, the stages that use it.
std::string network_to_dot(const SortingNetwork& net);
std::string graph_to_dot(const Graph& g);

std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);
/// Pretty JSON text followed by a newline.
std::string dump(const Json& j);
Json parse_json(const std::string& text);

/// A path to a graph JSON file, or a family spelling such as "mesh:3,3".
Graph load_graph(const std::string& spec, std::uint64_t seed = 0);

}  // namespace matchnet
