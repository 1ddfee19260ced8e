#pragma once

#include <span>
#include <vector>

#include "matchnet/network.hpp"
#include "matchnet/routing.hpp"

namespace matchnet::detail {

/// Odd-even transposition with swaps along `path`; key[i] is the desired path index of the
/// pebble currently at path[i]. Only non-empty rounds are emitted; at most path.size() rounds.
std::vector<Stage> odd_even_route(std::span<const Vertex> path, std::vector<int> key);

/// Merges independent stage lists (disjoint vertex sets) stage by stage.
std::vector<Stage> merge_parallel(const std::vector<std::vector<Stage>>& plans);

/// Swap stage for an involution: one swap per 2-cycle.
Stage involution_stage(std::span<const int> inv);

RoutingPlan finish_plan(int n, std::vector<Stage> stages);

}  // namespace matchnet::detail
