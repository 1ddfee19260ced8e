#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace matchnet {

/// perm[i] is the image of i. For routing: the pebble starting at vertex i ends at perm[i].
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
bool is_permutation(std::span<const int> p);
bool is_identity(std::span<const int> p);
bool is_involution(std::span<const int> p);
Permutation inverse(std::span<const int> p);
/// (a ∘ b)[i] = a[b[i]]: apply b first.
Permutation compose(std::span<const int> a, std::span<const int> b);
Permutation random_permutation(int n, std::mt19937_64& rng);

/// Two involutions with p = second ∘ first. A permutation that is already an
/// involution comes back as (p, identity).
std::pair<Permutation, Permutation> two_cycle_decompose(std::span<const int> p);

/// Cycles of p, each starting at its smallest element, sorted by that element.
std::vector<std::vector<int>> cycles(std::span<const int> p);

/// Uniform integer in [0, bound) drawn as rng() % bound.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace matchnet
