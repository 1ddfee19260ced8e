#include "matchnet/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "matchnet/error.hpp"

namespace matchnet {

Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool is_permutation(std::span<const int> p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

bool is_identity(std::span<const int> p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

bool is_involution(std::span<const int> p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[p[i]] != static_cast<int>(i)) return false;
  return true;
}

Permutation inverse(std::span<const int> p) {
  Permutation inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

Permutation compose(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw InputError("composing permutations of different sizes");
  Permutation out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

Permutation random_permutation(int n, std::mt19937_64& rng) {
  Permutation p = identity_permutation(n);
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[draw(rng, static_cast<std::uint64_t>(i + 1))]);
  return p;
}

std::vector<std::vector<int>> cycles(std::span<const int> p) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> cyc;
    for (int x = static_cast<int>(s); !seen[x]; x = p[x]) {
      seen[x] = 1;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::pair<Permutation, Permutation> two_cycle_decompose(std::span<const int> p) {
  if (!is_permutation(p)) throw InputError("not a permutation");
  const Permutation id = identity_permutation(static_cast<int>(p.size()));
  if (is_involution(p)) return {Permutation(p.begin(), p.end()), id};
  // Cycle a_0 -> a_1 -> ... -> a_{L-1}: first reflects a_i to a_{-i}, second a_i to a_{1-i}.
  Permutation first = id;
  Permutation second = id;
  for (const auto& cyc : cycles(p)) {
    const int len = static_cast<int>(cyc.size());
    if (len == 1) continue;
    for (int i = 0; i < len; ++i) {
      first[cyc[i]] = cyc[(len - i) % len];
      second[cyc[i]] = cyc[(len + 1 - i) % len];
    }
  }
  return {first, second};
}

}  // namespace matchnet
