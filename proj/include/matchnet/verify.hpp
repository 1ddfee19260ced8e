#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matchnet/network.hpp"

namespace matchnet {

enum class VerifyMethod { ZeroOne, Exhaustive, Randomized };

std::string to_string(VerifyMethod m);

struct VerificationReport {
  VerifyMethod method = VerifyMethod::ZeroOne;
  bool passed = false;
  /// Keys by vertex of the first failing input (fail only).
  std::optional<std::vector<int>> counterexample;
  std::uint64_t inputs_checked = 0;
  /// Randomized runs only.
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
};

/// Largest n accepted by verify_zero_one: 20, or MATCHNET_CAP_OVERRIDE when set (1..30).
int zero_one_cap();
constexpr int kExhaustiveCap = 8;

/// All 2^n binary inputs, bitsliced and spread over worker threads. CapError above `cap`.
VerificationReport verify_zero_one(const SortingNetwork& net, int cap = -1, int threads = 0);
/// All n! permutations of 0..n-1. CapError above `cap` (at most 8 unless overridden).
VerificationReport verify_exhaustive(const SortingNetwork& net, int cap = kExhaustiveCap);
/// `trials` random permutations plus `trials` random bit vectors; a smoke test, not a proof.
VerificationReport verify_randomized(const SortingNetwork& net, std::uint64_t trials = 100000, std::uint64_t seed = 0);

/// True when the network leaves `input` sorted along its order.
bool sorts_input(const SortingNetwork& net, const std::vector<int>& input);

}  // namespace matchnet
