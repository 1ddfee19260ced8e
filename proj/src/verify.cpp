#include "matchnet/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <random>
#include <thread>

#include "matchnet/error.hpp"
#include "matchnet/permutation.hpp"

namespace matchnet {

namespace {

constexpr std::uint64_t kNone = ~std::uint64_t{0};

struct FlatOp {
  int u;
  int v;
  bool swap;
};

std::vector<FlatOp> flatten(const SortingNetwork& net) {
  std::vector<FlatOp> ops;
  for (const auto& st : net.stages)
    for (const auto& c : st.cmp) ops.push_back({c.u, c.v, c.kind == CmpKind::Swap});
  return ops;
}

// Lane j of the word for vertex v is bit v of the input index base + j (v < 6 varies within a word).
constexpr std::uint64_t kLanePattern[6] = {0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
                                           0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};

}  // namespace

std::string to_string(VerifyMethod m) {
  switch (m) {
    case VerifyMethod::ZeroOne: return "zero-one";
    case VerifyMethod::Exhaustive: return "exhaustive";
    case VerifyMethod::Randomized: return "random";
  }
  return "unknown";
}

int zero_one_cap() {
  const char* env = std::getenv("MATCHNET_CAP_OVERRIDE");
  if (env == nullptr || *env == '\0') return 20;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value < 1 || value > 30)
    throw ParameterError("MATCHNET_CAP_OVERRIDE must be an integer in 1..30");
  return static_cast<int>(value);
}

bool sorts_input(const SortingNetwork& net, const std::vector<int>& input) {
  const auto out = execute<int>(net, input);
  return sorted_along<int>(net.order, out);
}

VerificationReport verify_zero_one(const SortingNetwork& net, int cap, int threads) {
  const int n = net.graph.size();
  if (cap < 0) cap = zero_one_cap();
  if (n > cap)
    throw CapError("zero-one verification refuses n = " + std::to_string(n) + " above cap " + std::to_string(cap));
  const auto ops = flatten(net);
  std::vector<int> chain(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) chain[r] = net.order.vertex_at(r);

  const std::uint64_t total = std::uint64_t{1} << n;
  const std::uint64_t batches = (total + 63) / 64;
  const std::uint64_t lanes = total >= 64 ? kNone : (std::uint64_t{1} << total) - 1;
  std::atomic<std::uint64_t> first_bad{kNone};

  auto worker = [&](std::uint64_t start, std::uint64_t stride) {
    std::vector<std::uint64_t> w(static_cast<std::size_t>(n));
    for (std::uint64_t b = start; b < batches; b += stride) {
      const std::uint64_t base = b * 64;
      if (base > first_bad.load(std::memory_order_relaxed)) return;
      for (int v = 0; v < n; ++v) w[v] = v < 6 ? kLanePattern[v] : ((base >> v) & 1 ? kNone : 0);
      for (const auto& op : ops) {
        const std::uint64_t a = w[op.u], c = w[op.v];
        if (op.swap) {
          w[op.u] = c;
          w[op.v] = a;
        } else {
          w[op.u] = a & c;
          w[op.v] = a | c;
        }
      }
      std::uint64_t bad = 0;
      for (int r = 1; r < n; ++r) bad |= w[chain[r - 1]] & ~w[chain[r]];
      bad &= lanes;
      if (bad) {
        const std::uint64_t x = base + static_cast<std::uint64_t>(std::countr_zero(bad));
        std::uint64_t cur = first_bad.load();
        while (x < cur && !first_bad.compare_exchange_weak(cur, x)) {
        }
        return;
      }
    }
  };

  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), batches));
  if (threads <= 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(threads));
    for (auto& th : pool) th.join();
  }

  VerificationReport rep;
  rep.method = VerifyMethod::ZeroOne;
  const std::uint64_t bad = first_bad.load();
  rep.passed = bad == kNone;
  rep.inputs_checked = rep.passed ? total : bad + 1;
  if (!rep.passed) {
    std::vector<int> input(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) input[v] = static_cast<int>((bad >> v) & 1);
    rep.counterexample = std::move(input);
  }
  return rep;
}

VerificationReport verify_exhaustive(const SortingNetwork& net, int cap) {
  const int n = net.graph.size();
  if (n > cap)
    throw CapError("exhaustive verification refuses n = " + std::to_string(n) + " above cap " + std::to_string(cap));
  VerificationReport rep;
  rep.method = VerifyMethod::Exhaustive;
  rep.passed = true;
  std::vector<int> perm = identity_permutation(n);
  do {
    ++rep.inputs_checked;
    if (!sorts_input(net, perm)) {
      rep.passed = false;
      rep.counterexample = perm;
      break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return rep;
}

VerificationReport verify_randomized(const SortingNetwork& net, std::uint64_t trials, std::uint64_t seed) {
  const int n = net.graph.size();
  VerificationReport rep;
  rep.method = VerifyMethod::Randomized;
  rep.seed = seed;
  rep.trials = trials;
  rep.passed = true;
  std::mt19937_64 rng(seed);
  auto check = [&](std::vector<int> input) {
    ++rep.inputs_checked;
    if (sorts_input(net, input)) return true;
    rep.passed = false;
    rep.counterexample = std::move(input);
    return false;
  };
  for (std::uint64_t t = 0; t < trials; ++t)
    if (!check(random_permutation(n, rng))) return rep;
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::vector<int> bits(static_cast<std::size_t>(n));
    for (auto& b : bits) b = static_cast<int>(rng() & 1);
    if (!check(std::move(bits))) return rep;
  }
  return rep;
}

}  // namespace matchnet
