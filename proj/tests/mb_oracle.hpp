#pragma once

// Test-side Maker-Breaker reference: memoized win search over claim masks,
// independent of the library's solver, with best-move extraction for playing
// an optimal Maker against a fixed Breaker policy.

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "domg/hypergraph.hpp"

namespace mb_oracle {

struct Solver {
  int n;
  uint64_t full;
  std::vector<uint64_t> edges;
  bool skip;
  std::unordered_map<uint64_t, bool> memo[2];

  Solver(const domg::Hypergraph& h, bool maker_may_skip) : n(h.n), skip(maker_may_skip) {
    full = (uint64_t(1) << n) - 1;
    for (const auto& e : h.edges) edges.push_back(e.low_word());
  }

  bool maker_complete(uint64_t maker) const {
    for (uint64_t e : edges)
      if ((e & ~maker) == 0) return true;
    return false;
  }
  bool breaker_complete(uint64_t breaker) const {
    for (uint64_t e : edges)
      if ((e & breaker) == 0) return false;
    return true;
  }

  bool maker_wins(uint64_t maker, uint64_t breaker, bool maker_to_move) {
    if (maker_complete(maker)) return true;
    if (breaker_complete(breaker)) return false;
    uint64_t unclaimed = full & ~(maker | breaker);
    if (unclaimed == 0) return false;
    // masks are disjoint, so maker | (breaker shifted) is collision-free
    uint64_t key = maker | (breaker << n);
    auto& m = memo[maker_to_move ? 0 : 1];
    if (auto it = m.find(key); it != m.end()) return it->second;
    bool result;
    if (maker_to_move) {
      result = false;
      for (uint64_t rest = unclaimed; rest && !result; rest &= rest - 1)
        result = maker_wins(maker | (rest & -rest), breaker, false);
      if (!result && skip) result = maker_wins(maker, breaker, false);
    } else {
      result = true;
      for (uint64_t rest = unclaimed; rest && result; rest &= rest - 1)
        result = maker_wins(maker, breaker | (rest & -rest), true);
    }
    m.emplace(key, result);
    return result;
  }

  // winning claim when one exists; nullopt encodes a skip (only chosen when
  // skipping wins and no claim does, otherwise the lowest claim)
  std::optional<int> maker_best(uint64_t maker, uint64_t breaker) {
    uint64_t unclaimed = full & ~(maker | breaker);
    for (uint64_t rest = unclaimed; rest; rest &= rest - 1) {
      uint64_t bit = rest & -rest;
      if (maker_wins(maker | bit, breaker, false)) return __builtin_ctzll(bit);
    }
    if (skip && maker_wins(maker, breaker, false)) return std::nullopt;
    if (unclaimed) return __builtin_ctzll(unclaimed);
    return std::nullopt;
  }
};

}  // namespace mb_oracle
