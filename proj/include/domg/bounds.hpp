#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>

#include "domg/game.hpp"
#include "domg/solver.hpp"

namespace domg {

// Small exact rational; comparisons cross-multiply in 128 bits so fractional
// bounds like (min_degree+3)/2 are never perturbed.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long value) : num(value) {}  // implicit: integers promote freely
  Rat(long long n, long long d);

  friend bool operator==(const Rat& a, const Rat& b) {
    return (__int128)a.num * b.den == (__int128)b.num * a.den;
  }
  friend bool operator<(const Rat& a, const Rat& b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
  }
  friend bool operator<=(const Rat& a, const Rat& b) { return a < b || a == b; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

  std::string str() const;  // "p/q", or "p" for integers
};

Rat rat_min(const Rat& a, const Rat& b);

enum class Severity { OK, WARN, FAIL };

struct BoundVerdict {
  std::string graph_id;
  std::string bound_id;  // catalog id, optionally ":" qualified with the instance
  bool holds = true;
  Rat lhs;
  Rat rhs;
  Severity severity = Severity::OK;
};

// Everything the checker needs about one graph: structural quantities plus
// per-first-player win/score/restricted-score tables up to a palette ceiling.
// Budget overruns leave gaps (empty optionals) and a note instead of failing.
struct BoundReport {
  std::string id;
  int n = 0;
  int min_deg = 0;
  int max_deg = 0;
  int gamma = 0;
  int dom = 0;
  int ceiling = 0;
  bool two_pendant = false;
  bool adj_deg2_pair = false;
  std::array<std::optional<int>, 2> domg;                  // [Alice, Bob]
  std::array<std::vector<std::optional<bool>>, 2> win;     // [player][palette-1]
  std::array<std::vector<std::optional<int>>, 2> score;    // [player][palette-1]
  std::array<std::vector<std::optional<int>>, 2> rscore;   // [player][palette-1]
  std::vector<std::string> gaps;

  bool complete() const { return gaps.empty(); }
};

BoundReport compute_report(const Graph& g, int score_ceiling, const SolveOptions& opt = {},
                           std::string id = "");

// Per-graph catalog checks computable from a report alone (chains, degree and
// gamma bounds, palette monotonicity, score identities, the restricted-score
// sandwich, first-player gaps, gadgets, plus the conjecture/question
// warnings).
std::vector<BoundVerdict> check_bounds(const BoundReport& r);

// Edge- and vertex-deletion comparisons; solves the reduced graphs.
std::vector<BoundVerdict> check_deletion_bounds(const Graph& g, const BoundReport& r,
                                                const SolveOptions& opt = {});

// Glued pairs from a fixed small catalog: hypotheses (BobGood/AliceGood,
// anchored game numbers, parities) are verified by the exact solver and only
// then is the glued conclusion asserted.
std::vector<BoundVerdict> check_glue_catalog(const SolveOptions& opt = {});

// Universal-vertex exclusion sets must stay winnable for Bob one palette
// above the game number.
std::vector<BoundVerdict> check_dominating_bobgood(const Graph& g, const BoundReport& r,
                                                   const SolveOptions& opt = {});

struct SweepConfig {
  int score_ceiling = 5;
  bool deletion_checks = true;
  bool dominating_bobgood = true;
  bool glue_catalog = true;
  int workers = 1;  // graphs are processed in parallel, verdicts emitted in order
  SolveOptions solve;
};

struct SweepSummary {
  uint64_t graphs = 0;
  uint64_t ok = 0;
  uint64_t warnings = 0;
  uint64_t failures = 0;
  std::vector<std::string> counterexamples;        // serialized graphs that failed
  std::map<int, uint64_t> first_player_gap_histogram;  // |domg(A) - domg(B)|
};

// Runs every applicable check over a corpus, streaming verdicts in order.
SweepSummary sweep_corpus(const std::vector<Graph>& corpus, const SweepConfig& config,
                          const std::function<void(const BoundVerdict&)>& sink);

}  // namespace domg
