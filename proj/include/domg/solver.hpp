#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "domg/game.hpp"

namespace domg {

// Raised when a solve exceeds its node ceiling. The solver never degrades to
// an approximate answer; it either finishes exactly or throws this.
class budget_exhausted_error : public std::runtime_error {
 public:
  explicit budget_exhausted_error(const std::string& what) : std::runtime_error(what) {}
};

struct SolveOptions {
  uint64_t max_nodes = UINT64_MAX;
  bool principal_line = false;
};

struct SolveResult {
  int value = 0;  // dominating-class count; 1/0 = Alice/Bob for win variants
  std::optional<Player> winner;
  std::vector<Move> principal_line;
  uint64_t nodes_expanded = 0;
  uint64_t table_hits = 0;
};

// Depth-first minimax over coloring states, memoized on the
// color-permutation canonical key (color 1 pinned under RestrictedBob).
// Alpha-beta windows plus monotone class bounds (classes that already
// dominate stay dominating, classes missing from a finished closed
// neighborhood are dead) prune the tree; the table stores exact values only.
// One instance serves one (graph, spec) pair and is not thread-safe;
// independent solves belong on separate instances.
class Solver {
 public:
  Solver(const Graph& g, const GameSpec& spec, SolveOptions opt = {});
  ~Solver();
  Solver(Solver&&) noexcept;
  Solver& operator=(Solver&&) noexcept;

  // Exact value of any position of this game.
  int value(const ColoringState& from);
  SolveResult solve();

  const GameSpec& spec() const;
  uint64_t nodes_expanded() const;
  uint64_t table_hits() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

Player solve_win(const Graph& g, Player first, int palette, const SolveOptions& opt = {});
int solve_score(const Graph& g, Player first, int palette, const SolveOptions& opt = {});
int solve_restricted_score(const Graph& g, Player first, int palette,
                           const SolveOptions& opt = {});

// True iff Bob can force some non-excluded vertex to miss a color.
bool solve_bobgood(const Graph& h, const VertexSet& excluded, Player first, int palette,
                   const SolveOptions& opt = {});

// True iff Alice wins the game on h with l removed.
bool solve_alicegood(const Graph& h, const VertexSet& l, Player first, int palette,
                     const SolveOptions& opt = {});

// Largest palette Alice wins with `first` moving first. Iterates k upward;
// palette monotonicity makes the first Bob win final.
int game_number(const Graph& g, Player first, const SolveOptions& opt = {});

SolveResult solve(const Graph& g, const GameSpec& spec, const SolveOptions& opt = {});

}  // namespace domg
