#pragma once

#include <functional>
#include <memory>
#include <string>

#include "domg/constructions.hpp"
#include "domg/game.hpp"
#include "domg/hypergraph.hpp"
#include "domg/solver.hpp"

namespace domg {

// Raised when a scripted policy's internal precondition fails (the board
// reached a shape the underlying argument says cannot happen) or when a
// policy cannot produce a move.
class strategy_error : public std::runtime_error {
 public:
  explicit strategy_error(const std::string& what) : std::runtime_error(what) {}
};

// A move policy for one side. choose() picks a move and commits it to the
// policy's private memory; the opponent's reply arrives through the next
// call's opponent_last. clone() snapshots the memory so adversary searches
// can branch mid-game. Instances are not shareable across concurrent
// matches.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual Move choose(const Graph& g, const GameSpec& spec, const ColoringState& s,
                      const std::optional<Move>& opponent_last) = 0;
  virtual std::unique_ptr<Strategy> clone() const = 0;
  virtual std::string name() const = 0;
};

// First legal move in (vertex, color) order.
std::unique_ptr<Strategy> lowest_legal_strategy();

// Uniform choice among the legal moves; deterministic for a fixed seed.
std::unique_ptr<Strategy> random_strategy(uint64_t seed);

// Plays a perfect move for `role` under the spec the harness passes in
// (first optimal child in deterministic move order).
std::unique_ptr<Strategy> exact_strategy(Player role, SolveOptions opt = {});

// Bob plays color 1 at the lowest uncolored vertex, always.
std::unique_ptr<Strategy> one_bob();

// Wraps a Bob policy for palette base_palette into a Bob policy for palette
// base_palette + extension: an auxiliary base-palette board tracks the game,
// opponent colors beyond the base palette are recorded as the base palette's
// top color, and the inner policy's reply is copied out verbatim.
std::unique_ptr<Strategy> colorblind_lift(std::unique_ptr<Strategy> inner_bob, int base_palette,
                                          int extension);

// Bob for a main palette of `main_palette` driven by an auxiliary game with
// palette aux_palette: the opponent's color c maps to mod_star(aux_palette, c)
// on the auxiliary board and the auxiliary Bob's reply is copied out. A null
// aux_bob binds the exact solver on the auxiliary win game.
std::unique_ptr<Strategy> mod_star_bob(int aux_palette, int main_palette,
                                       std::unique_ptr<Strategy> aux_bob = nullptr);

// Copy-with-special-vertex protocol relating the two first-player games.
// AliceToBob: the main game has Bob first; Bob opens by marking a vertex
// special and colors it 1; an auxiliary Alice-first score game runs behind.
// BobToAlice: the main game has Alice first; her opening move becomes the
// special vertex and the auxiliary game has Bob first. Whenever the auxiliary
// Bob lands on the current special vertex, the main Bob opens a fresh special
// vertex with color 1 instead. A null aux_bob binds the exact solver on the
// auxiliary score game.
enum class SpecialVertexDirection { AliceToBob, BobToAlice };
std::unique_ptr<Strategy> special_vertex_bob(SpecialVertexDirection direction,
                                             std::unique_ptr<Strategy> aux_bob = nullptr);

// Bob on a gen_zelinka graph at palette 2: k+2 moves of color 1 inside S,
// then a color-1 move on an uncolored subset vertex whose whole neighborhood
// is already color 1 (raises strategy_error if none exists), then lowest
// legal.
std::unique_ptr<Strategy> zelinka_bob(const ZelinkaLayout& layout);

// Bob on a gen_tree_graph closure at palette 2, moving first on the
// component starting at component_offset: on turn i it colors a depth-(i-1)
// vertex whose ancestors are all color 1 and whose subtree is untouched,
// walking to a leaf, then plays lowest legal.
std::unique_ptr<Strategy> tree_bob(const TreeLayout& layout, int component_offset = 0);

// Component picker for the doubled tree graph: plays tree_bob on an
// untouched component (the one the opponent avoided when moving second).
std::unique_ptr<Strategy> tree_bob_doubled(const TreeLayout& layout);

// Alice on disjoint cliques: answer in the clique the opponent just used
// while it has room, otherwise the lowest unfinished clique, always with the
// lowest color the clique does not see yet.
std::unique_ptr<Strategy> clique_alice(int copies, int size);

// Bob on `copies` disjoint K_{2t+1} cliques at palette t+2: flood the
// opponent's opening color into its clique until the clique is finished or
// holds t+2 copies of it, then flood the finished clique's missing color
// into the emptiest other clique. Forces two differently-missing cliques.
std::unique_ptr<Strategy> clique_bob_phases(int copies, int size);

// Alice as simultaneous Breaker on one hypergraph per part: replies land in
// the part the opponent just touched (else the lowest live part), colored
// with the part's index, on the vertex with the largest potential weight.
std::unique_ptr<Strategy> partition_alice(Hypergraph truncated, std::vector<VertexSet> parts);

// Glued composition data: the union, the attached graph K, and H - L, with
// vertex maps into the union.
struct GlueLayout {
  Graph whole;
  Graph k_graph;
  Graph h_rest;  // H with L removed
  std::vector<int> k_to_whole;
  std::vector<int> rest_to_whole;
  VertexSet shared_in_whole;
};

GlueLayout make_glue_layout(const Graph& h, const VertexSet& l, const Graph& k,
                            const std::vector<std::pair<int, int>>& identification);

// Which parity case drives the composed Alice: who moves first in the main
// game and where Alice's own first move goes.
enum class GluedCase {
  BobFirst,            // K and H-L both even, Bob opens
  AliceOpensRest,      // |K| even, |H-L| odd, Alice opens in H-L
  AliceOpensAttached,  // |K| odd, |H-L| even, Alice opens in K
};

// Routes play: opponent moves on V(K) are answered on V(K) by k_policy,
// moves on H-L are answered there by h_policy. Raises strategy_error when a
// route has no uncolored vertex left (the parity conditions rule it out).
std::unique_ptr<Strategy> glued_alice(GlueLayout layout, GluedCase parity,
                                      std::unique_ptr<Strategy> h_policy,
                                      std::unique_ptr<Strategy> k_policy);

struct MatchRecord {
  std::vector<Move> transcript;
  std::optional<int> score;       // dominating classes at the end
  std::optional<Player> winner;   // under the win rule (or BobGood rule)
  std::vector<std::string> violations;
  std::optional<Player> forfeited_by;
  uint64_t seed = 0;
};

// Runs one game to the end. Illegal or failed policy moves are recorded as a
// forfeit with a diagnostic instead of propagating.
MatchRecord play_match(const Graph& g, const GameSpec& spec, Strategy& alice, Strategy& bob,
                       uint64_t seed = 0);

struct AdversaryCheck {
  bool ok = true;
  uint64_t lines = 0;     // terminal positions examined
  std::string failure;    // first failing line, if any
};

// Branches over every legal adversary move while the fixed side follows its
// policy (cloned at each branch point); returns ok iff `objective` holds at
// every reachable terminal. Policy errors and illegal moves count as
// failures.
AdversaryCheck exhaustive_adversary_check(
    const Graph& g, const GameSpec& spec, const Strategy& fixed, Player fixed_role,
    const std::function<bool(const Graph&, const GameSpec&, const ColoringState&)>& objective,
    uint64_t max_lines = UINT64_MAX);

}  // namespace domg
