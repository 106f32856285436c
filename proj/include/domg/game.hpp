#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "domg/graph.hpp"

namespace domg {

enum class Player : uint8_t { Alice, Bob };

inline Player opponent(Player p) { return p == Player::Alice ? Player::Bob : Player::Alice; }
inline char player_letter(Player p) { return p == Player::Alice ? 'A' : 'B'; }
inline int player_index(Player p) { return p == Player::Alice ? 0 : 1; }

enum class Variant : uint8_t {
  Win,            // Alice wins iff every color class dominates
  Score,          // value = number of dominating color classes
  RestrictedBob,  // score game where Bob may only play color 1
  BobGood,        // win game, domination audited only at non-excluded vertices
};

struct GameSpec {
  int palette = 1;
  Player first = Player::Alice;
  Variant variant = Variant::Win;
  VertexSet excluded;  // BobGood only; proper subset of V
};

GameSpec win_spec(int palette, Player first);
GameSpec score_spec(int palette, Player first);
GameSpec restricted_spec(int palette, Player first);
GameSpec bobgood_spec(int palette, Player first, VertexSet excluded);

struct Move {
  int vertex = -1;
  int color = 0;  // 1..palette
  friend bool operator==(const Move&, const Move&) = default;
};

// Position of an in-progress game. 0 means uncolored; turn parity is derived
// from the number of colored vertices, never stored. States are immutable;
// apply_move returns a fresh value.
class ColoringState {
 public:
  explicit ColoringState(int n);

  int vertex_count() const { return int(colors_.size()); }
  int color(int v) const;
  int moves_made() const { return moves_made_; }
  bool is_terminal() const { return moves_made_ == vertex_count(); }
  Player to_move(Player first) const {
    return moves_made_ % 2 == 0 ? first : opponent(first);
  }
  const std::vector<uint8_t>& colors() const { return colors_; }

 private:
  friend ColoringState apply_move(const ColoringState& s, const Move& m);
  std::vector<uint8_t> colors_;
  int moves_made_ = 0;
};

// All moves available to the side to move, ordered by (vertex, color)
// ascending. Empty on terminal states. Under RestrictedBob the mover Bob
// sees only color 1.
std::vector<Move> legal_moves(const ColoringState& s, const GameSpec& spec);

ColoringState apply_move(const ColoringState& s, const Move& m);

// Number of colors in 1..palette whose class dominates g. Terminal only.
int terminal_score(const Graph& g, const ColoringState& s, int palette);

// Terminal verdict. Win: every color class dominates. BobGood: every
// non-excluded vertex sees every color inside its closed neighborhood.
bool alice_wins(const Graph& g, const ColoringState& s, const GameSpec& spec);

// Color-permutation canonical form: colors relabeled in order of first
// occurrence along ascending vertex index; uncolored stays 0. When
// fix_color1 is set, color 1 keeps its identity and only 2..k are relabeled.
// Two states get equal keys iff they differ by a palette permutation.
std::vector<uint8_t> canonical_key(const ColoringState& s, bool fix_color1 = false);

// Least positive residue of x mod s, with multiples of s mapped to s.
int mod_star(int s, long long x);

}  // namespace domg
