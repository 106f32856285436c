#include "domg/game.hpp"

#include <stdexcept>

namespace domg {

GameSpec win_spec(int palette, Player first) { return GameSpec{palette, first, Variant::Win, {}}; }
GameSpec score_spec(int palette, Player first) { return GameSpec{palette, first, Variant::Score, {}}; }
GameSpec restricted_spec(int palette, Player first) {
  return GameSpec{palette, first, Variant::RestrictedBob, {}};
}
GameSpec bobgood_spec(int palette, Player first, VertexSet excluded) {
  return GameSpec{palette, first, Variant::BobGood, std::move(excluded)};
}

ColoringState::ColoringState(int n) {
  if (n < 1) throw std::invalid_argument("ColoringState: vertex count must be >= 1");
  colors_.assign(size_t(n), 0);
}

int ColoringState::color(int v) const {
  if (v < 0 || v >= vertex_count()) throw std::out_of_range("ColoringState: vertex out of range");
  return colors_[size_t(v)];
}

std::vector<Move> legal_moves(const ColoringState& s, const GameSpec& spec) {
  std::vector<Move> out;
  if (s.is_terminal()) return out;
  bool bob_restricted =
      spec.variant == Variant::RestrictedBob && s.to_move(spec.first) == Player::Bob;
  int max_color = bob_restricted ? 1 : spec.palette;
  out.reserve(size_t((s.vertex_count() - s.moves_made()) * max_color));
  for (int v = 0; v < s.vertex_count(); ++v) {
    if (s.color(v) != 0) continue;
    for (int c = 1; c <= max_color; ++c) out.push_back(Move{v, c});
  }
  return out;
}

ColoringState apply_move(const ColoringState& s, const Move& m) {
  if (m.vertex < 0 || m.vertex >= s.vertex_count())
    throw std::invalid_argument("apply_move: vertex out of range");
  if (s.color(m.vertex) != 0) throw std::invalid_argument("apply_move: vertex already colored");
  if (m.color < 1 || m.color > 255) throw std::invalid_argument("apply_move: bad color");
  ColoringState next = s;
  next.colors_[size_t(m.vertex)] = uint8_t(m.color);
  ++next.moves_made_;
  return next;
}

namespace {

bool class_dominates(const Graph& g, const ColoringState& s, int c) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    bool seen = s.color(v) == c;
    if (!seen)
      g.neighbors(v).for_each([&](int u) { seen = seen || s.color(u) == c; });
    if (!seen) return false;
  }
  return true;
}

}  // namespace

int terminal_score(const Graph& g, const ColoringState& s, int palette) {
  if (g.vertex_count() != s.vertex_count())
    throw std::invalid_argument("terminal_score: graph/state size mismatch");
  if (!s.is_terminal()) throw std::invalid_argument("terminal_score: state not terminal");
  int score = 0;
  for (int c = 1; c <= palette; ++c)
    if (class_dominates(g, s, c)) ++score;
  return score;
}

bool alice_wins(const Graph& g, const ColoringState& s, const GameSpec& spec) {
  if (!s.is_terminal()) throw std::invalid_argument("alice_wins: state not terminal");
  switch (spec.variant) {
    case Variant::Win:
      return terminal_score(g, s, spec.palette) == spec.palette;
    case Variant::BobGood: {
      if (spec.excluded.universe_size() != g.vertex_count())
        throw std::invalid_argument("alice_wins: excluded set universe mismatch");
      for (int x = 0; x < g.vertex_count(); ++x) {
        if (spec.excluded.test(x)) continue;
        VertexSet nbhd = closed_neighborhood(g, x);
        for (int c = 1; c <= spec.palette; ++c) {
          bool seen = false;
          nbhd.for_each([&](int u) { seen = seen || s.color(u) == c; });
          if (!seen) return false;
        }
      }
      return true;
    }
    default:
      throw std::invalid_argument("alice_wins: variant has no win rule");
  }
}

std::vector<uint8_t> canonical_key(const ColoringState& s, bool fix_color1) {
  std::vector<uint8_t> out(size_t(s.vertex_count()), 0);
  std::vector<uint8_t> relabel(256, 0);
  uint8_t next = 1;
  if (fix_color1) {
    relabel[1] = 1;
    next = 2;
  }
  for (int v = 0; v < s.vertex_count(); ++v) {
    int c = s.color(v);
    if (c == 0) continue;
    if (relabel[size_t(c)] == 0) relabel[size_t(c)] = next++;
    out[size_t(v)] = relabel[size_t(c)];
  }
  return out;
}

int mod_star(int s, long long x) {
  if (s < 1) throw std::invalid_argument("mod_star: modulus must be positive");
  long long r = x % s;
  if (r < 0) r += s;
  return r == 0 ? s : int(r);
}

}  // namespace domg
