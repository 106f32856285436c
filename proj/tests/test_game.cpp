#include <algorithm>
#include <random>

#include "doctest.h"
#include "domg/constructions.hpp"
#include "domg/game.hpp"
#include "fixtures.hpp"

using namespace domg;
using fixtures::complete;
using fixtures::path;

namespace {

ColoringState state_of(int n, const std::vector<int>& colors) {
  ColoringState s(n);
  for (int v = 0; v < n; ++v)
    if (colors[size_t(v)] != 0) s = apply_move(s, Move{v, colors[size_t(v)]});
  return s;
}

}  // namespace

TEST_CASE("legal move ordering") {
  ColoringState s(2);
  auto moves = legal_moves(s, win_spec(2, Player::Alice));
  CHECK(moves == std::vector<Move>{{0, 1}, {0, 2}, {1, 1}, {1, 2}});

  ColoringState one = apply_move(s, Move{0, 1});
  CHECK(legal_moves(one, win_spec(1, Player::Alice)) == std::vector<Move>{{1, 1}});

  // restricted Bob sees only color 1
  ColoringState nearly(3);
  nearly = apply_move(nearly, Move{0, 2});
  nearly = apply_move(nearly, Move{1, 3});
  GameSpec r = restricted_spec(3, Player::Bob);  // Bob first: parity even => Bob to move
  CHECK(legal_moves(nearly, r) == std::vector<Move>{{2, 1}});

  ColoringState full = apply_move(nearly, Move{2, 1});
  CHECK(legal_moves(full, r).empty());
}

TEST_CASE("apply_move") {
  ColoringState s(2);
  ColoringState t = apply_move(s, Move{0, 1});
  CHECK(t.colors() == std::vector<uint8_t>{1, 0});
  CHECK(t.moves_made() == 1);
  CHECK_THROWS_AS(apply_move(t, Move{0, 1}), std::invalid_argument);
  ColoringState u = apply_move(t, Move{1, 2});
  CHECK(u.is_terminal());
}

TEST_CASE("terminal_score") {
  Graph k2 = complete(2);
  CHECK(terminal_score(k2, state_of(2, {1, 2}), 2) == 2);
  CHECK(terminal_score(k2, state_of(2, {1, 1}), 2) == 1);
  CHECK_THROWS_AS(terminal_score(k2, ColoringState(2), 2), std::invalid_argument);

  Graph g3 = gen_disjoint_cliques(3, 3);
  // whole clique colored 3 starves colors 1 and 2 of that clique
  CHECK(terminal_score(g3, state_of(9, {3, 3, 3, 1, 2, 1, 2, 1, 2}), 3) == 0);
  CHECK(terminal_score(g3, state_of(9, {3, 3, 3, 3, 1, 2, 3, 2, 1}), 3) == 1);
}

TEST_CASE("alice_wins") {
  Graph k2 = complete(2);
  CHECK(alice_wins(k2, state_of(2, {1, 2}), win_spec(2, Player::Alice)));
  CHECK_FALSE(alice_wins(fixtures::path(4), state_of(4, {1, 1, 1, 1}), win_spec(2, Player::Alice)));

  // excluded leaves may miss colors
  Graph p4 = fixtures::path(4);
  GameSpec bg = bobgood_spec(2, Player::Alice, VertexSet::of(4, {0, 3}));
  ColoringState s = state_of(4, {1, 2, 1, 1});  // interior sees {1,2}; leaf 3 misses 2
  CHECK(alice_wins(p4, s, bg));
  CHECK_FALSE(alice_wins(p4, s, win_spec(2, Player::Alice)));
}

TEST_CASE("canonical key") {
  CHECK(canonical_key(state_of(3, {2, 0, 1})) == std::vector<uint8_t>{1, 0, 2});
  CHECK(canonical_key(state_of(3, {1, 1, 0})) == std::vector<uint8_t>{1, 1, 0});
  CHECK(canonical_key(state_of(3, {3, 3, 2})) == std::vector<uint8_t>{1, 1, 2});
  // color 1 pinned
  CHECK(canonical_key(state_of(3, {3, 3, 2}), true) == std::vector<uint8_t>{2, 2, 3});
  CHECK(canonical_key(state_of(3, {3, 1, 2}), true) == std::vector<uint8_t>{2, 1, 3});
}

TEST_CASE("terminal score is palette-permutation invariant") {
  std::mt19937_64 rng(7);
  Graph g = fixtures::cycle(5);
  int k = 3;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> colors(5);
    for (auto& c : colors) c = int(rng() % uint64_t(k)) + 1;
    std::vector<int> perm{1, 2, 3};
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> permuted(5);
    for (int v = 0; v < 5; ++v) permuted[size_t(v)] = perm[size_t(colors[size_t(v)] - 1)];
    CHECK(terminal_score(g, state_of(5, colors), k) ==
          terminal_score(g, state_of(5, permuted), k));
  }
}

TEST_CASE("win rule matches full score on small corpus terminals") {
  enumerate_corpus(3, true, [](const Graph& g) {
    int n = g.vertex_count();
    for (int k = 1; k <= 3; ++k) {
      std::vector<int> colors(size_t(n), 1);
      while (true) {
        ColoringState s = state_of(n, colors);
        CHECK(alice_wins(g, s, win_spec(k, Player::Alice)) ==
              (terminal_score(g, s, k) == k));
        int i = 0;
        while (i < n && colors[size_t(i)] == k) colors[size_t(i++)] = 1;
        if (i == n) break;
        ++colors[size_t(i)];
      }
    }
  });
}

TEST_CASE("palette permutations collapse to one key") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 3 + int(rng() % 6);
    int k = 2 + int(rng() % 3);
    std::vector<int> colors(size_t(n), 0);
    for (auto& c : colors)
      if (rng() % 3) c = int(rng() % uint64_t(k)) + 1;
    std::vector<int> perm(static_cast<size_t>(k), 0);
    for (int i = 0; i < k; ++i) perm[size_t(i)] = i + 1;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> permuted(size_t(n), 0);
    for (int v = 0; v < n; ++v)
      if (colors[size_t(v)]) permuted[size_t(v)] = perm[size_t(colors[size_t(v)] - 1)];
    CHECK(canonical_key(state_of(n, colors)) == canonical_key(state_of(n, permuted)));
    // pinned color 1: only permutations fixing 1 collapse
    if (perm[0] == 1)
      CHECK(canonical_key(state_of(n, colors), true) ==
            canonical_key(state_of(n, permuted), true));
  }
}

TEST_CASE("mod_star") {
  CHECK(mod_star(3, 6) == 3);
  CHECK(mod_star(3, 7) == 1);
  CHECK(mod_star(4, 4) == 4);
  CHECK_THROWS_AS(mod_star(0, 5), std::invalid_argument);
  for (int s = 1; s <= 6; ++s)
    for (int x = -20; x <= 20; ++x) {
      int r = mod_star(s, x);
      CHECK(r >= 1);
      CHECK(r <= s);
      CHECK((x - r) % s == 0);
    }
}
