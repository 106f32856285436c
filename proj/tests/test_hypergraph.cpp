#include <cmath>
#include <random>
#include <tuple>

#include "doctest.h"
#include "domg/hypergraph.hpp"
#include "fixtures.hpp"
#include "mb_oracle.hpp"

using namespace domg;
using fixtures::complete;
using fixtures::cycle;
using fixtures::path;

namespace {

Hypergraph make(int n, std::vector<std::vector<int>> edges) {
  std::vector<VertexSet> sets;
  for (const auto& e : edges) {
    VertexSet s(n);
    for (int v : e) s.set(v);
    sets.push_back(std::move(s));
  }
  return Hypergraph(n, std::move(sets));
}

}  // namespace

TEST_CASE("hypergraph construction dedupes and validates") {
  Hypergraph h = make(4, {{0, 1}, {1, 0}, {2, 3}});
  CHECK(h.edges.size() == 2);
  CHECK_THROWS_AS(make(3, {{}}), std::invalid_argument);
}

TEST_CASE("es potential") {
  Hypergraph h = make(5, {{0, 1}, {2, 3, 4}});
  MBState s(5);
  CHECK(es_potential(h, s) == Dyadic::pow2(2) + Dyadic::pow2(3));  // 3/8
  CHECK(es_potential(h, s).to_double() == doctest::Approx(0.375));

  MBState hit(5);
  hit.breaker.set(0);
  hit.breaker.set(2);
  CHECK(es_potential(h, hit) == Dyadic::zero());

  MBState partial(5);
  partial.maker.set(0);
  CHECK(es_potential(make(5, {{0, 1}}), partial) == Dyadic::pow2(1));
}

TEST_CASE("breaker es move") {
  Hypergraph single = make(4, {{0, 1}});
  MBState s(4, MBPlayer::Breaker);
  s.maker.set(0);
  CHECK(breaker_move_es(single, s) == 1);

  Hypergraph two = make(4, {{0, 1}, {2, 3}});
  MBState t(4, MBPlayer::Breaker);
  t.maker.set(0);
  CHECK(breaker_move_es(two, t) == 1);  // largest drop: the threatened edge

  // chosen vertex minimizes the one-ply potential, ties to the lowest index
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 8;
    std::vector<std::vector<int>> edges;
    for (int e = 0; e < 5; ++e) {
      std::vector<int> edge;
      for (int v = 0; v < n; ++v)
        if (rng() % 3 == 0) edge.push_back(v);
      if (edge.size() < 2) edge = {0, 1};
      edges.push_back(edge);
    }
    Hypergraph h = make(n, edges);
    MBState state(n, MBPlayer::Breaker);
    state.maker.set(int(rng() % n));
    int chosen = breaker_move_es(h, state);
    Dyadic chosen_after = [&] {
      MBState copy = state;
      copy.breaker.set(chosen);
      return es_potential(h, copy);
    }();
    for (int v = 0; v < n; ++v) {
      if (state.maker.test(v) || state.breaker.test(v)) continue;
      MBState copy = state;
      copy.breaker.set(v);
      Dyadic after = es_potential(h, copy);
      CHECK(chosen_after <= after);
      if (after == chosen_after) CHECK(chosen <= v);
    }
  }
}

TEST_CASE("exact maker-breaker solving") {
  CHECK(solve_mb_exact(make(2, {{0}}), MBPlayer::Maker, false) == MBPlayer::Maker);
  CHECK(solve_mb_exact(make(2, {{0, 1}}), MBPlayer::Breaker, false) == MBPlayer::Breaker);
  // all pairs from three vertices: Maker to move wins
  Hypergraph triangle = make(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(solve_mb_exact(triangle, MBPlayer::Maker, false) == MBPlayer::Maker);
  CHECK(solve_mb_exact(triangle, MBPlayer::Maker, true) == MBPlayer::Maker);
}

TEST_CASE("skip neutrality on small instances") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 4 + int(rng() % 5);
    std::vector<std::vector<int>> edges;
    int m = 2 + int(rng() % 4);
    for (int e = 0; e < m; ++e) {
      std::vector<int> edge;
      for (int v = 0; v < n; ++v)
        if (rng() % 2 == 0) edge.push_back(v);
      if (edge.empty()) edge.push_back(int(rng() % n));
      edges.push_back(edge);
    }
    Hypergraph h = make(n, edges);
    for (MBPlayer first : {MBPlayer::Maker, MBPlayer::Breaker})
      CHECK(solve_mb_exact(h, first, false) == solve_mb_exact(h, first, true));
  }
}

TEST_CASE("potential-rule breaker survives perfect makers on 12 vertices") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    int n = 12;
    std::vector<VertexSet> edges;
    for (int e = 0; e < 8; ++e) {
      VertexSet edge(n);
      while (edge.count() < 6) edge.set(int(rng() % uint64_t(n)));
      edges.push_back(std::move(edge));
    }
    Hypergraph h(n, std::move(edges));
    REQUIRE(es_potential(h, MBState(n)) < Dyadic::half());
    for (MBPlayer first : {MBPlayer::Maker, MBPlayer::Breaker}) {
      for (bool skip : {false, true}) {
        mb_oracle::Solver maker(h, skip);
        MBState s(n, first);
        bool lost = false;
        while (true) {
          if (maker.maker_complete(s.maker.low_word())) {
            lost = true;
            break;
          }
          if (maker.breaker_complete(s.breaker.low_word())) break;
          uint64_t open = maker.full & ~(s.maker.low_word() | s.breaker.low_word());
          if (!open) break;
          if (s.mover == MBPlayer::Breaker) {
            s.breaker.set(breaker_move_es(h, s));
            s.mover = MBPlayer::Maker;
          } else {
            auto reply = maker.maker_best(s.maker.low_word(), s.breaker.low_word());
            if (reply) s.maker.set(*reply);
            s.mover = MBPlayer::Breaker;
          }
        }
        CHECK_FALSE(lost);
      }
    }
  }
}

TEST_CASE("closed neighborhood hypergraph") {
  Hypergraph k3 = closed_neighborhood_hypergraph(complete(3));
  CHECK(k3.edges.size() == 1);
  CHECK(k3.edges[0].count() == 3);

  Hypergraph c4 = closed_neighborhood_hypergraph(cycle(4));
  CHECK(c4.edges.size() == 4);
  for (const auto& e : c4.edges) CHECK(e.count() == 3);

  Hypergraph p3 = closed_neighborhood_hypergraph(path(3));
  CHECK(p3.edges.size() == 3);

  // edge sizes are at least min_degree + 1
  Graph g = cycle(6);
  for (const auto& e : closed_neighborhood_hypergraph(g).edges)
    CHECK(e.count() >= g.min_degree() + 1);
}

TEST_CASE("edge truncation") {
  Hypergraph h = make(5, {{0, 1, 2, 3}});
  Hypergraph t = truncate_edges(h, 2);
  CHECK(t.edges.size() == 1);
  CHECK(t.edges[0] == VertexSet::of(5, {0, 1}));

  Hypergraph dup = truncate_edges(make(5, {{0, 1, 2}, {0, 1, 3}}), 2);
  CHECK(dup.edges.size() == 1);

  Hypergraph uniform = make(5, {{0, 1, 2}, {2, 3, 4}});
  Hypergraph same = truncate_edges(uniform, 3);
  CHECK(same.edges.size() == 2);
  CHECK_THROWS_AS(truncate_edges(uniform, 4), std::invalid_argument);

  // outputs are uniform subsets of inputs
  for (const auto& f : truncate_edges(make(6, {{0, 2, 4}, {1, 2, 3, 5}}), 2).edges) {
    CHECK(f.count() == 2);
    bool inside = false;
    for (const auto& e : make(6, {{0, 2, 4}, {1, 2, 3, 5}}).edges)
      inside = inside || f.is_subset_of(e);
    CHECK(inside);
  }
}

TEST_CASE("balanced partition") {
  // single part: succeeds iff every edge clears the threshold
  Hypergraph h = make(4, {{0, 1, 2}});
  auto whole = balanced_partition(h, 1, 3, 5, 1);
  REQUIRE(whole.has_value());
  CHECK(whole->parts.size() == 1);
  CHECK_FALSE(balanced_partition(h, 1, 4, 5, 1).has_value());

  // zero threshold accepts the first sample
  auto any = balanced_partition(h, 3, 0, 5, 99);
  REQUIRE(any.has_value());
  CHECK(any->attempts == 1);

  // 40 cyclic windows of 20 vertices, split in two with slack
  int n = 40;
  std::vector<VertexSet> windows;
  for (int start = 0; start < n; ++start) {
    VertexSet w(n);
    for (int i = 0; i < 20; ++i) w.set((start + i) % n);
    windows.push_back(std::move(w));
  }
  Hypergraph big(n, std::move(windows));
  auto split = balanced_partition(big, 2, 5, 200, 2024);
  REQUIRE(split.has_value());
  VertexSet seen(n);
  for (const auto& part : split->parts) {
    CHECK_FALSE(part.intersects(seen));
    seen |= part;
  }
  CHECK(seen == VertexSet::full(n));
  for (const auto& e : big.edges)
    for (const auto& part : split->parts) CHECK((e & part).count() >= 5);
}

TEST_CASE("lemma f") {
  // i = 1 evaluates to e * r * ln n / (k - 1)
  double r = 50, c = 0.1;
  int n = 1000;
  int k = lemma_k(r, c);
  CHECK(k == 5);
  long double direct = std::exp(1.0L) * r * std::log((long double)n) / (k - 1);
  CHECK(double(lemma_f(1, n, r, c)) == doctest::Approx(double(direct)));

  CHECK(lemma_k(20, 0.1) == 2);  // 0.1 * 20 must not round up to 3
  CHECK_THROWS_AS(lemma_f(1, 100, 5, 0.05), std::invalid_argument);  // k = 1

  // increasing through log2(n) + 1 on two grids
  std::vector<std::tuple<int, double, double>> grids = {{100, 20.0, std::log(2.0) / 4},
                                                        {1000, 50.0, 0.1}};
  for (auto [nn, rr, cc] : grids) {
    int top = int(std::log2(double(nn))) + 1;
    for (int i = 1; i < top; ++i)
      CHECK(lemma_f_log(i, nn, rr, cc) < lemma_f_log(i + 1, nn, rr, cc));
  }
}
