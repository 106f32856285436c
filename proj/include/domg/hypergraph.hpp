#pragma once

#include <optional>

#include "domg/graph.hpp"

namespace domg {

// Vertex set 0..n-1 plus a list of nonempty edges (vertex subsets).
// Duplicate edges are merged at construction; edges are kept sorted for
// deterministic iteration.
struct Hypergraph {
  int n = 0;
  std::vector<VertexSet> edges;
  Hypergraph(int n, std::vector<VertexSet> edges);
};

enum class MBPlayer : uint8_t { Maker, Breaker };
inline MBPlayer mb_opponent(MBPlayer p) {
  return p == MBPlayer::Maker ? MBPlayer::Breaker : MBPlayer::Maker;
}

struct MBState {
  VertexSet maker;
  VertexSet breaker;
  MBPlayer mover = MBPlayer::Maker;
  explicit MBState(int n, MBPlayer mover = MBPlayer::Maker)
      : maker(n), breaker(n), mover(mover) {}
};

// Exact dyadic rational num / 2^96. Covers edge remainders up to 96 and sums
// of up to 2^31 terms without rounding, so potential comparisons never tie by
// accident of floating point.
struct Dyadic {
  unsigned __int128 num = 0;

  static constexpr int den_exp = 96;
  static Dyadic zero() { return {}; }
  static Dyadic half() { return Dyadic{(unsigned __int128)1 << (den_exp - 1)}; }
  static Dyadic one() { return Dyadic{(unsigned __int128)1 << den_exp}; }
  static Dyadic pow2(int neg_exp);  // 2^-neg_exp, 0 <= neg_exp <= 96

  Dyadic& operator+=(const Dyadic& o) {
    num += o.num;
    return *this;
  }
  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend bool operator<(const Dyadic& a, const Dyadic& b) { return a.num < b.num; }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return a.num <= b.num; }
  friend bool operator>(const Dyadic& a, const Dyadic& b) { return a.num > b.num; }

  double to_double() const;
};

// Sum over edges untouched by Breaker of 2^-(vertices Maker still misses).
// An edge fully claimed by Maker contributes 1.
Dyadic es_potential(const Hypergraph& h, const MBState& s);

// Potential swing of claiming v: what Breaker erases, equally what Maker
// would double, summed over live edges through v.
Dyadic es_vertex_weight(const Hypergraph& h, const MBState& s, int v);

// Unclaimed vertex with the largest potential drop, lowest index on ties.
// Starting below potential 1/2, always playing this keeps Maker from ever
// completing an edge.
int breaker_move_es(const Hypergraph& h, const MBState& s);

// Perfect-play winner. With maker_may_skip, passing is added to Maker's
// options. Supports up to 60 vertices.
MBPlayer solve_mb_exact(const Hypergraph& h, MBPlayer first, bool maker_may_skip,
                        uint64_t max_nodes = UINT64_MAX);

// One edge per distinct closed neighborhood of g.
Hypergraph closed_neighborhood_hypergraph(const Graph& g);

// Shrink every edge to its `target` lowest-indexed vertices, merging
// duplicates. Every input edge must have at least `target` vertices.
Hypergraph truncate_edges(const Hypergraph& h, int target);

struct PartitionResult {
  std::vector<VertexSet> parts;  // k disjoint parts covering V
  int attempts = 0;
};

// Repeatedly samples uniform independent part assignments until every edge
// meets every part in at least `threshold` vertices; the returned sample is
// re-verified before handing it out. Failure after max_attempts is a value,
// not an exception.
std::optional<PartitionResult> balanced_partition(const Hypergraph& h, int k, int threshold,
                                                  int max_attempts, uint64_t seed);

inline constexpr double kDefaultPartitionC = 0.01;

// f(i) = (e * r * ln n / (i * (k - 1)))^i with k = ceil(c * r); increasing
// while i stays below log2(n) + 2. Requires k >= 2.
long double lemma_f(int i, int n, double r, double c);
long double lemma_f_log(int i, int n, double r, double c);

// ceil(c * r) with a tolerance so that grid points like 0.1 * 20 land on the
// intended integer.
int lemma_k(double r, double c);

}  // namespace domg
