#include "domg/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "domg/solver.hpp"

namespace domg {

namespace {

std::vector<int> edge_sort_key(const VertexSet& e) { return e.members(); }

}  // namespace

Hypergraph::Hypergraph(int n_, std::vector<VertexSet> edges_) : n(n_) {
  if (n < 1) throw std::invalid_argument("Hypergraph: vertex count must be >= 1");
  for (const auto& e : edges_) {
    if (e.universe_size() != n)
      throw std::invalid_argument("Hypergraph: edge universe mismatch");
    if (e.none()) throw std::invalid_argument("Hypergraph: empty edge");
  }
  std::sort(edges_.begin(), edges_.end(), [](const VertexSet& a, const VertexSet& b) {
    return edge_sort_key(a) < edge_sort_key(b);
  });
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  edges = std::move(edges_);
}

Dyadic Dyadic::pow2(int neg_exp) {
  if (neg_exp < 0 || neg_exp > den_exp)
    throw std::invalid_argument("Dyadic: exponent out of range");
  return Dyadic{(unsigned __int128)1 << (den_exp - neg_exp)};
}

double Dyadic::to_double() const {
  return std::ldexp(double(uint64_t(num >> 64)), 64 - den_exp) +
         std::ldexp(double(uint64_t(num)), -den_exp);
}

Dyadic es_potential(const Hypergraph& h, const MBState& s) {
  Dyadic total;
  for (const auto& e : h.edges) {
    if (e.intersects(s.breaker)) continue;
    VertexSet missing = e;
    missing.subtract(s.maker);
    total += Dyadic::pow2(missing.count());
  }
  return total;
}

Dyadic es_vertex_weight(const Hypergraph& h, const MBState& s, int v) {
  Dyadic total;
  for (const auto& e : h.edges) {
    if (!e.test(v) || e.intersects(s.breaker)) continue;
    VertexSet missing = e;
    missing.subtract(s.maker);
    total += Dyadic::pow2(missing.count());
  }
  return total;
}

int breaker_move_es(const Hypergraph& h, const MBState& s) {
  if (s.mover != MBPlayer::Breaker)
    throw std::invalid_argument("breaker_move_es: Breaker is not to move");
  int pick = -1;
  Dyadic best;
  for (int v = 0; v < h.n; ++v) {
    if (s.maker.test(v) || s.breaker.test(v)) continue;
    Dyadic w = es_vertex_weight(h, s, v);
    if (pick == -1 || w > best) {
      pick = v;
      best = w;
    }
  }
  if (pick == -1) throw std::invalid_argument("breaker_move_es: no unclaimed vertex");
  return pick;
}

namespace {

struct MBSolver {
  int n;
  uint64_t full;
  std::vector<uint64_t> edges;
  bool skip;
  uint64_t max_nodes;
  uint64_t nodes = 0;

  struct PairHash {
    size_t operator()(const std::pair<uint64_t, uint64_t>& p) const {
      return size_t(p.first * 0x9e3779b97f4a7c15ULL ^
                    (p.second + 0x2545f4914f6cdd1dULL + (p.first << 7)));
    }
  };
  std::unordered_map<std::pair<uint64_t, uint64_t>, int8_t, PairHash> memo[2];

  MBSolver(const Hypergraph& h, bool maker_may_skip, uint64_t budget)
      : n(h.n), skip(maker_may_skip), max_nodes(budget) {
    if (n > 60) throw std::invalid_argument("solve_mb_exact: supports at most 60 vertices");
    full = n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
    edges.reserve(h.edges.size());
    for (const auto& e : h.edges) edges.push_back(e.low_word());
  }

  bool maker_done(uint64_t maker) const {
    for (uint64_t e : edges)
      if ((e & ~maker) == 0) return true;
    return false;
  }
  bool breaker_done(uint64_t breaker) const {
    for (uint64_t e : edges)
      if ((e & breaker) == 0) return false;
    return true;
  }

  bool maker_wins(uint64_t maker, uint64_t breaker, MBPlayer mover) {
    if (++nodes > max_nodes)
      throw budget_exhausted_error("solve_mb_exact: node budget exhausted");
    if (maker_done(maker)) return true;
    if (breaker_done(breaker)) return false;
    uint64_t unclaimed = full & ~(maker | breaker);
    if (unclaimed == 0) return false;
    auto& m = memo[mover == MBPlayer::Maker ? 0 : 1];
    auto key = std::make_pair(maker, breaker);
    if (auto it = m.find(key); it != m.end()) return it->second != 0;
    bool result;
    if (mover == MBPlayer::Maker) {
      result = false;
      for (uint64_t rest = unclaimed; rest && !result; rest &= rest - 1) {
        uint64_t bit = rest & -rest;
        result = maker_wins(maker | bit, breaker, MBPlayer::Breaker);
      }
      if (!result && skip) result = maker_wins(maker, breaker, MBPlayer::Breaker);
    } else {
      result = true;
      for (uint64_t rest = unclaimed; rest && result; rest &= rest - 1) {
        uint64_t bit = rest & -rest;
        result = maker_wins(maker, breaker | bit, MBPlayer::Maker);
      }
    }
    m.emplace(key, int8_t(result));
    return result;
  }
};

}  // namespace

MBPlayer solve_mb_exact(const Hypergraph& h, MBPlayer first, bool maker_may_skip,
                        uint64_t max_nodes) {
  MBSolver s(h, maker_may_skip, max_nodes);
  return s.maker_wins(0, 0, first) ? MBPlayer::Maker : MBPlayer::Breaker;
}

Hypergraph closed_neighborhood_hypergraph(const Graph& g) {
  std::vector<VertexSet> edges;
  edges.reserve(size_t(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) edges.push_back(closed_neighborhood(g, v));
  return Hypergraph(g.vertex_count(), std::move(edges));
}

Hypergraph truncate_edges(const Hypergraph& h, int target) {
  if (target < 1) throw std::invalid_argument("truncate_edges: target must be positive");
  std::vector<VertexSet> out;
  out.reserve(h.edges.size());
  for (const auto& e : h.edges) {
    if (e.count() < target)
      throw std::invalid_argument("truncate_edges: edge smaller than target");
    VertexSet f(h.n);
    int taken = 0;
    e.for_each([&](int v) {
      if (taken < target) {
        f.set(v);
        ++taken;
      }
    });
    out.push_back(std::move(f));
  }
  return Hypergraph(h.n, std::move(out));
}

std::optional<PartitionResult> balanced_partition(const Hypergraph& h, int k, int threshold,
                                                  int max_attempts, uint64_t seed) {
  if (k < 1) throw std::invalid_argument("balanced_partition: k must be >= 1");
  if (threshold < 0) throw std::invalid_argument("balanced_partition: negative threshold");
  std::mt19937_64 rng(seed);
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    std::vector<VertexSet> parts(size_t(k), VertexSet(h.n));
    for (int v = 0; v < h.n; ++v) parts[size_t(rng() % uint64_t(k))].set(v);
    bool ok = true;
    for (const auto& e : h.edges) {
      for (const auto& part : parts) {
        if ((e & part).count() < threshold) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) return PartitionResult{std::move(parts), attempt};
  }
  return std::nullopt;
}

int lemma_k(double r, double c) {
  double x = c * r;
  double rounded = std::round(x);
  if (std::abs(x - rounded) < 1e-9) return int(rounded);
  return int(std::ceil(x));
}

long double lemma_f_log(int i, int n, double r, double c) {
  if (i < 1) throw std::invalid_argument("lemma_f: i must be positive");
  if (n < 2) throw std::invalid_argument("lemma_f: n must be >= 2");
  if (r < 1.0 || r > double(n)) throw std::invalid_argument("lemma_f: r out of [1, n]");
  if (c <= 0.0 || c > std::log(2.0) / 4.0 + 1e-12)
    throw std::invalid_argument("lemma_f: c out of (0, log2/4]");
  int k = lemma_k(r, c);
  if (k < 2) throw std::invalid_argument("lemma_f: k = ceil(c*r) must be >= 2");
  long double ln_n = std::log((long double)n);
  long double numerator = 1.0L + std::log((long double)r) + std::log(ln_n);  // ln(e r ln n)
  long double denominator = std::log((long double)i) + std::log((long double)(k - 1));
  return (long double)i * (numerator - denominator);
}

long double lemma_f(int i, int n, double r, double c) {
  return std::exp(lemma_f_log(i, n, r, c));
}

}  // namespace domg
