#include "domg/solver.hpp"

#include <cmath>
#include <unordered_map>

namespace domg {

namespace {

using u128 = unsigned __int128;

struct U128Hash {
  size_t operator()(u128 x) const {
    uint64_t lo = uint64_t(x), hi = uint64_t(x >> 64);
    uint64_t h = lo * 0x9e3779b97f4a7c15ULL;
    h ^= (hi + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    return size_t(h);
  }
};

bool variant_is_boolean(Variant v) { return v == Variant::Win || v == Variant::BobGood; }

}  // namespace

struct Solver::Impl {
  Graph graph;
  GameSpec spec;
  SolveOptions opt;
  int n, k;
  bool boolean_game;
  bool fix_color1;
  int value_max;  // k for score games, 1 for win games

  std::vector<std::vector<int>> nbhd;  // closed neighborhoods
  std::vector<int> audit;              // vertices whose domination is checked

  // mutable search board
  std::vector<uint8_t> colors;
  int colored = 0;
  std::vector<int> open_in_nbhd;  // uncolored vertices inside N[v]
  std::vector<int> seen;          // seen[v*(k+1)+c] = count of color c in N[v]

  std::unordered_map<u128, int8_t, U128Hash> table;
  uint64_t nodes = 0, hits = 0;

  Impl(const Graph& g, const GameSpec& sp, SolveOptions o)
      : graph(g), spec(sp), opt(o), n(g.vertex_count()), k(sp.palette) {
    if (k < 1) throw std::invalid_argument("solver: palette must be >= 1");
    if (k > 127) throw std::invalid_argument("solver: palette too large");
    boolean_game = variant_is_boolean(spec.variant);
    fix_color1 = spec.variant == Variant::RestrictedBob;
    value_max = boolean_game ? 1 : k;
    if (double(n) * std::log2(double(k) + 1.0) > 126.0)
      throw std::invalid_argument("solver: instance too large to key exactly");
    if (spec.variant == Variant::BobGood) {
      if (spec.excluded.universe_size() != n)
        throw std::invalid_argument("solver: excluded set universe mismatch");
      if (spec.excluded.count() == n)
        throw std::invalid_argument("solver: excluded set must be a proper subset");
    }
    nbhd.reserve(size_t(n));
    for (int v = 0; v < n; ++v) nbhd.push_back(closed_neighborhood(g, v).members());
    for (int v = 0; v < n; ++v)
      if (spec.variant != Variant::BobGood || !spec.excluded.test(v)) audit.push_back(v);
    reset_board();
  }

  void reset_board() {
    colors.assign(size_t(n), 0);
    colored = 0;
    open_in_nbhd.assign(size_t(n), 0);
    for (int v = 0; v < n; ++v) open_in_nbhd[size_t(v)] = int(nbhd[size_t(v)].size());
    seen.assign(size_t(n) * size_t(k + 1), 0);
  }

  void load(const ColoringState& s) {
    if (s.vertex_count() != n) throw std::invalid_argument("solver: state size mismatch");
    reset_board();
    for (int v = 0; v < n; ++v) {
      int c = s.color(v);
      if (c == 0) continue;
      if (c > k) throw std::invalid_argument("solver: state uses a color beyond the palette");
      place(v, c);
    }
  }

  void place(int v, int c) {
    colors[size_t(v)] = uint8_t(c);
    ++colored;
    for (int w : nbhd[size_t(v)]) {
      --open_in_nbhd[size_t(w)];
      ++seen[size_t(w) * size_t(k + 1) + size_t(c)];
    }
  }

  void unplace(int v, int c) {
    colors[size_t(v)] = 0;
    --colored;
    for (int w : nbhd[size_t(v)]) {
      ++open_in_nbhd[size_t(w)];
      --seen[size_t(w) * size_t(k + 1) + size_t(c)];
    }
  }

  Player to_move() const {
    return colored % 2 == 0 ? spec.first : opponent(spec.first);
  }

  // Monotone value bounds of the current position: classes that dominate the
  // audited vertices now can only keep dominating, and a class missing from a
  // fully colored neighborhood can never recover.
  void static_bounds(int& lb, int& ub) const {
    int secured = 0, dead = 0;
    for (int c = 1; c <= k; ++c) {
      bool sec = true, dd = false;
      for (int v : audit) {
        if (seen[size_t(v) * size_t(k + 1) + size_t(c)] == 0) {
          sec = false;
          if (open_in_nbhd[size_t(v)] == 0) {
            dd = true;
            break;
          }
        }
      }
      if (sec) ++secured;
      if (dd) ++dead;
    }
    if (boolean_game) {
      lb = secured == k ? 1 : 0;
      ub = dead > 0 ? 0 : 1;
    } else {
      lb = secured;
      ub = k - dead;
    }
  }

  u128 pack_key() const {
    // base-(k+1) positional encoding of the canonical relabeling
    uint8_t relabel[129] = {0};
    uint8_t next = 1;
    if (fix_color1) {
      relabel[1] = 1;
      next = 2;
    }
    u128 acc = 0;
    u128 base = u128(k + 1);
    for (int v = 0; v < n; ++v) {
      int c = colors[size_t(v)];
      uint8_t lab = 0;
      if (c != 0) {
        if (relabel[c] == 0) relabel[c] = next++;
        lab = relabel[c];
      }
      acc = acc * base + lab;
    }
    return acc;
  }

  int color_limit_for_mover() const {
    if (spec.variant == Variant::RestrictedBob && to_move() == Player::Bob) return 1;
    return k;
  }

  int search(int alpha, int beta) {
    if (++nodes > opt.max_nodes)
      throw budget_exhausted_error("solver: node budget exhausted");
    int lb, ub;
    static_bounds(lb, ub);
    if (lb == ub) return lb;
    if (lb >= beta) return lb;
    if (ub <= alpha) return ub;

    u128 key = pack_key();
    if (auto it = table.find(key); it != table.end()) {
      ++hits;
      return it->second;
    }

    bool maximize = to_move() == Player::Alice;
    int limit = color_limit_for_mover();
    int best = maximize ? -1 : value_max + 1;
    int a = alpha, b = beta;
    bool node_exact = false;
    for (int v = 0; v < n && !node_exact; ++v) {
      if (colors[size_t(v)] != 0) continue;
      for (int c = 1; c <= limit; ++c) {
        place(v, c);
        int val = search(a, b);
        unplace(v, c);
        if (maximize) {
          if (val > best) best = val;
          if (best > a) a = best;
          if (best >= ub) {  // cannot exceed the monotone upper bound
            node_exact = true;
            break;
          }
          if (a >= beta) {
            v = n;
            break;
          }
        } else {
          if (val < best) best = val;
          if (best < b) b = best;
          if (best <= lb) {
            node_exact = true;
            break;
          }
          if (b <= alpha) {
            v = n;
            break;
          }
        }
      }
    }
    if (node_exact || (best > alpha && best < beta)) table.emplace(key, int8_t(best));
    return best;
  }

  int root_value() { return search(-1, value_max + 1); }

  std::vector<Move> extract_line(int root_val) {
    std::vector<Move> line;
    int current = root_val;
    while (colored < n) {
      bool advanced = false;
      int limit = color_limit_for_mover();
      for (int v = 0; v < n && !advanced; ++v) {
        if (colors[size_t(v)] != 0) continue;
        for (int c = 1; c <= limit; ++c) {
          place(v, c);
          int val = search(-1, value_max + 1);
          if (val == current) {
            line.push_back(Move{v, c});
            advanced = true;
            break;
          }
          unplace(v, c);
        }
      }
      if (!advanced) throw std::logic_error("solver: principal line extraction failed");
    }
    // rewind
    for (auto it = line.rbegin(); it != line.rend(); ++it) unplace(it->vertex, it->color);
    return line;
  }
};

Solver::Solver(const Graph& g, const GameSpec& spec, SolveOptions opt)
    : impl_(std::make_unique<Impl>(g, spec, opt)) {}
Solver::~Solver() = default;
Solver::Solver(Solver&&) noexcept = default;
Solver& Solver::operator=(Solver&&) noexcept = default;

int Solver::value(const ColoringState& from) {
  impl_->load(from);
  return impl_->root_value();
}

SolveResult Solver::solve() {
  uint64_t nodes0 = impl_->nodes, hits0 = impl_->hits;
  impl_->reset_board();
  SolveResult r;
  r.value = impl_->root_value();
  if (variant_is_boolean(impl_->spec.variant))
    r.winner = r.value == 1 ? Player::Alice : Player::Bob;
  if (impl_->opt.principal_line) r.principal_line = impl_->extract_line(r.value);
  r.nodes_expanded = impl_->nodes - nodes0;
  r.table_hits = impl_->hits - hits0;
  return r;
}

const GameSpec& Solver::spec() const { return impl_->spec; }
uint64_t Solver::nodes_expanded() const { return impl_->nodes; }
uint64_t Solver::table_hits() const { return impl_->hits; }

SolveResult solve(const Graph& g, const GameSpec& spec, const SolveOptions& opt) {
  Solver s(g, spec, opt);
  return s.solve();
}

Player solve_win(const Graph& g, Player first, int palette, const SolveOptions& opt) {
  Solver s(g, win_spec(palette, first), opt);
  return s.solve().value == 1 ? Player::Alice : Player::Bob;
}

int solve_score(const Graph& g, Player first, int palette, const SolveOptions& opt) {
  Solver s(g, score_spec(palette, first), opt);
  return s.solve().value;
}

int solve_restricted_score(const Graph& g, Player first, int palette, const SolveOptions& opt) {
  Solver s(g, restricted_spec(palette, first), opt);
  return s.solve().value;
}

bool solve_bobgood(const Graph& h, const VertexSet& excluded, Player first, int palette,
                   const SolveOptions& opt) {
  Solver s(h, bobgood_spec(palette, first, excluded), opt);
  return s.solve().value == 0;
}

bool solve_alicegood(const Graph& h, const VertexSet& l, Player first, int palette,
                     const SolveOptions& opt) {
  if (l.universe_size() != h.vertex_count())
    throw std::invalid_argument("solve_alicegood: set universe mismatch");
  if (l.count() == h.vertex_count())
    throw std::invalid_argument("solve_alicegood: cannot remove every vertex");
  VertexSet keep = VertexSet::full(h.vertex_count());
  keep.subtract(l);
  Graph rest = induced_subgraph(h, keep);
  return solve_win(rest, first, palette, opt) == Player::Alice;
}

int game_number(const Graph& g, Player first, const SolveOptions& opt) {
  for (int k = 1; k <= g.vertex_count() + 1; ++k) {
    if (solve_win(g, first, k, opt) == Player::Bob) {
      if (k == 1) throw std::logic_error("game_number: palette 1 must be an Alice win");
      return k - 1;
    }
  }
  throw std::logic_error("game_number: no Bob win found below palette n+1");
}

}  // namespace domg
