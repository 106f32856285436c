#include "domg/strategies.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace domg {

namespace {

int lowest_uncolored(const ColoringState& s) {
  for (int v = 0; v < s.vertex_count(); ++v)
    if (s.color(v) == 0) return v;
  return -1;
}

std::string move_str(const Move& m) {
  return std::to_string(m.vertex) + ":" + std::to_string(m.color);
}

class LowestLegal final : public Strategy {
 public:
  Move choose(const Graph&, const GameSpec& spec, const ColoringState& s,
              const std::optional<Move>&) override {
    auto moves = legal_moves(s, spec);
    if (moves.empty()) throw strategy_error("lowest_legal: no legal move");
    return moves.front();
  }
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<LowestLegal>(*this); }
  std::string name() const override { return "lowest_legal"; }
};

class RandomStrategy final : public Strategy {
 public:
  explicit RandomStrategy(uint64_t seed) : rng_(seed) {}
  Move choose(const Graph&, const GameSpec& spec, const ColoringState& s,
              const std::optional<Move>&) override {
    auto moves = legal_moves(s, spec);
    if (moves.empty()) throw strategy_error("random: no legal move");
    return moves[size_t(rng_() % moves.size())];
  }
  std::unique_ptr<Strategy> clone() const override {
    return std::make_unique<RandomStrategy>(*this);
  }
  std::string name() const override { return "random"; }

 private:
  std::mt19937_64 rng_;
};

class ExactStrategy final : public Strategy {
 public:
  ExactStrategy(Player role, SolveOptions opt) : role_(role), opt_(opt) {}
  Move choose(const Graph& g, const GameSpec& spec, const ColoringState& s,
              const std::optional<Move>&) override {
    if (!solver_) solver_ = std::make_shared<Solver>(g, spec, opt_);
    auto moves = legal_moves(s, spec);
    if (moves.empty()) throw strategy_error("exact: no legal move");
    bool maximize = role_ == Player::Alice;
    Move best_move = moves.front();
    int best = maximize ? -1 : INT32_MAX;
    for (const Move& m : moves) {
      int val = solver_->value(apply_move(s, m));
      if (maximize ? val > best : val < best) {
        best = val;
        best_move = m;
      }
    }
    return best_move;
  }
  std::unique_ptr<Strategy> clone() const override {
    auto c = std::make_unique<ExactStrategy>(role_, opt_);
    c->solver_ = solver_;  // exact cache, safe to share within one thread
    return c;
  }
  std::string name() const override {
    return std::string("exact(") + player_letter(role_) + ")";
  }

 private:
  Player role_;
  SolveOptions opt_;
  std::shared_ptr<Solver> solver_;
};

class OneBob final : public Strategy {
 public:
  Move choose(const Graph&, const GameSpec&, const ColoringState& s,
              const std::optional<Move>&) override {
    int v = lowest_uncolored(s);
    if (v < 0) throw strategy_error("one_bob: no uncolored vertex");
    return Move{v, 1};
  }
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<OneBob>(*this); }
  std::string name() const override { return "one_bob"; }
};

// Shared skeleton for the copy strategies: an auxiliary board with a color
// mapping for the opponent's moves, the inner policy's reply copied out.
class MappedAuxBob : public Strategy {
 public:
  MappedAuxBob(std::unique_ptr<Strategy> inner, int aux_palette)
      : inner_(std::move(inner)), aux_palette_(aux_palette) {}

  Move choose(const Graph& g, const GameSpec& spec, const ColoringState&,
              const std::optional<Move>& opponent_last) override {
    validate(spec);
    if (!aux_) aux_.emplace(g.vertex_count());
    GameSpec aux_spec = win_spec(aux_palette_, spec.first);
    std::optional<Move> mapped;
    if (opponent_last) {
      mapped = Move{opponent_last->vertex, map_color(opponent_last->color)};
      feed(*mapped);
    }
    Move reply = inner_->choose(g, aux_spec, *aux_, mapped);
    feed(reply);
    if (reply.color > spec.palette)
      throw strategy_error(name() + ": inner reply outside the main palette");
    return reply;
  }

 protected:
  virtual int map_color(int main_color) const = 0;
  virtual void validate(const GameSpec& spec) const = 0;
  void feed(const Move& m) {
    try {
      aux_ = apply_move(*aux_, m);
    } catch (const std::exception& e) {
      throw strategy_error(name() + ": auxiliary board rejected a move: " + e.what());
    }
  }
  std::unique_ptr<Strategy> inner_;
  int aux_palette_;
  std::optional<ColoringState> aux_;
};

class ColorblindLift final : public MappedAuxBob {
 public:
  ColorblindLift(std::unique_ptr<Strategy> inner, int base, int extension)
      : MappedAuxBob(std::move(inner), base), extension_(extension) {
    if (base < 1 || extension < 1)
      throw std::invalid_argument("colorblind_lift: bad palette parameters");
  }
  std::unique_ptr<Strategy> clone() const override {
    auto c = std::make_unique<ColorblindLift>(inner_->clone(), aux_palette_, extension_);
    c->aux_ = aux_;
    return c;
  }
  std::string name() const override { return "colorblind_lift"; }

 private:
  int map_color(int c) const override { return std::min(c, aux_palette_); }
  void validate(const GameSpec& spec) const override {
    if (spec.palette != aux_palette_ + extension_)
      throw strategy_error("colorblind_lift: main palette must be base+extension");
  }
  int extension_;
};

class ModStarBob final : public MappedAuxBob {
 public:
  ModStarBob(int aux_palette, int main_palette, std::unique_ptr<Strategy> aux)
      : MappedAuxBob(std::move(aux), aux_palette), main_palette_(main_palette) {
    if (aux_palette < 1 || main_palette < aux_palette)
      throw std::invalid_argument("mod_star_bob: main palette must cover the auxiliary one");
  }
  std::unique_ptr<Strategy> clone() const override {
    auto c = std::make_unique<ModStarBob>(aux_palette_, main_palette_, inner_->clone());
    c->aux_ = aux_;
    return c;
  }
  std::string name() const override { return "mod_star_bob"; }

 private:
  int map_color(int c) const override { return mod_star(aux_palette_, c); }
  void validate(const GameSpec& spec) const override {
    if (spec.palette != main_palette_)
      throw strategy_error("mod_star_bob: unexpected main palette");
  }
  int main_palette_;
};

class SpecialVertexBob final : public Strategy {
 public:
  SpecialVertexBob(SpecialVertexDirection dir, std::unique_ptr<Strategy> aux_bob)
      : dir_(dir), aux_bob_(std::move(aux_bob)) {}

  Move choose(const Graph& g, const GameSpec& spec, const ColoringState& s,
              const std::optional<Move>& opponent_last) override {
    Player main_first =
        dir_ == SpecialVertexDirection::AliceToBob ? Player::Bob : Player::Alice;
    if (spec.first != main_first)
      throw strategy_error("special_vertex_bob: wrong first player for this direction");
    if (!aux_) aux_.emplace(g.vertex_count());
    GameSpec aux_spec = score_spec(spec.palette, opponent(main_first));

    if (dir_ == SpecialVertexDirection::AliceToBob && s.moves_made() == 0) {
      special_ = lowest_uncolored(s);
      return Move{special_, 1};
    }
    if (!opponent_last) throw strategy_error("special_vertex_bob: missing opponent move");

    std::optional<Move> aux_last;
    if (dir_ == SpecialVertexDirection::BobToAlice && s.moves_made() == 1) {
      // the opening move only marks the special vertex; the auxiliary Bob
      // starts from a blank board
      special_ = opponent_last->vertex;
    } else {
      feed_aux(*opponent_last);
      aux_last = opponent_last;
    }
    Move aux_reply = aux_bob_->choose(g, aux_spec, *aux_, aux_last);
    feed_aux(aux_reply);
    if (aux_reply.vertex == special_) {
      int u = -1;
      for (int v = 0; v < s.vertex_count(); ++v)
        if (s.color(v) == 0) {
          u = v;
          break;
        }
      if (u < 0) throw strategy_error("special_vertex_bob: no vertex left to mark special");
      special_ = u;
      return Move{u, 1};
    }
    return aux_reply;
  }

  std::unique_ptr<Strategy> clone() const override {
    auto c = std::make_unique<SpecialVertexBob>(dir_, aux_bob_->clone());
    c->aux_ = aux_;
    c->special_ = special_;
    return c;
  }
  std::string name() const override { return "special_vertex_bob"; }

 private:
  void feed_aux(const Move& m) {
    try {
      aux_ = apply_move(*aux_, m);
    } catch (const std::exception& e) {
      throw strategy_error(std::string("special_vertex_bob: auxiliary board rejected a move: ") +
                           e.what());
    }
  }

  SpecialVertexDirection dir_;
  std::unique_ptr<Strategy> aux_bob_;
  std::optional<ColoringState> aux_;
  int special_ = -1;
};

class ZelinkaBob final : public Strategy {
 public:
  explicit ZelinkaBob(const ZelinkaLayout& layout)
      : layout_(std::make_shared<ZelinkaLayout>(layout)) {}

  Move choose(const Graph& g, const GameSpec&, const ColoringState& s,
              const std::optional<Move>&) override {
    ++own_moves_;
    const auto& lay = *layout_;
    if (own_moves_ <= lay.k + 2) {
      for (int v : lay.s_vertices)
        if (s.color(v) == 0) return Move{v, 1};
      throw strategy_error("zelinka_bob: side S exhausted before k+2 moves");
    }
    if (own_moves_ == lay.k + 3) {
      for (int t : lay.t_vertices) {
        if (s.color(t) != 0) continue;
        bool all_one = true;
        g.neighbors(t).for_each([&](int u) { all_one = all_one && s.color(u) == 1; });
        if (all_one) return Move{t, 1};
      }
      throw strategy_error("zelinka_bob: no uncolored subset vertex with an all-1 neighborhood");
    }
    int v = lowest_uncolored(s);
    if (v < 0) throw strategy_error("zelinka_bob: no uncolored vertex");
    return Move{v, 1};
  }

  std::unique_ptr<Strategy> clone() const override { return std::make_unique<ZelinkaBob>(*this); }
  std::string name() const override { return "zelinka_bob"; }

 private:
  std::shared_ptr<ZelinkaLayout> layout_;
  int own_moves_ = 0;
};

class TreeBob final : public Strategy {
 public:
  TreeBob(const TreeLayout& layout, int offset)
      : layout_(std::make_shared<TreeLayout>(layout)), offset_(offset) {}

  Move choose(const Graph&, const GameSpec&, const ColoringState& s,
              const std::optional<Move>&) override {
    ++own_moves_;
    const auto& lay = *layout_;
    int m = lay.graph.vertex_count();
    if (own_moves_ <= lay.k) {
      int want_depth = own_moves_ - 1;
      for (int v = 0; v < m; ++v) {
        if (lay.depth[size_t(v)] != want_depth) continue;
        if (!ancestors_all_one(s, v) || !subtree_uncolored(s, v)) continue;
        return Move{offset_ + v, 1};
      }
      throw strategy_error("tree_bob: no descent vertex with clean subtree");
    }
    int v = lowest_uncolored(s);
    if (v < 0) throw strategy_error("tree_bob: no uncolored vertex");
    return Move{v, 1};
  }

  std::unique_ptr<Strategy> clone() const override { return std::make_unique<TreeBob>(*this); }
  std::string name() const override { return "tree_bob"; }

 private:
  bool ancestors_all_one(const ColoringState& s, int v) const {
    for (int a = layout_->parent[size_t(v)]; a != -1; a = layout_->parent[size_t(a)])
      if (s.color(offset_ + a) != 1) return false;
    return true;
  }
  bool subtree_uncolored(const ColoringState& s, int v) const {
    int m = layout_->graph.vertex_count();
    std::vector<int> stack{v};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (s.color(offset_ + x) != 0) return false;
      if (2 * x + 1 < m) stack.push_back(2 * x + 1);
      if (2 * x + 2 < m) stack.push_back(2 * x + 2);
    }
    return true;
  }

  std::shared_ptr<TreeLayout> layout_;
  int offset_;
  int own_moves_ = 0;
};

class TreeBobDoubled final : public Strategy {
 public:
  explicit TreeBobDoubled(const TreeLayout& layout)
      : layout_(std::make_shared<TreeLayout>(layout)) {}

  Move choose(const Graph& g, const GameSpec& spec, const ColoringState& s,
              const std::optional<Move>& opponent_last) override {
    int m = layout_->graph.vertex_count();
    if (g.vertex_count() != 2 * m)
      throw strategy_error("tree_bob_doubled: graph is not the doubled construction");
    if (!inner_) {
      // play on a component the opponent has not touched
      int offset = 0;
      for (int v = 0; v < m; ++v)
        if (s.color(v) != 0) {
          offset = m;
          break;
        }
      inner_ = std::make_unique<TreeBob>(*layout_, offset);
    }
    return inner_->choose(g, spec, s, opponent_last);
  }

  std::unique_ptr<Strategy> clone() const override {
    auto c = std::make_unique<TreeBobDoubled>(*layout_);
    if (inner_) {
      auto cloned = inner_->clone();
      c->inner_.reset(static_cast<TreeBob*>(cloned.release()));
    }
    return c;
  }
  std::string name() const override { return "tree_bob"; }

 private:
  std::shared_ptr<TreeLayout> layout_;
  std::unique_ptr<TreeBob> inner_;
};

class CliqueAlice final : public Strategy {
 public:
  CliqueAlice(int copies, int size) : copies_(copies), size_(size) {}

  Move choose(const Graph&, const GameSpec& spec, const ColoringState& s,
              const std::optional<Move>& opponent_last) override {
    int target = -1;
    if (opponent_last) {
      int c = opponent_last->vertex / size_;
      if (clique_has_uncolored(s, c)) target = c;
    }
    if (target < 0) {
      for (int c = 0; c < copies_ && target < 0; ++c)
        if (clique_has_uncolored(s, c)) target = c;
    }
    if (target < 0) throw strategy_error("clique_alice: every clique is finished");
    int vertex = -1;
    std::vector<bool> present(size_t(spec.palette) + 1, false);
    for (int i = 0; i < size_; ++i) {
      int v = target * size_ + i;
      int col = s.color(v);
      if (col == 0 && vertex < 0) vertex = v;
      if (col >= 1 && col <= spec.palette) present[size_t(col)] = true;
    }
    int color = 1;
    for (int c = 1; c <= spec.palette; ++c)
      if (!present[size_t(c)]) {
        color = c;
        break;
      }
    return Move{vertex, color};
  }

  std::unique_ptr<Strategy> clone() const override { return std::make_unique<CliqueAlice>(*this); }
  std::string name() const override { return "clique_alice"; }

 private:
  bool clique_has_uncolored(const ColoringState& s, int c) const {
    for (int i = 0; i < size_; ++i)
      if (s.color(c * size_ + i) == 0) return true;
    return false;
  }
  int copies_, size_;
};

class CliqueBobPhases final : public Strategy {
 public:
  CliqueBobPhases(int copies, int size) : copies_(copies), size_(size) {
    if (size < 3 || size % 2 == 0)
      throw std::invalid_argument("clique_bob_phases: clique size must be odd and >= 3");
    k_ = (size + 1) / 2;  // palette is k_+1, overflooding needs k_+1 copies
  }

  Move choose(const Graph&, const GameSpec& spec, const ColoringState& s,
              const std::optional<Move>& opponent_last) override {
    if (spec.palette != k_ + 1)
      throw strategy_error("clique_bob_phases: palette must be one above half the clique size");
    if (opponent_last && initial_target_ >= 0 && !alice_outside_ &&
        opponent_last->vertex / size_ != initial_target_)
      alice_outside_ = *opponent_last;

    if (stage_ == Stage::Init) {
      if (!opponent_last) {
        begin_flood(Kind::First, 1, 0);
        initial_target_ = 0;
      } else {
        begin_flood(Kind::Echo, opponent_last->color, opponent_last->vertex / size_);
        initial_target_ = target_;
      }
    }

    while (stage_ == Stage::Flood) {
      int copies_of_color = count_color(s, target_, flood_color_);
      if (copies_of_color >= k_ + 1) {
        stage_ = Stage::Done;  // the clique already misses two colors
        break;
      }
      int vertex = lowest_uncolored_in(s, target_);
      if (vertex >= 0) return Move{vertex, flood_color_};
      int distinct = distinct_colors(s, target_);
      if (distinct <= k_ - 1) {
        stage_ = Stage::Done;
        break;
      }
      if (distinct == k_ + 1)
        throw strategy_error("clique_bob_phases: flooded clique saw the whole palette");
      // full clique showing exactly k_ colors
      if (kind_ == Kind::Final) {
        stage_ = Stage::Done;
        break;
      }
      if (kind_ == Kind::First) {
        if (!alice_outside_)
          throw strategy_error("clique_bob_phases: no opponent move outside the first clique");
        begin_flood(Kind::Echo, alice_outside_->color, alice_outside_->vertex / size_);
        continue;
      }
      // Echo finished: flood the missing color into the emptiest other clique
      int missing = 1;
      for (int c = 1; c <= spec.palette; ++c)
        if (count_color(s, target_, c) == 0) {
          missing = c;
          break;
        }
      int fresh = -1, fresh_distinct = INT32_MAX;
      for (int c = 0; c < copies_; ++c) {
        if (c == target_ || lowest_uncolored_in(s, c) < 0) continue;
        int d = distinct_colors(s, c);
        if (d < fresh_distinct) {
          fresh_distinct = d;
          fresh = c;
        }
      }
      if (fresh < 0) {
        stage_ = Stage::Done;
        break;
      }
      begin_flood(Kind::Final, missing, fresh);
    }

    int v = lowest_uncolored(s);
    if (v < 0) throw strategy_error("clique_bob_phases: no uncolored vertex");
    return Move{v, 1};
  }

  std::unique_ptr<Strategy> clone() const override {
    return std::make_unique<CliqueBobPhases>(*this);
  }
  std::string name() const override { return "clique_bob_phases"; }

 private:
  enum class Stage { Init, Flood, Done };
  enum class Kind { First, Echo, Final };

  void begin_flood(Kind kind, int color, int target) {
    stage_ = Stage::Flood;
    kind_ = kind;
    flood_color_ = color;
    target_ = target;
  }
  int count_color(const ColoringState& s, int clique, int color) const {
    int n = 0;
    for (int i = 0; i < size_; ++i)
      if (s.color(clique * size_ + i) == color) ++n;
    return n;
  }
  int lowest_uncolored_in(const ColoringState& s, int clique) const {
    for (int i = 0; i < size_; ++i)
      if (s.color(clique * size_ + i) == 0) return clique * size_ + i;
    return -1;
  }
  int distinct_colors(const ColoringState& s, int clique) const {
    std::vector<bool> seen(256, false);
    int d = 0;
    for (int i = 0; i < size_; ++i) {
      int c = s.color(clique * size_ + i);
      if (c != 0 && !seen[size_t(c)]) {
        seen[size_t(c)] = true;
        ++d;
      }
    }
    return d;
  }

  int copies_, size_, k_;
  Stage stage_ = Stage::Init;
  Kind kind_ = Kind::First;
  int flood_color_ = 1;
  int target_ = -1;
  int initial_target_ = -1;
  std::optional<Move> alice_outside_;
};

class PartitionAlice final : public Strategy {
 public:
  PartitionAlice(Hypergraph truncated, std::vector<VertexSet> parts)
      : hyper_(std::move(truncated)), parts_(std::move(parts)) {
    int n = hyper_.n;
    part_of_.assign(size_t(n), -1);
    for (size_t p = 0; p < parts_.size(); ++p)
      parts_[p].for_each([&](int v) {
        if (part_of_[size_t(v)] != -1)
          throw std::invalid_argument("partition_alice: parts overlap");
        part_of_[size_t(v)] = int(p);
      });
    for (int v = 0; v < n; ++v)
      if (part_of_[size_t(v)] == -1)
        throw std::invalid_argument("partition_alice: parts do not cover the vertex set");
    for (size_t p = 0; p < parts_.size(); ++p) {
      std::vector<VertexSet> edges;
      for (const auto& e : hyper_.edges) {
        VertexSet cut = e & parts_[p];
        if (cut.none())
          throw std::invalid_argument("partition_alice: an edge misses a part entirely");
        edges.push_back(std::move(cut));
      }
      part_games_.emplace_back(n, std::move(edges));
      claims_.emplace_back(n, MBPlayer::Breaker);
    }
  }

  Move choose(const Graph&, const GameSpec& spec, const ColoringState& s,
              const std::optional<Move>& opponent_last) override {
    if (int(parts_.size()) > spec.palette)
      throw strategy_error("partition_alice: palette smaller than the part count");
    if (opponent_last) {
      int p = part_of_[size_t(opponent_last->vertex)];
      claims_[size_t(p)].maker.set(opponent_last->vertex);
    }
    int target = -1;
    if (opponent_last) {
      int p = part_of_[size_t(opponent_last->vertex)];
      if (part_has_uncolored(s, p)) target = p;
    }
    if (target < 0) {
      for (size_t p = 0; p < parts_.size() && target < 0; ++p)
        if (part_has_uncolored(s, int(p))) target = int(p);
    }
    if (target < 0) throw strategy_error("partition_alice: every part is finished");
    // Breaker reply inside the target part: largest potential weight wins,
    // ties to the lowest vertex
    int pick = -1;
    Dyadic best;
    parts_[size_t(target)].for_each([&](int v) {
      if (s.color(v) != 0) return;
      Dyadic w = es_vertex_weight(part_games_[size_t(target)], claims_[size_t(target)], v);
      if (pick == -1 || w > best) {
        pick = v;
        best = w;
      }
    });
    claims_[size_t(target)].breaker.set(pick);
    return Move{pick, target + 1};
  }

  std::unique_ptr<Strategy> clone() const override {
    return std::make_unique<PartitionAlice>(*this);
  }
  std::string name() const override { return "partition_alice"; }

 private:
  bool part_has_uncolored(const ColoringState& s, int p) const {
    bool found = false;
    parts_[size_t(p)].for_each([&](int v) { found = found || s.color(v) == 0; });
    return found;
  }

  Hypergraph hyper_;
  std::vector<VertexSet> parts_;
  std::vector<int> part_of_;
  std::vector<Hypergraph> part_games_;
  std::vector<MBState> claims_;
};

class GluedAlice final : public Strategy {
 public:
  GluedAlice(GlueLayout layout, GluedCase parity, std::unique_ptr<Strategy> h_policy,
             std::unique_ptr<Strategy> k_policy)
      : layout_(std::make_shared<GlueLayout>(std::move(layout))),
        parity_(parity),
        h_policy_(std::move(h_policy)),
        k_policy_(std::move(k_policy)),
        k_state_(layout_->k_graph.vertex_count()),
        rest_state_(layout_->h_rest.vertex_count()) {
    int n = layout_->whole.vertex_count();
    to_k_.assign(size_t(n), -1);
    to_rest_.assign(size_t(n), -1);
    for (size_t i = 0; i < layout_->k_to_whole.size(); ++i)
      to_k_[size_t(layout_->k_to_whole[i])] = int(i);
    for (size_t i = 0; i < layout_->rest_to_whole.size(); ++i)
      to_rest_[size_t(layout_->rest_to_whole[i])] = int(i);
  }

  Move choose(const Graph&, const GameSpec& spec, const ColoringState& s,
              const std::optional<Move>& opponent_last) override {
    int ell = spec.palette;
    GameSpec k_spec = win_spec(ell, k_first());
    GameSpec rest_spec = win_spec(ell, rest_first());

    if (!opponent_last) {
      if (parity_ == GluedCase::BobFirst)
        throw strategy_error("glued_alice: this parity case never moves first");
      bool to_rest = parity_ == GluedCase::AliceOpensRest;
      return reply_in(to_rest, to_rest ? rest_spec : k_spec, std::nullopt, s);
    }
    bool opp_in_rest = to_rest_[size_t(opponent_last->vertex)] >= 0;
    Move local{opp_in_rest ? to_rest_[size_t(opponent_last->vertex)]
                           : to_k_[size_t(opponent_last->vertex)],
               opponent_last->color};
    feed(opp_in_rest, local);
    return reply_in(opp_in_rest, opp_in_rest ? rest_spec : k_spec, local, s);
  }

  std::unique_ptr<Strategy> clone() const override {
    auto c = std::make_unique<GluedAlice>(*layout_, parity_, h_policy_->clone(),
                                          k_policy_->clone());
    c->k_state_ = k_state_;
    c->rest_state_ = rest_state_;
    return c;
  }
  std::string name() const override { return "glued_alice"; }

 private:
  Player k_first() const {
    return parity_ == GluedCase::AliceOpensAttached ? Player::Alice : Player::Bob;
  }
  Player rest_first() const {
    return parity_ == GluedCase::AliceOpensRest ? Player::Alice : Player::Bob;
  }

  void feed(bool in_rest, const Move& m) {
    auto& state = in_rest ? rest_state_ : k_state_;
    try {
      state = apply_move(state, m);
    } catch (const std::exception& e) {
      throw strategy_error(std::string("glued_alice: sub-board rejected a move: ") + e.what());
    }
  }

  Move reply_in(bool in_rest, const GameSpec& sub_spec, const std::optional<Move>& local_last,
                const ColoringState&) {
    auto& state = in_rest ? rest_state_ : k_state_;
    auto& policy = in_rest ? h_policy_ : k_policy_;
    const Graph& sub = in_rest ? layout_->h_rest : layout_->k_graph;
    const auto& map = in_rest ? layout_->rest_to_whole : layout_->k_to_whole;
    if (state.is_terminal())
      throw strategy_error("glued_alice: routed into a finished side");
    Move local = policy->choose(sub, sub_spec, state, local_last);
    feed(in_rest, local);
    return Move{map[size_t(local.vertex)], local.color};
  }

  std::shared_ptr<GlueLayout> layout_;
  GluedCase parity_;
  std::unique_ptr<Strategy> h_policy_;
  std::unique_ptr<Strategy> k_policy_;
  ColoringState k_state_;
  ColoringState rest_state_;
  std::vector<int> to_k_, to_rest_;
};

bool move_is_legal(const ColoringState& s, const GameSpec& spec, Player mover, const Move& m) {
  if (m.vertex < 0 || m.vertex >= s.vertex_count()) return false;
  if (s.color(m.vertex) != 0) return false;
  if (m.color < 1 || m.color > spec.palette) return false;
  if (spec.variant == Variant::RestrictedBob && mover == Player::Bob && m.color != 1)
    return false;
  return true;
}

}  // namespace

std::unique_ptr<Strategy> lowest_legal_strategy() { return std::make_unique<LowestLegal>(); }
std::unique_ptr<Strategy> random_strategy(uint64_t seed) {
  return std::make_unique<RandomStrategy>(seed);
}
std::unique_ptr<Strategy> exact_strategy(Player role, SolveOptions opt) {
  return std::make_unique<ExactStrategy>(role, opt);
}
std::unique_ptr<Strategy> one_bob() { return std::make_unique<OneBob>(); }

std::unique_ptr<Strategy> colorblind_lift(std::unique_ptr<Strategy> inner_bob, int base_palette,
                                          int extension) {
  return std::make_unique<ColorblindLift>(std::move(inner_bob), base_palette, extension);
}

std::unique_ptr<Strategy> mod_star_bob(int aux_palette, int main_palette,
                                       std::unique_ptr<Strategy> aux_bob) {
  if (!aux_bob) aux_bob = exact_strategy(Player::Bob);
  return std::make_unique<ModStarBob>(aux_palette, main_palette, std::move(aux_bob));
}

std::unique_ptr<Strategy> special_vertex_bob(SpecialVertexDirection direction,
                                             std::unique_ptr<Strategy> aux_bob) {
  if (!aux_bob) aux_bob = exact_strategy(Player::Bob);
  return std::make_unique<SpecialVertexBob>(direction, std::move(aux_bob));
}

std::unique_ptr<Strategy> zelinka_bob(const ZelinkaLayout& layout) {
  return std::make_unique<ZelinkaBob>(layout);
}

std::unique_ptr<Strategy> tree_bob(const TreeLayout& layout, int component_offset) {
  return std::make_unique<TreeBob>(layout, component_offset);
}

std::unique_ptr<Strategy> tree_bob_doubled(const TreeLayout& layout) {
  return std::make_unique<TreeBobDoubled>(layout);
}

std::unique_ptr<Strategy> clique_alice(int copies, int size) {
  return std::make_unique<CliqueAlice>(copies, size);
}

std::unique_ptr<Strategy> clique_bob_phases(int copies, int size) {
  return std::make_unique<CliqueBobPhases>(copies, size);
}

std::unique_ptr<Strategy> partition_alice(Hypergraph truncated, std::vector<VertexSet> parts) {
  return std::make_unique<PartitionAlice>(std::move(truncated), std::move(parts));
}

GlueLayout make_glue_layout(const Graph& h, const VertexSet& l, const Graph& k,
                            const std::vector<std::pair<int, int>>& identification) {
  GlueResult glued = glue(h, k, identification);
  VertexSet keep = VertexSet::full(h.vertex_count());
  keep.subtract(l);
  Graph rest = induced_subgraph(h, keep);
  std::vector<int> rest_to_whole = keep.members();  // h ids coincide with whole ids
  return GlueLayout{std::move(glued.graph), k,       std::move(rest),
                    std::move(glued.k_to_result),    std::move(rest_to_whole),
                    std::move(glued.shared)};
}

std::unique_ptr<Strategy> glued_alice(GlueLayout layout, GluedCase parity,
                                      std::unique_ptr<Strategy> h_policy,
                                      std::unique_ptr<Strategy> k_policy) {
  return std::make_unique<GluedAlice>(std::move(layout), parity, std::move(h_policy),
                                      std::move(k_policy));
}

MatchRecord play_match(const Graph& g, const GameSpec& spec, Strategy& alice, Strategy& bob,
                       uint64_t seed) {
  MatchRecord rec;
  rec.seed = seed;
  ColoringState state(g.vertex_count());
  std::optional<Move> last;
  while (!state.is_terminal()) {
    Player mover = state.to_move(spec.first);
    Strategy& policy = mover == Player::Alice ? alice : bob;
    Move m;
    try {
      m = policy.choose(g, spec, state, last);
    } catch (const std::exception& e) {
      rec.violations.push_back(policy.name() + ": " + e.what());
      rec.forfeited_by = mover;
      break;
    }
    if (!move_is_legal(state, spec, mover, m)) {
      rec.violations.push_back(policy.name() + ": illegal move " + move_str(m));
      rec.forfeited_by = mover;
      break;
    }
    state = apply_move(state, m);
    rec.transcript.push_back(m);
    last = m;
  }
  if (rec.forfeited_by) {
    rec.winner = opponent(*rec.forfeited_by);
    return rec;
  }
  rec.score = terminal_score(g, state, spec.palette);
  if (spec.variant == Variant::BobGood)
    rec.winner = alice_wins(g, state, spec) ? Player::Alice : Player::Bob;
  else
    rec.winner = *rec.score == spec.palette ? Player::Alice : Player::Bob;
  return rec;
}

namespace {

struct AdversarySearch {
  const Graph& g;
  const GameSpec& spec;
  Player fixed_role;
  const std::function<bool(const Graph&, const GameSpec&, const ColoringState&)>& objective;
  uint64_t max_lines;
  AdversaryCheck result;
  std::vector<Move> line;

  bool descend(const ColoringState& s, Strategy* fixed, std::optional<Move> last_adv) {
    if (s.is_terminal()) {
      if (++result.lines > max_lines)
        throw budget_exhausted_error("exhaustive_adversary_check: line budget exhausted");
      if (!objective(g, spec, s)) {
        fail("objective failed");
        return false;
      }
      return true;
    }
    if (s.to_move(spec.first) == fixed_role) {
      Move m;
      try {
        m = fixed->choose(g, spec, s, last_adv);
      } catch (const budget_exhausted_error&) {
        throw;
      } catch (const std::exception& e) {
        fail(std::string("policy error: ") + e.what());
        return false;
      }
      if (!move_is_legal(s, spec, fixed_role, m)) {
        fail("illegal policy move " + move_str(m));
        return false;
      }
      line.push_back(m);
      bool ok = descend(apply_move(s, m), fixed, std::nullopt);
      line.pop_back();
      return ok;
    }
    for (const Move& m : legal_moves(s, spec)) {
      auto branch = fixed->clone();
      line.push_back(m);
      bool ok = descend(apply_move(s, m), branch.get(), m);
      line.pop_back();
      if (!ok) return false;
    }
    return true;
  }

  void fail(const std::string& why) {
    if (result.ok) {
      result.ok = false;
      std::ostringstream oss;
      oss << why << " after";
      for (const Move& m : line) oss << ' ' << move_str(m);
      result.failure = oss.str();
    }
  }
};

}  // namespace

AdversaryCheck exhaustive_adversary_check(
    const Graph& g, const GameSpec& spec, const Strategy& fixed, Player fixed_role,
    const std::function<bool(const Graph&, const GameSpec&, const ColoringState&)>& objective,
    uint64_t max_lines) {
  AdversarySearch search{g, spec, fixed_role, objective, max_lines, {}, {}};
  auto root = fixed.clone();
  search.descend(ColoringState(g.vertex_count()), root.get(), std::nullopt);
  return search.result;
}

}  // namespace domg
