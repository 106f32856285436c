#include "domg/bounds.hpp"

#include <atomic>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <thread>

#include "domg/constructions.hpp"

namespace domg {

Rat::Rat(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("Rat: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string Rat::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }

namespace {

Severity severity_for(const std::string& bound_id, bool holds) {
  if (holds) return Severity::OK;
  return bound_id.rfind("W-", 0) == 0 ? Severity::WARN : Severity::FAIL;
}

BoundVerdict verdict(const std::string& graph_id, std::string bound_id, bool holds, Rat lhs,
                     Rat rhs) {
  Severity sev = severity_for(bound_id, holds);
  return BoundVerdict{graph_id, std::move(bound_id), holds, lhs, rhs, sev};
}

std::string qualify(const std::string& base, std::initializer_list<std::string> parts) {
  std::string out = base;
  for (const auto& p : parts) {
    out += ':';
    out += p;
  }
  return out;
}

std::string letter(Player p) { return std::string(1, player_letter(p)); }

constexpr Player kPlayers[2] = {Player::Alice, Player::Bob};

}  // namespace

BoundReport compute_report(const Graph& g, int score_ceiling, const SolveOptions& opt,
                           std::string id) {
  if (score_ceiling < 1) throw std::invalid_argument("compute_report: ceiling must be >= 1");
  BoundReport r;
  r.id = id.empty() ? ("n" + std::to_string(g.vertex_count())) : std::move(id);
  r.n = g.vertex_count();
  r.min_deg = g.min_degree();
  r.max_deg = g.max_degree();
  r.gamma = domination_number(g);
  r.dom = domatic_number(g);
  r.ceiling = score_ceiling;
  r.two_pendant = has_two_pendant_gadget(g);
  r.adj_deg2_pair = has_adjacent_degree2_pair(g);
  for (Player p : kPlayers) {
    int pi = player_index(p);
    r.win[size_t(pi)].assign(size_t(score_ceiling), std::nullopt);
    r.score[size_t(pi)].assign(size_t(score_ceiling), std::nullopt);
    r.rscore[size_t(pi)].assign(size_t(score_ceiling), std::nullopt);
    try {
      r.domg[size_t(pi)] = game_number(g, p, opt);
    } catch (const budget_exhausted_error&) {
      r.gaps.push_back("domg(" + letter(p) + "): budget exhausted");
    }
    for (int k = 1; k <= score_ceiling; ++k) {
      try {
        r.win[size_t(pi)][size_t(k - 1)] = solve_win(g, p, k, opt) == Player::Alice;
      } catch (const budget_exhausted_error&) {
        r.gaps.push_back("win(" + letter(p) + "," + std::to_string(k) + "): budget exhausted");
      }
      try {
        r.score[size_t(pi)][size_t(k - 1)] = solve_score(g, p, k, opt);
      } catch (const budget_exhausted_error&) {
        r.gaps.push_back("score(" + letter(p) + "," + std::to_string(k) + "): budget exhausted");
      }
      try {
        r.rscore[size_t(pi)][size_t(k - 1)] = solve_restricted_score(g, p, k, opt);
      } catch (const budget_exhausted_error&) {
        r.gaps.push_back("rscore(" + letter(p) + "," + std::to_string(k) +
                         "): budget exhausted");
      }
    }
  }
  return r;
}

std::vector<BoundVerdict> check_bounds(const BoundReport& r) {
  std::vector<BoundVerdict> out;
  Rat mindeg_cap(r.min_deg + 3, 2);
  Rat gamma_cap = Rat(r.n, 2LL * r.gamma);
  gamma_cap = Rat(gamma_cap.num + gamma_cap.den, gamma_cap.den);  // n/(2 gamma) + 1
  Rat abs_cap = rat_min(mindeg_cap, gamma_cap);

  out.push_back(
      verdict(r.id, "B-CHAIN:dom", r.dom <= r.min_deg + 1, r.dom, r.min_deg + 1));

  for (Player p : kPlayers) {
    int pi = player_index(p);
    const auto& domg = r.domg[size_t(pi)];
    const auto& win = r.win[size_t(pi)];
    const auto& score = r.score[size_t(pi)];
    const auto& rscore = r.rscore[size_t(pi)];

    if (domg) {
      out.push_back(verdict(r.id, qualify("B-CHAIN", {letter(p)}), *domg <= r.dom, *domg, r.dom));
      out.push_back(verdict(r.id, qualify("B-MINDEG", {letter(p)}), Rat(*domg) <= mindeg_cap,
                            *domg, mindeg_cap));
      // one better on odd-regular graphs when the maximizer opens
      if (p == Player::Alice && r.min_deg == r.max_deg && r.min_deg % 2 == 1) {
        Rat reg_cap(r.min_deg + 1, 2);
        out.push_back(verdict(r.id, "B-MINDEG:reg:A", Rat(*domg) <= reg_cap, *domg, reg_cap));
      }
      out.push_back(verdict(r.id, qualify("B-GAMMA", {letter(p)}), Rat(*domg) <= gamma_cap,
                            *domg, gamma_cap));
      if (r.two_pendant)
        out.push_back(verdict(r.id, qualify("B-GADGET1", {letter(p)}), *domg == 1, *domg, 1));
      if (r.n % 2 == 0 && r.adj_deg2_pair)
        out.push_back(verdict(r.id, qualify("B-GADGET2", {letter(p)}), *domg == 1, *domg, 1));
    }

    for (int k = 1; k < r.ceiling; ++k) {
      const auto& now = win[size_t(k - 1)];
      const auto& next = win[size_t(k)];
      if (now && next)
        out.push_back(verdict(r.id, qualify("B-MONO", {letter(p), std::to_string(k)}),
                              !(*next && !*now), *next ? 1 : 0, *now ? 1 : 0));
    }

    for (int ell = 1; ell <= r.ceiling; ++ell) {
      const auto& sc = score[size_t(ell - 1)];
      if (!sc) continue;
      out.push_back(verdict(r.id, qualify("B-SCOREABS", {letter(p), std::to_string(ell)}),
                            Rat(*sc) <= abs_cap, *sc, abs_cap));
      if (domg) {
        if (ell <= *domg)
          out.push_back(verdict(r.id, qualify("B-SCORE-EQ", {letter(p), std::to_string(ell)}),
                                *sc == ell, *sc, ell));
        if (ell > *domg) {
          out.push_back(verdict(r.id, qualify("B-SCORE-LB", {letter(p), std::to_string(ell)}),
                                *sc >= *domg - 1, *domg - 1, *sc));
          Rat ub(*domg * ell + *domg + 1, *domg + 1);  // (domg/(domg+1)) ell + 1
          out.push_back(verdict(r.id, qualify("B-SCORE-UB", {letter(p), std::to_string(ell)}),
                                Rat(*sc) < ub, *sc, ub));
        }
        if (ell >= *domg)
          out.push_back(verdict(r.id, qualify("W-Q2", {letter(p), std::to_string(ell)}),
                                *sc <= *domg, *sc, *domg));
      }
      const auto& rs = rscore[size_t(ell - 1)];
      if (rs) {
        out.push_back(verdict(r.id, qualify("B-RS:lo", {letter(p), std::to_string(ell)}),
                              *sc <= *rs, *sc, *rs));
        out.push_back(verdict(r.id, qualify("B-RS:hi", {letter(p), std::to_string(ell)}),
                              *rs <= *sc + 1, *rs, *sc + 1));
      }
      if (ell < r.ceiling && rs && rscore[size_t(ell)])
        out.push_back(verdict(r.id, qualify("B-RS:mono", {letter(p), std::to_string(ell)}),
                              *rs <= *rscore[size_t(ell)], *rs, *rscore[size_t(ell)]));
    }
  }

  const auto& da = r.domg[0];
  const auto& db = r.domg[1];
  if (da && db) {
    out.push_back(verdict(r.id, "B-GAPS:AB", *db <= 2 * *da + 1, *db, 2 * *da + 1));
    out.push_back(verdict(r.id, "B-GAPS:BA", *da <= 2 * *db + 1, *da, 2 * *db + 1));
    int gap = *da > *db ? *da - *db : *db - *da;
    out.push_back(verdict(r.id, "W-CONJ", gap <= 1, gap, 1));
  }
  return out;
}

std::vector<BoundVerdict> check_deletion_bounds(const Graph& g, const BoundReport& r,
                                                const SolveOptions& opt) {
  std::vector<BoundVerdict> out;
  for (auto [u, v] : g.edges()) {
    Graph reduced = delete_edge(g, u, v);
    std::string edge = std::to_string(u) + "-" + std::to_string(v);
    for (Player p : kPlayers) {
      int pi = player_index(p);
      if (r.domg[size_t(pi)]) {
        int reduced_domg = game_number(reduced, p, opt);
        out.push_back(verdict(r.id, qualify("B-EDGE:domg", {letter(p), edge}),
                              reduced_domg <= *r.domg[size_t(pi)], reduced_domg,
                              *r.domg[size_t(pi)]));
      }
      for (int ell = 1; ell <= r.ceiling; ++ell) {
        const auto& sc = r.score[size_t(pi)][size_t(ell - 1)];
        if (!sc) continue;
        int reduced_score = solve_score(reduced, p, ell, opt);
        out.push_back(
            verdict(r.id, qualify("B-EDGE:score-mono", {letter(p), std::to_string(ell), edge}),
                    reduced_score <= *sc, reduced_score, *sc));
        out.push_back(
            verdict(r.id, qualify("B-EDGE:score-drop", {letter(p), std::to_string(ell), edge}),
                    reduced_score >= *sc - 2, *sc - 2, reduced_score));
      }
    }
  }
  if (g.vertex_count() >= 2) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      Graph reduced = delete_vertex(g, v);
      for (int ell = 1; ell <= r.ceiling; ++ell) {
        const auto& sb = r.score[size_t(player_index(Player::Bob))][size_t(ell - 1)];
        if (!sb) continue;
        int reduced_score = solve_score(reduced, Player::Alice, ell, opt);
        out.push_back(
            verdict(r.id, qualify("B-VERTEX", {std::to_string(ell), std::to_string(v)}),
                    reduced_score >= *sb - 1, *sb - 1, reduced_score));
      }
    }
  }
  return out;
}

std::vector<BoundVerdict> check_dominating_bobgood(const Graph& g, const BoundReport& r,
                                                   const SolveOptions& opt) {
  std::vector<BoundVerdict> out;
  std::vector<int> universal = universal_vertices(g);
  if (universal.empty()) return out;
  if (int(universal.size()) == g.vertex_count()) universal.pop_back();  // keep L proper
  if (universal.empty()) return out;
  VertexSet l(g.vertex_count());
  for (int v : universal) l.set(v);
  for (Player p : kPlayers) {
    const auto& domg = r.domg[size_t(player_index(p))];
    if (!domg) continue;
    bool good = solve_bobgood(g, l, p, *domg + 1, opt);
    out.push_back(verdict(r.id, qualify("B-DOMBOBGOOD", {letter(p)}), good, good ? 1 : 0, 1));
  }
  return out;
}

namespace {

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

struct GlueEntry {
  std::string tag;
  Graph h;
  VertexSet l;
  Graph k;
  std::vector<std::pair<int, int>> ident;  // (k vertex, h vertex)
  int ell;
};

std::vector<GlueEntry> glue_catalog() {
  std::vector<GlueEntry> out;
  Graph p4 = path_graph(4), c4 = cycle_graph(4);
  Graph k2 = complete_graph(2), k3 = complete_graph(3), k4 = complete_graph(4);
  out.push_back({"p4+edge", p4, VertexSet::of(4, {0, 3}), k2, {{0, 0}, {1, 3}}, 2});
  out.push_back({"p4+path", p4, VertexSet::of(4, {0, 3}), path_graph(3), {{0, 0}, {2, 3}}, 2});
  out.push_back({"c4+edge", c4, VertexSet::of(4, {0, 1}), k2, {{0, 0}, {1, 1}}, 2});
  out.push_back({"c4+triangle", c4, VertexSet::of(4, {0, 1}), k3, {{0, 0}, {1, 1}}, 2});
  out.push_back({"star+k3", star_graph(3), VertexSet::of(4, {0}), k3, {{0, 0}}, 2});
  out.push_back({"k3+k3", k3, VertexSet::of(3, {0}), k3, {{0, 0}}, 3});
  out.push_back({"k3|k3", k3, VertexSet::of(3, {2}), k3, {{0, 2}}, 2});
  out.push_back({"k4|k2", k4, VertexSet::of(4, {0}), k2, {{0, 0}}, 2});
  out.push_back({"k3|k2", k3, VertexSet::of(3, {2}), k2, {{0, 2}}, 2});
  Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
  out.push_back({"k3|2k2", k3, VertexSet::of(3, {2}), two_k2, {{0, 2}}, 2});
  out.push_back({"c4|k3", c4, VertexSet::of(4, {0}), k3, {{0, 0}}, 2});
  return out;
}

}  // namespace

std::vector<BoundVerdict> check_glue_catalog(const SolveOptions& opt) {
  std::vector<BoundVerdict> out;
  for (const GlueEntry& e : glue_catalog()) {
    GlueResult glued = glue(e.h, e.k, e.ident);
    int k_extra = e.k.vertex_count() - int(e.ident.size());
    int rest_size = e.h.vertex_count() - e.l.count();

    // Bob side: a BobGood pair caps the glued game number
    for (Player x : kPlayers) {
      bool bobgood = solve_bobgood(e.h, e.l, x, e.ell, opt);
      if (!bobgood) continue;
      if (k_extra % 2 == 0) {
        int glued_domg = game_number(glued.graph, x, opt);
        out.push_back(verdict("glue:" + e.tag, qualify("B-BOBGOOD:B1", {letter(x)}),
                              glued_domg <= e.ell - 1, glued_domg, e.ell - 1));
      } else if (x == Player::Alice) {
        int glued_domg = game_number(glued.graph, Player::Bob, opt);
        out.push_back(verdict("glue:" + e.tag, "B-BOBGOOD:B2", glued_domg <= e.ell - 1,
                              glued_domg, e.ell - 1));
      }
    }

    // Alice side: an AliceGood pair plus a strong attached graph floors it
    for (Player x : kPlayers) {
      bool alicegood;
      try {
        alicegood = solve_alicegood(e.h, e.l, x, e.ell, opt);
      } catch (const std::invalid_argument&) {
        continue;
      }
      if (!alicegood) continue;
      for (Player y : kPlayers) {
        if (game_number(e.k, y, opt) < e.ell) continue;
        bool k_even = e.k.vertex_count() % 2 == 0;
        bool rest_even = rest_size % 2 == 0;
        std::optional<std::pair<std::string, Player>> applicable;
        if (x == Player::Bob && y == Player::Bob && k_even && rest_even)
          applicable = {{"A1", Player::Bob}};
        else if (x == Player::Alice && y == Player::Bob && k_even && !rest_even)
          applicable = {{"A2", Player::Alice}};
        else if (x == Player::Bob && y == Player::Alice && !k_even && rest_even)
          applicable = {{"A3", Player::Alice}};
        if (!applicable) continue;
        int glued_domg = game_number(glued.graph, applicable->second, opt);
        out.push_back(verdict("glue:" + e.tag, qualify("B-ALICEGOOD", {applicable->first}),
                              glued_domg >= e.ell, e.ell, glued_domg));
      }
    }
  }
  return out;
}

namespace {

std::string graph_signature(const Graph& g, size_t index) {
  std::ostringstream oss;
  oss << "n" << g.vertex_count() << "#" << index;
  return oss.str();
}

std::string counterexample_text(const Graph& g, const std::string& id) {
  std::ostringstream oss;
  oss << id << ": n=" << g.vertex_count() << " edges=";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) oss << ',';
    first = false;
    oss << u << '-' << v;
  }
  return oss.str();
}

}  // namespace

namespace {

struct GraphResult {
  std::vector<BoundVerdict> verdicts;
  std::optional<int> first_player_gap;
};

GraphResult run_graph_checks(const Graph& g, const SweepConfig& config, const std::string& id) {
  GraphResult result;
  BoundReport report = compute_report(g, config.score_ceiling, config.solve, id);
  if (report.domg[0] && report.domg[1])
    result.first_player_gap = std::abs(*report.domg[0] - *report.domg[1]);
  result.verdicts = check_bounds(report);
  auto append = [&](std::vector<BoundVerdict> more) {
    result.verdicts.insert(result.verdicts.end(), std::make_move_iterator(more.begin()),
                           std::make_move_iterator(more.end()));
  };
  if (config.deletion_checks) append(check_deletion_bounds(g, report, config.solve));
  if (config.dominating_bobgood) append(check_dominating_bobgood(g, report, config.solve));
  return result;
}

}  // namespace

SweepSummary sweep_corpus(const std::vector<Graph>& corpus, const SweepConfig& config,
                          const std::function<void(const BoundVerdict&)>& sink) {
  SweepSummary summary;
  std::vector<GraphResult> results(corpus.size());

  int workers = std::max(1, config.workers);
  if (workers == 1 || corpus.size() < 2) {
    for (size_t i = 0; i < corpus.size(); ++i)
      results[i] = run_graph_checks(corpus[i], config, graph_signature(corpus[i], i));
  } else {
    std::atomic<size_t> next{0};
    auto work = [&] {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= corpus.size()) return;
        results[i] = run_graph_checks(corpus[i], config, graph_signature(corpus[i], i));
      }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  auto absorb = [&](const std::vector<BoundVerdict>& verdicts, const Graph* g,
                    const std::string& id) {
    bool failed = false;
    for (const auto& v : verdicts) {
      if (sink) sink(v);
      switch (v.severity) {
        case Severity::OK: ++summary.ok; break;
        case Severity::WARN: ++summary.warnings; break;
        case Severity::FAIL:
          ++summary.failures;
          failed = true;
          break;
      }
    }
    if (failed && g) summary.counterexamples.push_back(counterexample_text(*g, id));
  };

  for (size_t i = 0; i < corpus.size(); ++i) {
    ++summary.graphs;
    if (results[i].first_player_gap)
      ++summary.first_player_gap_histogram[*results[i].first_player_gap];
    absorb(results[i].verdicts, &corpus[i], graph_signature(corpus[i], i));
  }
  if (config.glue_catalog) absorb(check_glue_catalog(config.solve), nullptr, "glue");
  return summary;
}

}  // namespace domg
