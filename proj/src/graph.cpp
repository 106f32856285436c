#include "domg/graph.hpp"

#include <algorithm>
#include <numeric>

namespace domg {

Graph::Graph(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("Graph: vertex count must be >= 1");
  adj_.assign(size_t(n), VertexSet(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
  adj_[size_t(u)].set(v);
  adj_[size_t(v)].set(u);
}

void Graph::remove_edge(int u, int v) {
  if (!has_edge(u, v)) throw std::invalid_argument("Graph: edge not present");
  adj_[size_t(u)].reset(v);
  adj_[size_t(v)].reset(u);
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return u != v && adj_[size_t(u)].test(v);
}

const VertexSet& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[size_t(v)];
}

int Graph::min_degree() const {
  int d = n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    adj_[size_t(u)].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

VertexSet closed_neighborhood(const Graph& g, int v) {
  VertexSet s = g.neighbors(v);
  s.set(v);
  return s;
}

bool is_dominating(const Graph& g, const VertexSet& s) {
  if (s.universe_size() != g.vertex_count())
    throw std::invalid_argument("is_dominating: set universe mismatch");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!s.test(v) && !s.intersects(g.neighbors(v))) return false;
  return true;
}

namespace {

struct GammaSearch {
  const Graph& g;
  int n;
  std::vector<VertexSet> nbhd;
  int best;

  explicit GammaSearch(const Graph& graph) : g(graph), n(graph.vertex_count()), best(n) {
    nbhd.reserve(size_t(n));
    for (int v = 0; v < n; ++v) nbhd.push_back(closed_neighborhood(g, v));
  }

  int greedy_bound() const {
    VertexSet covered(n);
    int used = 0;
    while (covered.count() < n) {
      int pick = -1, gain = -1;
      for (int v = 0; v < n; ++v) {
        VertexSet fresh = nbhd[size_t(v)];
        fresh.subtract(covered);
        int c = fresh.count();
        if (c > gain) {
          gain = c;
          pick = v;
        }
      }
      covered |= nbhd[size_t(pick)];
      ++used;
    }
    return used;
  }

  void rec(const VertexSet& covered, int chosen) {
    int uncovered = n - covered.count();
    if (uncovered == 0) {
      best = std::min(best, chosen);
      return;
    }
    // every new vertex covers at most max_degree+1 vertices
    int need = (uncovered + g.max_degree()) / (g.max_degree() + 1);
    if (chosen + need >= best) return;
    int target = -1;
    for (int v = 0; v < n; ++v)
      if (!covered.test(v)) {
        target = v;
        break;
      }
    // some member of N[target] must join the set; prefer high degree
    std::vector<int> cands = nbhd[size_t(target)].members();
    std::sort(cands.begin(), cands.end(), [&](int a, int b) {
      int da = g.degree(a), db = g.degree(b);
      return da != db ? da > db : a < b;
    });
    for (int u : cands) {
      VertexSet next = covered;
      next |= nbhd[size_t(u)];
      rec(next, chosen + 1);
    }
  }
};

struct DomaticSearch {
  int n, k;
  std::vector<std::vector<int>> nbhd;  // closed neighborhoods as lists
  std::vector<int> order;              // ascending degree
  std::vector<int> assign;             // class per vertex, -1 unassigned
  std::vector<int> open;               // unassigned count in N[v]
  std::vector<int> missing;            // classes absent from N[v]
  std::vector<std::vector<int>> seen;  // per-vertex class counts

  DomaticSearch(const Graph& g, int classes)
      : n(g.vertex_count()),
        k(classes),
        assign(size_t(n), -1),
        open(size_t(n)),
        missing(size_t(n), classes),
        seen(size_t(n), std::vector<int>(size_t(classes), 0)) {
    nbhd.reserve(size_t(n));
    for (int v = 0; v < n; ++v) {
      nbhd.push_back(closed_neighborhood(g, v).members());
      open[size_t(v)] = int(nbhd.back().size());
    }
    order.resize(size_t(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      int da = g.degree(a), db = g.degree(b);
      return da != db ? da < db : a < b;
    });
  }

  bool run() {
    for (int v = 0; v < n; ++v)
      if (open[size_t(v)] < missing[size_t(v)]) return false;
    return rec(0, 0);
  }

  bool rec(int pos, int classes_used) {
    if (pos == n) return true;
    int v = order[size_t(pos)];
    int limit = std::min(classes_used, k - 1);
    for (int c = 0; c <= limit; ++c) {
      bool ok = true;
      for (int w : nbhd[size_t(v)]) {
        --open[size_t(w)];
        if (seen[size_t(w)][size_t(c)]++ == 0) --missing[size_t(w)];
      }
      for (int w : nbhd[size_t(v)])
        if (open[size_t(w)] < missing[size_t(w)]) {
          ok = false;
          break;
        }
      assign[size_t(v)] = c;
      if (ok && rec(pos + 1, std::max(classes_used, c + 1))) return true;
      assign[size_t(v)] = -1;
      for (int w : nbhd[size_t(v)]) {
        ++open[size_t(w)];
        if (--seen[size_t(w)][size_t(c)] == 0) ++missing[size_t(w)];
      }
    }
    return false;
  }
};

}  // namespace

int domination_number(const Graph& g) {
  GammaSearch s(g);
  s.best = s.greedy_bound();
  s.rec(VertexSet(g.vertex_count()), 0);
  return s.best;
}

int domatic_number(const Graph& g) {
  for (int k = g.min_degree() + 1; k >= 2; --k) {
    DomaticSearch s(g, k);
    if (s.run()) return k;
  }
  return 1;
}

Graph delete_edge(const Graph& g, int u, int v) {
  Graph out = g;
  out.remove_edge(u, v);
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  if (keep.universe_size() != g.vertex_count())
    throw std::invalid_argument("induced_subgraph: universe mismatch");
  std::vector<int> kept = keep.members();
  if (kept.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
  std::vector<int> index(size_t(g.vertex_count()), -1);
  for (size_t i = 0; i < kept.size(); ++i) index[size_t(kept[i])] = int(i);
  Graph out(int(kept.size()));
  for (int u : kept)
    g.neighbors(u).for_each([&](int v) {
      if (u < v && index[size_t(v)] >= 0) out.add_edge(index[size_t(u)], index[size_t(v)]);
    });
  return out;
}

Graph delete_vertex(const Graph& g, int v) {
  if (g.vertex_count() < 2)
    throw std::invalid_argument("delete_vertex: result would be empty");
  VertexSet keep = VertexSet::full(g.vertex_count());
  keep.reset(v);
  return induced_subgraph(g, keep);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.vertex_count() + b.vertex_count());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  int off = a.vertex_count();
  for (auto [u, v] : b.edges()) out.add_edge(u + off, v + off);
  return out;
}

GlueResult glue(const Graph& h, const Graph& k,
                const std::vector<std::pair<int, int>>& identification) {
  std::vector<int> k_to_result(size_t(k.vertex_count()), -1);
  std::vector<bool> h_used(size_t(h.vertex_count()), false);
  for (auto [kv, hv] : identification) {
    if (kv < 0 || kv >= k.vertex_count() || hv < 0 || hv >= h.vertex_count())
      throw std::invalid_argument("glue: identification vertex out of range");
    if (k_to_result[size_t(kv)] != -1 || h_used[size_t(hv)])
      throw std::invalid_argument("glue: identification not injective");
    k_to_result[size_t(kv)] = hv;
    h_used[size_t(hv)] = true;
  }
  int total = h.vertex_count() + k.vertex_count() - int(identification.size());
  Graph out(total);
  for (auto [u, v] : h.edges()) out.add_edge(u, v);
  int next = h.vertex_count();
  for (int kv = 0; kv < k.vertex_count(); ++kv)
    if (k_to_result[size_t(kv)] == -1) k_to_result[size_t(kv)] = next++;
  for (auto [u, v] : k.edges()) out.add_edge(k_to_result[size_t(u)], k_to_result[size_t(v)]);
  VertexSet shared(total);
  for (auto [kv, hv] : identification) {
    (void)kv;
    shared.set(hv);
  }
  return GlueResult{std::move(out), std::move(shared), std::move(k_to_result)};
}

bool has_two_pendant_gadget(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    int pendants = 0;
    g.neighbors(v).for_each([&](int u) {
      if (g.degree(u) == 1) ++pendants;
    });
    if (pendants >= 2) return true;
  }
  return false;
}

bool has_adjacent_degree2_pair(const Graph& g) {
  for (auto [u, v] : g.edges())
    if (g.degree(u) == 2 && g.degree(v) == 2) return true;
  return false;
}

std::vector<int> universal_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == g.vertex_count() - 1) out.push_back(v);
  return out;
}

}  // namespace domg
