#include "domg/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace domg {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long zelinka_nk(int k) { return 2LL * (k + 2) + binomial(2 * (k + 2), k); }

namespace {

// k-subsets of 0..m-1 in lexicographic order
std::vector<std::vector<int>> k_subsets(int m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<size_t>(k), 0);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[size_t(i)] == m - k + i) --i;
    if (i < 0) break;
    ++cur[size_t(i)];
    for (int j = i + 1; j < k; ++j) cur[size_t(j)] = cur[size_t(j - 1)] + 1;
  }
  return out;
}

}  // namespace

ZelinkaLayout gen_zelinka(int n) {
  if (n < zelinka_nk(2))
    throw std::invalid_argument("gen_zelinka: n must be at least 36");
  int k = 2;
  while (zelinka_nk(k + 1) <= n) ++k;
  int s_size = 2 * (k + 2);
  auto subsets = k_subsets(s_size, k);
  int t_size = int(subsets.size());
  int u_size = n - int(zelinka_nk(k));

  ZelinkaLayout layout{k, {}, {}, {}, {}, Graph(n)};
  for (int s = 0; s < s_size; ++s) layout.s_vertices.push_back(s);
  for (int t = 0; t < t_size; ++t) {
    int id = s_size + t;
    layout.t_vertices.push_back(id);
    layout.t_subsets.push_back(subsets[size_t(t)]);
    for (int s : subsets[size_t(t)]) layout.graph.add_edge(s, id);
  }
  for (int u = 0; u < u_size; ++u) {
    int id = s_size + t_size + u;
    layout.u_vertices.push_back(id);
    for (int s = 0; s < k; ++s) layout.graph.add_edge(s, id);
  }
  return layout;
}

Graph gen_two_pendant(int n) {
  if (n < 3) throw std::invalid_argument("gen_two_pendant: n must be at least 3");
  Graph g(n);
  for (int u = 0; u < n - 2; ++u)
    for (int v = u + 1; v < n - 2; ++v) g.add_edge(u, v);
  g.add_edge(0, n - 2);
  g.add_edge(0, n - 1);
  return g;
}

TreeLayout gen_tree_graph(int k) {
  if (k < 1) throw std::invalid_argument("gen_tree_graph: k must be at least 1");
  int n = (1 << k) - 1;
  TreeLayout layout{k, std::vector<int>(size_t(n), -1), std::vector<int>(size_t(n), 0), Graph(n)};
  for (int v = 1; v < n; ++v) {
    layout.parent[size_t(v)] = (v - 1) / 2;
    layout.depth[size_t(v)] = layout.depth[size_t((v - 1) / 2)] + 1;
  }
  for (int v = 1; v < n; ++v)
    for (int a = layout.parent[size_t(v)]; a != -1; a = layout.parent[size_t(a)])
      layout.graph.add_edge(v, a);
  return layout;
}

Graph gen_matching(int ell) {
  if (ell < 1) throw std::invalid_argument("gen_matching: need at least one edge");
  Graph g(2 * ell);
  for (int i = 0; i < ell; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

Graph gen_disjoint_cliques(int copies, int size) {
  if (copies < 1 || size < 1)
    throw std::invalid_argument("gen_disjoint_cliques: bad parameters");
  Graph g(copies * size);
  for (int c = 0; c < copies; ++c)
    for (int u = 0; u < size; ++u)
      for (int v = u + 1; v < size; ++v) g.add_edge(c * size + u, c * size + v);
  return g;
}

Graph gen_clique_tree(int t, int s, const std::vector<int>& attachments) {
  if (t < 1 || s < 1) throw std::invalid_argument("gen_clique_tree: bad parameters");
  if (int(attachments.size()) != s - 1)
    throw std::invalid_argument("gen_clique_tree: need s-1 attachment vertices");
  int clique = 2 * t + 1;
  int total = clique + (s - 1) * (clique - 1);
  Graph g(total);
  for (int u = 0; u < clique; ++u)
    for (int v = u + 1; v < clique; ++v) g.add_edge(u, v);
  int built = clique;
  for (int i = 0; i < s - 1; ++i) {
    int a = attachments[size_t(i)];
    if (a < 0 || a >= built)
      throw std::invalid_argument("gen_clique_tree: attachment outside the built union");
    std::vector<int> members{a};
    for (int j = 0; j < clique - 1; ++j) members.push_back(built + j);
    for (size_t x = 0; x < members.size(); ++x)
      for (size_t y = x + 1; y < members.size(); ++y) g.add_edge(members[x], members[y]);
    built += clique - 1;
  }
  return g;
}

Graph gen_k4_pendant() {
  Graph g(5);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) g.add_edge(u, v);
  g.add_edge(0, 4);
  return g;
}

namespace {

// vertex pairs (i, j), i < j, in lexicographic order, with O(1) index lookup
struct PairIndex {
  int n;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> idx;
  explicit PairIndex(int n_) : n(n_), idx(size_t(n_), std::vector<int>(size_t(n_), -1)) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        idx[size_t(i)][size_t(j)] = idx[size_t(j)][size_t(i)] = int(pairs.size());
        pairs.emplace_back(i, j);
      }
  }
};

// mask is kept iff no vertex permutation yields a smaller adjacency bitmask
bool is_canonical_mask(const PairIndex& pi, uint32_t mask) {
  std::vector<int> perm(size_t(pi.n));
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end())) {
    uint32_t permuted = 0;
    for (size_t p = 0; p < pi.pairs.size(); ++p) {
      if (!(mask & (uint32_t(1) << p))) continue;
      auto [a, b] = pi.pairs[p];
      permuted |= uint32_t(1) << pi.idx[size_t(perm[size_t(a)])][size_t(perm[size_t(b)])];
    }
    if (permuted < mask) return false;
  }
  return true;
}

}  // namespace

void enumerate_corpus(int max_n, bool dedupe, const std::function<void(const Graph&)>& sink) {
  if (max_n < 1 || max_n > 7)
    throw std::invalid_argument("enumerate_corpus: max_n must be in 1..7");
  for (int n = 1; n <= max_n; ++n) {
    PairIndex pi(n);
    uint32_t limit = uint32_t(1) << pi.pairs.size();
    for (uint32_t mask = 0; mask < limit; ++mask) {
      if (dedupe && !is_canonical_mask(pi, mask)) continue;
      Graph g(n);
      for (size_t p = 0; p < pi.pairs.size(); ++p)
        if (mask & (uint32_t(1) << p)) g.add_edge(pi.pairs[p].first, pi.pairs[p].second);
      sink(g);
    }
  }
}

std::vector<Graph> corpus_vector(int max_n, bool dedupe) {
  std::vector<Graph> out;
  enumerate_corpus(max_n, dedupe, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace domg
