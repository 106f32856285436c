#pragma once

#include <functional>

#include "domg/graph.hpp"

namespace domg {

long long binomial(int n, int k);

// Bipartite family with minimum degree k but game number 1: side S of size
// 2(k+2), one vertex per k-subset of S joined to its elements, and a filler
// class U attached to the first k vertices of S.
struct ZelinkaLayout {
  int k = 0;
  std::vector<int> s_vertices;
  std::vector<int> t_vertices;
  std::vector<std::vector<int>> t_subsets;  // defining k-subset per T vertex, lexicographic
  std::vector<int> u_vertices;
  Graph graph;
};

// Smallest n with a parameter-k layout: 2(k+2) + C(2(k+2), k).
long long zelinka_nk(int k);

// Layout for the largest k with zelinka_nk(k) <= n. Requires n >= 36; the
// small-n regime belongs to gen_two_pendant.
ZelinkaLayout gen_zelinka(int n);

// K_{n-2} plus two pendant vertices hung on one clique vertex.
Graph gen_two_pendant(int n);

// Complete binary tree of height k-1, closed under the ancestor relation:
// vertices in heap order, x ~ y iff one lies on the other's root path.
struct TreeLayout {
  int k = 0;  // |V| = 2^k - 1
  std::vector<int> parent;
  std::vector<int> depth;
  Graph graph;
};
TreeLayout gen_tree_graph(int k);

Graph gen_matching(int ell);                      // ell disjoint edges
Graph gen_disjoint_cliques(int copies, int size);  // copies x K_size, consecutive blocks

// Union of s copies of K_{2t+1}, each new clique sharing exactly one vertex
// (the given attachment) with the union built so far.
Graph gen_clique_tree(int t, int s, const std::vector<int>& attachments);

Graph gen_k4_pendant();  // K4 plus one pendant vertex

// All labeled graphs on 1..max_n vertices; with dedupe, one representative
// per isomorphism class picked by the minimal adjacency bitmask over all
// vertex permutations. Brute-force canonicalization caps max_n at 7.
void enumerate_corpus(int max_n, bool dedupe, const std::function<void(const Graph&)>& sink);
std::vector<Graph> corpus_vector(int max_n, bool dedupe);

}  // namespace domg
