#pragma once

#include <utility>
#include <vector>

#include "domg/vertex_set.hpp"

namespace domg {

// Undirected simple graph on vertices 0..n-1. Adjacency is kept symmetric
// and loop-free; the empty graph (n = 0) is rejected. Values are cheap to
// copy and treated as immutable once built, so they can be shared freely
// across workers.
class Graph {
 public:
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const;

  void add_edge(int u, int v);     // idempotent; rejects loops / bad vertices
  void remove_edge(int u, int v);  // rejects missing edges

  bool has_edge(int u, int v) const;
  const VertexSet& neighbors(int v) const;
  int degree(int v) const { return neighbors(v).count(); }
  int min_degree() const;
  int max_degree() const;

  // All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

 private:
  void check_vertex(int v) const;
  int n_;
  std::vector<VertexSet> adj_;
};

// {v} together with its neighbors.
VertexSet closed_neighborhood(const Graph& g, int v);

// True iff every vertex of g is in s or adjacent to a member of s.
bool is_dominating(const Graph& g, const VertexSet& s);

// Exact minimum dominating set size, by branch and bound over the closed
// neighborhood of an uncovered vertex, seeded with a greedy upper bound.
int domination_number(const Graph& g);

// Exact largest number of parts in a partition of V into dominating sets.
// Backtracking class assignment with per-vertex feasibility pruning, trying
// sizes from min_degree+1 downward.
int domatic_number(const Graph& g);

Graph delete_edge(const Graph& g, int u, int v);

// Induced subgraph on V minus {v}; remaining vertices are renumbered
// preserving their original order. Rejects the last remaining vertex.
Graph delete_vertex(const Graph& g, int v);

// Induced subgraph on a nonempty vertex subset, order-preserving renumbering.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

// a followed by b, with b's vertices shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

struct GlueResult {
  Graph graph;               // h united with k
  VertexSet shared;          // the identified vertices, as result ids
  std::vector<int> k_to_result;  // k's vertices -> result ids
};

// Overlay k onto h: `identification` lists (k_vertex, h_vertex) pairs, both
// sides distinct. Unidentified k vertices are appended after h's in k order,
// and edge sets are merged.
GlueResult glue(const Graph& h, const Graph& k,
                const std::vector<std::pair<int, int>>& identification);

// Some vertex has at least two neighbors of degree exactly 1.
bool has_two_pendant_gadget(const Graph& g);

// Some edge joins two vertices of degree exactly 2.
bool has_adjacent_degree2_pair(const Graph& g);

// Vertices adjacent to every other vertex.
std::vector<int> universal_vertices(const Graph& g);

}  // namespace domg
