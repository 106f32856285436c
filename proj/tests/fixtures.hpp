#pragma once

#include "domg/graph.hpp"

namespace fixtures {

inline domg::Graph path(int n) {
  domg::Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline domg::Graph cycle(int n) {
  domg::Graph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

inline domg::Graph complete(int n) {
  domg::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline domg::Graph star(int leaves) {
  domg::Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

}  // namespace fixtures
