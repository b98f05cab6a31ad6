#pragma once

// Small graphs built directly from edge lists, independent of any library
// recognizer.

#include <vector>

#include "sedf/graph.hpp"

namespace sedf::testing {

inline Graph complete(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return build_graph(n, e);
}

inline Graph cycle(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return build_graph(n, e);
}

inline Graph path(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return build_graph(n, e);
}

// Sides 0..a-1 and a..a+b-1.
inline Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return build_graph(a + b, e);
}

// Triangle 0-1-2 with pendant 3 on vertex 0.
inline Graph paw() { return build_graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}); }

// K4 without edge 2-3.
inline Graph k4_minus_edge() { return build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

// Triangles 0-1-2 and 0-3-4 sharing vertex 0.
inline Graph bowtie() { return build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

inline Graph petersen() {
  return build_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                          {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (const Edge& x : a.edges()) e.emplace_back(x.u, x.v);
  for (const Edge& x : b.edges()) e.emplace_back(a.order() + x.u, a.order() + x.v);
  return build_graph(a.order() + b.order(), e);
}

}  // namespace sedf::testing
