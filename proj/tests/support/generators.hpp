#pragma once

// Hand-rolled random generators for property tests. Seeds are fixed so
// failures reproduce.

#include <algorithm>
#include <random>
#include <vector>

#include "sedf/assignment.hpp"
#include "sedf/graph.hpp"

namespace sedf::testing {

using Rng = std::mt19937_64;

inline Graph random_graph(Rng& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return build_graph(n, e);
}

// A random spanning tree plus extra edges with probability p.
inline Graph random_connected_graph(Rng& rng, int n, double p) {
  std::vector<std::pair<Vertex, Vertex>> e;
  std::vector<Vertex> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    e.emplace_back(order[pick(rng)], order[i]);
  }
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return build_graph(n, e);
}

// A random Hamiltonian cycle plus chords, hence 2-connected.
inline Graph random_two_connected_graph(Rng& rng, int n, double p) {
  std::vector<Vertex> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(order[i], order[(i + 1) % n]);
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return build_graph(n, e);
}

inline SignAssignment random_assignment(Rng& rng, const Graph& g, double p_minus = 0.5) {
  std::bernoulli_distribution coin(p_minus);
  std::vector<Sign> s(g.size());
  for (auto& x : s) x = coin(rng) ? Sign::minus : Sign::plus;
  return SignAssignment(std::move(s));
}

inline std::vector<int> to_ints(const SignAssignment& f) {
  std::vector<int> out;
  for (Sign s : f.signs()) out.push_back(value(s));
  return out;
}

}  // namespace sedf::testing
