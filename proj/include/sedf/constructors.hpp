#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sedf/assignment.hpp"
#include "sedf/exact.hpp"
#include "sedf/graph.hpp"

namespace sedf {

inline constexpr int kDefaultContractCapacity = 24;

/// Edge limits for the search-backed routines.
struct Capacity {
  int contract_edges = kDefaultContractCapacity;  // even_sedf_zero_two, all_odd_sedf, kmn_sedf
  int exact_edges = kDefaultExactCapacity;        // fallback and small cases

  // Defaults, with both limits replaced by $SEDF_CAPACITY when it is set.
  static Capacity from_environment();
  static Capacity uniform(int edges) { return {edges, edges}; }
};

struct Certificate {
  Graph graph;
  SignAssignment f;
  int total = 0;
  std::string method;
  int claimed_bound = 0;
  VerificationVerdict verdict;
};

Certificate make_certificate(Graph g, SignAssignment f, std::string method, int claimed_bound);

/// Number of times a constructor's own output failed verification or its
/// bound and was replaced by the exact SEDF0 minimum. Process-wide.
std::uint64_t fallback_events();

/// SEDF0 of an all-even graph with every vertex weight in {0, 2} and a
/// weight-0 vertex in each component that has edges. Backtracking search.
SignAssignment even_sedf_zero_two(const Graph& g, const Capacity& cap = {});

/// SEDF0 of a graph whose vertices all have odd degree, with total at most
/// n - 1 (at most n_i - 1 per component). Backtracking search.
SignAssignment all_odd_sedf(const Graph& g, const Capacity& cap = {});

/// Inclusion-minimal set of edges with sign -1 under `g` touching every vertex
/// of `targets`. Throws PreconditionError if some target has no such edge.
std::vector<EdgeId> minimal_negative_cover(const Graph& graph, const SignAssignment& g,
                                           std::span<const Vertex> targets);

/// State of the apex construction for a graph with odd vertices and minimum
/// degree at least 3: an apex joined to every odd vertex makes the graph
/// all-even, and an {0,2}-weighted SEDF0 of it is repaired back onto G.
struct ApexDecoration {
  Vertex apex = 0;  // = n
  Graph augmented;
  SignAssignment g;  // on `augmented`
  std::vector<int> g_weights;  // on `augmented`
  int apex_weight = 0;
  int augmented_total = 0;   // g(G')
  int original_total = 0;    // g restricted to E(G)
  std::vector<Vertex> u1;    // odd vertices with a +1 apex edge
  std::vector<Vertex> u2;
  std::vector<Vertex> a;     // u1 vertices of weight 2
  std::vector<Vertex> b;     // u1 vertices of weight 0
  std::vector<Vertex> c;     // even vertices of weight 0
  std::vector<EdgeId> e1;    // negative cover of a ∪ b, ids in G
  std::vector<EdgeId> e2;    // negative cover of b ∪ c, ids in G
  SignAssignment restricted;  // g on E(G)
};

struct ApexCandidates {
  ApexDecoration decoration;
  SignAssignment flip_e1;  // total <= n + 2|A| + |B| - |C| - g(w)/2
  SignAssignment flip_e2;  // total <= n + |B| + |C| - g(w)/2
};

ApexCandidates apex_pipeline(const Graph& g, const Capacity& cap = {});

/// SEDF0 with total at most n + v_odd/2.
Certificate odd_bound_sedf(const Graph& g, const Capacity& cap = {});

/// Signed edge domination number of K_{m,n}, 1 <= m <= n.
int kmn_value(int m, int n);

/// Optimal assignment on K_{m,n} (small side = vertices 0..m-1). SEDF0 when m
/// is even; otherwise SEDF0 only if an SEDF0 reaches the optimum.
Certificate kmn_sedf(int m, int n, const Capacity& cap = {});

struct NeighborhoodSplit {
  Vertex w1 = 0;
  Vertex w2 = 0;
  std::vector<Vertex> n0;  // common neighbours
  std::vector<Vertex> n1;  // only adjacent to w1
  std::vector<Vertex> n2;  // only adjacent to w2
  std::vector<Vertex> n3;  // adjacent to neither
};

NeighborhoodSplit neighborhood_split(const Graph& g, Vertex w1, Vertex w2);

/// SEDF0 with total at most n - 2 + v_even, for graphs with an even vertex.
Certificate even_count_sedf(const Graph& g, const Capacity& cap = {});

/// SEDF0 with total at most n - 1, for graphs with exactly two even vertices.
Certificate two_even_sedf(const Graph& g, const Capacity& cap = {});

enum class Method { best, odd_bound, even_count, two_even, kmn, all_odd, even_zero_two };

std::optional<Method> parse_method(const std::string& name);
std::string to_string(Method m);

/// Runs one constructor and wraps its output in a certificate.
Certificate construct(const Graph& g, Method method, const Capacity& cap = {});

/// Runs every applicable constructor and keeps the smallest total. Ties go to
/// two-even, even-count, all-odd, odd-bound, even-zero-two, kmn in that order.
Certificate construct_best(const Graph& g, const Capacity& cap = {});

}  // namespace sedf
