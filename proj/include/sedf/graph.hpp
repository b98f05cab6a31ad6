#pragma once

#include <compare>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sedf {

using Vertex = int;
using EdgeId = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool touches(Vertex x) const { return x == u || x == v; }
  auto operator<=>(const Edge&) const = default;
};

/// Immutable simple undirected graph on vertices 0..order()-1.
///
/// Edges are stored as (u, v) with u < v in lexicographic order; an edge is
/// identified by its index in that list. Incident-edge lists are ascending.
class Graph {
 public:
  Graph() = default;

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const EdgeId> incident(Vertex v) const { return incident_[v]; }
  int degree(Vertex v) const { return static_cast<int>(incident_[v].size()); }

  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;
  bool adjacent(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }
  std::vector<Vertex> neighbors(Vertex v) const;
  int min_degree() const;

  bool operator==(const Graph&) const = default;

 private:
  friend Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> raw_edges);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

/// Canonicalizes `raw_edges` (orients u<v, sorts, drops duplicates).
/// Throws GraphError on self-loops or out-of-range endpoints.
Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> raw_edges);
Graph build_graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> raw_edges);

struct DegreeProfile {
  int v_odd = 0;
  int v_even = 0;
  std::vector<Vertex> odd_vertices;
  std::vector<Vertex> even_vertices;
  int min_degree = 0;
};

DegreeProfile degree_profile(const Graph& g);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);

struct BlockDecomposition {
  // Each block is a sorted vertex list; blocks are in lexicographic order.
  std::vector<std::vector<Vertex>> blocks;
  // block_edges[i] lists the edges of blocks[i], ascending.
  std::vector<std::vector<EdgeId>> block_edges;
  std::vector<Vertex> cut_vertices;
};

/// Biconnected components of a connected graph. Throws PreconditionError when
/// the graph is disconnected; split it with components() first. A single
/// isolated vertex yields one block without edges.
BlockDecomposition block_decomposition(const Graph& g);

struct StructureProbe {
  bool is_connected = false;
  bool is_two_connected = false;
  std::vector<Vertex> degree_two_vertices;
  bool is_eulerian = false;
};

StructureProbe structure_probe(const Graph& g);

struct CompleteBipartiteSides {
  std::vector<Vertex> small;  // the side with fewer vertices (ties: side of vertex 0)
  std::vector<Vertex> large;
};

/// Recognizes K_{a,b} with a, b >= 1 and no other vertices.
std::optional<CompleteBipartiteSides> recognize_complete_bipartite(const Graph& g);

bool is_connected(const Graph& g);
// At least three vertices, connected, and no cut vertex.
bool is_two_connected(const Graph& g);

/// A graph derived from a parent by keeping some vertices, deleting edges and
/// optionally adding new ones. Local vertex i corresponds to parent vertex
/// to_parent_vertex[i] (kept vertices stay in ascending order, so induced
/// subgraphs preserve the parent's edge order). Added edges map to nullopt.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent_vertex;
  std::vector<std::optional<EdgeId>> to_parent_edge;

  // Local id of a parent vertex, if kept.
  std::optional<Vertex> local_vertex(Vertex parent) const;
};

Subgraph derive_subgraph(const Graph& g, std::span<const Vertex> kept_vertices,
                         std::span<const EdgeId> removed_edges,
                         std::span<const std::pair<Vertex, Vertex>> added_edges = {});

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// Same vertex set, given edges deleted.
Subgraph without_edges(const Graph& g, std::span<const EdgeId> removed);

}  // namespace sedf
