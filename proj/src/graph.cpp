#include "sedf/graph.hpp"

#include <algorithm>
#include <string>

#include "sedf/errors.hpp"

namespace sedf {

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
  if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_) return std::nullopt;
  Edge key{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(incident_[v].size());
  for (EdgeId e : incident_[v]) out.push_back(edges_[e].other(v));
  std::sort(out.begin(), out.end());
  return out;
}

int Graph::min_degree() const {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) {
    if (v == 0 || degree(v) < best) best = degree(v);
  }
  return best;
}

Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> raw_edges) {
  if (n < 0) throw GraphError("negative vertex count");
  Graph g;
  g.n_ = n;
  g.edges_.reserve(raw_edges.size());
  for (auto [a, b] : raw_edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw GraphError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                       ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a));
    g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  g.incident_.assign(n, {});
  for (EdgeId e = 0; e < g.size(); ++e) {
    g.incident_[g.edges_[e].u].push_back(e);
    g.incident_[g.edges_[e].v].push_back(e);
  }
  return g;
}

Graph build_graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> raw_edges) {
  return build_graph(n, std::span<const std::pair<Vertex, Vertex>>(raw_edges.begin(), raw_edges.size()));
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.min_degree = g.min_degree();
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) % 2 == 1) {
      p.odd_vertices.push_back(v);
    } else {
      p.even_vertices.push_back(v);
    }
  }
  p.v_odd = static_cast<int>(p.odd_vertices.size());
  p.v_even = static_cast<int>(p.even_vertices.size());
  return p;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<int> label(g.order(), -1);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[s] != -1) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    label[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (EdgeId e : g.incident(v)) {
        Vertex w = g.edge(e).other(v);
        if (label[w] == -1) {
          label[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

namespace {

// Hopcroft-Tarjan biconnected components over an explicit edge stack.
class BlockFinder {
 public:
  explicit BlockFinder(const Graph& g)
      : g_(g), disc_(g.order(), -1), low_(g.order(), 0), is_cut_(g.order(), false) {}

  void run(Vertex root) {
    int children = 0;
    disc_[root] = low_[root] = time_++;
    for (EdgeId e : g_.incident(root)) {
      Vertex w = g_.edge(e).other(root);
      if (disc_[w] != -1) continue;
      ++children;
      edge_stack_.push_back(e);
      visit(w, e);
      pop_block(e);
    }
    if (children > 1) is_cut_[root] = true;
  }

  std::vector<std::vector<EdgeId>> blocks;
  std::vector<bool> cut_flags() const { return is_cut_; }

 private:
  void visit(Vertex v, EdgeId parent_edge) {
    disc_[v] = low_[v] = time_++;
    for (EdgeId e : g_.incident(v)) {
      if (e == parent_edge) continue;
      Vertex w = g_.edge(e).other(v);
      if (disc_[w] == -1) {
        edge_stack_.push_back(e);
        visit(w, e);
        low_[v] = std::min(low_[v], low_[w]);
        if (low_[w] >= disc_[v]) {
          is_cut_[v] = true;
          pop_block(e);
        }
      } else if (disc_[w] < disc_[v]) {
        edge_stack_.push_back(e);
        low_[v] = std::min(low_[v], disc_[w]);
      }
    }
  }

  void pop_block(EdgeId until) {
    std::vector<EdgeId> block;
    while (!edge_stack_.empty()) {
      EdgeId e = edge_stack_.back();
      edge_stack_.pop_back();
      block.push_back(e);
      if (e == until) break;
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }

  const Graph& g_;
  std::vector<int> disc_;
  std::vector<int> low_;
  std::vector<bool> is_cut_;
  std::vector<EdgeId> edge_stack_;
  int time_ = 0;
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
  if (!is_connected(g)) {
    throw PreconditionError("block_decomposition needs a connected graph; split with components() first");
  }
  BlockDecomposition out;
  if (g.order() == 0) return out;
  if (g.size() == 0) {
    out.blocks.push_back({0});
    out.block_edges.push_back({});
    return out;
  }
  BlockFinder finder(g);
  finder.run(0);
  const std::vector<bool> cut = finder.cut_flags();

  std::vector<std::pair<std::vector<Vertex>, std::vector<EdgeId>>> blocks;
  for (auto& edges : finder.blocks) {
    std::vector<Vertex> verts;
    for (EdgeId e : edges) {
      verts.push_back(g.edge(e).u);
      verts.push_back(g.edge(e).v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    blocks.emplace_back(std::move(verts), edges);
  }
  std::sort(blocks.begin(), blocks.end());
  for (auto& [verts, edges] : blocks) {
    out.blocks.push_back(std::move(verts));
    out.block_edges.push_back(std::move(edges));
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (cut[v]) out.cut_vertices.push_back(v);
  }
  return out;
}

bool is_two_connected(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  return block_decomposition(g).cut_vertices.empty();
}

StructureProbe structure_probe(const Graph& g) {
  StructureProbe p;
  p.is_connected = is_connected(g);
  p.is_two_connected = p.is_connected && is_two_connected(g);
  bool all_even = true;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 2) p.degree_two_vertices.push_back(v);
    if (g.degree(v) % 2 != 0) all_even = false;
  }
  p.is_eulerian = p.is_connected && all_even;
  return p;
}

std::optional<CompleteBipartiteSides> recognize_complete_bipartite(const Graph& g) {
  if (g.order() < 2 || g.degree(0) == 0) return std::nullopt;
  // Vertex 0's side is everything not adjacent to it.
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
  for (Vertex v = 0; v < g.order(); ++v) {
    (v == 0 || !g.adjacent(0, v) ? side_a : side_b).push_back(v);
  }
  if (static_cast<long long>(side_a.size()) * static_cast<long long>(side_b.size()) != g.size()) {
    return std::nullopt;
  }
  for (Vertex a : side_a) {
    for (Vertex b : side_b) {
      if (!g.adjacent(a, b)) return std::nullopt;
    }
  }
  if (side_b.size() < side_a.size()) std::swap(side_a, side_b);
  return CompleteBipartiteSides{side_a, side_b};
}

std::optional<Vertex> Subgraph::local_vertex(Vertex parent) const {
  auto it = std::lower_bound(to_parent_vertex.begin(), to_parent_vertex.end(), parent);
  if (it == to_parent_vertex.end() || *it != parent) return std::nullopt;
  return static_cast<Vertex>(it - to_parent_vertex.begin());
}

Subgraph derive_subgraph(const Graph& g, std::span<const Vertex> kept_vertices,
                         std::span<const EdgeId> removed_edges,
                         std::span<const std::pair<Vertex, Vertex>> added_edges) {
  Subgraph sub;
  sub.to_parent_vertex.assign(kept_vertices.begin(), kept_vertices.end());
  std::sort(sub.to_parent_vertex.begin(), sub.to_parent_vertex.end());
  sub.to_parent_vertex.erase(std::unique(sub.to_parent_vertex.begin(), sub.to_parent_vertex.end()),
                             sub.to_parent_vertex.end());

  std::vector<bool> removed(g.size(), false);
  for (EdgeId e : removed_edges) removed.at(e) = true;

  std::vector<std::pair<Vertex, Vertex>> local_edges;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (removed[e]) continue;
    auto a = sub.local_vertex(g.edge(e).u);
    auto b = sub.local_vertex(g.edge(e).v);
    if (a && b) local_edges.emplace_back(*a, *b);
  }
  for (auto [pa, pb] : added_edges) {
    auto a = sub.local_vertex(pa);
    auto b = sub.local_vertex(pb);
    if (!a || !b) throw PreconditionError("added edge endpoint is not a kept vertex");
    local_edges.emplace_back(*a, *b);
  }
  sub.graph = build_graph(static_cast<int>(sub.to_parent_vertex.size()), local_edges);

  sub.to_parent_edge.resize(sub.graph.size());
  for (EdgeId e = 0; e < sub.graph.size(); ++e) {
    const Edge& le = sub.graph.edge(e);
    auto pe = g.find_edge(sub.to_parent_vertex[le.u], sub.to_parent_vertex[le.v]);
    if (pe && !removed[*pe]) sub.to_parent_edge[e] = pe;
  }
  return sub;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  return derive_subgraph(g, vertices, {});
}

Subgraph without_edges(const Graph& g, std::span<const EdgeId> removed) {
  std::vector<Vertex> all(g.order());
  for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
  return derive_subgraph(g, all, removed);
}

}  // namespace sedf
