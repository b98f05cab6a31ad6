#include "sedf/decomp.hpp"

#include <algorithm>
#include <string>

#include "sedf/errors.hpp"

namespace sedf {

std::optional<Sign> PartialAssignment::at(EdgeId e) const {
  auto it = signs_.find(e);
  if (it == signs_.end()) return std::nullopt;
  return it->second;
}

int PartialAssignment::sum() const {
  int s = 0;
  for (const auto& [e, sign] : signs_) s += value(sign);
  return s;
}

void PartialAssignment::merge(const PartialAssignment& other) {
  for (const auto& [e, sign] : other.signs_) {
    if (signs_.contains(e)) {
      throw PreconditionError("partial assignments overlap on edge " + std::to_string(e));
    }
  }
  signs_.insert(other.signs_.begin(), other.signs_.end());
}

std::vector<int> PartialAssignment::along(const Trail& t) const {
  std::vector<int> out;
  for (EdgeId e : t.edges) out.push_back(value(at(e).value()));
  return out;
}

namespace {

struct MultiEdge {
  Vertex u;
  Vertex v;
};

// Hierholzer over a multigraph given as an edge list. Returns the circuit as
// a sequence of edge indices starting at `start`, and the visited vertices.
std::pair<std::vector<int>, std::vector<Vertex>> hierholzer(int n, const std::vector<MultiEdge>& edges,
                                                            Vertex start) {
  std::vector<std::vector<int>> adj(n);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    adj[edges[e].u].push_back(e);
    adj[edges[e].v].push_back(e);
  }
  std::vector<bool> used(edges.size(), false);
  std::vector<std::size_t> next(n, 0);

  // Stack of (vertex, edge used to arrive); -1 for the start.
  std::vector<std::pair<Vertex, int>> stack{{start, -1}};
  std::vector<int> circuit_edges;
  std::vector<Vertex> circuit_vertices;
  while (!stack.empty()) {
    auto [v, via] = stack.back();
    auto& i = next[v];
    while (i < adj[v].size() && used[adj[v][i]]) ++i;
    if (i == adj[v].size()) {
      circuit_vertices.push_back(v);
      if (via >= 0) circuit_edges.push_back(via);
      stack.pop_back();
    } else {
      int e = adj[v][i];
      used[e] = true;
      Vertex w = edges[e].u == v ? edges[e].v : edges[e].u;
      stack.emplace_back(w, e);
    }
  }
  std::reverse(circuit_edges.begin(), circuit_edges.end());
  std::reverse(circuit_vertices.begin(), circuit_vertices.end());
  return {circuit_edges, circuit_vertices};
}

}  // namespace

TrailDecomposition trail_decomposition(const Graph& g) {
  TrailDecomposition out;
  for (const auto& comp : components(g)) {
    std::vector<Vertex> odd;
    bool has_edges = false;
    for (Vertex v : comp) {
      if (g.degree(v) % 2 == 1) odd.push_back(v);
      has_edges = has_edges || g.degree(v) > 0;
    }
    if (!has_edges) continue;

    // Component edges first, then one virtual edge per pair of odd vertices.
    std::vector<MultiEdge> edges;
    std::vector<EdgeId> real_ids;
    for (EdgeId e = 0; e < g.size(); ++e) {
      if (std::binary_search(comp.begin(), comp.end(), g.edge(e).u)) {
        edges.push_back({g.edge(e).u, g.edge(e).v});
        real_ids.push_back(e);
      }
    }
    const int real_count = static_cast<int>(edges.size());
    for (std::size_t i = 0; i + 1 < odd.size(); i += 2) edges.push_back({odd[i], odd[i + 1]});

    auto [circ_edges, circ_vertices] = hierholzer(g.order(), edges, comp.front());

    if (odd.empty()) {
      Trail t;
      t.vertices = circ_vertices;
      for (int e : circ_edges) t.edges.push_back(real_ids[e]);
      out.trails.push_back(std::move(t));
      continue;
    }

    // Rotate so the circuit begins right after a virtual edge, then cut at
    // every virtual edge.
    const int len = static_cast<int>(circ_edges.size());
    int first_virtual = 0;
    while (circ_edges[first_virtual] < real_count) ++first_virtual;
    Trail current;
    for (int step = 1; step <= len; ++step) {
      const int pos = (first_virtual + step) % len;
      const int e = circ_edges[pos];
      if (e >= real_count) {
        out.trails.push_back(std::move(current));
        current = Trail{};
        continue;
      }
      if (current.vertices.empty()) current.vertices.push_back(circ_vertices[pos]);
      current.edges.push_back(real_ids[e]);
      current.vertices.push_back(circ_vertices[pos + 1]);
    }
  }
  return out;
}

Trail euler_circuit(const Graph& g, Vertex start) {
  if (start < 0 || start >= g.order()) throw PreconditionError("start vertex out of range");
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) % 2 == 1) {
      throw PreconditionError("no Eulerian circuit: vertex " + std::to_string(v) + " has odd degree");
    }
  }
  std::vector<MultiEdge> edges;
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  auto [circ_edges, circ_vertices] = hierholzer(g.order(), edges, start);
  if (static_cast<int>(circ_edges.size()) != g.size()) {
    throw PreconditionError("no Eulerian circuit: some edges lie outside the component of vertex " +
                            std::to_string(start));
  }
  Trail t;
  t.vertices = std::move(circ_vertices);
  t.edges.assign(circ_edges.begin(), circ_edges.end());
  return t;
}

std::vector<int> good_positions(const Trail& t) {
  if (t.closed()) throw PreconditionError("good positions are defined on open trails only");
  if (t.length() % 2 != 0 || t.length() < 2) {
    throw PreconditionError("good positions need an even trail length, got " + std::to_string(t.length()));
  }
  std::vector<int> out;
  for (int j = 1; j < t.length(); j += 2) out.push_back(j);
  return out;
}

namespace {

void alternate(const Trail& t, int from, int to, PartialAssignment& out) {
  for (int i = from; i < to; ++i) out.assign(t.edges[i], (i - from) % 2 == 0 ? Sign::plus : Sign::minus);
}

}  // namespace

PartialAssignment proper_assignment(const Trail& t) {
  if (t.closed()) throw PreconditionError("proper assignment needs an open trail");
  if (t.length() % 2 == 0) {
    throw PreconditionError("proper assignment needs odd length; use proper_assignment_at for even trails");
  }
  PartialAssignment out;
  alternate(t, 0, t.length(), out);
  return out;
}

PartialAssignment proper_assignment_at(const Trail& t, int position) {
  auto good = good_positions(t);
  if (!std::binary_search(good.begin(), good.end(), position)) {
    throw PreconditionError("position " + std::to_string(position) + " is not a good position");
  }
  PartialAssignment out;
  alternate(t, 0, position, out);
  alternate(t, position, t.length(), out);
  return out;
}

PartialAssignment alternating_flip_last(const Trail& t) {
  if (t.closed()) throw PreconditionError("alternating_flip_last needs an open trail");
  PartialAssignment out;
  alternate(t, 0, t.length(), out);
  if (t.length() % 2 == 0 && t.length() > 0) out.assign(t.edges.back(), Sign::plus);
  return out;
}

PartialAssignment alternating_circuit(const Trail& t) {
  if (!t.closed()) throw PreconditionError("alternating_circuit needs a closed trail");
  PartialAssignment out;
  alternate(t, 0, t.length(), out);
  return out;
}

std::vector<int> trail_weights(const Trail& t, const PartialAssignment& p, int order) {
  std::vector<int> w(order, 0);
  for (int i = 0; i < t.length(); ++i) {
    const int s = value(p.at(t.edges[i]).value());
    w[t.vertices[i]] += s;
    w[t.vertices[i + 1]] += s;
  }
  return w;
}

}  // namespace sedf
