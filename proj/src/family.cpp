#include "sedf/family.hpp"

#include <algorithm>
#include <set>

#include "sedf/errors.hpp"

namespace sedf {

TriangulationFamilyInstance triangulate_family(const Graph& g, const std::vector<Vertex>& cycle) {
  const int n = g.order();
  if (n < 3 || static_cast<int>(cycle.size()) != n) throw PreconditionError("cycle must visit every vertex once");
  std::vector<bool> seen(n, false);
  for (Vertex v : cycle) {
    if (v < 0 || v >= n || seen[v]) throw PreconditionError("cycle must visit every vertex once");
    seen[v] = true;
  }
  std::set<EdgeId> on_cycle;
  for (int i = 0; i < n; ++i) {
    const auto e = g.find_edge(cycle[i], cycle[(i + 1) % n]);
    if (!e) {
      throw PreconditionError("cycle step " + std::to_string(cycle[i]) + "-" + std::to_string(cycle[(i + 1) % n]) +
                              " is not an edge");
    }
    on_cycle.insert(*e);
  }
  if (g.min_degree() < 3) throw PreconditionError("minimum degree must be at least 3");

  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::pair<Vertex, Vertex>> fresh;
  Vertex next = n;
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    edges.emplace_back(ed.u, ed.v);
    if (on_cycle.contains(e)) continue;
    fresh.emplace_back(ed.u, next);
    fresh.emplace_back(ed.v, next);
    ++next;
  }
  edges.insert(edges.end(), fresh.begin(), fresh.end());

  TriangulationFamilyInstance out;
  out.base = g;
  out.cycle = cycle;
  out.derived = build_graph(next, edges);
  std::vector<Sign> signs(out.derived.size());
  for (EdgeId e = 0; e < out.derived.size(); ++e) {
    signs[e] = out.derived.edge(e).v < n ? Sign::plus : Sign::minus;
  }
  out.f = SignAssignment(std::move(signs));
  return out;
}

namespace {

bool extend(const Graph& g, std::vector<Vertex>& path, std::vector<bool>& used) {
  if (static_cast<int>(path.size()) == g.order()) return g.adjacent(path.back(), path.front());
  for (Vertex v : g.neighbors(path.back())) {
    if (used[v]) continue;
    used[v] = true;
    path.push_back(v);
    if (extend(g, path, used)) return true;
    path.pop_back();
    used[v] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Vertex>> find_hamiltonian_cycle(const Graph& g) {
  if (g.order() < 3) return std::nullopt;
  std::vector<Vertex> path = {0};
  std::vector<bool> used(g.order(), false);
  used[0] = true;
  if (extend(g, path, used)) return path;
  return std::nullopt;
}

}  // namespace sedf
