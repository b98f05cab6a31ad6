#include "sedf/assignment.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "sedf/errors.hpp"

namespace sedf {

SignAssignment SignAssignment::from_partial(const Graph& g, const PartialAssignment& p) {
  std::vector<Sign> signs(g.size(), Sign::plus);
  for (EdgeId e = 0; e < g.size(); ++e) {
    auto s = p.at(e);
    if (!s) throw PreconditionError("partial assignment leaves edge " + std::to_string(e) + " unsigned");
    signs[e] = *s;
  }
  if (p.size() != g.size()) throw PreconditionError("partial assignment has edges outside the graph");
  return SignAssignment(std::move(signs));
}

int SignAssignment::total() const {
  int t = 0;
  for (Sign s : signs_) t += value(s);
  return t;
}

namespace {

void require_matching(const Graph& g, const SignAssignment& f) {
  if (f.size() != g.size()) {
    throw PreconditionError("assignment has " + std::to_string(f.size()) + " signs for " +
                            std::to_string(g.size()) + " edges");
  }
}

}  // namespace

std::vector<int> vertex_weights(const Graph& g, const SignAssignment& f) {
  require_matching(g, f);
  std::vector<int> w(g.order(), 0);
  for (EdgeId e = 0; e < g.size(); ++e) {
    w[g.edge(e).u] += value(f[e]);
    w[g.edge(e).v] += value(f[e]);
  }
  return w;
}

WeightReport weights(const Graph& g, const SignAssignment& f) {
  WeightReport r;
  r.vertex_weights = vertex_weights(g, f);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (r.vertex_weights[v] == 0) r.zero_set.push_back(v);
  }
  r.total = f.total();
  return r;
}

int closed_neighborhood_sum(const Graph& g, const SignAssignment& f, EdgeId e) {
  require_matching(g, f);
  auto weight = [&](Vertex v) {
    int w = 0;
    for (EdgeId x : g.incident(v)) w += value(f[x]);
    return w;
  };
  return weight(g.edge(e).u) + weight(g.edge(e).v) - value(f[e]);
}

int direct_neighborhood_sum(const Graph& g, const SignAssignment& f, EdgeId e) {
  require_matching(g, f);
  const Edge& uv = g.edge(e);
  std::vector<EdgeId> closed(g.incident(uv.u).begin(), g.incident(uv.u).end());
  closed.insert(closed.end(), g.incident(uv.v).begin(), g.incident(uv.v).end());
  std::sort(closed.begin(), closed.end());
  closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
  int sum = 0;
  for (EdgeId x : closed) sum += value(f[x]);
  return sum;
}

std::string to_string(Rule r) {
  switch (r) {
    case Rule::neighborhood_sum:
      return "neighborhood-sum";
    case Rule::vertex_weight:
      return "vertex-weight";
    case Rule::positive_edge:
      return "positive-edge";
  }
  return "unknown";
}

VerificationVerdict verify(const Graph& g, const SignAssignment& f) {
  const std::vector<int> w = vertex_weights(g, f);
  VerificationVerdict verdict;
  bool sedf = true;
  bool sedf0 = true;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (w[v] < 0) {
      sedf0 = false;
      verdict.violations.push_back({false, v, Rule::vertex_weight, w[v]});
    }
  }
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Edge& uv = g.edge(e);
    const int shortcut = w[uv.u] + w[uv.v] - value(f[e]);
    assert(shortcut == direct_neighborhood_sum(g, f, e));
    if (shortcut < 1) {
      sedf = false;
      verdict.violations.push_back({true, e, Rule::neighborhood_sum, shortcut});
    }
    if (f[e] == Sign::plus && w[uv.u] + w[uv.v] < 2) {
      sedf0 = false;
      verdict.violations.push_back({true, e, Rule::positive_edge, w[uv.u] + w[uv.v]});
    }
  }
  verdict.is_sedf = sedf;
  verdict.is_sedf0 = sedf0;
  return verdict;
}

bool is_sedf(const Graph& g, const SignAssignment& f) { return verify(g, f).is_sedf; }
bool is_sedf0(const Graph& g, const SignAssignment& f) { return verify(g, f).is_sedf0; }

SignAssignment glue(const Graph& g, const Subgraph& part1, const SignAssignment& f1, const Subgraph& part2,
                    const SignAssignment& f2) {
  std::vector<Vertex> shared;
  std::set_intersection(part1.to_parent_vertex.begin(), part1.to_parent_vertex.end(),
                        part2.to_parent_vertex.begin(), part2.to_parent_vertex.end(), std::back_inserter(shared));
  if (shared.size() != 1) {
    throw PreconditionError("glue: parts must share exactly one vertex, they share " +
                            std::to_string(shared.size()));
  }
  if (static_cast<int>(part1.to_parent_vertex.size() + part2.to_parent_vertex.size()) != g.order() + 1) {
    throw PreconditionError("glue: parts do not cover the vertex set");
  }
  if (!is_sedf0(part1.graph, f1) || !is_sedf0(part2.graph, f2)) {
    throw PreconditionError("glue: both parts must carry SEDF0 assignments");
  }
  std::vector<int> owner(g.size(), 0);
  auto claim = [&](const Subgraph& part, const SignAssignment& f, std::vector<Sign>& out) {
    for (EdgeId e = 0; e < part.graph.size(); ++e) {
      auto pe = part.to_parent_edge[e];
      if (!pe) throw PreconditionError("glue: part has an edge that is not in the graph");
      ++owner[*pe];
      out[*pe] = f[e];
    }
  };
  std::vector<Sign> signs(g.size(), Sign::plus);
  claim(part1, f1, signs);
  claim(part2, f2, signs);
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (owner[e] != 1) {
      throw PreconditionError("glue: edge " + std::to_string(e) + " is not covered by exactly one part");
    }
  }
  return SignAssignment(std::move(signs));
}

namespace {

struct DegreeTwo {
  Vertex u1;
  Vertex u2;
};

DegreeTwo degree_two_neighbors(const Graph& g, Vertex v0) {
  if (v0 < 0 || v0 >= g.order() || g.degree(v0) != 2) {
    throw PreconditionError("vertex " + std::to_string(v0) + " does not have degree 2");
  }
  auto nb = g.neighbors(v0);
  return {nb[0], nb[1]};
}

std::vector<Vertex> all_but(const Graph& g, Vertex skip) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v != skip) out.push_back(v);
  }
  return out;
}

}  // namespace

Subgraph chord_reduction(const Graph& g, Vertex v0) {
  auto [u1, u2] = degree_two_neighbors(g, v0);
  auto chord = g.find_edge(u1, u2);
  if (!chord) throw PreconditionError("chord reduction needs the neighbours of v0 to be adjacent");
  const std::vector<EdgeId> removed{*chord};
  return derive_subgraph(g, all_but(g, v0), removed);
}

Subgraph nochord_reduction(const Graph& g, Vertex v0) {
  auto [u1, u2] = degree_two_neighbors(g, v0);
  if (g.adjacent(u1, u2)) throw PreconditionError("nochord reduction needs the neighbours of v0 to be non-adjacent");
  const std::vector<std::pair<Vertex, Vertex>> added{{u1, u2}};
  return derive_subgraph(g, all_but(g, v0), {}, added);
}

SignAssignment lift_deg2_chord(const Graph& g, Vertex v0, const SignAssignment& reduced) {
  auto [u1, u2] = degree_two_neighbors(g, v0);
  const Subgraph sub = chord_reduction(g, v0);
  if (!is_sedf0(sub.graph, reduced)) throw PreconditionError("lift: reduced assignment is not SEDF0");
  std::vector<Sign> signs(g.size(), Sign::plus);
  for (EdgeId e = 0; e < sub.graph.size(); ++e) signs[*sub.to_parent_edge[e]] = reduced[e];
  signs[*g.find_edge(v0, u1)] = Sign::plus;
  signs[*g.find_edge(v0, u2)] = Sign::plus;
  signs[*g.find_edge(u1, u2)] = Sign::minus;
  return SignAssignment(std::move(signs));
}

SignAssignment lift_deg2_nochord(const Graph& g, Vertex v0, const SignAssignment& reduced) {
  auto [u1, u2] = degree_two_neighbors(g, v0);
  const Subgraph sub = nochord_reduction(g, v0);
  if (!is_sedf0(sub.graph, reduced)) throw PreconditionError("lift: reduced assignment is not SEDF0");
  std::vector<Sign> signs(g.size(), Sign::plus);
  Sign added = Sign::plus;
  for (EdgeId e = 0; e < sub.graph.size(); ++e) {
    if (sub.to_parent_edge[e]) {
      signs[*sub.to_parent_edge[e]] = reduced[e];
    } else {
      added = reduced[e];
    }
  }
  signs[*g.find_edge(u1, v0)] = Sign::plus;
  signs[*g.find_edge(u2, v0)] = added;
  return SignAssignment(std::move(signs));
}

SignAssignment flip_edges(const SignAssignment& f, std::span<const EdgeId> edges) {
  SignAssignment out = f;
  for (EdgeId e : edges) out.set(e, negate(out[e]));
  return out;
}

}  // namespace sedf
