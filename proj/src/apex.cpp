#include <algorithm>
#include <set>
#include <vector>

#include "construct_support.hpp"
#include "sedf/constructors.hpp"
#include "sedf/errors.hpp"

namespace sedf {

std::vector<EdgeId> minimal_negative_cover(const Graph& graph, const SignAssignment& g,
                                           std::span<const Vertex> targets) {
  const std::set<Vertex> wanted(targets.begin(), targets.end());
  std::set<Vertex> covered;
  std::vector<EdgeId> cover;

  for (Vertex v : wanted) {
    if (covered.contains(v)) continue;
    std::optional<EdgeId> pick;
    for (EdgeId e : graph.incident(v)) {
      if (g[e] != Sign::minus) continue;
      const Vertex other = graph.edge(e).other(v);
      // An edge covering two uncovered targets at once is preferred.
      if (wanted.contains(other) && !covered.contains(other)) {
        pick = e;
        break;
      }
      if (!pick) pick = e;
    }
    if (!pick) throw PreconditionError("vertex " + std::to_string(v) + " has no negative edge");
    cover.push_back(*pick);
    covered.insert(graph.edge(*pick).u);
    covered.insert(graph.edge(*pick).v);
  }

  // Drop edges whose targets are all covered by the rest.
  std::sort(cover.begin(), cover.end());
  for (std::size_t i = 0; i < cover.size();) {
    auto count_cover = [&](Vertex v) {
      int c = 0;
      for (EdgeId e : cover) c += graph.edge(e).touches(v) ? 1 : 0;
      return c;
    };
    const Edge& ed = graph.edge(cover[i]);
    const bool needed = (wanted.contains(ed.u) && count_cover(ed.u) == 1) ||
                        (wanted.contains(ed.v) && count_cover(ed.v) == 1);
    if (needed) {
      ++i;
    } else {
      cover.erase(cover.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  return cover;
}

ApexCandidates apex_pipeline(const Graph& g, const Capacity& cap) {
  const DegreeProfile profile = degree_profile(g);
  if (profile.v_odd == 0) throw PreconditionError("apex_pipeline needs an odd vertex");
  if (profile.min_degree < 3) throw PreconditionError("apex_pipeline needs minimum degree at least 3");

  const int n = g.order();
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
  for (Vertex u : profile.odd_vertices) edges.emplace_back(u, n);

  ApexDecoration d;
  d.apex = n;
  d.augmented = build_graph(n + 1, edges);
  d.g = even_sedf_zero_two(d.augmented, cap);
  d.g_weights = vertex_weights(d.augmented, d.g);
  d.apex_weight = d.g_weights[n];
  d.augmented_total = d.g.total();

  std::vector<Sign> restricted;
  restricted.reserve(g.size());
  for (const Edge& e : g.edges()) restricted.push_back(d.g[*d.augmented.find_edge(e.u, e.v)]);
  d.restricted = SignAssignment(std::move(restricted));
  d.original_total = d.restricted.total();

  for (Vertex u : profile.odd_vertices) {
    if (d.g[*d.augmented.find_edge(u, n)] == Sign::plus) {
      d.u1.push_back(u);
      (d.g_weights[u] == 2 ? d.a : d.b).push_back(u);
    } else {
      d.u2.push_back(u);
    }
  }
  for (Vertex v : profile.even_vertices) {
    if (d.g_weights[v] == 0) d.c.push_back(v);
  }

  std::vector<Vertex> ab = d.u1;
  std::vector<Vertex> bc;
  std::merge(d.b.begin(), d.b.end(), d.c.begin(), d.c.end(), std::back_inserter(bc));
  d.e1 = minimal_negative_cover(g, d.restricted, ab);
  d.e2 = minimal_negative_cover(g, d.restricted, bc);

  ApexCandidates out{d, flip_edges(d.restricted, d.e1), flip_edges(d.restricted, d.e2)};
  return out;
}

Certificate odd_bound_sedf(const Graph& g, const Capacity& cap) {
  const DegreeProfile profile = degree_profile(g);
  const int bound = g.order() + profile.v_odd / 2;
  const detail::PieceSolver piece = [&cap](const Graph& h) { return odd_bound_sedf(h, cap); };

  if (g.size() == 0) return detail::wrap(g, SignAssignment::all_plus(g), "odd-bound/empty", bound);
  if (!is_connected(g)) return detail::by_components(g, piece, "odd-bound/components", bound, cap);
  if (g.order() <= 3) return detail::small_case(g, "odd-bound/small", bound, cap);
  if (!is_two_connected(g)) return detail::by_blocks(g, piece, "odd-bound/blocks", bound, cap);

  if (profile.min_degree == 2) {
    Vertex v0 = 0;
    while (g.degree(v0) != 2) ++v0;
    const auto nb = g.neighbors(v0);
    if (g.adjacent(nb[0], nb[1])) {
      const Subgraph reduced = chord_reduction(g, v0);
      const Certificate inner = odd_bound_sedf(reduced.graph, cap);
      return detail::finalize(g, lift_deg2_chord(g, v0, inner.f), "odd-bound/lift-chord", bound, cap);
    }
    const Subgraph reduced = nochord_reduction(g, v0);
    const Certificate inner = odd_bound_sedf(reduced.graph, cap);
    return detail::finalize(g, lift_deg2_nochord(g, v0, inner.f), "odd-bound/lift-nochord", bound, cap);
  }

  if (profile.v_odd == 0) {
    return detail::finalize(g, even_sedf_zero_two(g, cap), "odd-bound/even-zero-two", bound, cap);
  }

  const ApexCandidates candidates = apex_pipeline(g, cap);
  if (candidates.flip_e2.total() <= candidates.flip_e1.total()) {
    return detail::finalize(g, candidates.flip_e2, "odd-bound/apex-cover-zero", bound, cap);
  }
  return detail::finalize(g, candidates.flip_e1, "odd-bound/apex-cover-positive", bound, cap);
}

}  // namespace sedf
