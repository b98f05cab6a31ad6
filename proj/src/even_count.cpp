#include <algorithm>
#include <vector>

#include "construct_support.hpp"
#include "sedf/constructors.hpp"
#include "sedf/errors.hpp"

namespace sedf {

namespace {

// Pieces met while splitting: anything with an even vertex recurses, all-odd
// pieces use the all-odd contract.
Certificate even_count_piece(const Graph& h, const Capacity& cap) {
  if (degree_profile(h).v_even > 0) return even_count_sedf(h, cap);
  return detail::wrap(h, all_odd_sedf(h, cap), "all-odd/search", h.order() - 1);
}

bool is_independent(const Graph& g, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (g.adjacent(vs[i], vs[j])) return false;
    }
  }
  return true;
}

// Even vertices form an independent set; w1 is an even vertex of least degree.
Certificate independent_even(const Graph& g, const DegreeProfile& profile, int bound, const Capacity& cap) {
  const std::vector<Vertex>& w = profile.even_vertices;
  const Vertex w1 = *std::min_element(w.begin(), w.end(),
                                      [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  std::vector<Vertex> others;
  for (Vertex v : w) {
    if (v != w1) others.push_back(v);
  }
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v != w1) kept.push_back(v);
  }
  const Subgraph rest = induced_subgraph(g, kept);
  const DegreeProfile rest_profile = degree_profile(rest.graph);
  const auto nb = g.neighbors(w1);

  detail::Builder b(g);
  if (rest_profile.v_odd >= 2) {
    PartialAssignment p;
    for (const Trail& t : trail_decomposition(rest.graph).trails) {
      p.merge(t.closed() ? alternating_circuit(t) : alternating_flip_last(t));
    }
    b.set_from(rest, p);
    b.set_incident(w1, Sign::plus);
    b.repair_zero_weights(others);
    return detail::finalize(g, b.finish(), "even-count/trails", bound, cap);
  }

  if (nb.size() >= 4) {
    const Vertex u1 = nb.front();
    const Trail circuit = euler_circuit(rest.graph, *rest.local_vertex(u1));
    b.set_from(rest, alternating_circuit(circuit));
    b.set_incident(w1, Sign::plus);
    const bool odd = rest.graph.size() % 2 == 1;
    if (odd) b.set(*g.find_edge(w1, u1), Sign::minus);
    b.repair_zero_weights(others);
    return detail::finalize(g, b.finish(), odd ? "even-count/eulerian-odd" : "even-count/eulerian-even", bound,
                            cap);
  }

  // w1 has degree 2 and everything else is even: G is K_{2,n-2}, possibly
  // with the edge between the two neighbours of w1.
  const auto chord = g.find_edge(nb[0], nb[1]);
  std::vector<EdgeId> removed;
  if (chord) removed.push_back(*chord);
  const Subgraph bipartite = without_edges(g, removed);
  const auto sides = recognize_complete_bipartite(bipartite.graph);
  if (!sides) return detail::finalize(g, std::nullopt, "even-count/kmn-delegate", bound, cap);
  return detail::finalize(g, detail::kmn_on_graph(g, *sides, cap), "even-count/kmn-delegate", bound, cap);
}

}  // namespace

NeighborhoodSplit neighborhood_split(const Graph& g, Vertex w1, Vertex w2) {
  NeighborhoodSplit s;
  s.w1 = w1;
  s.w2 = w2;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v == w1 || v == w2) continue;
    const bool a1 = g.adjacent(v, w1);
    const bool a2 = g.adjacent(v, w2);
    (a1 && a2 ? s.n0 : a1 ? s.n1 : a2 ? s.n2 : s.n3).push_back(v);
  }
  return s;
}

Certificate even_count_sedf(const Graph& g, const Capacity& cap) {
  const DegreeProfile profile = degree_profile(g);
  if (profile.v_even == 0) throw PreconditionError("even_count_sedf needs an even vertex");
  const int bound = g.order() - 2 + profile.v_even;
  const detail::PieceSolver piece = [&cap](const Graph& h) { return even_count_piece(h, cap); };

  if (g.size() == 0) return detail::wrap(g, SignAssignment::all_plus(g), "even-count/empty", bound);
  if (!is_connected(g)) return detail::by_components(g, piece, "even-count/components", bound, cap);
  if (g.order() <= 3) return detail::small_case(g, "even-count/small", bound, cap);
  if (!is_two_connected(g)) return detail::by_blocks(g, piece, "even-count/blocks", bound, cap);

  if (is_independent(g, profile.even_vertices)) return independent_even(g, profile, bound, cap);

  // Greedy maximal matching among the even vertices, in edge order.
  std::vector<bool> matched(g.order(), false);
  std::vector<bool> even(g.order(), false);
  for (Vertex v : profile.even_vertices) even[v] = true;
  std::vector<EdgeId> matching;
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    if (even[ed.u] && even[ed.v] && !matched[ed.u] && !matched[ed.v]) {
      matched[ed.u] = matched[ed.v] = true;
      matching.push_back(e);
    }
  }
  const Subgraph rest = without_edges(g, matching);
  const bool perfect = 2 * static_cast<int>(matching.size()) == profile.v_even;

  detail::Builder b(g);
  for (EdgeId e : matching) b.set(e, Sign::plus);
  if (perfect) {
    b.set_from(rest, all_odd_sedf(rest.graph, cap));
    return detail::finalize(g, b.finish(), "even-count/matching-all-odd", bound, cap);
  }
  b.set_from(rest, even_count_sedf(rest.graph, cap).f);
  return detail::finalize(g, b.finish(), "even-count/matching-recurse", bound, cap);
}

}  // namespace sedf
