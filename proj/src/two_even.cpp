#include <algorithm>
#include <optional>
#include <vector>

#include "construct_support.hpp"
#include "sedf/constructors.hpp"
#include "sedf/errors.hpp"

namespace sedf {

namespace {

// Components have at most two even vertices and each stays within n_i - 1.
Certificate two_even_piece(const Graph& h, const Capacity& cap) {
  const int v_even = degree_profile(h).v_even;
  if (v_even == 2) return two_even_sedf(h, cap);
  if (v_even == 1) return even_count_sedf(h, cap);
  return detail::wrap(h, all_odd_sedf(h, cap), "all-odd/search", h.order() - 1);
}

struct TrailSplit {
  Subgraph sub;
  TrailDecomposition d;
};

TrailSplit remove_vertex(const Graph& g, Vertex w) {
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v != w) kept.push_back(v);
  }
  Subgraph sub = induced_subgraph(g, kept);
  TrailDecomposition d = trail_decomposition(sub.graph);
  return {std::move(sub), std::move(d)};
}

TrailSplit remove_edges(const Graph& g, const std::vector<EdgeId>& edges) {
  Subgraph sub = without_edges(g, edges);
  TrailDecomposition d = trail_decomposition(sub.graph);
  return {std::move(sub), std::move(d)};
}

bool has_odd_trail(const TrailDecomposition& d) {
  return std::any_of(d.trails.begin(), d.trails.end(), [](const Trail& t) { return !t.closed() && t.length() % 2 == 1; });
}

bool all_open_even(const TrailDecomposition& d) {
  return std::all_of(d.trails.begin(), d.trails.end(), [](const Trail& t) { return !t.closed() && t.length() % 2 == 0; });
}

struct GoodSpot {
  int trail = 0;
  int position = 0;
  Vertex vertex = 0;  // parent id
};

// Good position held by w2 if any, else the lowest good position held by a
// common neighbour.
std::optional<GoodSpot> find_good_spot(const TrailSplit& s, const NeighborhoodSplit& split) {
  const auto& parent = s.sub.to_parent_vertex;
  for (int i = 0; i < static_cast<int>(s.d.trails.size()); ++i) {
    for (int pos : good_positions(s.d.trails[i])) {
      if (parent[s.d.trails[i].vertices[pos]] == split.w2) return GoodSpot{i, pos, split.w2};
    }
  }
  for (int i = 0; i < static_cast<int>(s.d.trails.size()); ++i) {
    for (int pos : good_positions(s.d.trails[i])) {
      const Vertex v = parent[s.d.trails[i].vertices[pos]];
      if (std::binary_search(split.n0.begin(), split.n0.end(), v)) return GoodSpot{i, pos, v};
    }
  }
  return std::nullopt;
}

// Every other vertex is a common neighbour, so G - w1 is Eulerian. The
// circuit is opened at w2 and treated as one trail: odd length gets the
// alternating assignment (w2 ends at 2); even length is split at the vertex x
// after w2, and w1x turns negative.
Certificate eulerian_remainder(const Graph& g, const NeighborhoodSplit& split, const TrailSplit& s, int bound,
                               const Capacity& cap) {
  const Trail circuit = euler_circuit(s.sub.graph, *s.sub.local_vertex(split.w2));
  detail::Builder b(g);
  b.set_incident(split.w1, Sign::plus);
  const int len = circuit.length();
  if (len % 2 == 1) {
    b.set_from(s.sub, alternating_circuit(circuit));
    return detail::finalize(g, b.finish(), "two-even/eulerian-odd", bound, cap);
  }
  for (int i = 0; i < len; ++i) {
    const bool plus = i == 0 || (i - 1) % 2 == 0;
    b.set(*s.sub.to_parent_edge[circuit.edges[i]], plus ? Sign::plus : Sign::minus);
  }
  const Vertex x = s.sub.to_parent_vertex[circuit.vertices[1]];
  b.set(*g.find_edge(split.w1, x), Sign::minus);
  return detail::finalize(g, b.finish(), "two-even/eulerian-good-common", bound, cap);
}

// Non-adjacent even vertices with a common neighbour: trails of G - w1.
Certificate common_neighbour(const Graph& g, const NeighborhoodSplit& split, int bound, const Capacity& cap) {
  const TrailSplit s = remove_vertex(g, split.w1);
  if (split.n2.empty() && split.n3.empty()) return eulerian_remainder(g, split, s, bound, cap);
  const Vertex w2[] = {split.w2};
  detail::Builder b(g);

  std::optional<GoodSpot> spot;
  if (!has_odd_trail(s.d) && all_open_even(s.d)) spot = find_good_spot(s, split);
  if (!spot) {
    b.set_from(s.sub, detail::assign_trails(s.d));
    b.set_incident(split.w1, Sign::plus);
    b.repair_zero_weights(w2);
    return detail::finalize(g, b.finish(), "two-even/odd-trail", bound, cap);
  }
  b.set_from(s.sub, detail::assign_trails(s.d, spot->trail, spot->position));
  b.set_incident(split.w1, Sign::plus);
  if (spot->vertex == split.w2) return detail::finalize(g, b.finish(), "two-even/good-w2", bound, cap);
  b.set(*g.find_edge(split.w1, spot->vertex), Sign::minus);
  b.repair_zero_weights(w2);
  return detail::finalize(g, b.finish(), "two-even/good-common", bound, cap);
}

// Non-adjacent even vertices without a common neighbour: two edges at each
// are set aside and the rest is split into trails.
Certificate no_common_neighbour(const Graph& g, const NeighborhoodSplit& split, int bound, const Capacity& cap) {
  const auto i1 = g.incident(split.w1);
  const auto i2 = g.incident(split.w2);
  const std::vector<EdgeId> aside = {i1[0], i1[1], i2[0], i2[1]};
  const TrailSplit s = remove_edges(g, aside);
  detail::Builder b(g);
  b.set_from(s.sub, detail::assign_trails(s.d));
  for (EdgeId e : aside) b.set(e, Sign::plus);
  return detail::finalize(g, b.finish(), "two-even/split-four", bound, cap);
}

// Adjacent even vertices with a common neighbour: trails of G - w1, where w2
// has become odd.
Certificate adjacent_common(const Graph& g, const NeighborhoodSplit& split, int bound, const Capacity& cap) {
  const TrailSplit s = remove_vertex(g, split.w1);
  detail::Builder b(g);

  if (has_odd_trail(s.d) || !all_open_even(s.d)) {
    b.set_from(s.sub, detail::assign_trails(s.d));
    b.set_incident(split.w1, Sign::plus);
    return detail::finalize(g, b.finish(), "two-even/adjacent-odd-trail", bound, cap);
  }

  // Every trail is open and even. The trail through w2x has w2 or x at a good
  // position, since consecutive positions differ in parity.
  const Vertex x = split.n0.front();
  const Vertex lw2 = *s.sub.local_vertex(split.w2);
  const Vertex lx = *s.sub.local_vertex(x);
  const EdgeId target = *s.sub.graph.find_edge(lw2, lx);
  int trail = 0;
  int pos = 0;
  for (int i = 0; i < static_cast<int>(s.d.trails.size()); ++i) {
    const auto& edges = s.d.trails[i].edges;
    const auto it = std::find(edges.begin(), edges.end(), target);
    if (it == edges.end()) continue;
    trail = i;
    const int k = static_cast<int>(it - edges.begin());
    pos = k % 2 == 1 ? k : k + 1;
    break;
  }
  const Vertex u1 = s.sub.to_parent_vertex[s.d.trails[trail].vertices[pos]];
  b.set_from(s.sub, detail::assign_trails(s.d, trail, pos));
  b.set_incident(split.w1, Sign::plus);
  b.set(*g.find_edge(split.w1, u1), Sign::minus);
  return detail::finalize(g, b.finish(), u1 == split.w2 ? "two-even/adjacent-good-w2" : "two-even/adjacent-good-common",
                          bound, cap);
}

// Adjacent even vertices without a common neighbour: w1w2, w1x1 and w2x2 are
// set aside.
Certificate adjacent_no_common(const Graph& g, const NeighborhoodSplit& split, int bound, const Capacity& cap) {
  const std::vector<EdgeId> aside = {*g.find_edge(split.w1, split.w2), *g.find_edge(split.w1, split.n1.front()),
                                     *g.find_edge(split.w2, split.n2.front())};
  const TrailSplit s = remove_edges(g, aside);
  detail::Builder b(g);
  b.set_from(s.sub, detail::assign_trails(s.d));
  for (EdgeId e : aside) b.set(e, Sign::plus);
  return detail::finalize(g, b.finish(), "two-even/adjacent-split-three", bound, cap);
}

}  // namespace

Certificate two_even_sedf(const Graph& g, const Capacity& cap) {
  const DegreeProfile profile = degree_profile(g);
  if (profile.v_even != 2) {
    throw PreconditionError("two_even_sedf needs exactly two even vertices, found " +
                            std::to_string(profile.v_even));
  }
  const int bound = g.order() - 1;
  const detail::PieceSolver piece = [&cap](const Graph& h) { return two_even_piece(h, cap); };

  if (g.size() == 0) return detail::wrap(g, SignAssignment::all_plus(g), "two-even/empty", bound);
  if (!is_connected(g)) return detail::by_components(g, piece, "two-even/components", bound, cap);
  if (g.order() <= 3) return detail::small_case(g, "two-even/small", bound, cap);

  for (Vertex w : profile.even_vertices) {
    if (g.degree(w) != 2) continue;
    const auto nb = g.neighbors(w);
    if (g.adjacent(nb[0], nb[1])) {
      const Subgraph reduced = chord_reduction(g, w);
      const Certificate inner = even_count_sedf(reduced.graph, cap);
      return detail::finalize(g, lift_deg2_chord(g, w, inner.f), "two-even/lift-chord", bound, cap);
    }
    const Subgraph reduced = nochord_reduction(g, w);
    const Certificate inner = even_count_sedf(reduced.graph, cap);
    return detail::finalize(g, lift_deg2_nochord(g, w, inner.f), "two-even/lift-nochord", bound, cap);
  }

  const NeighborhoodSplit split = neighborhood_split(g, profile.even_vertices[0], profile.even_vertices[1]);
  const bool adjacent = g.adjacent(split.w1, split.w2);
  if (!adjacent) {
    return split.n0.empty() ? no_common_neighbour(g, split, bound, cap) : common_neighbour(g, split, bound, cap);
  }
  return split.n0.empty() ? adjacent_no_common(g, split, bound, cap) : adjacent_common(g, split, bound, cap);
}

}  // namespace sedf
