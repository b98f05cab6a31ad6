#include <doctest.h>

#include <algorithm>
#include <map>

#include "sedf/decomp.hpp"
#include "sedf/errors.hpp"
#include "support/corpus.hpp"
#include "support/generators.hpp"
#include "support/named_graphs.hpp"

using namespace sedf;
using namespace sedf::testing;

namespace {

// Trail with vertices 0..t on a path graph.
Trail path_trail(int t) {
  Trail tr;
  for (int i = 0; i <= t; ++i) tr.vertices.push_back(i);
  for (int i = 0; i < t; ++i) tr.edges.push_back(i);
  return tr;
}

Trail closed_trail(int t) {
  Trail tr = path_trail(t);
  tr.vertices.back() = 0;
  return tr;
}

void check_trail_shape(const Graph& g, const Trail& t) {
  REQUIRE(t.vertices.size() == t.edges.size() + 1);
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    const Edge e = g.edge(t.edges[i]);
    CHECK(((e.u == t.vertices[i] && e.v == t.vertices[i + 1]) || (e.v == t.vertices[i] && e.u == t.vertices[i + 1])));
  }
}

}  // namespace

TEST_CASE("trail_decomposition examples") {
  const auto p3 = trail_decomposition(path(3));
  REQUIRE(p3.trails.size() == 1);
  CHECK(p3.trails[0].length() == 2);
  CHECK_FALSE(p3.trails[0].closed());

  const Graph k4 = complete(4);
  const auto dk4 = trail_decomposition(k4);
  REQUIRE(dk4.trails.size() == 2);
  CHECK(dk4.trails[0].length() + dk4.trails[1].length() == 6);
  std::vector<Vertex> ends = {dk4.trails[0].front(), dk4.trails[0].back(), dk4.trails[1].front(),
                              dk4.trails[1].back()};
  std::sort(ends.begin(), ends.end());
  CHECK(ends == std::vector<Vertex>{0, 1, 2, 3});

  const auto c5 = trail_decomposition(cycle(5));
  REQUIRE(c5.trails.size() == 1);
  CHECK(c5.trails[0].closed());
  CHECK(c5.trails[0].length() == 5);
}

TEST_CASE("trail_decomposition invariants on every corpus graph") {
  for (const Graph& g : load_corpus(7)) {
    const auto d = trail_decomposition(g);
    std::vector<int> used(g.size(), 0);
    for (const Trail& t : d.trails) {
      check_trail_shape(g, t);
      for (EdgeId e : t.edges) ++used[e];
    }
    for (int u : used) CHECK(u == 1);

    // Per component: k open trails with the odd vertices as endpoints, or one
    // closed trail when all degrees are even.
    for (const auto& comp : components(g)) {
      std::vector<Vertex> odd;
      int comp_edges = 0;
      for (Vertex v : comp) {
        if (g.degree(v) % 2) odd.push_back(v);
        comp_edges += g.degree(v);
      }
      comp_edges /= 2;
      if (comp_edges == 0) continue;
      std::vector<const Trail*> mine;
      for (const Trail& t : d.trails) {
        if (std::binary_search(comp.begin(), comp.end(), t.front())) mine.push_back(&t);
      }
      if (odd.empty()) {
        REQUIRE(mine.size() == 1);
        CHECK(mine[0]->closed());
      } else {
        CHECK(mine.size() == odd.size() / 2);
        std::vector<Vertex> ends;
        for (const Trail* t : mine) {
          CHECK_FALSE(t->closed());
          ends.push_back(t->front());
          ends.push_back(t->back());
        }
        std::sort(ends.begin(), ends.end());
        CHECK(ends == odd);
      }
    }
  }
}

TEST_CASE("trail_decomposition is deterministic") {
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const Graph g = random_graph(rng, 8, 0.4);
    const auto a = trail_decomposition(g);
    const auto b = trail_decomposition(g);
    REQUIRE(a.trails.size() == b.trails.size());
    for (std::size_t k = 0; k < a.trails.size(); ++k) CHECK(a.trails[k].edges == b.trails[k].edges);
  }
}

TEST_CASE("euler_circuit") {
  const Trail c4 = euler_circuit(cycle(4), 0);
  CHECK(c4.closed());
  CHECK(c4.length() == 4);
  CHECK(c4.front() == 0);

  const Graph bow = bowtie();
  const Trail t = euler_circuit(bow, 0);
  CHECK(t.length() == 6);
  CHECK(t.closed());
  check_trail_shape(bow, t);

  CHECK_THROWS_AS(euler_circuit(path(3), 0), PreconditionError);
  CHECK_THROWS_AS(euler_circuit(disjoint_union(cycle(3), cycle(3)), 0), PreconditionError);
}

TEST_CASE("good_positions") {
  CHECK(good_positions(path_trail(4)) == std::vector<int>{1, 3});
  CHECK(good_positions(path_trail(2)) == std::vector<int>{1});
  CHECK(good_positions(path_trail(6)).size() == 3);
  CHECK_THROWS_AS(good_positions(path_trail(3)), PreconditionError);
  CHECK_THROWS_AS(good_positions(closed_trail(4)), PreconditionError);
}

TEST_CASE("proper_assignment") {
  CHECK(proper_assignment(path_trail(1)).along(path_trail(1)) == std::vector<int>{1});
  CHECK(proper_assignment(path_trail(3)).along(path_trail(3)) == std::vector<int>{1, -1, 1});
  const auto p5 = proper_assignment(path_trail(5));
  CHECK(p5.along(path_trail(5)) == std::vector<int>{1, -1, 1, -1, 1});
  CHECK(p5.sum() == 1);
  CHECK_THROWS_AS(proper_assignment(path_trail(4)), PreconditionError);
}

TEST_CASE("proper_assignment_at") {
  CHECK(proper_assignment_at(path_trail(4), 1).along(path_trail(4)) == std::vector<int>{1, 1, -1, 1});
  CHECK(proper_assignment_at(path_trail(4), 3).along(path_trail(4)) == std::vector<int>{1, -1, 1, 1});
  CHECK(proper_assignment_at(path_trail(2), 1).along(path_trail(2)) == std::vector<int>{1, 1});
  for (int t = 2; t <= 10; t += 2) {
    for (int pos : good_positions(path_trail(t))) CHECK(proper_assignment_at(path_trail(t), pos).sum() == 2);
  }
  CHECK_THROWS_AS(proper_assignment_at(path_trail(4), 2), PreconditionError);
}

TEST_CASE("alternating_flip_last") {
  CHECK(alternating_flip_last(path_trail(3)).along(path_trail(3)) == std::vector<int>{1, -1, 1});
  CHECK(alternating_flip_last(path_trail(4)).along(path_trail(4)) == std::vector<int>{1, -1, 1, 1});
  CHECK(alternating_flip_last(path_trail(1)).along(path_trail(1)) == std::vector<int>{1});
  for (int t = 1; t <= 9; ++t) CHECK(alternating_flip_last(path_trail(t)).sum() == (t % 2 ? 1 : 2));
  CHECK_THROWS_AS(alternating_flip_last(closed_trail(4)), PreconditionError);
}

TEST_CASE("alternating_circuit") {
  CHECK(alternating_circuit(closed_trail(4)).along(closed_trail(4)) == std::vector<int>{1, -1, 1, -1});
  CHECK(alternating_circuit(closed_trail(4)).sum() == 0);
  const auto c5 = alternating_circuit(closed_trail(5));
  CHECK(c5.along(closed_trail(5)) == std::vector<int>{1, -1, 1, -1, 1});
  CHECK(c5.sum() == 1);
  // Odd circuit: the start vertex carries weight 2, every other vertex 0.
  const auto w = trail_weights(closed_trail(5), c5, 5);
  CHECK(w == std::vector<int>{2, 0, 0, 0, 0});
  CHECK(alternating_circuit(closed_trail(3)).sum() == 1);
  CHECK_THROWS_AS(alternating_circuit(path_trail(3)), PreconditionError);
}

TEST_CASE("proper assignments give non-negative trail-local weights") {
  // Endpoint visits contribute +1 and interior visits 0 or +2, on real trails
  // of corpus graphs where vertices repeat.
  for (const Graph& g : load_corpus(7)) {
    for (const Trail& t : trail_decomposition(g).trails) {
      if (t.closed()) continue;
      std::vector<PartialAssignment> variants;
      if (t.length() % 2) {
        variants.push_back(proper_assignment(t));
      } else {
        for (int pos : good_positions(t)) variants.push_back(proper_assignment_at(t, pos));
      }
      for (const auto& p : variants) {
        const auto w = trail_weights(t, p, g.order());
        for (int x : w) CHECK(x >= 0);
        CHECK(w[t.front()] >= 1);
        CHECK(w[t.back()] >= 1);
      }
    }
  }
}

TEST_CASE("PartialAssignment merge") {
  PartialAssignment a;
  a.assign(0, Sign::plus);
  PartialAssignment b;
  b.assign(1, Sign::minus);
  PartialAssignment c;
  c.assign(2, Sign::minus);

  PartialAssignment left = a;
  left.merge(b);
  left.merge(c);
  PartialAssignment bc = b;
  bc.merge(c);
  PartialAssignment right = a;
  right.merge(bc);
  CHECK(left.entries() == right.entries());
  CHECK(left.sum() == -1);
  CHECK_THROWS_AS(left.merge(a), PreconditionError);
}
