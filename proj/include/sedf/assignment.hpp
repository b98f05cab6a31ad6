#pragma once

#include <span>
#include <string>
#include <vector>

#include "sedf/decomp.hpp"
#include "sedf/graph.hpp"
#include "sedf/sign.hpp"

namespace sedf {

/// A total map from the edges of a graph to {+1, -1}, indexed by edge id.
class SignAssignment {
 public:
  SignAssignment() = default;
  explicit SignAssignment(std::vector<Sign> signs) : signs_(std::move(signs)) {}

  static SignAssignment all_plus(const Graph& g) { return SignAssignment(std::vector<Sign>(g.size(), Sign::plus)); }
  // Throws PreconditionError unless `p` covers every edge of `g`.
  static SignAssignment from_partial(const Graph& g, const PartialAssignment& p);

  int size() const { return static_cast<int>(signs_.size()); }
  Sign operator[](EdgeId e) const { return signs_[e]; }
  void set(EdgeId e, Sign s) { signs_[e] = s; }
  int total() const;
  const std::vector<Sign>& signs() const { return signs_; }

  bool operator==(const SignAssignment&) const = default;

 private:
  std::vector<Sign> signs_;
};

struct WeightReport {
  std::vector<int> vertex_weights;
  std::vector<Vertex> zero_set;
  int total = 0;
};

WeightReport weights(const Graph& g, const SignAssignment& f);
std::vector<int> vertex_weights(const Graph& g, const SignAssignment& f);

/// f(N[e]) through the endpoint weights: f(u) + f(v) - f(e).
int closed_neighborhood_sum(const Graph& g, const SignAssignment& f, EdgeId e);
/// f(N[e]) summed edge by edge over E(u) ∪ E(v).
int direct_neighborhood_sum(const Graph& g, const SignAssignment& f, EdgeId e);

enum class Rule {
  neighborhood_sum,  // f(N[e]) >= 1
  vertex_weight,     // f(v) >= 0
  positive_edge,     // f(u) + f(v) >= 2 on a +1 edge
};

std::string to_string(Rule r);

struct Violation {
  bool on_edge = false;  // otherwise a vertex
  int index = 0;
  Rule rule = Rule::neighborhood_sum;
  int observed = 0;
};

struct VerificationVerdict {
  bool is_sedf = false;
  bool is_sedf0 = false;
  std::vector<Violation> violations;
};

/// Checks the SEDF condition and the two SEDF0 conditions, reporting every
/// violation rather than stopping at the first.
VerificationVerdict verify(const Graph& g, const SignAssignment& f);

bool is_sedf(const Graph& g, const SignAssignment& f);
bool is_sedf0(const Graph& g, const SignAssignment& f);

/// Combines SEDF0 assignments of G[V1] and G[V2] where V1 ∩ V2 = {v0} and every
/// edge of G lies inside V1 or inside V2. Parts must be induced subgraphs of
/// `g` (see induced_subgraph). The result is SEDF0 with the totals added.
SignAssignment glue(const Graph& g, const Subgraph& part1, const SignAssignment& f1, const Subgraph& part2,
                    const SignAssignment& f2);

/// G - u1u2 - v0 for a degree-2 vertex v0 whose neighbours u1, u2 are adjacent.
Subgraph chord_reduction(const Graph& g, Vertex v0);
/// G + u1u2 - v0 for a degree-2 vertex v0 whose neighbours are not adjacent.
/// The added edge u1u2 has no parent edge.
Subgraph nochord_reduction(const Graph& g, Vertex v0);

/// Extends an SEDF0 of chord_reduction(g, v0) to g: v0u1 = v0u2 = +1,
/// u1u2 = -1. Total grows by one.
SignAssignment lift_deg2_chord(const Graph& g, Vertex v0, const SignAssignment& reduced);
/// Extends an SEDF0 of nochord_reduction(g, v0) to g: u1v0 = +1 and u2v0
/// takes the sign of u1u2. Total grows by one.
SignAssignment lift_deg2_nochord(const Graph& g, Vertex v0, const SignAssignment& reduced);

SignAssignment flip_edges(const SignAssignment& f, std::span<const EdgeId> edges);

}  // namespace sedf
