#pragma once

// Shared machinery for the constructors: a mutable assignment under
// construction, verified finalization with exact fallback, and the component
// and block recursions.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sedf/assignment.hpp"
#include "sedf/constructors.hpp"
#include "sedf/decomp.hpp"

namespace sedf::detail {

class Builder {
 public:
  explicit Builder(const Graph& g) : g_(g), signs_(g.size(), 0) {}

  void set(EdgeId e, Sign s) { signs_[e] = value(s); }
  void set_incident(Vertex v, Sign s);
  // Copies an assignment of a subgraph whose edges all exist in the parent.
  void set_from(const Subgraph& sub, const SignAssignment& f);
  void set_from(const Subgraph& sub, const PartialAssignment& p);

  int weight(Vertex v) const;
  // For each listed vertex of weight 0 (ascending), turns its lowest-index
  // negative edge positive. Weights are recomputed after every flip.
  void repair_zero_weights(std::span<const Vertex> vertices);

  std::optional<SignAssignment> finish() const;

 private:
  const Graph& g_;
  std::vector<int> signs_;  // 0 = unassigned
};

// Verifies `f` against SEDF0 and `bound`; on failure replaces it with the
// exact SEDF0 minimum and tags the method "<method>/fallback".
Certificate finalize(const Graph& g, std::optional<SignAssignment> f, std::string method, int bound,
                     const Capacity& cap);

// Exact SEDF0 minimum for the tiny graphs the recursions bottom out on.
Certificate small_case(const Graph& g, const std::string& method, int bound, const Capacity& cap);

using PieceSolver = std::function<Certificate(const Graph&)>;

// Solves every component with edges and combines.
Certificate by_components(const Graph& g, const PieceSolver& solve, const std::string& method, int bound,
                          const Capacity& cap);

// Solves every block of a connected graph and glues them at cut vertices.
Certificate by_blocks(const Graph& g, const PieceSolver& solve, const std::string& method, int bound,
                      const Capacity& cap);

// Assigns every trail: closed trails alternate around the circuit, odd open
// trails get a proper assignment, even open trails a proper assignment at a
// good position (`chosen` for `chosen_trail`, else the first one).
PartialAssignment assign_trails(const TrailDecomposition& d, std::optional<int> chosen_trail = std::nullopt,
                                int chosen_position = 0);

// Optimal K_{a,b} assignment laid onto the given sides of `g`; edges of `g`
// outside the bipartite pattern are +1.
SignAssignment kmn_on_graph(const Graph& g, const CompleteBipartiteSides& sides, const Capacity& cap);

Certificate wrap(const Graph& g, const SignAssignment& f, const std::string& method, int bound);

}  // namespace sedf::detail
