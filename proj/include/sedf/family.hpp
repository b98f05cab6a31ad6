#pragma once

#include <optional>
#include <vector>

#include "sedf/assignment.hpp"
#include "sedf/graph.hpp"

namespace sedf {

/// G' = T(G - E(C)) + E(C) for a Hamiltonian cycle C of G: every edge uv off
/// the cycle gains a fresh vertex w and the triangle uwv. The canonical
/// assignment is +1 on E(G) and -1 on the new edges, total 2n - m.
struct TriangulationFamilyInstance {
  Graph base;
  std::vector<Vertex> cycle;
  Graph derived;          // original vertices keep their ids; new vertices follow
  SignAssignment f;       // canonical assignment on `derived`
};

/// Throws PreconditionError if `cycle` is not a Hamiltonian cycle of `g` or the
/// minimum degree is below 3.
TriangulationFamilyInstance triangulate_family(const Graph& g, const std::vector<Vertex>& cycle);

/// Some Hamiltonian cycle through vertex 0 (backtracking), if one exists.
std::optional<std::vector<Vertex>> find_hamiltonian_cycle(const Graph& g);

}  // namespace sedf
