#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "sedf/assignment.hpp"
#include "sedf/graph.hpp"

namespace sedf {

inline constexpr int kDefaultExactCapacity = 26;

struct ExactResult {
  int value = 0;
  SignAssignment witness;
  std::uint64_t nodes_explored = 0;
};

/// Minimum total over all SEDFs (the signed edge domination number).
/// Depth-first over edges in index order, +1 before -1, with neighbourhood
/// feasibility pruning and a forced-edge lower bound on the remaining total.
/// Throws CapacityError when the graph has more than `capacity` edges.
ExactResult gamma_exact(const Graph& g, int capacity = kDefaultExactCapacity);

/// Minimum total over all SEDF0 assignments.
ExactResult gamma_sedf0_exact(const Graph& g, int capacity = kDefaultExactCapacity);

/// Size of a maximum matching. Augmenting paths on bipartite graphs,
/// exhaustive branching otherwise.
int max_matching_size(const Graph& g, int capacity = kDefaultExactCapacity);

using Rational = boost::rational<long long>;

enum class BoundKind { lower, upper, conjectured_lower, conjectured_upper, exact };

std::string to_string(BoundKind k);

struct BoundEntry {
  std::string label;
  BoundKind kind = BoundKind::upper;
  Rational value;
  std::string provenance;
};

struct BoundTable {
  std::vector<BoundEntry> entries;

  const BoundEntry* find(const std::string& label) const;
};

/// Closed-form bounds that apply to `g`. The matching-based lower bound is
/// omitted when the graph exceeds `matching_capacity` edges.
BoundTable bound_table(const Graph& g, int matching_capacity = kDefaultExactCapacity);

// Premise of the 2-connected lower-bound conjecture: 2-connected with no two
// adjacent degree-2 vertices.
bool satisfies_two_connected_premise(const Graph& g);

}  // namespace sedf
