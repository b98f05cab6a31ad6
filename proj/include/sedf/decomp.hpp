#pragma once

#include <map>
#include <optional>
#include <vector>

#include "sedf/graph.hpp"
#include "sedf/sign.hpp"

namespace sedf {

/// A walk without repeated edges: vertices[i] and vertices[i+1] are joined by
/// edges[i]. Closed iff it returns to its first vertex.
struct Trail {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;

  int length() const { return static_cast<int>(edges.size()); }
  bool closed() const { return !vertices.empty() && vertices.front() == vertices.back(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
};

struct TrailDecomposition {
  std::vector<Trail> trails;
};

/// Signs on a subset of the edges of some graph.
class PartialAssignment {
 public:
  void assign(EdgeId e, Sign s) { signs_[e] = s; }
  std::optional<Sign> at(EdgeId e) const;
  bool contains(EdgeId e) const { return signs_.contains(e); }
  int size() const { return static_cast<int>(signs_.size()); }
  int sum() const;

  // Union with a partial assignment on a disjoint domain; throws on overlap.
  void merge(const PartialAssignment& other);

  const std::map<EdgeId, Sign>& entries() const { return signs_; }
  // Signs in the order of the trail's edge sequence.
  std::vector<int> along(const Trail& t) const;

 private:
  std::map<EdgeId, Sign> signs_;
};

/// Splits E(G) into trails. A component with 2k > 0 odd vertices yields k open
/// trails whose endpoints are exactly those odd vertices; an all-even
/// component with edges yields one closed trail. Deterministic.
TrailDecomposition trail_decomposition(const Graph& g);

/// Closed trail through every edge once, starting and ending at `start`.
/// Throws PreconditionError if an odd vertex exists or some edge lies outside
/// the component of `start`.
Trail euler_circuit(const Graph& g, Vertex start);

/// Interior odd positions 1, 3, ..., t-1 of an open trail of even length t.
std::vector<int> good_positions(const Trail& t);

/// +1, -1, ..., +1 along an open trail of odd length.
PartialAssignment proper_assignment(const Trail& t);

/// Proper assignments on the two odd subtrails split at a good position.
PartialAssignment proper_assignment_at(const Trail& t, int position);

/// +1, -1, ... along an open trail; on even length the last edge becomes +1.
PartialAssignment alternating_flip_last(const Trail& t);

/// +1, -1, ... along a closed trail.
PartialAssignment alternating_circuit(const Trail& t);

// Trail-local vertex weights of a partial assignment defined on the trail.
std::vector<int> trail_weights(const Trail& t, const PartialAssignment& p, int order);

}  // namespace sedf
