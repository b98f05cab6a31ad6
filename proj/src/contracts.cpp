#include <limits>
#include <optional>
#include <vector>

#include "sedf/constructors.hpp"
#include "sedf/errors.hpp"

namespace sedf {

namespace {

// Backtracking over edges in index order, -1 before +1, looking for an SEDF0
// whose vertex weights stay inside per-vertex windows and whose total does not
// exceed max_total. Weight windows are pruned as edges are fixed.
class WindowSearch {
 public:
  WindowSearch(const Graph& g, std::vector<int> min_w, std::vector<int> max_w, int max_total)
      : g_(g),
        min_w_(std::move(min_w)),
        max_w_(std::move(max_w)),
        max_total_(max_total),
        signs_(g.size(), 0),
        wsum_(g.order(), 0),
        wfree_(g.order(), 0) {
    for (Vertex v = 0; v < g.order(); ++v) wfree_[v] = g.degree(v);
  }

  std::optional<SignAssignment> run() {
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (!window_ok(v)) return std::nullopt;
    }
    if (!descend(0, 0)) return std::nullopt;
    std::vector<Sign> out;
    for (int s : signs_) out.push_back(sign_of(s));
    return SignAssignment(std::move(out));
  }

 private:
  int max_weight(Vertex v) const { return wsum_[v] + wfree_[v]; }

  bool window_ok(Vertex v) const {
    return max_weight(v) >= min_w_[v] && wsum_[v] - wfree_[v] <= max_w_[v];
  }

  // Every decided +1 edge at v can still reach f(u) + f(w) >= 2.
  bool positive_edges_ok(Vertex v) const {
    for (EdgeId e : g_.incident(v)) {
      if (signs_[e] != 1) continue;
      const Edge& ed = g_.edge(e);
      if (max_weight(ed.u) + max_weight(ed.v) < 2) return false;
    }
    return true;
  }

  bool descend(EdgeId e, int total) {
    const int remaining = g_.size() - e;
    if (total - remaining > max_total_) return false;
    if (e == g_.size()) return true;
    const Edge& ed = g_.edge(e);
    for (int s : {-1, 1}) {
      signs_[e] = s;
      wsum_[ed.u] += s;
      wsum_[ed.v] += s;
      --wfree_[ed.u];
      --wfree_[ed.v];
      const bool ok = window_ok(ed.u) && window_ok(ed.v) && positive_edges_ok(ed.u) && positive_edges_ok(ed.v);
      if (ok && descend(e + 1, total + s)) return true;
      wsum_[ed.u] -= s;
      wsum_[ed.v] -= s;
      ++wfree_[ed.u];
      ++wfree_[ed.v];
      signs_[e] = 0;
    }
    return false;
  }

  const Graph& g_;
  std::vector<int> min_w_;
  std::vector<int> max_w_;
  int max_total_;
  std::vector<int> signs_;
  std::vector<int> wsum_;
  std::vector<int> wfree_;
};

void check_capacity(const Graph& g, const Capacity& cap) {
  if (g.size() > cap.contract_edges) throw CapacityError(g.size(), cap.contract_edges);
}

}  // namespace

SignAssignment even_sedf_zero_two(const Graph& g, const Capacity& cap) {
  const DegreeProfile profile = degree_profile(g);
  if (profile.v_odd != 0) {
    throw PreconditionError("even_sedf_zero_two: vertex " + std::to_string(profile.odd_vertices.front()) +
                            " has odd degree");
  }
  check_capacity(g, cap);

  SignAssignment out = SignAssignment::all_plus(g);
  for (const auto& comp : components(g)) {
    const Subgraph sub = induced_subgraph(g, comp);
    const Graph& h = sub.graph;
    if (h.size() == 0) continue;
    std::optional<SignAssignment> found;
    for (Vertex z = 0; z < h.order() && !found; ++z) {
      std::vector<int> lo(h.order(), 0);
      std::vector<int> hi(h.order(), 2);
      hi[z] = 0;
      found = WindowSearch(h, lo, hi, std::numeric_limits<int>::max()).run();
    }
    if (!found) throw Error("even_sedf_zero_two: no {0,2}-weighted SEDF0 found");
    for (EdgeId e = 0; e < h.size(); ++e) out.set(*sub.to_parent_edge[e], (*found)[e]);
  }
  return out;
}

SignAssignment all_odd_sedf(const Graph& g, const Capacity& cap) {
  const DegreeProfile profile = degree_profile(g);
  if (profile.v_even != 0) {
    throw PreconditionError("all_odd_sedf: vertex " + std::to_string(profile.even_vertices.front()) +
                            " has even degree");
  }
  check_capacity(g, cap);

  SignAssignment out = SignAssignment::all_plus(g);
  for (const auto& comp : components(g)) {
    const Subgraph sub = induced_subgraph(g, comp);
    const Graph& h = sub.graph;
    std::vector<int> lo(h.order(), 0);
    std::vector<int> hi(h.order());
    for (Vertex v = 0; v < h.order(); ++v) hi[v] = h.degree(v);
    auto found = WindowSearch(h, lo, hi, h.order() - 1).run();
    if (!found) throw Error("all_odd_sedf: no SEDF0 with total at most n - 1 found");
    for (EdgeId e = 0; e < h.size(); ++e) out.set(*sub.to_parent_edge[e], (*found)[e]);
  }
  return out;
}

}  // namespace sedf
