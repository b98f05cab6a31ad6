#include "sedf/exact.hpp"

#include <algorithm>

#include "sedf/errors.hpp"

namespace sedf {

namespace {

void check_capacity(const Graph& g, int capacity) {
  if (g.size() > capacity) throw CapacityError(g.size(), capacity);
}

// Exact minimum over SEDFs. sum_[e] and free_[e] track the assigned sum and
// the number of unassigned edges inside N[e].
class SedfSearch {
 public:
  explicit SedfSearch(const Graph& g) : g_(g), m_(g.size()), nb_(m_), sum_(m_, 0), free_(m_, 0), signs_(m_, 0) {
    for (EdgeId e = 0; e < m_; ++e) {
      const Edge& uv = g.edge(e);
      std::vector<EdgeId> closed(g.incident(uv.u).begin(), g.incident(uv.u).end());
      closed.insert(closed.end(), g.incident(uv.v).begin(), g.incident(uv.v).end());
      std::sort(closed.begin(), closed.end());
      closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
      nb_[e] = std::move(closed);
      free_[e] = static_cast<int>(nb_[e].size());
    }
  }

  ExactResult run() {
    best_ = m_;
    best_signs_.assign(m_, 1);
    search(0, 0);
    std::vector<Sign> signs;
    for (int s : best_signs_) signs.push_back(sign_of(s));
    return {best_, SignAssignment(std::move(signs)), nodes_};
  }

 private:
  void apply(EdgeId i, int s) {
    signs_[i] = s;
    for (EdgeId e : nb_[i]) {
      sum_[e] += s;
      --free_[e];
    }
  }

  void undo(EdgeId i) {
    const int s = signs_[i];
    signs_[i] = 0;
    for (EdgeId e : nb_[i]) {
      sum_[e] -= s;
      ++free_[e];
    }
  }

  bool feasible_after_minus(EdgeId i) const {
    for (EdgeId e : nb_[i]) {
      if (sum_[e] + free_[e] < 1) return false;
    }
    return true;
  }

  // Unassigned edges that cannot take -1 without breaking some N[e].
  int forced_plus(EdgeId depth) {
    int forced = 0;
    for (EdgeId j = depth; j < m_; ++j) {
      for (EdgeId e : nb_[j]) {
        if (sum_[e] + free_[e] - 2 < 1) {
          ++forced;
          break;
        }
      }
    }
    return forced;
  }

  void search(EdgeId depth, int total) {
    ++nodes_;
    if (depth == m_) {
      if (total < best_) {
        best_ = total;
        best_signs_ = signs_;
      }
      return;
    }
    const int remaining = m_ - depth;
    if (total - remaining + 2 * forced_plus(depth) >= best_) return;

    apply(depth, 1);
    search(depth + 1, total + 1);
    undo(depth);

    apply(depth, -1);
    if (feasible_after_minus(depth)) search(depth + 1, total - 1);
    undo(depth);
  }

  const Graph& g_;
  int m_;
  std::vector<std::vector<EdgeId>> nb_;
  std::vector<int> sum_;
  std::vector<int> free_;
  std::vector<int> signs_;
  std::vector<int> best_signs_;
  int best_ = 0;
  std::uint64_t nodes_ = 0;
};

// Exact minimum over SEDF0 assignments. Tracks per-vertex assigned sums and
// unassigned counts; maxw(v) is the largest weight v can still reach.
class Sedf0Search {
 public:
  explicit Sedf0Search(const Graph& g) : g_(g), m_(g.size()), wsum_(g.order(), 0), wfree_(g.order(), 0), signs_(m_, 0) {
    for (Vertex v = 0; v < g.order(); ++v) wfree_[v] = g.degree(v);
  }

  ExactResult run() {
    best_ = m_;
    best_signs_.assign(m_, 1);
    search(0, 0);
    std::vector<Sign> signs;
    for (int s : best_signs_) signs.push_back(sign_of(s));
    return {best_, SignAssignment(std::move(signs)), nodes_};
  }

 private:
  int maxw(Vertex v) const { return wsum_[v] + wfree_[v]; }

  void apply(EdgeId i, int s) {
    signs_[i] = s;
    for (Vertex x : {g_.edge(i).u, g_.edge(i).v}) {
      wsum_[x] += s;
      --wfree_[x];
    }
  }

  void undo(EdgeId i) {
    const int s = signs_[i];
    signs_[i] = 0;
    for (Vertex x : {g_.edge(i).u, g_.edge(i).v}) {
      wsum_[x] -= s;
      ++wfree_[x];
    }
  }

  bool positive_edges_ok(Vertex x) const {
    for (EdgeId e : g_.incident(x)) {
      if (signs_[e] == 1 && maxw(g_.edge(e).u) + maxw(g_.edge(e).v) < 2) return false;
    }
    return true;
  }

  bool feasible_after(EdgeId i) const {
    const Edge& uv = g_.edge(i);
    if (signs_[i] == 1) return maxw(uv.u) + maxw(uv.v) >= 2;
    return maxw(uv.u) >= 0 && maxw(uv.v) >= 0 && positive_edges_ok(uv.u) && positive_edges_ok(uv.v);
  }

  // A vertex is tight when losing 2 from its reachable weight would break
  // condition (a) or (b) at some assigned +1 edge.
  bool tight(Vertex v) const {
    if (maxw(v) < 2) return true;
    for (EdgeId e : g_.incident(v)) {
      if (signs_[e] == 1 && maxw(g_.edge(e).u) + maxw(g_.edge(e).v) < 4) return true;
    }
    return false;
  }

  int forced_plus(EdgeId depth) const {
    int forced = 0;
    for (EdgeId j = depth; j < m_; ++j) {
      if (tight(g_.edge(j).u) || tight(g_.edge(j).v)) ++forced;
    }
    return forced;
  }

  void search(EdgeId depth, int total) {
    ++nodes_;
    if (depth == m_) {
      if (total < best_) {
        best_ = total;
        best_signs_ = signs_;
      }
      return;
    }
    const int remaining = m_ - depth;
    if (total - remaining + 2 * forced_plus(depth) >= best_) return;

    for (int s : {1, -1}) {
      apply(depth, s);
      if (feasible_after(depth)) search(depth + 1, total + s);
      undo(depth);
    }
  }

  const Graph& g_;
  int m_;
  std::vector<int> wsum_;
  std::vector<int> wfree_;
  std::vector<int> signs_;
  std::vector<int> best_signs_;
  int best_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

ExactResult gamma_exact(const Graph& g, int capacity) {
  check_capacity(g, capacity);
  return SedfSearch(g).run();
}

ExactResult gamma_sedf0_exact(const Graph& g, int capacity) {
  check_capacity(g, capacity);
  return Sedf0Search(g).run();
}

namespace {

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<Vertex> queue{s};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Vertex v = queue[i];
      for (Vertex w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool augment(const Graph& g, Vertex v, std::vector<Vertex>& match, std::vector<bool>& seen) {
  for (Vertex w : g.neighbors(v)) {
    if (seen[w]) continue;
    seen[w] = true;
    if (match[w] == -1 || augment(g, match[w], match, seen)) {
      match[w] = v;
      match[v] = w;
      return true;
    }
  }
  return false;
}

int exhaustive_matching(const Graph& g, std::vector<bool>& used, Vertex from) {
  Vertex v = from;
  while (v < g.order() && used[v]) ++v;
  if (v >= g.order()) return 0;
  used[v] = true;
  int best = exhaustive_matching(g, used, v + 1);
  for (Vertex w : g.neighbors(v)) {
    if (used[w]) continue;
    used[w] = true;
    best = std::max(best, 1 + exhaustive_matching(g, used, v + 1));
    used[w] = false;
  }
  used[v] = false;
  return best;
}

}  // namespace

int max_matching_size(const Graph& g, int capacity) {
  check_capacity(g, capacity);
  if (auto color = two_coloring(g)) {
    std::vector<Vertex> match(g.order(), -1);
    int size = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      if ((*color)[v] != 0 || match[v] != -1) continue;
      std::vector<bool> seen(g.order(), false);
      if (augment(g, v, match, seen)) ++size;
    }
    return size;
  }
  std::vector<bool> used(g.order(), false);
  return exhaustive_matching(g, used, 0);
}

std::string to_string(BoundKind k) {
  switch (k) {
    case BoundKind::lower:
      return "lower";
    case BoundKind::upper:
      return "upper";
    case BoundKind::conjectured_lower:
      return "conjectured-lower";
    case BoundKind::conjectured_upper:
      return "conjectured-upper";
    case BoundKind::exact:
      return "exact";
  }
  return "unknown";
}

const BoundEntry* BoundTable::find(const std::string& label) const {
  for (const auto& e : entries) {
    if (e.label == label) return &e;
  }
  return nullptr;
}

bool satisfies_two_connected_premise(const Graph& g) {
  if (!is_two_connected(g)) return false;
  for (const Edge& e : g.edges()) {
    if (g.degree(e.u) == 2 && g.degree(e.v) == 2) return false;
  }
  return true;
}

}  // namespace sedf
