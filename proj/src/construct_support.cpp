#include "construct_support.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>

#include "sedf/errors.hpp"
#include "sedf/exact.hpp"

namespace sedf {

namespace {
std::atomic<std::uint64_t> g_fallbacks{0};
}

std::uint64_t fallback_events() { return g_fallbacks.load(); }

Certificate make_certificate(Graph g, SignAssignment f, std::string method, int claimed_bound) {
  Certificate c;
  c.verdict = verify(g, f);
  c.total = f.total();
  c.graph = std::move(g);
  c.f = std::move(f);
  c.method = std::move(method);
  c.claimed_bound = claimed_bound;
  return c;
}

Capacity Capacity::from_environment() {
  Capacity cap;
  if (const char* env = std::getenv("SEDF_CAPACITY")) {
    try {
      const int value = std::stoi(env);
      if (value > 0) cap = uniform(value);
    } catch (const std::exception&) {
      // Unparsable values keep the defaults.
    }
  }
  return cap;
}

namespace detail {

void Builder::set_incident(Vertex v, Sign s) {
  for (EdgeId e : g_.incident(v)) set(e, s);
}

void Builder::set_from(const Subgraph& sub, const SignAssignment& f) {
  for (EdgeId e = 0; e < sub.graph.size(); ++e) {
    if (!sub.to_parent_edge[e]) throw PreconditionError("subgraph edge has no parent edge");
    signs_[*sub.to_parent_edge[e]] = value(f[e]);
  }
}

void Builder::set_from(const Subgraph& sub, const PartialAssignment& p) {
  for (const auto& [e, s] : p.entries()) {
    if (!sub.to_parent_edge[e]) throw PreconditionError("subgraph edge has no parent edge");
    signs_[*sub.to_parent_edge[e]] = value(s);
  }
}

int Builder::weight(Vertex v) const {
  int w = 0;
  for (EdgeId e : g_.incident(v)) w += signs_[e];
  return w;
}

void Builder::repair_zero_weights(std::span<const Vertex> vertices) {
  std::vector<Vertex> order(vertices.begin(), vertices.end());
  std::sort(order.begin(), order.end());
  for (Vertex v : order) {
    if (weight(v) != 0) continue;
    for (EdgeId e : g_.incident(v)) {
      if (signs_[e] == -1) {
        signs_[e] = 1;
        break;
      }
    }
  }
}

std::optional<SignAssignment> Builder::finish() const {
  std::vector<Sign> out;
  out.reserve(signs_.size());
  for (int s : signs_) {
    if (s == 0) return std::nullopt;
    out.push_back(sign_of(s));
  }
  return SignAssignment(std::move(out));
}

Certificate wrap(const Graph& g, const SignAssignment& f, const std::string& method, int bound) {
  return make_certificate(g, f, method, bound);
}

Certificate finalize(const Graph& g, std::optional<SignAssignment> f, std::string method, int bound,
                     const Capacity& cap) {
  if (f) {
    Certificate c = make_certificate(g, *f, method, bound);
    if (c.verdict.is_sedf0 && c.total <= bound) return c;
  }
  ++g_fallbacks;
  ExactResult exact = gamma_sedf0_exact(g, cap.exact_edges);
  return make_certificate(g, exact.witness, method + "/fallback", bound);
}

Certificate small_case(const Graph& g, const std::string& method, int bound, const Capacity& cap) {
  ExactResult exact = gamma_sedf0_exact(g, cap.exact_edges);
  return finalize(g, exact.witness, method, bound, cap);
}

Certificate by_components(const Graph& g, const PieceSolver& solve, const std::string& method, int bound,
                          const Capacity& cap) {
  Builder builder(g);
  for (const auto& comp : components(g)) {
    Subgraph sub = induced_subgraph(g, comp);
    if (sub.graph.size() == 0) continue;
    builder.set_from(sub, solve(sub.graph).f);
  }
  return finalize(g, builder.finish(), method, bound, cap);
}

Certificate by_blocks(const Graph& g, const PieceSolver& solve, const std::string& method, int bound,
                      const Capacity& cap) {
  const BlockDecomposition blocks = block_decomposition(g);
  const int count = static_cast<int>(blocks.blocks.size());
  std::vector<bool> merged_block(count, false);

  std::vector<Vertex> merged = blocks.blocks[0];
  SignAssignment merged_f = solve(induced_subgraph(g, merged).graph).f;
  merged_block[0] = true;

  for (int round = 1; round < count; ++round) {
    int next = -1;
    for (int i = 0; i < count && next < 0; ++i) {
      if (merged_block[i]) continue;
      for (Vertex v : blocks.blocks[i]) {
        if (std::binary_search(merged.begin(), merged.end(), v)) {
          next = i;
          break;
        }
      }
    }
    const auto& block = blocks.blocks[next];
    std::vector<Vertex> joined;
    std::set_union(merged.begin(), merged.end(), block.begin(), block.end(), std::back_inserter(joined));

    const Subgraph whole = induced_subgraph(g, joined);
    auto local = [&](const std::vector<Vertex>& vs) {
      std::vector<Vertex> out;
      for (Vertex v : vs) out.push_back(*whole.local_vertex(v));
      return out;
    };
    const Subgraph part1 = induced_subgraph(whole.graph, local(merged));
    const Subgraph part2 = induced_subgraph(whole.graph, local(block));
    const SignAssignment block_f = solve(part2.graph).f;
    merged_f = glue(whole.graph, part1, merged_f, part2, block_f);
    merged = std::move(joined);
    merged_block[next] = true;
  }
  return finalize(g, merged_f, method, bound, cap);
}

PartialAssignment assign_trails(const TrailDecomposition& d, std::optional<int> chosen_trail, int chosen_position) {
  PartialAssignment out;
  for (int i = 0; i < static_cast<int>(d.trails.size()); ++i) {
    const Trail& t = d.trails[i];
    if (t.closed()) {
      out.merge(alternating_circuit(t));
    } else if (t.length() % 2 == 1) {
      out.merge(proper_assignment(t));
    } else {
      const int pos = chosen_trail && *chosen_trail == i ? chosen_position : good_positions(t).front();
      out.merge(proper_assignment_at(t, pos));
    }
  }
  return out;
}

}  // namespace detail
}  // namespace sedf
