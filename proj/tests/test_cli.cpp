#include <doctest.h>

#include <sstream>

#include "sedf/cli.hpp"
#include "sedf/errors.hpp"
#include "sedf/exact.hpp"
#include "sedf/family.hpp"
#include "sedf/io.hpp"
#include "sedf/scan.hpp"
#include "support/corpus.hpp"
#include "support/generators.hpp"
#include "support/named_graphs.hpp"
#include "support/reference.hpp"

using namespace sedf;
using namespace sedf::testing;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  Outcome o;
  o.code = cli::run(args, in, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::vector<std::string> corpus_lines(int max_order, bool connected_only) {
  std::vector<std::string> lines;
  for (const Graph& g : load_corpus(max_order)) {
    if (connected_only && (g.order() == 0 || !ref_connected(g))) continue;
    lines.push_back(io::emit_graph6(g));
  }
  return lines;
}

std::string join(const std::vector<std::string>& lines) {
  std::string s;
  for (const auto& l : lines) s += l + "\n";
  return s;
}

}  // namespace

TEST_CASE("cli exact") {
  const auto r = run_cli({"exact", "--format", "edges"}, "2 1\n0 1\n");
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "gamma 1\n");
  CHECK(run_cli({"exact"}, "C~\n").out == "gamma 2\n");
  CHECK(run_cli({"exact", "--sedf0"}, "Bw\n").out == "gamma_sedf0 1\n");
  CHECK(run_cli({"exact", "--capacity", "3"}, "C~\n").code == cli::kExitUsage);
}

TEST_CASE("cli usage errors") {
  CHECK(run_cli({"bogus"}).code == cli::kExitUsage);
  CHECK(run_cli({}).code == cli::kExitUsage);
  CHECK(run_cli({"exact", "--format", "dot"}, "A_").code == cli::kExitUsage);
  CHECK(run_cli({"exact"}, "A!").code == cli::kExitUsage);
  CHECK(run_cli({"exact", "--format", "edges"}, "2 1\n0 2\n").code == cli::kExitUsage);
  CHECK(run_cli({"construct", "--method", "kmn"}, "Dhc\n").code == cli::kExitUsage);
  CHECK(run_cli({"scan", "--conjecture", "4"}, "").code == cli::kExitUsage);
  CHECK(run_cli({"--help"}).code == cli::kExitOk);
}

TEST_CASE("cli construct then verify") {
  const auto c = run_cli({"construct"}, "D]o\n");
  REQUIRE(c.code == cli::kExitOk);
  CHECK(c.out.rfind("total 4 method ", 0) == 0);
  const auto v = run_cli({"verify", "--sedf0"}, c.out);
  CHECK(v.code == cli::kExitOk);
  CHECK(v.out.find("recomputed total 4 SEDF0=true SEDF=true") != std::string::npos);

  const std::vector<std::pair<std::string, std::string>> runs = {
      {"odd-bound", "D]o"}, {"even-count", "D]o"}, {"kmn", "D]o"}, {"all-odd", "C~"}, {"even-zero-two", "Dhc"},
      {"two-even", "C{"}};
  for (const auto& [method, input] : runs) {
    CAPTURE(method);
    const auto k = run_cli({"construct", "--method", method}, input);
    CHECK(k.code == cli::kExitOk);
    CHECK(run_cli({"verify", "--sedf0"}, k.out).code == cli::kExitOk);
  }
}

TEST_CASE("cli verify detects tampering") {
  const Graph k2 = build_graph(2, {{0, 1}});
  const std::string good = io::emit_certificate(make_certificate(k2, SignAssignment::all_plus(k2), "x", 1));
  CHECK(run_cli({"verify"}, good).code == cli::kExitOk);

  std::string flipped = good;
  flipped.replace(flipped.find("+1"), 2, "-1");
  CHECK(run_cli({"verify"}, flipped).code == cli::kExitFailure);

  const Graph c4 = cycle(4);
  const SignAssignment alt({Sign::plus, Sign::minus, Sign::minus, Sign::plus});
  const std::string bad = io::emit_certificate(make_certificate(c4, alt, "x", 0));
  const auto r = run_cli({"verify"}, bad);
  CHECK(r.code == cli::kExitFailure);
  CHECK(r.out.find("violation edge") != std::string::npos);

  CHECK(run_cli({"verify"}, "garbage\n").code == cli::kExitUsage);
}

TEST_CASE("cli bounds") {
  const auto r = run_cli({"bounds"}, io::emit_graph6(k4_minus_edge()));
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("lower n-m = -1") != std::string::npos);
  CHECK(r.out.find("conjectured-lower 2n-m = 3") != std::string::npos);
  CHECK(r.out.find("upper (4n-2)/3 = 14/3") != std::string::npos);
}

TEST_CASE("scan conjecture 1 over connected graphs up to six vertices") {
  const auto lines = corpus_lines(6, true);
  ScanOptions o;
  o.conjecture = 1;
  const auto r = scan_lines(lines, o);
  CHECK(r.graphs_processed == lines.size());
  CHECK(r.counterexamples.empty());
  CHECK(r.skipped_over_capacity == 0);
  CHECK_FALSE(r.tight_instances.empty());
  for (const auto& e : r.tight_instances) CHECK(replay(e) == e.observed);

  const auto c = run_cli({"scan", "--conjecture", "1"}, join(lines));
  CHECK(c.code == cli::kExitOk);
  CHECK(c.out.find("counterexamples 0") != std::string::npos);
}

TEST_CASE("scan conjecture 2 and 3") {
  const auto lines = corpus_lines(6, true);
  ScanOptions o2;
  o2.conjecture = 2;
  CHECK(scan_lines(lines, o2).counterexamples.empty());

  ScanOptions o3;
  o3.conjecture = 3;
  const auto k4e = scan_lines({io::emit_graph6(k4_minus_edge())}, o3);
  CHECK(k4e.graphs_processed == 1);
  REQUIRE(k4e.tight_instances.size() == 1);
  CHECK(k4e.tight_instances[0].observed == 3);
  CHECK(k4e.tight_instances[0].bound == 3);
  const auto c5 = scan_lines({io::emit_graph6(cycle(5))}, o3);
  CHECK(c5.filtered == 1);

  // The lower-bound conjecture fails at six vertices: EyuG is 2-connected, its
  // degree-2 vertices are pairwise non-adjacent, yet gamma = 1 < 2n - m = 3.
  // Confirmed with the unpruned enumerator below.
  const auto r3 = scan_lines(lines, o3);
  REQUIRE(r3.counterexamples.size() == 1);
  CHECK(r3.counterexamples[0].graph6 == "EyuG");
  CHECK(r3.counterexamples[0].observed == 1);
  CHECK(r3.counterexamples[0].bound == 3);
  CHECK(replay(r3.counterexamples[0]) == 1);
  const Graph eyug = io::parse_graph6("EyuG");
  CHECK(satisfies_two_connected_premise(eyug));
  CHECK(ref_two_connected(eyug));
  CHECK(ref_minimum(eyug, false) == 1);
}

TEST_CASE("scan keeps going past malformed lines and reports skips") {
  ScanOptions o;
  o.capacity = Capacity::uniform(6);
  const auto r = scan_lines({"A_", "not graph6!", "", "C~", "D~{"}, o);
  REQUIRE(r.parse_failures.size() == 1);
  CHECK(r.parse_failures[0].line == 2);
  CHECK(r.graphs_processed == 2);
  CHECK(r.skipped_over_capacity == 1);  // K5 has 10 edges
}

TEST_CASE("scan is independent of the worker count") {
  const auto lines = corpus_lines(6, false);
  ScanOptions one;
  one.conjecture = 3;
  ScanOptions four = one;
  four.workers = 4;
  const auto a = scan_lines(lines, one);
  const auto b = scan_lines(lines, four);
  CHECK(a.graphs_processed == b.graphs_processed);
  CHECK(a.filtered == b.filtered);
  REQUIRE(a.tight_instances.size() == b.tight_instances.size());
  for (std::size_t i = 0; i < a.tight_instances.size(); ++i) CHECK(a.tight_instances[i].graph6 == b.tight_instances[i].graph6);
}

TEST_CASE("triangulate_family") {
  const Graph k5 = complete(5);
  const auto i5 = triangulate_family(k5, {0, 1, 2, 3, 4});
  CHECK(i5.derived.order() == 10);
  CHECK(i5.derived.size() == 20);
  CHECK(i5.f.total() == 0);
  CHECK(verify(i5.derived, i5.f).is_sedf);
  const auto w5 = vertex_weights(i5.derived, i5.f);
  for (Vertex v = 0; v < 10; ++v) CHECK(w5[v] == (v < 5 ? 2 : -2));
  CHECK(satisfies_two_connected_premise(i5.derived));

  const auto i4 = triangulate_family(complete(4), {0, 1, 2, 3});
  CHECK(i4.derived.order() == 6);
  CHECK(i4.derived.size() == 10);
  CHECK(i4.f.total() == 2);
  CHECK(gamma_exact(i4.derived).value == 2);

  CHECK_THROWS_AS(triangulate_family(cycle(5), {0, 1, 2, 3, 4}), PreconditionError);
  CHECK_THROWS_AS(triangulate_family(k5, {0, 1, 2, 3}), PreconditionError);
  CHECK_THROWS_AS(triangulate_family(k5, {0, 1, 2, 3, 3}), PreconditionError);
  const Graph k33 = complete_bipartite(3, 3);
  CHECK_THROWS_AS(triangulate_family(k33, {0, 1, 2, 3, 4, 5}), PreconditionError);
}

TEST_CASE("triangulate_family invariants on Hamiltonian corpus graphs") {
  for (const Graph& g : load_corpus(7)) {
    if (g.order() < 4 || g.min_degree() < 3) continue;
    const auto cycle_found = find_hamiltonian_cycle(g);
    if (!cycle_found) continue;
    const auto inst = triangulate_family(g, *cycle_found);
    const int n = g.order();
    const int m = g.size();
    CHECK(inst.derived.order() == m);
    CHECK(inst.derived.size() == 3 * m - 2 * n);
    CHECK(inst.f.total() == 2 * n - m);
    CHECK(ref_is_sedf(inst.derived, to_ints(inst.f)));
    CHECK(satisfies_two_connected_premise(inst.derived));
  }
}

TEST_CASE("cli family") {
  const auto r = run_cli({"family"}, "D~{\n");
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.out.rfind("derived ", 0) == 0);
  CHECK(r.out.find("total 0 method family/canonical bound 0") != std::string::npos);
  const std::string cert = r.out.substr(r.out.find('\n') + 1);
  CHECK(run_cli({"verify"}, cert).code == cli::kExitOk);
  CHECK(run_cli({"family", "--cycle", "0 2 1 3 4"}, "D~{\n").code == cli::kExitOk);
  CHECK(run_cli({"family"}, "Dhc\n").code == cli::kExitUsage);
}
