#include <doctest.h>

#include "sedf/constructors.hpp"
#include "sedf/errors.hpp"
#include "sedf/io.hpp"
#include "support/corpus.hpp"
#include "support/generators.hpp"
#include "support/named_graphs.hpp"

using namespace sedf;
using namespace sedf::testing;

namespace {

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

// Reference decodes computed independently with networkx.
TEST_CASE("parse_graph6 frozen decodes") {
  CHECK(io::parse_graph6("A_") == build_graph(2, {{0, 1}}));
  const Graph e5 = io::parse_graph6("D??");
  CHECK(e5.order() == 5);
  CHECK(e5.size() == 0);
  CHECK(io::parse_graph6("Bw") == complete(3));
  CHECK(io::parse_graph6("C~") == complete(4));
  CHECK(io::parse_graph6("IheA@GUAo") == build_graph(10, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4},
                                                         {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}}));
  CHECK(io::parse_graph6("Dhc") == cycle(5));
  CHECK(io::parse_graph6("D]o") == build_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}));
  CHECK(io::parse_graph6(">>graph6<<A_\n") == build_graph(2, {{0, 1}}));
  CHECK(io::parse_graph6("?").order() == 0);
}

TEST_CASE("parse_graph6 errors") {
  CHECK_THROWS_AS(io::parse_graph6(""), ParseError);
  CHECK_THROWS_AS(io::parse_graph6("A!"), ParseError);   // byte below 63 in the body
  CHECK_THROWS_AS(io::parse_graph6("A"), ParseError);    // body too short
  CHECK_THROWS_AS(io::parse_graph6("A__"), ParseError);  // body too long
  CHECK_THROWS_AS(io::parse_graph6("Aa"), ParseError);   // nonzero padding bits
  try {
    io::parse_graph6("C!");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 1);
  }
}

TEST_CASE("graph6 round-trip on the corpus and larger graphs") {
  for (const Graph& g : load_corpus(7)) REQUIRE(io::parse_graph6(io::emit_graph6(g)) == g);
  Rng rng(8);
  for (int n : {8, 20, 62, 63, 64, 100, 300}) {
    const Graph g = random_graph(rng, n, 0.1);
    const std::string text = io::emit_graph6(g);
    if (n >= 63) CHECK(text[0] == '~');
    REQUIRE(io::parse_graph6(text) == g);
  }
  CHECK(io::emit_graph6(build_graph(2, {{0, 1}})) == "A_");
  CHECK(io::emit_graph6(complete(4)) == "C~");
}

TEST_CASE("parse_edge_list") {
  CHECK(io::parse_edge_list("2 1\n0 1") == build_graph(2, {{0, 1}}));
  CHECK(io::parse_edge_list("3 3\n0 1\n1 2\n0 2") == complete(3));
  CHECK(io::parse_edge_list("  3\t3 0 1\n\n 1 2 0 2\n") == complete(3));
  CHECK_THROWS_AS(io::parse_edge_list("2 1\n0 2"), ParseError);
  CHECK_THROWS_AS(io::parse_edge_list("2 2\n0 1"), ParseError);
  CHECK_THROWS_AS(io::parse_edge_list("x"), ParseError);
  CHECK_THROWS_AS(io::parse_edge_list("2 1\n1 1"), GraphError);
  const Graph pet = petersen();
  CHECK(io::parse_edge_list(io::emit_edge_list(pet)) == pet);
}

TEST_CASE("emit_certificate") {
  const Graph k2 = build_graph(2, {{0, 1}});
  const std::string k2_text = io::emit_certificate(make_certificate(k2, SignAssignment::all_plus(k2), "all-plus", 1));
  CHECK(k2_text.rfind("total 1 method all-plus bound 1\n", 0) == 0);
  CHECK(k2_text.find("edge 0 1 +1\n") != std::string::npos);
  CHECK(k2_text.find("verdict SEDF0=true SEDF=true\n") != std::string::npos);
  CHECK(count_lines(k2_text) == 5);  // header, one edge, two vertices, footer

  const Graph none;
  const std::string empty_text = io::emit_certificate(make_certificate(none, SignAssignment(), "empty", 0));
  CHECK(count_lines(empty_text) == 2);

  const auto paw_c = two_even_sedf(paw());
  REQUIRE(paw_c.total == 2);
  const std::string paw_text = io::emit_certificate(paw_c);
  int minus_lines = 0;
  for (std::size_t at = 0; (at = paw_text.find(" -1\n", at)) != std::string::npos; ++at) ++minus_lines;
  CHECK(minus_lines == 1);
}

TEST_CASE("certificates re-parse and re-verify to the embedded verdict") {
  Rng rng(12);
  for (const Graph& g : load_corpus(6)) {
    const auto f = random_assignment(rng, g, 0.3);
    const auto c = make_certificate(g, f, "random", g.size());
    const auto p = io::parse_certificate(io::emit_certificate(c));
    REQUIRE(p.graph == g);
    CHECK(p.f == f);
    CHECK(p.total == c.total);
    CHECK(p.method == "random");
    CHECK(p.sedf0 == verify(p.graph, p.f).is_sedf0);
    CHECK(p.sedf == verify(p.graph, p.f).is_sedf);
  }
  CHECK_THROWS_AS(io::parse_certificate("total x\n"), ParseError);
  CHECK_THROWS_AS(io::parse_certificate("total 1 method m bound 1\nedge 0 1 +2\n"), ParseError);
}
