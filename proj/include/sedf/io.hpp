#pragma once

#include <string>
#include <string_view>

#include "sedf/assignment.hpp"
#include "sedf/constructors.hpp"
#include "sedf/graph.hpp"

namespace sedf::io {

/// Decodes one graph6 line (an optional ">>graph6<<" prefix and trailing
/// whitespace are accepted). Throws ParseError with the byte offset.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

/// "n m" followed by m pairs "u v", 0-based, any whitespace. Throws ParseError
/// on malformed or missing numbers and endpoints out of range, GraphError on
/// self-loops.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

/// Line format:
///   total <T> method <tag> bound <B>
///   edge <u> <v> <+1|-1>          (canonical edge order)
///   vertex <v> weight <w>
///   verdict SEDF0=<bool> SEDF=<bool>
std::string emit_certificate(const Certificate& c);

struct ParsedCertificate {
  Graph graph;
  SignAssignment f;
  int total = 0;
  std::string method;
  int bound = 0;
  bool sedf0 = false;
  bool sedf = false;
};

/// Reads the emit_certificate format back. The vertex count is taken from the
/// vertex lines. Throws ParseError (offset = line number) on malformed text.
ParsedCertificate parse_certificate(std::string_view text);

}  // namespace sedf::io
