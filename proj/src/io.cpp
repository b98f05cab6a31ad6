#include "sedf/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

#include "sedf/errors.hpp"

namespace sedf::io {

namespace {

constexpr std::string_view kGraph6Prefix = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  return s;
}

int graph6_byte(std::string_view s, std::size_t i, std::size_t base) {
  if (i >= s.size()) throw ParseError("graph6: unexpected end of input", base + i);
  const int b = static_cast<unsigned char>(s[i]);
  if (b < 63 || b > 126) throw ParseError("graph6: byte " + std::to_string(b) + " outside 63..126", base + i);
  return b - 63;
}

// Splits on whitespace, remembering where each token started.
struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back({s.substr(start, i - start), start});
  }
  return out;
}

long long to_number(const Token& t) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
    throw ParseError("expected an integer, got '" + std::string(t.text) + "'", t.offset);
  }
  return v;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  std::size_t base = 0;
  line = trim(line);
  if (line.starts_with(kGraph6Prefix)) {
    line.remove_prefix(kGraph6Prefix.size());
    base = kGraph6Prefix.size();
  }
  if (line.empty()) throw ParseError("graph6: empty line", base);

  long long n = 0;
  std::size_t pos = 0;
  const int first = graph6_byte(line, 0, base);
  if (first < 63) {
    n = first;
    pos = 1;
  } else if (line.size() > 1 && graph6_byte(line, 1, base) == 63) {
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | graph6_byte(line, i, base);
    pos = 8;
  } else {
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | graph6_byte(line, i, base);
    pos = 4;
  }
  if (n > 100000) throw ParseError("graph6: order " + std::to_string(n) + " is too large", base);

  const long long bits = n * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() != expected) {
    throw ParseError("graph6: expected " + std::to_string(expected) + " bytes, got " + std::to_string(line.size()),
                     base + std::min(line.size(), expected));
  }

  std::vector<std::pair<Vertex, Vertex>> edges;
  long long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = graph6_byte(line, pos + static_cast<std::size_t>(k / 6), base);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  for (; k % 6 != 0; ++k) {
    const std::size_t at = pos + static_cast<std::size_t>(k / 6);
    if ((graph6_byte(line, at, base) >> (5 - k % 6)) & 1) throw ParseError("graph6: nonzero padding bits", base + at);
  }
  return build_graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n < 258048) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  const auto tokens = tokenize(text);
  if (tokens.size() < 2) throw ParseError("edge list: missing 'n m' header", text.size());
  const long long n = to_number(tokens[0]);
  const long long m = to_number(tokens[1]);
  if (n < 0 || m < 0) throw ParseError("edge list: negative count", tokens[n < 0 ? 0 : 1].offset);
  if (static_cast<long long>(tokens.size()) != 2 + 2 * m) {
    throw ParseError("edge list: header announces " + std::to_string(m) + " edges, found " +
                         std::to_string((static_cast<long long>(tokens.size()) - 2) / 2) + " endpoint pairs",
                     tokens.back().offset);
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (long long i = 0; i < m; ++i) {
    const Token& a = tokens[2 + 2 * i];
    const Token& b = tokens[3 + 2 * i];
    const long long u = to_number(a);
    const long long v = to_number(b);
    if (u < 0 || u >= n) throw ParseError("edge list: vertex " + std::to_string(u) + " out of range", a.offset);
    if (v < 0 || v >= n) throw ParseError("edge list: vertex " + std::to_string(v) + " out of range", b.offset);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return build_graph(static_cast<int>(n), edges);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string emit_certificate(const Certificate& c) {
  std::ostringstream out;
  out << "total " << c.total << " method " << c.method << " bound " << c.claimed_bound << '\n';
  for (EdgeId e = 0; e < c.graph.size(); ++e) {
    const Edge& ed = c.graph.edge(e);
    out << "edge " << ed.u << ' ' << ed.v << ' ' << (c.f[e] == Sign::plus ? "+1" : "-1") << '\n';
  }
  const auto w = vertex_weights(c.graph, c.f);
  for (Vertex v = 0; v < c.graph.order(); ++v) out << "vertex " << v << " weight " << w[v] << '\n';
  out << "verdict SEDF0=" << (c.verdict.is_sedf0 ? "true" : "false") << " SEDF=" << (c.verdict.is_sedf ? "true" : "false")
      << '\n';
  return out.str();
}

ParsedCertificate parse_certificate(std::string_view text) {
  ParsedCertificate out;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Sign> signs;
  int vertices = 0;
  bool header = false;
  bool footer = false;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty()) continue;
    const auto t = tokenize(line);
    auto fail = [&](const std::string& why) -> ParseError {
      return ParseError("certificate line " + std::to_string(line_no) + ": " + why, line_no);
    };
    if (footer) throw fail("text after the verdict line");

    if (t[0].text == "total") {
      if (header || t.size() != 6 || t[2].text != "method" || t[4].text != "bound") throw fail("bad header");
      out.total = static_cast<int>(to_number(t[1]));
      out.method = std::string(t[3].text);
      out.bound = static_cast<int>(to_number(t[5]));
      header = true;
    } else if (t[0].text == "edge") {
      if (!header || t.size() != 4) throw fail("bad edge line");
      edges.emplace_back(static_cast<Vertex>(to_number(t[1])), static_cast<Vertex>(to_number(t[2])));
      if (t[3].text == "+1") {
        signs.push_back(Sign::plus);
      } else if (t[3].text == "-1") {
        signs.push_back(Sign::minus);
      } else {
        throw fail("sign must be +1 or -1");
      }
    } else if (t[0].text == "vertex") {
      if (!header || t.size() != 4 || t[2].text != "weight") throw fail("bad vertex line");
      if (to_number(t[1]) != vertices) throw fail("vertex lines out of order");
      ++vertices;
    } else if (t[0].text == "verdict") {
      if (!header || t.size() != 3) throw fail("bad verdict line");
      auto flag = [&](const Token& tok, std::string_view key) {
        if (tok.text == std::string(key) + "=true") return true;
        if (tok.text == std::string(key) + "=false") return false;
        throw fail("bad verdict flag '" + std::string(tok.text) + "'");
      };
      out.sedf0 = flag(t[1], "SEDF0");
      out.sedf = flag(t[2], "SEDF");
      footer = true;
    } else {
      throw fail("unknown line kind '" + std::string(t[0].text) + "'");
    }
  }
  if (!header || !footer) throw ParseError("certificate: missing header or verdict line", line_no);

  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices) throw ParseError("certificate: edge endpoint out of range", 0);
  }
  out.graph = build_graph(vertices, edges);
  if (out.graph.size() != static_cast<int>(edges.size())) throw ParseError("certificate: repeated edge", 0);
  // Edge lines are expected in canonical order; place signs by lookup anyway.
  std::vector<Sign> placed(edges.size(), Sign::plus);
  for (std::size_t i = 0; i < edges.size(); ++i) placed[*out.graph.find_edge(edges[i].first, edges[i].second)] = signs[i];
  out.f = SignAssignment(std::move(placed));
  return out;
}

}  // namespace sedf::io
