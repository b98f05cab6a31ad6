#include "sedf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <iterator>
#include <sstream>

#include "sedf/constructors.hpp"
#include "sedf/errors.hpp"
#include "sedf/exact.hpp"
#include "sedf/family.hpp"
#include "sedf/io.hpp"
#include "sedf/scan.hpp"

namespace sedf::cli {

namespace {

struct Options {
  std::string format = "g6";
  std::string method = "auto";
  int conjecture = 1;
  int capacity = 0;  // 0 = defaults / $SEDF_CAPACITY
  int workers = 1;
  bool sedf0 = false;
  std::string cycle;
};

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Graph read_graph(std::istream& in, const std::string& format) {
  const std::string text = read_all(in);
  if (format == "edges") return io::parse_edge_list(text);
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) return io::parse_graph6(line);
  }
  throw ParseError("no graph6 line on input", text.size());
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Capacity capacity_of(const Options& o) {
  return o.capacity > 0 ? Capacity::uniform(o.capacity) : Capacity::from_environment();
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  const io::ParsedCertificate parsed = io::parse_certificate(read_all(in));
  const VerificationVerdict v = verify(parsed.graph, parsed.f);
  const int total = parsed.f.total();
  out << "recomputed total " << total << " SEDF0=" << (v.is_sedf0 ? "true" : "false")
      << " SEDF=" << (v.is_sedf ? "true" : "false") << '\n';
  for (const Violation& x : v.violations) {
    out << "violation " << (x.on_edge ? "edge " : "vertex ") << x.index << ' ' << to_string(x.rule) << " observed "
        << x.observed << '\n';
  }
  const bool consistent = total == parsed.total && v.is_sedf0 == parsed.sedf0 && v.is_sedf == parsed.sedf;
  if (!consistent) out << "mismatch: embedded total or verdict differs from recomputation\n";
  const bool accepted = o.sedf0 ? v.is_sedf0 : v.is_sedf;
  return consistent && accepted ? kExitOk : kExitFailure;
}

int cmd_construct(const Options& o, std::istream& in, std::ostream& out) {
  const auto method = parse_method(o.method);
  if (!method) throw PreconditionError("unknown method " + o.method);
  const Graph g = read_graph(in, o.format);
  out << io::emit_certificate(construct(g, *method, capacity_of(o)));
  return kExitOk;
}

int cmd_exact(const Options& o, std::istream& in, std::ostream& out) {
  const Graph g = read_graph(in, o.format);
  const Capacity cap = capacity_of(o);
  const ExactResult r = o.sedf0 ? gamma_sedf0_exact(g, cap.exact_edges) : gamma_exact(g, cap.exact_edges);
  out << (o.sedf0 ? "gamma_sedf0 " : "gamma ") << r.value << '\n';
  return kExitOk;
}

int cmd_bounds(const Options& o, std::istream& in, std::ostream& out) {
  const Graph g = read_graph(in, o.format);
  const BoundTable t = bound_table(g, capacity_of(o).exact_edges);
  for (const BoundEntry& e : t.entries) {
    out << to_string(e.kind) << ' ' << e.label << " = " << format_rational(e.value) << "  # " << e.provenance << '\n';
  }
  return kExitOk;
}

int cmd_scan(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  ScanOptions so;
  so.conjecture = o.conjecture;
  so.capacity = capacity_of(o);
  so.workers = o.workers;
  const ScanReport r = scan(in, so);
  for (const ScanFailure& f : r.parse_failures) err << "line " << f.line << ": " << f.message << '\n';
  for (const ScanEntry& e : r.counterexamples) {
    out << "counterexample " << e.graph6 << " conjecture " << e.conjecture << " observed " << e.observed << " bound "
        << e.bound << '\n';
  }
  out << "conjecture " << o.conjecture << " processed " << r.graphs_processed << " counterexamples "
      << r.counterexamples.size() << " tight " << r.tight_instances.size() << " filtered " << r.filtered
      << " skipped_over_capacity " << r.skipped_over_capacity << " parse_failures " << r.parse_failures.size()
      << " elapsed " << r.elapsed_seconds << "s\n";
  return r.counterexamples.empty() ? kExitOk : kExitFailure;
}

int cmd_family(const Options& o, std::istream& in, std::ostream& out) {
  const Graph g = read_graph(in, o.format);
  std::vector<Vertex> cycle;
  if (!o.cycle.empty()) {
    std::istringstream s(o.cycle);
    for (Vertex v; s >> v;) cycle.push_back(v);
  } else if (auto found = find_hamiltonian_cycle(g)) {
    cycle = *found;
  } else {
    throw PreconditionError("graph has no Hamiltonian cycle");
  }
  const TriangulationFamilyInstance inst = triangulate_family(g, cycle);
  const int bound = 2 * inst.derived.order() - inst.derived.size();
  out << "derived " << (o.format == "edges" ? io::emit_edge_list(inst.derived) : io::emit_graph6(inst.derived) + "\n");
  out << io::emit_certificate(make_certificate(inst.derived, inst.f, "family/canonical", bound));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Signed edge domination: construct, verify and compute exactly"};
  app.name("sedf");
  app.require_subcommand(1);

  auto add_graph_options = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "input graph format")->check(CLI::IsMember({"g6", "edges"}));
    sub->add_option("--capacity", o.capacity, "edge capacity of the search routines")->check(CLI::PositiveNumber);
  };

  auto* verify_cmd = app.add_subcommand("verify", "re-verify a certificate read from stdin");
  verify_cmd->add_flag("--sedf0", o.sedf0, "require SEDF0 rather than SEDF");

  auto* construct_cmd = app.add_subcommand("construct", "build a certificate for a graph read from stdin");
  add_graph_options(construct_cmd);
  construct_cmd->add_option("--method", o.method, "constructor")
      ->check(CLI::IsMember({"auto", "odd-bound", "even-count", "two-even", "kmn", "all-odd", "even-zero-two"}));

  auto* exact_cmd = app.add_subcommand("exact", "exact minimum by branch and bound");
  add_graph_options(exact_cmd);
  exact_cmd->add_flag("--sedf0", o.sedf0, "minimize over SEDF0 instead of SEDF");

  auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bounds for a graph");
  add_graph_options(bounds_cmd);

  auto* scan_cmd = app.add_subcommand("scan", "check a conjecture on a stream of graph6 lines");
  scan_cmd->add_option("--conjecture", o.conjecture, "1: gamma <= n-1, 2: SEDF0 <= n-1, 3: gamma >= 2n-m")
      ->check(CLI::Range(1, 3));
  scan_cmd->add_option("--capacity", o.capacity, "graphs with more edges are skipped")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);

  auto* family_cmd = app.add_subcommand("family", "triangulated Hamiltonian family instance");
  add_graph_options(family_cmd);
  family_cmd->add_option("--cycle", o.cycle, "Hamiltonian cycle as space-separated vertices");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (verify_cmd->parsed()) return cmd_verify(o, in, out);
    if (construct_cmd->parsed()) return cmd_construct(o, in, out);
    if (exact_cmd->parsed()) return cmd_exact(o, in, out);
    if (bounds_cmd->parsed()) return cmd_bounds(o, in, out);
    if (scan_cmd->parsed()) return cmd_scan(o, in, out, err);
    if (family_cmd->parsed()) return cmd_family(o, in, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GraphError& e) {
    err << "invalid graph: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sedf::cli
