#include "sedf/scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <optional>
#include <thread>

#include "sedf/errors.hpp"
#include "sedf/exact.hpp"
#include "sedf/io.hpp"

namespace sedf {

namespace {

enum class Outcome { blank, parse_failure, over_capacity, filtered, holds, tight, counterexample };

struct LineResult {
  Outcome outcome = Outcome::blank;
  ScanEntry entry;
  std::string message;
};

int observe(const Graph& g, int conjecture, const Capacity& cap) {
  if (conjecture == 2) return gamma_sedf0_exact(g, cap.exact_edges).value;
  return gamma_exact(g, cap.exact_edges).value;
}

LineResult check_line(const std::string& line, int conjecture, const Capacity& cap) {
  LineResult r;
  if (line.find_first_not_of(" \t\r\n") == std::string::npos) return r;
  Graph g;
  try {
    g = io::parse_graph6(line);
  } catch (const Error& e) {
    r.outcome = Outcome::parse_failure;
    r.message = e.what();
    return r;
  }
  const int n = g.order();
  const int m = g.size();
  r.entry.graph6 = io::emit_graph6(g);
  r.entry.conjecture = conjecture;
  if (n == 0 || (conjecture == 3 && !satisfies_two_connected_premise(g))) {
    r.outcome = Outcome::filtered;
    return r;
  }
  if (m > cap.exact_edges) {
    r.outcome = Outcome::over_capacity;
    return r;
  }
  r.entry.observed = observe(g, conjecture, cap);
  if (conjecture == 3) {
    r.entry.bound = 2 * n - m;
    r.outcome = r.entry.observed < r.entry.bound    ? Outcome::counterexample
                : r.entry.observed == r.entry.bound ? Outcome::tight
                                                    : Outcome::holds;
  } else {
    r.entry.bound = n - 1;
    r.outcome = r.entry.observed > r.entry.bound    ? Outcome::counterexample
                : r.entry.observed == r.entry.bound ? Outcome::tight
                                                    : Outcome::holds;
  }
  return r;
}

}  // namespace

ScanReport scan_lines(const std::vector<std::string>& lines, const ScanOptions& options) {
  if (options.conjecture < 1 || options.conjecture > 3) throw PreconditionError("conjecture must be 1, 2 or 3");
  const auto started = std::chrono::steady_clock::now();

  std::vector<LineResult> results(lines.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < lines.size(); i = next++) {
      results[i] = check_line(lines[i], options.conjecture, options.capacity);
    }
  };
  const int workers = std::max(1, options.workers);
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  ScanReport report;
  for (std::size_t i = 0; i < results.size(); ++i) {
    LineResult& r = results[i];
    switch (r.outcome) {
      case Outcome::blank:
        break;
      case Outcome::parse_failure:
        report.parse_failures.push_back({i + 1, std::move(r.message)});
        break;
      case Outcome::over_capacity:
        ++report.skipped_over_capacity;
        break;
      case Outcome::filtered:
        ++report.filtered;
        break;
      case Outcome::holds:
        ++report.graphs_processed;
        break;
      case Outcome::tight:
        ++report.graphs_processed;
        report.tight_instances.push_back(std::move(r.entry));
        break;
      case Outcome::counterexample:
        ++report.graphs_processed;
        report.counterexamples.push_back(std::move(r.entry));
        break;
    }
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

ScanReport scan(std::istream& in, const ScanOptions& options) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(std::move(line));
  return scan_lines(lines, options);
}

int replay(const ScanEntry& entry, const Capacity& capacity) {
  return observe(io::parse_graph6(entry.graph6), entry.conjecture, capacity);
}

}  // namespace sedf
