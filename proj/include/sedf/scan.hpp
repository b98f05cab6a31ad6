#pragma once

#include <istream>
#include <string>
#include <vector>

#include "sedf/constructors.hpp"

namespace sedf {

struct ScanOptions {
  int conjecture = 1;  // 1: gamma <= n-1, 2: SEDF0 minimum <= n-1, 3: gamma >= 2n-m
  Capacity capacity = Capacity::from_environment();
  int workers = 1;
};

struct ScanEntry {
  std::string graph6;
  int conjecture = 0;
  int observed = 0;
  int bound = 0;
};

struct ScanFailure {
  std::size_t line = 0;  // 1-based input line
  std::string message;
};

struct ScanReport {
  std::size_t graphs_processed = 0;      // parsed and checked
  std::size_t skipped_over_capacity = 0;
  std::size_t filtered = 0;              // premise of the conjecture not met
  std::vector<ScanEntry> counterexamples;
  std::vector<ScanEntry> tight_instances;
  std::vector<ScanFailure> parse_failures;
  double elapsed_seconds = 0;
};

/// Checks one conjecture on every graph6 line of `in`. Blank lines are
/// ignored; malformed lines are recorded and skipped. The report lists
/// entries in input order whatever the worker count.
ScanReport scan(std::istream& in, const ScanOptions& options);
ScanReport scan_lines(const std::vector<std::string>& lines, const ScanOptions& options);

/// Recomputes the observed value of a recorded entry.
int replay(const ScanEntry& entry, const Capacity& capacity = Capacity::from_environment());

}  // namespace sedf
