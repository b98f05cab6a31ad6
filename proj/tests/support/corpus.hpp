#pragma once

// The graph corpus in tests/data was written by networkx's graph atlas (every
// graph on 1..7 vertices up to isomorphism), see tests/data/generate_corpus.py.

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sedf/io.hpp"

#ifndef SEDF_TEST_DATA_DIR
#error "SEDF_TEST_DATA_DIR must be defined"
#endif

namespace sedf::testing {

inline std::vector<Graph> load_corpus(int max_order = 7) {
  const std::string path = std::string(SEDF_TEST_DATA_DIR) + "/atlas_upto7.g6";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<Graph> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    Graph g = io::parse_graph6(line);
    if (g.order() <= max_order) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace sedf::testing
