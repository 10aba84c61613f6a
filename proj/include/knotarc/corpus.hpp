#pragma once

#include <map>
#include <string>
#include <vector>

#include "knotarc/grid.hpp"

namespace knotarc {

struct CorpusEntry {
  std::string name;      // knot label, e.g. 13n0563
  std::string category;  // e.g. (2,1)-nonalternating
  int expected_columns = 0;
  GridDiagram grid;
  std::string file;
};

struct CorpusCheck {
  struct Row {
    std::string name, category, file;
    int columns = 0, expected = 0;
    bool pass = false;
    std::vector<std::string> problems;
  };
  std::vector<Row> rows;
  std::map<std::string, std::pair<int, int>> per_category;  // pass/total
  bool all_pass = true;
  std::string text() const;
  std::string json() const;
};

/// Loads every .grid file in the directory; metadata comes from comment
/// headers (`# name:`, `# category:`, `# expected-columns:`).
std::vector<CorpusEntry> load_corpus(const std::string& dir);

/// Validates each entry (grid invariants, single component, expected
/// column count); order-independent, sorted by name.
CorpusCheck corpus_check(const std::string& dir);

}  // namespace knotarc
