#pragma once

#include <stdexcept>
#include <cstdint>
#include <optional>
#include <vector>

#include "knotarc/arc_builder.hpp"
#include "knotarc/tree.hpp"

namespace knotarc {

struct ConstructOptions {
  int node_budget = 200000;
  uint64_t seed = 1;
  bool want_log = false;
};

struct ConstructError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Greedy growth with backtracking; every prefix is a good filtered tree
/// and the result has no final cutting arc. Throws ConstructError when the
/// search exhausts its budget (non-prime input or bug).
FilteredTree build_good_spanning_tree(const Diagram& d, int root = -1,
                                      const ConstructOptions& opt = {});

/// Good extension sequence swallowing the near side of the witness curve
/// of a B2/B3 extension; for B3 the sequence ends with the edge itself.
/// Throws ConstructError if the extension is Good or B1 (caller misuse) or
/// the search fails.
std::vector<int> jin_park_detour(const Diagram& d, const FilteredTree& t_m, int e);

struct Construction {
  FilteredTree tree;
  std::vector<int> retracted;  // doubly-good edges saved as arcs
  ArcPresentation arc;
  std::vector<std::pair<int, int>> conservation;
};

/// Arc presentation with c+2 arcs via a good filtered spanning tree.
Construction construct_plus_two(const Diagram& d, const ConstructOptions& opt = {});

/// Arc presentation with exactly c arcs for a prime nonalternating
/// minimal diagram: a good spanning tree with two doubly-good edges, both
/// retracted during assembly.
Construction construct_nonalternating(const Diagram& d, const ConstructOptions& opt = {});

/// Arc presentation with at most c-1 arcs: type-3 move over the given
/// nonalternating triangular face, then a good spanning tree of the moved
/// diagram acquiring three doubly-good edges. Returns the moved diagram too.
struct MinusOneResult {
  Diagram moved;
  Construction construction;
};
MinusOneResult construct_minus_one(const Diagram& d, int f3_face,
                                   const ConstructOptions& opt = {});

/// All doubly-good closure edges of a completed tree, by entry level.
std::vector<int> doubly_good_edges(const Diagram& d, const FilteredTree& t);

}  // namespace knotarc
