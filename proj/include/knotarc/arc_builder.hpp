#pragma once

#include <stdexcept>
#include <list>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "knotarc/grid.hpp"
#include "knotarc/tree.hpp"

namespace knotarc {

struct ArcBuildError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Replays the contraction sequence of a filtered spanning tree, keeping
/// the hub's rotation (page angles) and the relative heights of the
/// strand passes over the hub. Closure edges turn into loops at the hub;
/// simple loops fold into spokes (pages); designated doubly-good edges
/// retract instead, each saving one arc; the last loop folds over the top
/// into two pages.
class ArcBuilder {
 public:
  ArcBuilder(const Diagram& d, const FilteredTree& t,
             std::vector<int> retract_edges = {});

  /// Runs the whole replay. Throws ArcBuildError with a diagnostic when a
  /// designated retraction is infeasible or a loop never becomes simple.
  ArcPresentation build();

  int retractions_done() const { return retractions_; }
  /// Region+spoke sums recorded after every step (each must equal
  /// c + 2 - retractions at that point).
  const std::vector<std::pair<int, int>>& conservation_log() const {
    return conservation_log_;
  }

 private:
  struct Item {
    bool marker;
    int id;  // live dart or spoke id
  };
  struct Port {
    bool frozen = false;
    int id = -1;  // dart (live) or spoke id (frozen)
    int end = 0;
  };
  struct Pass {
    Port a, b;
    bool alive = true;
  };
  struct Spoke {
    int pass_end[2] = {-1, -1};
  };

  const Diagram& d_;
  FilteredTree tree_;
  std::set<int> retract_;
  std::list<Item> rot_;
  std::map<int, std::list<Item>::iterator> dart_item_;
  std::vector<std::list<Item>::iterator> spoke_item_;
  std::list<int> pos_;  // pass ids, bottom to top
  std::vector<Pass> passes_;
  std::vector<std::list<int>::iterator> pass_pos_;
  std::map<int, int> dart_pass_;
  std::vector<Spoke> spokes_;
  std::set<int> live_loops_;  // closure edges waiting to become spokes
  int contracted_ = 0;
  int retractions_ = 0;
  int removed_edges_ = 0;
  std::vector<std::pair<int, int>> conservation_log_;

  void init_root();
  void contract(int tree_edge);
  void scan_new_loops(const std::vector<int>& darts);
  bool process_loops(bool endgame);
  bool loop_clear_side(int edge, int* from_dart, bool allow_markers) const;
  bool try_freeze(int edge);
  bool try_retract(int edge);
  void final_fold(int edge);
  void check_conservation();
  int rot_index(const Port& p) const;
  bool interleaves(int a1, int a2, int b1, int b2, int circle) const;
  bool passes_interleave(int p, int q) const;
  bool make_adjacent(int p1, int p2);
  int order_first(int p1, int p2) const;
  GridDiagram assemble() const;
};

/// Arc presentation with c(D)+2 arcs from a good filtered spanning tree
/// (fewer when retract_edges are honored). The output grid is validated.
ArcPresentation arc_presentation_from_tree(const Diagram& d, const FilteredTree& t,
                                           std::vector<int> retract_edges = {},
                                           std::vector<std::pair<int, int>>*
                                               conservation_log = nullptr);

}  // namespace knotarc
