#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotarc/diagram.hpp"

namespace knotarc {

/// A filtered tree of a diagram: root crossing plus an ordered edge list
/// whose prefixes are all trees. Edge ids are canonical dart ids.
struct FilteredTree {
  int root = 0;
  std::vector<int> edges;
};

enum class EdgeClass { Good, Bad, Neutral };

enum class ExtensionTag { Good, B1, B2, B3 };

/// Witness data for a non-good extension: the bad edge and its tree-side
/// endpoint (B1), or an innermost cutting arc (B2/B3).
struct CuttingArc {
  int face = -1;        // face id of the chord
  int corner_p = -1;    // face-walk dart at the new vertex
  int corner_c = -1;    // face-walk dart at the older tree vertex
  int vertex_c = -1;
  // side flags per edge: 0/1 = side of the cycle, -1 = on the cycle
  std::vector<int> edge_side;
  int side_of_ebar = -1;       // transversal edge just ccw of e at p
  int side_of_eprime = -1;     // straight extension of e at p
  int side_of_ebar_prime = -1; // transversal edge just cw of e at p
};

struct ExtensionClass {
  ExtensionTag tag = ExtensionTag::Good;
  int bad_edge = -1;  // B1
  int bad_c = -1;     // B1: tree endpoint of the bad edge
  std::optional<CuttingArc> arc;  // B2/B3
};

/// Incremental filtered-tree state over a fixed diagram. Push/pop edges;
/// query closures, good/bad classification, cutting arcs and extensions.
class TreeCtx {
 public:
  explicit TreeCtx(const Diagram& d, int root);

  const Diagram& diagram() const { return *d_; }
  int root() const { return root_; }
  int size() const { return static_cast<int>(order_.size()); }  // edges so far
  const std::vector<int>& order() const { return order_; }
  bool spanning() const { return size() == d_->crossings() - 1; }
  FilteredTree tree() const { return {root_, order_}; }

  bool vertex_in_tree(int v) const { return vlevel_[v] >= 0; }
  int vertex_level(int v) const { return vlevel_[v]; }
  int new_vertex() const { return size() ? wstack_.back() : root_; }
  bool edge_in_tree(int e) const { return elevel_[e] >= 0; }
  /// Level at which a closure edge appeared, or -1.
  int entry_level(int e) const { return entry_[e]; }
  bool entry_good(int e) const { return entry_good_[e]; }

  /// Edges of closure(T_i) \ T_i for the current prefix.
  std::vector<int> closure_edges() const;
  /// Classification of a closure edge against the newest tree edge.
  EdgeClass classify_good_bad(int e) const;

  /// Innermost cutting arc of the current prefix, if any.
  std::optional<CuttingArc> find_cutting_arc() const;

  /// Would pushing `e` keep the filtered tree good? For the final spanning
  /// extension the bad-edge condition is waived (a bad edge always appears
  /// in the last closure).
  ExtensionClass classify_extension(int e) const;

  /// Good extension candidates; diagnostic via found count.
  std::vector<int> find_good_extensions() const;

  /// Candidate extension edges (incident to exactly one tree vertex).
  std::vector<int> extension_candidates() const;

  /// Nonalternating good closure edge whose tree cycle has one side
  /// containing only tree edges and good-entry closure edges.
  bool detect_doubly_good(int e) const;
  /// The machinery of detect_doubly_good without the nonalternating
  /// requirement: the cycle-side condition and the triangle condition.
  bool good_sided_cycle(int e) const;
  bool triangle_cycle(int e) const;

  void push(int e);
  void pop();

  /// Tree path between two tree vertices, as edge ids.
  std::vector<int> tree_path(int u, int v) const;

  /// Full independent re-check that every prefix is good (and spanning
  /// trees additionally have no final cutting arc). Used by tests.
  static bool verify_good(const Diagram& d, const FilteredTree& t,
                          std::string* why = nullptr);

 private:
  const Diagram* d_;
  int root_;
  FaceSet fs_;
  std::vector<int> order_;
  std::vector<int> vlevel_;      // crossing -> level joined (root: 0), -1 outside
  std::vector<int> elevel_;      // edge id -> tree level (1-based), -1
  std::vector<int> entry_;       // edge id -> closure entry level, -1
  std::vector<char> entry_good_; // valid where entry_ >= 0
  std::vector<int> parent_edge_; // crossing -> tree edge toward root
  std::vector<int> wstack_;      // new vertex per level

  struct SideColoring {
    std::vector<int> node_color;  // per face node (+1 extra for split face)
    int split_face = -1;
    int pos_p = -1, pos_c = -1;   // walk positions of the chord corners
    bool ok = false;
  };
  SideColoring color_cycle(const std::vector<int>& cycle_edges, int face,
                           int corner_p, int corner_c) const;
  int node_of(const SideColoring& sc, int dart) const;
  std::optional<CuttingArc> cutting_arc_at(int p, int exclude_level) const;
};

}  // namespace knotarc
