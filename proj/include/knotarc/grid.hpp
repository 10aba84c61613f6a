#pragma once

#include <string>
#include <utility>
#include <vector>

#include "knotarc/diagram.hpp"

namespace knotarc {

/// Grid diagram: n columns, each holding the two row indices of its
/// vertical segment endpoints. Rows implicitly carry two marks each.
/// At every crossing the vertical strand passes over the horizontal one.
struct GridDiagram {
  int n = 0;
  std::vector<std::pair<int, int>> columns;  // unordered row pairs

  static GridDiagram make(std::vector<std::pair<int, int>> cols) {
    GridDiagram g;
    g.n = static_cast<int>(cols.size());
    g.columns = std::move(cols);
    return g;
  }
};

/// Empty list means valid.
std::vector<std::string> validate(const GridDiagram& g);
inline bool grid_valid(const GridDiagram& g) { return validate(g).empty(); }

/// The planar knot diagram of the grid drawing; marks become corners,
/// interleaving column/row pairs become crossings (vertical over).
Diagram to_planar_diagram(const GridDiagram& g);

/// Independent crossing-count oracle: brute-force interleaving test over
/// all column x row pairs.
int interleaving_count(const GridDiagram& g);

/// Arc presentation: n half-plane pages in cyclic order, one arc per page,
/// arcs joined at n binding heights. Canonically stored as the grid whose
/// columns are the pages and whose rows are the heights.
struct ArcPresentation {
  GridDiagram grid;
  int arcs() const { return grid.n; }
};

GridDiagram from_arc_presentation(const ArcPresentation& a);

/// Splice two grids along one deleted column of each; the result has
/// n1 + n2 - 2 columns and represents the connected sum.
GridDiagram connected_sum(const GridDiagram& g1, const GridDiagram& g2);

struct CornerSpec {
  int column = 0;
  bool upper = false;  // subdivide near the upper mark instead of the lower
};

/// Subdivide one vertical segment through a fresh row and column; the
/// drawing is unchanged up to isotopy and the grid grows by one.
GridDiagram stabilize(const GridDiagram& g, const CornerSpec& c);

/// Cyclic translations (torus moves, knot-type preserving).
GridDiagram translate_rows(const GridDiagram& g, int k);
GridDiagram translate_cols(const GridDiagram& g, int k);

GridDiagram parse_grid(const std::string& text);  // throws std::runtime_error
std::string write_grid(const GridDiagram& g);
std::string write_grid_json(const GridDiagram& g);

std::string render(const GridDiagram& g, const std::string& format);  // "ascii"|"svg"

}  // namespace knotarc
