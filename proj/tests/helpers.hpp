#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "knotarc/diagram.hpp"
#include "knotarc/grid.hpp"
#include "knotarc/moves.hpp"

namespace knotarc::testing {

struct End {
  int v, s;
};

inline Diagram make_diagram(int n, const std::vector<std::pair<End, End>>& edges,
                            const std::vector<int>& axes) {
  Diagram d;
  d.axis.assign(n, 0);
  for (int v = 0; v < n && v < static_cast<int>(axes.size()); ++v)
    d.axis[v] = static_cast<uint8_t>(axes[v]);
  d.mate.assign(4 * n, -1);
  for (auto& [a, b] : edges) {
    int da = 4 * a.v + a.s, db = 4 * b.v + b.s;
    if (d.mate[da] >= 0 || d.mate[db] >= 0)
      throw std::runtime_error("duplicate slot in edge list");
    d.mate[da] = db;
    d.mate[db] = da;
  }
  for (int dd = 0; dd < 4 * n; ++dd)
    if (d.mate[dd] < 0) throw std::runtime_error("unused slot in edge list");
  return d;
}

/// Pretzel diagram P(p1, p2, p3): three vertical twist regions closed top
/// and bottom. Positive entries twist one way, negative the other.
/// Slots at every crossing: 0=NE, 1=NW, 2=SW, 3=SE (counterclockwise).
inline Diagram pretzel(int p1, int p2, int p3) {
  std::array<int, 3> sizes{std::abs(p1), std::abs(p2), std::abs(p3)};
  std::array<int, 3> sign{p1 > 0, p2 > 0, p3 > 0};
  int n = sizes[0] + sizes[1] + sizes[2];
  std::vector<int> axes(n);
  std::vector<std::pair<End, End>> edges;
  std::array<std::vector<int>, 3> ids;
  int next = 0;
  for (int r = 0; r < 3; ++r) {
    for (int k = 0; k < sizes[r]; ++k) {
      // positive region: NW-SE strand over => under axis {NE, SW} = slots {0,2}
      axes[next] = sign[r] ? 0 : 1;
      ids[r].push_back(next++);
    }
    if (ids[r].empty()) throw std::runtime_error("empty pretzel region");
    for (int k = 0; k + 1 < sizes[r]; ++k) {
      edges.push_back({{ids[r][k], 2}, {ids[r][k + 1], 1}});  // SW - NW
      edges.push_back({{ids[r][k], 3}, {ids[r][k + 1], 0}});  // SE - NE
    }
  }
  for (int r = 0; r < 3; ++r) {
    int rn = (r + 1) % 3;
    edges.push_back({{ids[r].front(), 0}, {ids[rn].front(), 1}});  // top arcs
    edges.push_back({{ids[r].back(), 3}, {ids[rn].back(), 2}});    // bottom arcs
  }
  return make_diagram(n, edges, axes);
}

/// Closure of the 3-strand braid given as a generator word, entries 1 or 2
/// (always positive crossings: the left strand passes over).
inline Diagram braid3_closure(const std::vector<int>& word) {
  int n = static_cast<int>(word.size());
  // slots: 0=NE, 1=NW, 2=SW, 3=SE; over strand NW-SE => axis 0
  std::vector<int> axes(n, 0);
  std::vector<std::pair<End, End>> edges;
  // positions 1..3 carry the strand between crossings; track the dangling
  // output end per position, wrap at the end
  std::vector<End> dangling(4, End{-1, -1});
  std::vector<End> first_in(4, End{-1, -1});
  for (int k = 0; k < n; ++k) {
    int p = word[k];  // uses positions p, p+1
    End in_l{k, 1}, in_r{k, 0};   // NW takes position p, NE takes p+1
    End out_l{k, 2}, out_r{k, 3}; // SW gives p, SE gives p+1
    for (auto [pos, end] : {std::pair<int, End>{p, in_l}, {p + 1, in_r}}) {
      if (dangling[pos].v < 0)
        first_in[pos] = end;
      else
        edges.push_back({dangling[pos], end});
      dangling[pos] = End{-1, -1};
    }
    dangling[p] = out_l;
    dangling[p + 1] = out_r;
  }
  for (int pos = 1; pos <= 3; ++pos) {
    if (dangling[pos].v < 0 || first_in[pos].v < 0)
      throw std::runtime_error("braid word leaves a position unused");
    edges.push_back({dangling[pos], first_in[pos]});
  }
  return make_diagram(n, edges, axes);
}

struct Rnd {
  uint64_t s = 1;
  uint64_t operator()() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
};

/// Random prime knot diagrams with a bounded crossing count, produced from
/// random valid grids and reduced.
inline std::vector<Diagram> random_prime_diagrams(int count, int max_crossings,
                                                  uint64_t seed) {
  Rnd rnd{seed};
  std::vector<Diagram> out;
  int guard = 0;
  while (static_cast<int>(out.size()) < count && guard++ < 20000) {
    int n = 4 + static_cast<int>(rnd() % 4);
    std::vector<int> rows1(n), rows2(n);
    for (int i = 0; i < n; ++i) rows1[i] = rows2[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(rows1[i], rows1[rnd() % (i + 1)]);
    for (int i = n - 1; i > 0; --i) std::swap(rows2[i], rows2[rnd() % (i + 1)]);
    std::vector<std::pair<int, int>> cols(n);
    for (int i = 0; i < n; ++i) cols[i] = {rows1[i], rows2[i]};
    GridDiagram g = GridDiagram::make(cols);
    if (!grid_valid(g)) continue;
    Diagram d = simplify_r1r2(to_planar_diagram(g));
    if (d.crossings() < 3 || d.crossings() > max_crossings) continue;
    if (!d.is_knot() || !prime_shadow(d)) continue;
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace knotarc::testing
