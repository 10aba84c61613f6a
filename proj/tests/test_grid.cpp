#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "knotarc/grid.hpp"
#include "knotarc/kauffman.hpp"
#include "knotarc/moves.hpp"

using namespace knotarc;

namespace {
GridDiagram trefoil_grid() {
  return GridDiagram::make({{0, 2}, {1, 3}, {2, 4}, {0, 3}, {1, 4}});
}
GridDiagram unknot2() { return GridDiagram::make({{0, 1}, {0, 1}}); }
}  // namespace

TEST_SUITE_BEGIN("grid diagrams");

TEST_CASE("validation") {
  CHECK(grid_valid(trefoil_grid()));
  CHECK(grid_valid(unknot2()));
  auto two_comp = GridDiagram::make({{0, 1}, {2, 3}, {0, 1}, {2, 3}});
  auto bad = validate(two_comp);
  REQUIRE(!bad.empty());
  CHECK(bad[0].find("component") != std::string::npos);
  CHECK_FALSE(grid_valid(GridDiagram::make({{0, 0}, {0, 1}})));
  CHECK_FALSE(grid_valid(GridDiagram::make({{0, 1}})));
  CHECK_FALSE(grid_valid(GridDiagram::make({{0, 1}, {1, 2}, {0, 1}})));
}

TEST_CASE("trefoil grid to planar diagram") {
  GridDiagram g = trefoil_grid();
  CHECK(interleaving_count(g) == 3);
  Diagram d = to_planar_diagram(g);
  CHECK(d.crossings() == 3);
  CHECK(d.crossings() == interleaving_count(g));
  CHECK(d.planar());
  CHECK(d.is_knot());
  auto f = kauffman_polynomial(d);
  CHECK(v_spread(f) == 3);  // it is a trefoil
}

TEST_CASE("unknot grids") {
  Diagram d = to_planar_diagram(unknot2());
  CHECK(d.crossings() == 0);
  CHECK(d.free_loops == 1);
  CHECK(d.is_knot());
}

TEST_CASE("crossing count equals the interleaving oracle on random grids") {
  uint64_t s = 7;
  auto rnd = [&]() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  };
  int tested = 0;
  for (int trial = 0; trial < 400 && tested < 60; ++trial) {
    int n = 3 + static_cast<int>(rnd() % 8);  // up to 10
    std::vector<int> rows1(n), rows2(n);
    for (int i = 0; i < n; ++i) rows1[i] = rows2[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(rows1[i], rows1[rnd() % (i + 1)]);
    for (int i = n - 1; i > 0; --i) std::swap(rows2[i], rows2[rnd() % (i + 1)]);
    std::vector<std::pair<int, int>> cols(n);
    for (int i = 0; i < n; ++i) cols[i] = {rows1[i], rows2[i]};
    GridDiagram g = GridDiagram::make(cols);
    if (!grid_valid(g)) continue;
    ++tested;
    Diagram d = to_planar_diagram(g);
    CHECK(d.crossings() == interleaving_count(g));
    CHECK(d.planar());
    CHECK(d.is_knot());
  }
  CHECK(tested >= 30);
}

TEST_CASE("stabilization adds a column and keeps the polynomial") {
  GridDiagram g = trefoil_grid();
  auto f0 = kauffman_polynomial(to_planar_diagram(g));
  for (int c = 0; c < g.n; ++c) {
    for (bool upper : {false, true}) {
      GridDiagram st = stabilize(g, {c, upper});
      REQUIRE(grid_valid(st));
      CHECK(st.n == g.n + 1);
      CHECK(kauffman_polynomial(to_planar_diagram(st)) == f0);
    }
  }
  GridDiagram u = stabilize(unknot2(), {0, false});
  CHECK(u.n == 3);
  CHECK(grid_valid(u));
  // double stabilization still validates
  CHECK(grid_valid(stabilize(u, {1, true})));
}

TEST_CASE("translation invariance of the polynomial") {
  GridDiagram g = trefoil_grid();
  auto f0 = kauffman_polynomial(to_planar_diagram(g));
  for (int k = 1; k < g.n; ++k) {
    GridDiagram r = translate_rows(g, k);
    GridDiagram c = translate_cols(g, k);
    REQUIRE(grid_valid(r));
    REQUIRE(grid_valid(c));
    CHECK(kauffman_polynomial(to_planar_diagram(r)) == f0);
    CHECK(kauffman_polynomial(to_planar_diagram(c)) == f0);
  }
}

TEST_CASE("connected sums") {
  GridDiagram t = trefoil_grid();
  SUBCASE("unknot is the identity") {
    GridDiagram s = connected_sum(unknot2(), t);
    REQUIRE(grid_valid(s));
    CHECK(s.n == t.n);
    CHECK(kauffman_polynomial(to_planar_diagram(s)) ==
          kauffman_polynomial(to_planar_diagram(t)));
    GridDiagram s2 = connected_sum(t, unknot2());
    REQUIRE(grid_valid(s2));
    CHECK(s2.n == t.n);
    CHECK(kauffman_polynomial(to_planar_diagram(s2)) ==
          kauffman_polynomial(to_planar_diagram(t)));
  }
  SUBCASE("trefoil with trefoil") {
    GridDiagram s = connected_sum(t, t);
    REQUIRE(grid_valid(s));
    CHECK(s.n == 8);  // 5 + 5 - 2
    auto fs = kauffman_polynomial(to_planar_diagram(s), {16, 0});
    auto ft = kauffman_polynomial(to_planar_diagram(t));
    CHECK(fs == ft * ft);
    CHECK(v_spread(fs) == 6);
  }
}

TEST_CASE("multiplicativity on random small sums") {
  uint64_t s = 31;
  auto rnd = [&]() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  };
  std::vector<GridDiagram> pool{trefoil_grid(), unknot2(),
                                stabilize(trefoil_grid(), {2, true})};
  for (int trial = 0; trial < 6; ++trial) {
    const GridDiagram& a = pool[rnd() % pool.size()];
    const GridDiagram& b = pool[rnd() % pool.size()];
    GridDiagram sum = connected_sum(a, b);
    REQUIRE(grid_valid(sum));
    CHECK(sum.n == a.n + b.n - 2);
    Diagram ds = to_planar_diagram(sum);
    if (simplify_r1r2(ds).crossings() > 12) continue;
    auto f = kauffman_polynomial(ds, {16, 0});
    CHECK(f == kauffman_polynomial(to_planar_diagram(a)) *
                   kauffman_polynomial(to_planar_diagram(b)));
  }
}

TEST_CASE("file round trips") {
  GridDiagram g = trefoil_grid();
  GridDiagram h = parse_grid(write_grid(g));
  CHECK(h.columns == g.columns);
  GridDiagram j = parse_grid(write_grid_json(g));
  CHECK(j.columns == g.columns);
  CHECK(write_grid(parse_grid(write_grid(g))) == write_grid(g));  // bit-exact
  CHECK_THROWS(parse_grid(""));
  CHECK_THROWS(parse_grid("# only a comment\n"));
  CHECK_THROWS(parse_grid("grid 2\ncol 0: 0 1\ncol 0: 0 1\n"));
}

TEST_CASE("rendering") {
  std::string a2 = render(unknot2(), "ascii");
  CHECK(a2 == "+-+\n| |\n+-+\n");
  std::string at = render(trefoil_grid(), "ascii");
  // vertical strands drawn over: count interior crossing cells
  int over = 0;
  for (size_t i = 0; i < at.size(); ++i)
    if (at[i] == '|') ++over;
  CHECK(over >= 3);
  std::string svg = render(trefoil_grid(), "svg");
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("<line") != std::string::npos);
}

TEST_SUITE_END();
