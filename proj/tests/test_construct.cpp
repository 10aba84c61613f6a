#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"
#include "knotarc/construct.hpp"
#include "knotarc/kauffman.hpp"
#include "knotarc/pd.hpp"

using namespace knotarc;

namespace {
const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
const char* kFigureEight = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

void check_same_knot(const Diagram& d, const GridDiagram& g, int budget = 16) {
  auto f1 = kauffman_polynomial(d, {budget, 0});
  auto f2 = kauffman_polynomial(to_planar_diagram(g), {budget, 0});
  CHECK(f1 == f2);
}
}  // namespace

TEST_SUITE_BEGIN("arc constructions");

TEST_CASE("plus-two construction on the trefoil gives five arcs") {
  Diagram d = parse_pd(kTrefoil);
  Construction c = construct_plus_two(d);
  CHECK(c.arc.arcs() == 5);
  REQUIRE(grid_valid(c.arc.grid));
  check_same_knot(d, c.arc.grid);
  // region+spoke sum stays at c+2 throughout
  for (auto [f, s] : c.conservation) CHECK(f + s == d.crossings() + 2);
}

TEST_CASE("plus-two construction on the figure eight gives six arcs") {
  Diagram d = parse_pd(kFigureEight);
  Construction c = construct_plus_two(d);
  CHECK(c.arc.arcs() == 6);
  REQUIRE(grid_valid(c.arc.grid));
  check_same_knot(d, c.arc.grid);
}

TEST_CASE("degenerate inputs") {
  Diagram curl = parse_pd("X[1,1,2,2]");
  Construction c = construct_plus_two(curl);
  CHECK(c.arc.arcs() == 3);  // crossings + 2
  CHECK(grid_valid(c.arc.grid));
  Diagram unknot;
  unknot.free_loops = 1;
  Construction u = construct_plus_two(unknot);
  CHECK(u.arc.arcs() == 2);
}

TEST_CASE("plus-two certificates on random prime diagrams") {
  auto pool = knotarc::testing::random_prime_diagrams(15, 8, 909);
  for (const Diagram& d : pool) {
    CAPTURE(d.canonical_code());
    Construction c = construct_plus_two(d);
    CHECK(c.arc.arcs() == d.crossings() + 2);
    REQUIRE(grid_valid(c.arc.grid));
    check_same_knot(d, c.arc.grid, 18);
    for (auto [f, s] : c.conservation) CHECK(f + s == d.crossings() + 2);
  }
}

TEST_CASE("alternating diagrams admit no doubly-good saving") {
  Diagram d = parse_pd(kTrefoil);
  CHECK_THROWS_AS(construct_nonalternating(d), ConstructError);
}

TEST_CASE("nonalternating construction reaches c arcs on a pretzel") {
  Diagram d = knotarc::testing::pretzel(3, 3, -2);
  REQUIRE(d.planar());
  REQUIRE(d.is_knot());
  REQUIRE(d.crossings() == 8);
  REQUIRE(prime_shadow(d));
  REQUIRE(!d.nonalternating_edges().empty());
  Construction c = construct_nonalternating(d);
  CHECK(c.arc.arcs() == 8);
  CHECK(c.retracted.size() == 2);
  REQUIRE(grid_valid(c.arc.grid));
  check_same_knot(d, c.arc.grid, 18);
  // conservation drops by one per retraction and never otherwise
  int drops = 0;
  for (size_t i = 1; i < c.conservation.size(); ++i) {
    int prev = c.conservation[i - 1].first + c.conservation[i - 1].second;
    int cur = c.conservation[i].first + c.conservation[i].second;
    CHECK(prev - cur <= 1);
    CHECK(prev - cur >= 0);
    drops += prev - cur;
  }
  CHECK(drops == 2);
}

TEST_CASE("doubly-good detection feeds the designated retractions") {
  Diagram d = knotarc::testing::pretzel(3, 3, -2);
  Construction c = construct_nonalternating(d);
  // the retracted edges really were doubly good for the tree used
  TreeCtx ctx(d, c.tree.root);
  for (int e : c.tree.edges) ctx.push(e);
  for (int e : c.retracted) CHECK(ctx.detect_doubly_good(e));
}

TEST_SUITE_END();
