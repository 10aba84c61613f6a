#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "knotarc/kauffman.hpp"
#include "knotarc/moves.hpp"
#include "knotarc/pd.hpp"

using namespace knotarc;

namespace {

const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
const char* kFigureEight = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

struct Rnd {
  uint64_t s = 4242;
  uint64_t operator()() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
};

// random R2 pokes and type-3 slides, crossing count capped
Diagram random_moves(Diagram d, int steps, Rnd& rnd, int cap) {
  for (int i = 0; i < steps; ++i) {
    FaceSet fs = faces(d);
    int kind = static_cast<int>(rnd() % 2);
    if (kind == 0 && d.crossings() + 2 <= cap) {
      int f = static_cast<int>(rnd() % fs.count());
      const Face& face = fs.faces[f];
      if (face.size() < 2) continue;
      int i1 = static_cast<int>(rnd() % face.size());
      int i2 = static_cast<int>(rnd() % face.size());
      if (d.edge_of(face.darts[i1]) == d.edge_of(face.darts[i2])) continue;
      d = r2_insert(d, fs, f, i1, i2, rnd() % 2 == 0);
    } else {
      std::vector<int> tris;
      for (int f = 0; f < fs.count(); ++f)
        if (r3_admissible(d, fs.faces[f])) tris.push_back(f);
      if (tris.empty()) continue;
      d = reidemeister3(d, fs, tris[rnd() % tris.size()]);
    }
  }
  return d;
}

}  // namespace

TEST_SUITE_BEGIN("kauffman polynomial");

TEST_CASE("normalization axioms") {
  CHECK(kauffman_polynomial(parse_pd("X[1,1,2,2]")) == LaurentPoly2::constant(1));
  CHECK(kauffman_polynomial(parse_pd("X[2,2,1,1]")) == LaurentPoly2::constant(1));
  CHECK(kauffman_polynomial(parse_pd("X[1,2,2,1]")) == LaurentPoly2::constant(1));
  CHECK(kauffman_polynomial(parse_pd("X[4,1,1,2] X[2,3,3,4]")) ==
        LaurentPoly2::constant(1));
}

TEST_CASE("trefoil and figure eight spreads") {
  auto f3 = kauffman_polynomial(parse_pd(kTrefoil));
  CHECK(v_spread(f3) == 3);
  auto f4 = kauffman_polynomial(parse_pd(kFigureEight));
  CHECK(v_spread(f4) == 4);
  // figure eight is amphichiral: F symmetric under v -> 1/v
  LaurentPoly2 mirror;
  for (const auto& [e, c] : f4.terms())
    mirror += LaurentPoly2::monomial(-e.first, e.second, c);
  CHECK(mirror == f4);
}

TEST_CASE("alternating identity: v-spread + 2 equals crossings + 2") {
  const char* codes[] = {
      kTrefoil,
      kFigureEight,
      "X[1,6,2,7] X[3,8,4,9] X[5,10,6,1] X[7,2,8,3] X[9,4,10,5]",
      "X[1,4,2,5] X[3,8,4,9] X[5,10,6,1] X[9,6,10,7] X[7,2,8,3]",
      "X[1,4,2,5] X[5,10,6,11] X[3,9,4,8] X[9,3,10,2] X[7,12,8,1] X[11,6,12,7]",
  };
  for (const char* code : codes) {
    CAPTURE(code);
    Diagram d = parse_pd(code);
    REQUIRE(d.is_knot());
    REQUIRE(d.nonalternating_edges().empty());  // alternating diagram
    REQUIRE(prime_shadow(d));                   // reduced and prime
    REQUIRE(simplify_r1r2(d).crossings() == d.crossings());
    auto f = kauffman_polynomial(d);
    CHECK(v_spread(f) + 2 == d.crossings() + 2);
  }
}

TEST_CASE("invariance under regular-isotopy moves, normalized") {
  Rnd rnd;
  const char* codes[] = {kTrefoil, kFigureEight};
  for (const char* code : codes) {
    Diagram base = parse_pd(code);
    auto f0 = kauffman_polynomial(base);
    for (int trial = 0; trial < 30; ++trial) {
      Diagram moved = random_moves(base, 3, rnd, 8);
      REQUIRE(moved.planar());
      REQUIRE(moved.is_knot());
      CHECK(kauffman_polynomial(moved) == f0);
    }
  }
}

TEST_CASE("type-3 move applied twice returns the diagram") {
  Diagram d = parse_pd(kFigureEight);
  Rnd rnd;
  bool exercised = false;
  for (int attempt = 0; attempt < 20 && !exercised; ++attempt) {
    Diagram moved = random_moves(d, 6, rnd, 8);
    FaceSet fs = faces(moved);
    for (int f = 0; f < fs.count(); ++f) {
      if (!r3_admissible(moved, fs.faces[f])) continue;
      const Face& face = fs.faces[f];
      int a = moved.vertex(face.darts[0]);
      int b = moved.vertex(face.darts[1]);
      int c = moved.vertex(face.darts[2]);
      if (a == b || b == c || a == c) continue;
      Diagram once = reidemeister3(moved, fs, f);
      FaceSet fs2 = faces(once);
      int back_face = find_triangle(once, fs2, a, b, c);
      REQUIRE(back_face >= 0);
      Diagram twice = reidemeister3(once, fs2, back_face);
      CHECK(twice.isomorphic(moved));
      exercised = true;
      break;
    }
  }
  CHECK(exercised);
}

TEST_CASE("simplification leaves the polynomial alone") {
  Rnd rnd;
  Diagram base = parse_pd(kTrefoil);
  for (int trial = 0; trial < 10; ++trial) {
    Diagram moved = random_moves(base, 4, rnd, 10);
    auto f1 = kauffman_polynomial(moved);
    auto f2 = kauffman_polynomial(simplify_r1r2(moved));
    CHECK(f1 == f2);
  }
}

TEST_CASE("resolution order does not change the result") {
  Diagram d = parse_pd(kFigureEight);
  KauffmanOptions a, b, c;
  a.seed = 1;
  b.seed = 77;
  c.seed = 123456;
  auto fa = kauffman_polynomial(d, a);
  CHECK(fa == kauffman_polynomial(d, b));
  CHECK(fa == kauffman_polynomial(d, c));
}

TEST_CASE("budget errors") {
  Diagram d = parse_pd(kFigureEight);
  KauffmanOptions opt;
  opt.max_crossings = 3;
  CHECK_THROWS_AS(kauffman_polynomial(d, opt), SkeinBudgetError);
}

TEST_SUITE_END();
