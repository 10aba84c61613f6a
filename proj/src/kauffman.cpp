#include "knotarc/kauffman.hpp"

#include <map>
#include <string>

#include "knotarc/moves.hpp"

namespace knotarc {

LaurentPoly2 kauffman_delta() {
  // (v + v^-1) z^-1 - 1
  LaurentPoly2 d = LaurentPoly2::monomial(1, -1) + LaurentPoly2::monomial(-1, -1);
  d -= LaurentPoly2::constant(1);
  return d;
}

namespace {

using Memo = std::map<std::string, LaurentPoly2>;

LaurentPoly2 delta_pow(int k) {
  LaurentPoly2 r = LaurentPoly2::constant(1);
  LaurentPoly2 d = kauffman_delta();
  for (int i = 0; i < k; ++i) r *= d;
  return r;
}

/// First crossing whose first visit along the walk is an under-pass.
/// The walk is shadow-determined (stable under crossing switches).
int first_bad_crossing(const Diagram& d, uint64_t seed) {
  int nd = d.darts();
  std::vector<char> arrived(nd, 0);
  std::vector<char> met(d.crossings(), 0);
  int start0 = nd ? static_cast<int>(seed % nd) : 0;
  for (int i = 0; i < nd; ++i) {
    int d0 = (start0 + i) % nd;
    if (arrived[d0] || arrived[d.mate[d0]]) continue;
    int cur = d0;
    do {
      arrived[cur] = 1;
      int v = d.vertex(cur);
      if (!met[v]) {
        met[v] = 1;
        if (!d.over(cur)) return v;
      }
      cur = d.strand_next(cur);
    } while (cur != d0);
  }
  return -1;
}

LaurentPoly2 lambda_rec(const Diagram& input, Memo& memo, uint64_t seed) {
  SimplifyStats st = simplify_r1r2_tracked(input);
  Diagram d = std::move(st.diagram);
  LaurentPoly2 fac = LaurentPoly2::monomial(st.curls_pos - st.curls_neg, 0);
  int loops = d.free_loops;
  d.free_loops = 0;
  if (d.crossings() == 0) {
    return fac * delta_pow(loops - 1);  // loops >= 1 here
  }
  fac *= delta_pow(loops);

  auto pieces = split_shadow(d);
  if (pieces.size() > 1) {
    LaurentPoly2 res = fac * delta_pow(static_cast<int>(pieces.size()) - 1);
    for (auto& p : pieces) {
      p.free_loops = 0;
      res *= lambda_rec(p, memo, seed);
    }
    return res;
  }

  std::string key = d.canonical_code();
  if (auto it = memo.find(key); it != memo.end()) return fac * it->second;

  LaurentPoly2 val;
  int x = first_bad_crossing(d, seed);
  if (x < 0) {
    // Descending diagrams are regularly isotopic to a split union of
    // curled unknots: Lambda = v^w delta^(components-1).
    val = LaurentPoly2::monomial(d.writhe(), 0) *
          delta_pow(d.components() - 1);
  } else {
    LaurentPoly2 z = LaurentPoly2::monomial(0, 1);
    val = z * (lambda_rec(smooth(d, x, false), memo, seed) +
               lambda_rec(smooth(d, x, true), memo, seed));
    val -= lambda_rec(switch_crossing(d, x), memo, seed);
  }
  memo.emplace(std::move(key), val);
  return fac * val;
}

}  // namespace

LaurentPoly2 kauffman_lambda(const Diagram& d, const KauffmanOptions& opt) {
  Diagram reduced = simplify_r1r2(d);
  if (reduced.crossings() > opt.max_crossings)
    throw SkeinBudgetError("diagram exceeds skein crossing budget (" +
                           std::to_string(reduced.crossings()) + " > " +
                           std::to_string(opt.max_crossings) + ")");
  Memo memo;
  return lambda_rec(d, memo, opt.seed);
}

LaurentPoly2 kauffman_polynomial(const Diagram& d, const KauffmanOptions& opt) {
  if (!d.is_knot())
    throw std::invalid_argument("Kauffman polynomial: input must be a knot diagram");
  LaurentPoly2 lam = kauffman_lambda(d, opt);
  lam.shift(-d.writhe(), 0);
  return lam;
}

int v_spread(const LaurentPoly2& f) { return f.v_spread(); }

}  // namespace knotarc
