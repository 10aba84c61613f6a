#include "knotarc/bounds.hpp"

#include <sstream>

#include "knotarc/construct.hpp"
#include "knotarc/kauffman.hpp"
#include "knotarc/moves.hpp"
#include "knotarc/tangle.hpp"

namespace knotarc {

BoundsReport arc_index_bounds(const Diagram& d, const BoundsOptions& opt) {
  BoundsReport rep;
  Diagram red = simplify_r1r2(d);
  if (red.crossings() == 0) {
    rep.lower = {2, "unknot diagram"};
    rep.upper = {2, "unknot diagram"};
    rep.exact = 2;
    return rep;
  }
  int c = red.crossings();
  try {
    KauffmanOptions ko;
    ko.max_crossings = opt.skein_budget;
    LaurentPoly2 f = kauffman_polynomial(red, ko);
    rep.lower = {v_spread(f) + 2, "v-spread + 2"};
  } catch (const SkeinBudgetError& ex) {
    rep.note = ex.what();
  }
  rep.upper = {c + 2, "crossings + 2"};
  bool nonalt_diagram = !red.nonalternating_edges().empty();
  if (opt.assert_prime && opt.assert_minimal && nonalt_diagram) {
    rep.upper = {c, "prime nonalternating: crossings"};
    if (opt.attempt_constructions) {
      try {
        auto tc = detect_tangle_structure(red);
        if (tc.kind != TangleKind::Alternating && tc.kind != TangleKind::Other) {
          auto cr = check_theorem_conditions(red, tc);
          if (cr.any_pass) {
            // any passing labeling carries an F3 usable for the move
            for (const auto& lab : cr.labelings) {
              if (!lab.pass) continue;
              try {
                auto r = construct_minus_one(red, lab.f3);
                int n = r.construction.arc.arcs();
                if (!rep.upper || n < rep.upper->value)
                  rep.upper = {n, "triangular-face construction"};
                break;
              } catch (const ConstructError&) {
                continue;
              }
            }
          }
        }
      } catch (const std::exception&) {
        // conditions undecidable; keep the theorem bound
      }
    }
  }
  if (opt.explicit_grid_columns &&
      (!rep.upper || *opt.explicit_grid_columns < rep.upper->value))
    rep.upper = {*opt.explicit_grid_columns, "explicit grid"};
  if (rep.lower && rep.upper && rep.lower->value == rep.upper->value)
    rep.exact = rep.lower->value;
  return rep;
}

std::string BoundsReport::json() const {
  std::ostringstream os;
  os << "{";
  if (lower)
    os << "\"lower\": {\"value\": " << lower->value << ", \"justification\": \""
       << lower->justification << "\"}";
  else
    os << "\"lower\": null";
  os << ", ";
  if (upper)
    os << "\"upper\": {\"value\": " << upper->value << ", \"justification\": \""
       << upper->justification << "\"}";
  else
    os << "\"upper\": null";
  if (exact) os << ", \"exact\": " << *exact;
  if (!note.empty()) os << ", \"note\": \"" << note << "\"";
  os << "}";
  return os.str();
}

}  // namespace knotarc
