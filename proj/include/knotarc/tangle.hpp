#pragma once

#include <string>
#include <vector>

#include "knotarc/diagram.hpp"

namespace knotarc {

enum class TangleKind {
  Alternating,
  AlmostAlternating,    // 1-nonalternating
  N1Nonalternating,     // (n,1)-nonalternating, n >= 2
  NNonalternating,      // n-nonalternating, n >= 2
  Other,
};

std::string kind_name(TangleKind k, int n);

/// Fixed reconstruction of the tangle patterns: an alternating twist chain
/// of k crossings (consecutive crossings joined by bigons) is a 4-ended
/// tangle. A diagram whose nonalternating edges all lie on such a chain's
/// boundary, with an alternating complement, is (k-1,1)-nonalternating
/// when two mismatched boundary edges share a chain-end crossing q, and
/// k-nonalternating otherwise. A single reversed crossing whose switch
/// makes the diagram alternating is the almost alternating case.
struct TangleClassification {
  TangleKind kind = TangleKind::Other;
  int n = 0;
  std::vector<int> tangle_vertices;  // the chain (or the single crossing)
  std::vector<int> cut_edges;        // 4 boundary edges of the tangle
  std::vector<int> mismatch_edges;   // the nonalternating ones among them
  int q = -1;                        // distinguished crossing
};

TangleClassification detect_tangle_structure(const Diagram& d);

struct ConditionCheck {
  std::string name;
  bool pass = false;
  std::string witness;
};

/// One concrete labeling of the theorem data on the diagram.
struct TheoremLabeling {
  int theorem = 0;          // 8, 9 or 10 selecting the condition set
  int f1 = -1, f2 = -1, f3 = -1;
  int q = -1;
  int e1 = -1, e2 = -1;     // nonalternating edges (theorem 8/9)
  int e = -1;               // split edge (theorem 10)
  std::vector<ConditionCheck> conditions;
  bool pass = false;
};

struct ConditionReport {
  TangleClassification classification;
  std::vector<TheoremLabeling> labelings;
  bool any_pass = false;
  std::string json() const;
};

/// Evaluates the arc-index-below-crossing-number sufficient conditions for
/// every labeling compatible with the classification.
ConditionReport check_theorem_conditions(const Diagram& d,
                                         const TangleClassification& tc);

}  // namespace knotarc
