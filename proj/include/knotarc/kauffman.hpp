#pragma once

#include <cstdint>
#include <stdexcept>

#include "knotarc/diagram.hpp"
#include "knotarc/poly.hpp"

namespace knotarc {

struct SkeinBudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct KauffmanOptions {
  /// Crossing budget after R1/R2 reduction; the skein recursion refuses
  /// larger inputs.
  int max_crossings = 12;
  /// Varies internal crossing-resolution order; the result must not depend
  /// on it.
  uint64_t seed = 0;
};

/// Regular-isotopy polynomial: skein relation
///   L(X+) + L(X-) = z (L(X0) + L(Xoo)),
/// curl factors v^{+-1}, L(unknot) = 1, split unknot factor
/// delta = (v + v^{-1}) z^{-1} - 1.
LaurentPoly2 kauffman_lambda(const Diagram& d, const KauffmanOptions& opt = {});

/// Writhe-normalized invariant F = v^{-w} Lambda. Input must be a knot
/// diagram (single component).
LaurentPoly2 kauffman_polynomial(const Diagram& d, const KauffmanOptions& opt = {});

int v_spread(const LaurentPoly2& f);

LaurentPoly2 kauffman_delta();

}  // namespace knotarc
