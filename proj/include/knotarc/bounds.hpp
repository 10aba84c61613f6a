#pragma once

#include <optional>
#include <string>

#include "knotarc/diagram.hpp"
#include "knotarc/grid.hpp"

namespace knotarc {

struct BoundsOptions {
  bool assert_prime = false;
  bool assert_minimal = false;
  bool attempt_constructions = true;
  int skein_budget = 12;
  std::optional<int> explicit_grid_columns;
};

struct Bound {
  int value = 0;
  std::string justification;
};

struct BoundsReport {
  std::optional<Bound> lower;
  std::optional<Bound> upper;
  std::optional<int> exact;
  std::string note;
  std::string json() const;
};

/// Arc-index bounds: lower from the Kauffman v-spread, upper from the
/// crossing count and the constructions when their hypotheses are asserted.
BoundsReport arc_index_bounds(const Diagram& d, const BoundsOptions& opt = {});

}  // namespace knotarc
