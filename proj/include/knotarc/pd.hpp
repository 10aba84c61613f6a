#pragma once

#include <stdexcept>
#include <string>

#include "knotarc/diagram.hpp"

namespace knotarc {

struct PdError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parse a PD code: terms `X[a,b,c,d]`, one per crossing, labels 1-based
/// and each appearing exactly twice across the whole code. Slot order is
/// counterclockwise starting from the incoming under-strand, so slots
/// {0,2} carry the under-strand at every crossing. `#` starts a comment.
///
/// Throws PdError on syntax errors, non-planar rotation systems (Euler
/// check) and multi-component inputs.
Diagram parse_pd(const std::string& text);

/// Serialize back to a PD code (labels follow an orientation trace).
std::string write_pd(const Diagram& d);

}  // namespace knotarc
