#pragma once

#include <array>
#include <string>
#include <vector>

#include "knotarc/diagram.hpp"

namespace knotarc {

/// Slot pairings used when dissolving a crossing.
inline constexpr std::array<int, 4> kPassThrough{2, 3, 0, 1};
inline constexpr std::array<int, 4> kSmoothA{1, 0, 3, 2};  // joins slots 0-1, 2-3
inline constexpr std::array<int, 4> kSmoothB{3, 2, 1, 0};  // joins slots 0-3, 1-2

/// Remove the crossings marked dead, reconnecting strands through each dead
/// crossing according to its slot pairing. Closed curves that end up with
/// no crossings are counted in free_loops. The result is compacted.
Diagram rewire_remove(const Diagram& d, const std::vector<char>& dead,
                      const std::vector<std::array<int, 4>>& internal);

/// The two planar smoothings of a crossing.
Diagram smooth(const Diagram& d, int v, bool mode_b);

Diagram switch_crossing(const Diagram& d, int v);

struct SimplifyStats {
  Diagram diagram;
  int curls_pos = 0;  // positive-writhe curls removed
  int curls_neg = 0;
  int bigons = 0;  // R2 pairs removed
};

/// Remove R1 curls and cancellable R2 bigons until none remain. Knot type
/// is preserved; crossing count never increases.
SimplifyStats simplify_r1r2_tracked(const Diagram& d);
inline Diagram simplify_r1r2(const Diagram& d) {
  return simplify_r1r2_tracked(d).diagram;
}

/// A triangular face admits a type-3 move when one strand crosses over the
/// other two along the triangle (equivalently, some triangle edge passes
/// over at both of its corners).
bool r3_admissible(const Diagram& d, const Face& f, std::string* why = nullptr);

/// Slide the doubly-over strand of the triangular face across the opposite
/// crossing. Crossing ids are preserved; the translated triangle face in
/// the result has the same three corner crossings. Throws std::invalid_argument
/// if the face is not triangular or not admissible.
Diagram reidemeister3(const Diagram& d, const FaceSet& fs, int face);

/// Locate the translated triangle after a type-3 move: the triangular face
/// whose corners are exactly the given crossings. Returns -1 if absent.
int find_triangle(const Diagram& d, const FaceSet& fs, int va, int vb, int vc);

/// Push a finger of the edge at face-walk position `ei` across the edge at
/// position `ej` (distinct edges on the same face), adding two crossings.
/// `under` selects whether the finger passes under. Used for move-invariance
/// testing.
Diagram r2_insert(const Diagram& d, const FaceSet& fs, int face, int ei, int ej,
                  bool under);

/// Connected components of the shadow as separate diagrams (free loops are
/// returned in the first component's free_loops count only if there are no
/// crossings at all).
std::vector<Diagram> split_shadow(const Diagram& d);

}  // namespace knotarc
