#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace knotarc {

/// A knot diagram as a connected 4-valent plane graph with a rotation
/// system and over/under data at each crossing.
///
/// Darts: crossing v owns darts 4v..4v+3; dart 4v+s is the edge end
/// attached at slot s, slots numbered counterclockwise. `mate` pairs the
/// two ends of each edge. The strand entering a crossing through slot s
/// leaves through slot s+2. `axis[v]` selects which opposite slot pair
/// carries the under-strand: axis 0 means the strand through slots {0,2}
/// passes under, axis 1 means {1,3} passes under.
///
/// Crossingless closed curves carry no darts; `free_loops` counts them.
struct Diagram {
  std::vector<int> mate;
  std::vector<uint8_t> axis;
  int free_loops = 0;

  int crossings() const { return static_cast<int>(axis.size()); }
  int darts() const { return static_cast<int>(mate.size()); }
  int vertex(int dart) const { return dart >> 2; }
  int slot(int dart) const { return dart & 3; }
  int dart(int v, int s) const { return 4 * v + (s & 3); }
  /// Dart of the same strand on the far side of the crossing.
  int across(int d) const { return (d & ~3) | ((d + 2) & 3); }
  /// Next dart counterclockwise around the same crossing.
  int ccw(int d) const { return (d & ~3) | ((d + 1) & 3); }
  int cw(int d) const { return (d & ~3) | ((d + 3) & 3); }

  /// True if the strand holding dart d passes over at this crossing.
  bool over(int d) const { return (d & 1) != axis[vertex(d)]; }

  /// Canonical edge id: the smaller dart of the pair.
  int edge_of(int d) const { return d < mate[d] ? d : mate[d]; }
  std::vector<int> edges() const;

  /// Strand successor: arriving at a crossing via dart d, returns the
  /// arrival dart at the next crossing.
  int strand_next(int d) const { return mate[across(d)]; }

  int components() const;
  bool is_knot() const;

  /// Writhe under an arbitrary strand orientation (orientation-independent
  /// for knots; for split multi-component diagrams the total is still
  /// well-defined because split linking numbers vanish).
  int writhe() const;

  /// Sum of crossing signs between distinct components only.
  bool connected_shadow() const;

  /// Raw structural checks: mate involution, dart count, connectivity.
  bool structurally_valid(std::string* why = nullptr) const;

  /// Face count via Euler's formula must hold for sphere embeddings:
  /// V - E + F = 2 (checked against the face trace).
  bool planar(std::string* why = nullptr) const;

  bool edge_nonalternating(int e) const { return over(e) == over(mate[e]); }
  std::vector<int> nonalternating_edges() const;

  /// Canonical code of the embedded diagram (rotation + over/under),
  /// invariant under relabeling. Used for memoization and isomorphism.
  std::string canonical_code() const;

  bool isomorphic(const Diagram& o) const {
    return free_loops == o.free_loops && canonical_code() == o.canonical_code();
  }
};

/// One face of the sphere embedding: the cyclic dart sequence of its
/// boundary walk. Dart 4v+s on a face means the face contains the corner
/// of v between slots s-1 and s.
struct Face {
  std::vector<int> darts;
  int size() const { return static_cast<int>(darts.size()); }
};

struct FaceSet {
  std::vector<Face> faces;
  std::vector<int> face_of;  // dart -> face index

  int count() const { return static_cast<int>(faces.size()); }
  /// Face at the corner of v counterclockwise after slot s.
  int corner_face(const Diagram& d, int v, int s) const {
    return face_of[d.dart(v, s + 1)];
  }
};

FaceSet faces(const Diagram& d);

/// Map edge -> {alternating=false, nonalternating=true}.
std::vector<bool> classify_edges(const Diagram& d);

int crossing_number(const Diagram& d);

/// 2-coloring of faces across a set of barrier edges forming a single
/// simple closed curve: faces sharing a non-barrier edge get equal colors,
/// faces across a barrier edge get opposite colors. Returns empty vector
/// if inconsistent (barrier is not a cocycle).
std::vector<int> two_color_faces(const Diagram& d, const FaceSet& fs,
                                 const std::vector<bool>& barrier_edge);

/// True if no simple closed curve meets the underlying graph in fewer than
/// 4 edge points with crossings on both sides; loops and isthmus-like
/// 2-edge cuts make a diagram non-prime. Crossingless sides are allowed.
bool prime_shadow(const Diagram& d);

/// Relabel crossings by the permutation perm (new index = perm[old]),
/// optionally rotating each crossing's slots by rot[v] (multiples of 2
/// preserve the under axis semantics automatically; odd rotations flip
/// the stored axis).
Diagram relabel(const Diagram& d, const std::vector<int>& perm,
                const std::vector<int>& rot);

}  // namespace knotarc
