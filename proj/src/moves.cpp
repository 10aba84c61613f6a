#include "knotarc/moves.hpp"

#include <map>
#include <stdexcept>

namespace knotarc {

Diagram rewire_remove(const Diagram& d, const std::vector<char>& dead,
                      const std::vector<std::array<int, 4>>& internal) {
  int n = d.crossings();
  // Resolve strand chains through dead crossings.
  auto through = [&](int dart) {
    // entering a dead crossing at this dart, exit dart per its pairing
    int v = d.vertex(dart);
    return d.dart(v, internal[v][d.slot(dart)]);
  };
  std::vector<int> newid(n, -1);
  int m = 0;
  for (int v = 0; v < n; ++v)
    if (!dead[v]) newid[v] = m++;
  Diagram out;
  out.free_loops = d.free_loops;
  out.axis.assign(m, 0);
  out.mate.assign(4 * m, -1);
  for (int v = 0; v < n; ++v)
    if (!dead[v]) out.axis[newid[v]] = d.axis[v];
  std::vector<char> used(d.darts(), 0);
  for (int d0 = 0; d0 < d.darts(); ++d0) {
    if (dead[d.vertex(d0)] || used[d0]) continue;
    // walk from live dart d0 across dead territory to the next live dart
    int cur = d.mate[d0];
    while (dead[d.vertex(cur)]) cur = d.mate[through(cur)];
    int a = 4 * newid[d.vertex(d0)] + d.slot(d0);
    int b = 4 * newid[d.vertex(cur)] + d.slot(cur);
    out.mate[a] = b;
    out.mate[b] = a;
    used[d0] = used[cur] = 1;
  }
  // closed strands entirely inside dead territory become free loops
  std::vector<char> seen(d.darts(), 0);
  for (int d0 = 0; d0 < d.darts(); ++d0) {
    if (!dead[d.vertex(d0)] || seen[d0]) continue;
    bool closed = true;
    int cur = d0;
    std::vector<int> orbit;
    do {
      orbit.push_back(cur);
      seen[cur] = 1;
      int t = through(cur);
      seen[t] = 1;
      cur = d.mate[t];
      if (!dead[d.vertex(cur)]) {
        closed = false;
        break;
      }
    } while (cur != d0 && !seen[cur]);
    if (closed && cur == d0) ++out.free_loops;
  }
  return out;
}

Diagram smooth(const Diagram& d, int v, bool mode_b) {
  std::vector<char> dead(d.crossings(), 0);
  dead[v] = 1;
  std::vector<std::array<int, 4>> internal(d.crossings(), kPassThrough);
  internal[v] = mode_b ? kSmoothB : kSmoothA;
  return rewire_remove(d, dead, internal);
}

Diagram switch_crossing(const Diagram& d, int v) {
  Diagram out = d;
  out.axis[v] ^= 1;
  return out;
}

namespace {

// Curl: loop edge occupying two adjacent slots of one crossing.
// Returns slot s with mate(dart(v,s)) == dart(v,s+1), or -1.
int curl_slot(const Diagram& d, int v) {
  for (int s = 0; s < 4; ++s)
    if (d.mate[d.dart(v, s)] == d.dart(v, s + 1)) return s;
  return -1;
}

}  // namespace

SimplifyStats simplify_r1r2_tracked(const Diagram& d) {
  SimplifyStats st;
  st.diagram = d;
  bool progress = true;
  while (progress) {
    progress = false;
    Diagram& cur = st.diagram;
    // R1 curls first
    for (int v = 0; v < cur.crossings() && !progress; ++v) {
      int s = curl_slot(cur, v);
      if (s < 0) continue;
      if (cur.over(cur.dart(v, s + 1)))
        ++st.curls_pos;
      else
        ++st.curls_neg;
      std::vector<char> dead(cur.crossings(), 0);
      dead[v] = 1;
      std::vector<std::array<int, 4>> internal(cur.crossings(), kPassThrough);
      cur = rewire_remove(cur, dead, internal);
      progress = true;
    }
    if (progress) continue;
    // cancellable R2 bigons: both bigon edges nonalternating
    FaceSet fs = faces(cur);
    for (const Face& f : fs.faces) {
      if (f.size() != 2) continue;
      int d1 = f.darts[0], d2 = f.darts[1];
      int x = cur.vertex(d1), y = cur.vertex(d2);
      if (x == y) continue;
      int e1 = cur.edge_of(d1), e2 = cur.edge_of(d2);
      if (e1 == e2) continue;
      if (!cur.edge_nonalternating(e1) || !cur.edge_nonalternating(e2)) continue;
      std::vector<char> dead(cur.crossings(), 0);
      dead[x] = dead[y] = 1;
      std::vector<std::array<int, 4>> internal(cur.crossings(), kPassThrough);
      cur = rewire_remove(cur, dead, internal);
      ++st.bigons;
      progress = true;
      break;
    }
  }
  return st;
}

bool r3_admissible(const Diagram& d, const Face& f, std::string* why) {
  if (f.size() != 3) {
    if (why) *why = "face is not triangular";
    return false;
  }
  for (int i = 0; i < 3; ++i) {
    int dd = f.darts[i];
    int e = d.edge_of(dd);
    if (d.edge_nonalternating(e) && d.over(e)) return true;
  }
  if (why) *why = "no strand passes over the other two across the face";
  return false;
}

Diagram reidemeister3(const Diagram& d, const FaceSet& fs, int face) {
  const Face& f = fs.faces[face];
  std::string why;
  if (!r3_admissible(d, f, &why)) throw std::invalid_argument("type-3 move: " + why);
  // Rotate corners so the walk edge leaving corner 0 is the over-over edge.
  int k = -1;
  for (int i = 0; i < 3; ++i) {
    int e = d.edge_of(f.darts[i]);
    if (d.edge_nonalternating(e) && d.over(e)) k = i;
  }
  int xa = f.darts[k], xb = f.darts[(k + 1) % 3], xc = f.darts[(k + 2) % 3];
  int a = d.vertex(xa), b = d.vertex(xb), c = d.vertex(xc);
  if (a == b || b == c || a == c)
    throw std::invalid_argument("type-3 move: triangle corners not distinct");
  int sa = d.slot(xa), sb = d.slot(xb), sc = d.slot(xc);
  // externals and their far ends
  int A1 = d.dart(a, sa + 2), A2 = d.dart(a, sa + 1);
  int B1 = d.dart(b, sb + 1), B2 = d.dart(b, sb + 2);
  int C1 = d.dart(c, sc + 2), C2 = d.dart(c, sc + 1);
  std::array<int, 6> ext{A1, A2, B1, B2, C1, C2};
  std::array<int, 6> far{};
  for (int i = 0; i < 6; ++i) far[i] = d.mate[ext[i]];

  Diagram out = d;
  // the sliding strand ends up over at both new crossings: slots {0,2}
  // carry it, so the under axis is {1,3}
  out.axis[a] = 1;
  out.axis[b] = 1;

  // symbolic targets: >=0 direct dart, -1-k means "far side of external k"
  auto stub = [&](int i) { return -1 - i; };
  std::vector<std::pair<int, int>> pairs = {
      {d.dart(a, 1), C1},          // beta enters a' from c
      {d.dart(a, 3), stub(4)},     // beta continues to old C1 far side
      {d.dart(b, 1), C2},          // alpha enters b' from c
      {d.dart(b, 3), stub(5)},     // alpha continues to old C2 far side
      {d.dart(a, 0), stub(2)},     // gamma from a' to old B1 far side
      {d.dart(b, 0), d.dart(a, 2)},  // new middle gamma edge b'-a'
      {d.dart(b, 2), stub(0)},     // gamma from old A1 far side into b'
      {d.dart(c, sc), stub(1)},    // beta tail: old A2 far side to c
      {d.dart(c, (sc + 3) & 3), stub(3)},  // alpha tail: old B2 far side to c
  };
  // resolve stubs: far[k] is either a stable dart or another external
  auto resolve = [&](int spec) -> std::pair<bool, int> {
    if (spec >= 0) return {true, spec};
    int kx = -1 - spec;
    int fq = far[kx];
    for (int j = 0; j < 6; ++j)
      if (ext[j] == fq) return {false, j};  // external-to-external old edge
    return {true, fq};
  };
  // first pass: record which pair-sources reference each stub
  std::array<int, 6> stub_port;
  stub_port.fill(-1);
  for (auto& [port, spec] : pairs)
    if (spec < 0) stub_port[-1 - spec] = port;
  for (auto& [port, spec] : pairs) {
    auto [stable, tgt] = resolve(spec);
    int other;
    if (spec >= 0)
      other = spec;
    else if (stable)
      other = tgt;
    else
      other = stub_port[tgt];
    out.mate[port] = other;
    out.mate[other] = port;
  }
  std::string pwhy;
  if (!out.planar(&pwhy))
    throw std::logic_error("type-3 move produced invalid diagram: " + pwhy);
  return out;
}

int find_triangle(const Diagram& d, const FaceSet& fs, int va, int vb, int vc) {
  for (int i = 0; i < fs.count(); ++i) {
    const Face& f = fs.faces[i];
    if (f.size() != 3) continue;
    int u = d.vertex(f.darts[0]), v = d.vertex(f.darts[1]), w = d.vertex(f.darts[2]);
    int lo = std::min({u, v, w}), hi = std::max({u, v, w}), mid = u + v + w - lo - hi;
    int lo2 = std::min({va, vb, vc}), hi2 = std::max({va, vb, vc}),
        mid2 = va + vb + vc - lo2 - hi2;
    if (lo == lo2 && mid == mid2 && hi == hi2) return i;
  }
  return -1;
}

Diagram r2_insert(const Diagram& d, const FaceSet& fs, int face, int ei, int ej,
                  bool under) {
  const Face& f = fs.faces[face];
  int ed = f.darts[ei % f.size()], fd = f.darts[ej % f.size()];
  if (d.edge_of(ed) == d.edge_of(fd))
    throw std::invalid_argument("finger move needs two distinct edges");
  int n = d.crossings();
  Diagram out = d;
  out.axis.push_back(under ? 1 : 0);
  out.axis.push_back(under ? 1 : 0);
  out.mate.resize(4 * (n + 2), -1);
  int x = n, y = n + 1;
  int em = d.mate[ed], fm = d.mate[fd];
  // finger of edge `ed` crosses edge `fd`; both walk darts have the face on
  // the right of travel, so the finger leaves ed rightward and meets fd from
  // its right side. x sits nearer vertex(fd) along fd; the legs pair nested
  // (v_u side of e reaches the far crossing y) so the chords never cross.
  out.mate[ed] = out.dart(y, 3);
  out.mate[out.dart(y, 3)] = ed;
  out.mate[out.dart(x, 1)] = out.dart(y, 1);
  out.mate[out.dart(y, 1)] = out.dart(x, 1);
  out.mate[out.dart(x, 3)] = em;
  out.mate[em] = out.dart(x, 3);
  out.mate[fd] = out.dart(x, 2);
  out.mate[out.dart(x, 2)] = fd;
  out.mate[out.dart(x, 0)] = out.dart(y, 2);
  out.mate[out.dart(y, 2)] = out.dart(x, 0);
  out.mate[out.dart(y, 0)] = fm;
  out.mate[fm] = out.dart(y, 0);
  std::string why;
  if (!out.planar(&why))
    throw std::logic_error("finger move produced invalid diagram: " + why);
  return out;
}

std::vector<Diagram> split_shadow(const Diagram& d) {
  int n = d.crossings();
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (int v0 = 0; v0 < n; ++v0) {
    if (comp[v0] >= 0) continue;
    std::vector<int> stack{v0};
    comp[v0] = nc;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int s = 0; s < 4; ++s) {
        int u = d.vertex(d.mate[d.dart(v, s)]);
        if (comp[u] < 0) {
          comp[u] = nc;
          stack.push_back(u);
        }
      }
    }
    ++nc;
  }
  std::vector<Diagram> out;
  if (nc == 0) {
    Diagram empty;
    empty.free_loops = d.free_loops;
    out.push_back(empty);
    return out;
  }
  std::vector<std::vector<int>> verts(nc);
  std::vector<int> newid(n);
  for (int v = 0; v < n; ++v) {
    newid[v] = static_cast<int>(verts[comp[v]].size());
    verts[comp[v]].push_back(v);
  }
  for (int cidx = 0; cidx < nc; ++cidx) {
    Diagram piece;
    piece.axis.resize(verts[cidx].size());
    piece.mate.assign(4 * verts[cidx].size(), -1);
    for (int v : verts[cidx]) {
      piece.axis[newid[v]] = d.axis[v];
      for (int s = 0; s < 4; ++s) {
        int m = d.mate[d.dart(v, s)];
        piece.mate[4 * newid[v] + s] = 4 * newid[d.vertex(m)] + d.slot(m);
      }
    }
    if (cidx == 0) piece.free_loops = d.free_loops;
    out.push_back(std::move(piece));
  }
  return out;
}

}  // namespace knotarc
