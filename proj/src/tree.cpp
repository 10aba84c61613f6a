#include "knotarc/tree.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>

namespace knotarc {

TreeCtx::TreeCtx(const Diagram& d, int root)
    : d_(&d), root_(root), fs_(faces(d)) {
  int n = d.crossings();
  if (root < 0 || root >= n) throw std::invalid_argument("bad root crossing");
  vlevel_.assign(n, -1);
  elevel_.assign(d.darts(), -1);
  entry_.assign(d.darts(), -1);
  entry_good_.assign(d.darts(), 0);
  parent_edge_.assign(n, -1);
  vlevel_[root] = 0;
  // loops at the root enter the closure immediately
  for (int s = 0; s < 4; ++s) {
    int e = d.edge_of(d.dart(root, s));
    if (d.vertex(e) == root && d.vertex(d.mate[e]) == root && entry_[e] < 0) {
      entry_[e] = 0;
      entry_good_[e] = 1;
    }
  }
}

void TreeCtx::push(int e) {
  const Diagram& d = *d_;
  int u = d.vertex(e), v = d.vertex(d.mate[e]);
  bool iu = vertex_in_tree(u), iv = vertex_in_tree(v);
  if (iu == iv) throw std::invalid_argument("edge does not extend the tree");
  int w = iu ? v : u;
  order_.push_back(e);
  int level = size();
  vlevel_[w] = level;
  parent_edge_[w] = e;
  elevel_[e] = level;
  wstack_.push_back(w);
  int se = d.slot(d.vertex(e) == w ? e : d.mate[e]);  // slot of e at w
  for (int s = 0; s < 4; ++s) {
    int dd = d.dart(w, s);
    int f = d.edge_of(dd);
    if (f == e || entry_[f] >= 0 || elevel_[f] >= 0) continue;
    int other = d.mate[dd];
    if (!vertex_in_tree(d.vertex(other))) continue;
    entry_[f] = level;
    bool bad = false;
    for (int fd : {f, d.mate[f]})
      if (d.vertex(fd) == w && d.slot(fd) == ((se + 2) & 3)) bad = true;
    entry_good_[f] = bad ? 0 : 1;
  }
}

void TreeCtx::pop() {
  if (order_.empty()) throw std::logic_error("pop on empty tree");
  const Diagram& d = *d_;
  int level = size();
  int w = wstack_.back();
  for (int s = 0; s < 4; ++s) {
    int f = d.edge_of(d.dart(w, s));
    if (entry_[f] == level) {
      entry_[f] = -1;
      entry_good_[f] = 0;
    }
  }
  elevel_[order_.back()] = -1;
  vlevel_[w] = -1;
  parent_edge_[w] = -1;
  wstack_.pop_back();
  order_.pop_back();
}

std::vector<int> TreeCtx::closure_edges() const {
  std::vector<int> out;
  for (int e : d_->edges())
    if (entry_[e] >= 0) out.push_back(e);
  return out;
}

EdgeClass TreeCtx::classify_good_bad(int e) const {
  if (entry_[e] < 0) throw std::invalid_argument("not a closure edge");
  if (order_.empty()) return EdgeClass::Good;  // root loops
  const Diagram& d = *d_;
  int w = wstack_.back();
  int et = order_.back();
  int se = d.slot(d.vertex(et) == w ? et : d.mate[et]);
  bool at_w = false, bad = false;
  for (int fd : {e, d.mate[e]})
    if (d.vertex(fd) == w) {
      at_w = true;
      if (d.slot(fd) == ((se + 2) & 3)) bad = true;
    }
  if (!at_w) return EdgeClass::Neutral;
  return bad ? EdgeClass::Bad : EdgeClass::Good;
}

std::vector<int> TreeCtx::extension_candidates() const {
  std::vector<int> out;
  for (int e : d_->edges()) {
    bool iu = vertex_in_tree(d_->vertex(e));
    bool iv = vertex_in_tree(d_->vertex(d_->mate[e]));
    if (iu != iv) out.push_back(e);
  }
  return out;
}

std::vector<int> TreeCtx::tree_path(int u, int v) const {
  std::vector<int> left, right;
  int a = u, b = v;
  const Diagram& d = *d_;
  auto parent_of = [&](int x) {
    int e = parent_edge_[x];
    int p = d.vertex(e) == x ? d.vertex(d.mate[e]) : d.vertex(e);
    return p;
  };
  while (a != b) {
    if (vlevel_[a] >= vlevel_[b]) {
      left.push_back(parent_edge_[a]);
      a = parent_of(a);
    } else {
      right.push_back(parent_edge_[b]);
      b = parent_of(b);
    }
  }
  left.insert(left.end(), right.rbegin(), right.rend());
  return left;
}

int TreeCtx::node_of(const SideColoring& sc, int dart) const {
  int f = fs_.face_of[dart];
  if (f != sc.split_face) return f;
  const Face& face = fs_.faces[f];
  int L = face.size();
  int pos = -1;
  for (int i = 0; i < L; ++i)
    if (face.darts[i] == dart) pos = i;
  // part A holds walk positions in [pos_p, pos_c) cyclically
  int rel = ((pos - sc.pos_p) % L + L) % L;
  int len_a = ((sc.pos_c - sc.pos_p) % L + L) % L;
  return rel < len_a ? f : fs_.count();
}

TreeCtx::SideColoring TreeCtx::color_cycle(const std::vector<int>& cycle_edges,
                                           int face, int corner_p,
                                           int corner_c) const {
  const Diagram& d = *d_;
  SideColoring sc;
  sc.split_face = face;
  if (face >= 0) {
    const Face& f = fs_.faces[face];
    for (int i = 0; i < f.size(); ++i) {
      if (f.darts[i] == corner_p) sc.pos_p = i;
      if (f.darts[i] == corner_c) sc.pos_c = i;
    }
  }
  std::vector<char> on_cycle(d.darts(), 0);
  for (int e : cycle_edges) on_cycle[e] = 1;
  int nodes = fs_.count() + 1;
  sc.node_color.assign(nodes, -1);
  // adjacency with parity via BFS
  std::vector<std::vector<std::pair<int, int>>> adj(nodes);
  for (int e : d.edges()) {
    int n1 = node_of(sc, e), n2 = node_of(sc, d.mate[e]);
    int flip = on_cycle[e] ? 1 : 0;
    adj[n1].push_back({n2, flip});
    adj[n2].push_back({n1, flip});
  }
  if (face >= 0) {
    adj[face].push_back({fs_.count(), 1});
    adj[fs_.count()].push_back({face, 1});
  }
  std::queue<int> q;
  sc.node_color[node_of(sc, 0)] = 0;
  q.push(node_of(sc, 0));
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (auto [y, flip] : adj[x]) {
      int want = sc.node_color[x] ^ flip;
      if (sc.node_color[y] < 0) {
        sc.node_color[y] = want;
        q.push(y);
      } else if (sc.node_color[y] != want) {
        return sc;  // ok stays false
      }
    }
  }
  sc.ok = true;
  return sc;
}

std::optional<CuttingArc> TreeCtx::cutting_arc_at(int p, int) const {
  const Diagram& d = *d_;
  std::optional<CuttingArc> best;
  long best_rank = -1;
  int se = -1;
  if (parent_edge_[p] >= 0) {
    int e = parent_edge_[p];
    se = d.slot(d.vertex(e) == p ? e : d.mate[e]);
  }
  for (int s = 0; s < 4; ++s) {
    int corner_p = d.dart(p, s);
    int face = fs_.face_of[corner_p];
    const Face& f = fs_.faces[face];
    int L = f.size();
    int pos_p = -1;
    for (int i = 0; i < L; ++i)
      if (f.darts[i] == corner_p) pos_p = i;
    for (int j = 0; j < L; ++j) {
      int corner_c = f.darts[j];
      int c = d.vertex(corner_c);
      if (c == p || !vertex_in_tree(c)) continue;
      int diff = ((j - pos_p) % L + L) % L;
      if (diff == 1 || diff == L - 1) continue;  // chord parallels one edge
      std::vector<int> cyc = tree_path(p, c);
      SideColoring sc = color_cycle(cyc, face, corner_p, corner_c);
      if (!sc.ok) continue;
      int cnt[2] = {0, 0};
      std::vector<char> on_cycle(d.darts(), 0);
      for (int e : cyc) on_cycle[e] = 1;
      for (int e : d.edges()) {
        if (elevel_[e] >= 0 || entry_[e] >= 0) continue;  // inside closure
        if (on_cycle[e]) continue;
        ++cnt[sc.node_color[node_of(sc, e)]];
      }
      if (cnt[0] == 0 || cnt[1] == 0) continue;
      CuttingArc arc;
      arc.face = face;
      arc.corner_p = corner_p;
      arc.corner_c = corner_c;
      arc.vertex_c = c;
      arc.edge_side.assign(d.darts(), -1);
      for (int e : d.edges())
        if (!on_cycle[e])
          arc.edge_side[e] = sc.node_color[node_of(sc, e)];
      if (se >= 0) {
        auto side_of_slot = [&](int slot) {
          int e = d.edge_of(d.dart(p, slot));
          return arc.edge_side[e];
        };
        arc.side_of_ebar = side_of_slot(se + 1);
        arc.side_of_eprime = side_of_slot(se + 2);
        arc.side_of_ebar_prime = side_of_slot(se + 3);
      }
      // prefer a B3-patterned arc, then B2, then innermost-ish (small side)
      int pattern = 2;
      if (se >= 0) {
        int t = (s + 3) & 3;  // chord lies between slots t and t+1
        if (t == ((se + 1) & 3)) pattern = 0;       // B3
        else if (t == ((se + 2) & 3)) pattern = 1;  // B2
      }
      long rank = pattern * 1000000L + std::min(cnt[0], cnt[1]) * 1000L + s * 100 + j;
      if (!best || rank < best_rank) {
        best = arc;
        best_rank = rank;
      }
    }
  }
  return best;
}

std::optional<CuttingArc> TreeCtx::find_cutting_arc() const {
  if (order_.empty()) return std::nullopt;
  return cutting_arc_at(wstack_.back(), 0);
}

ExtensionClass TreeCtx::classify_extension(int e) const {
  TreeCtx& self = const_cast<TreeCtx&>(*this);
  const Diagram& d = *d_;
  bool final = size() + 2 == d.crossings();  // this push makes it spanning
  self.push(e);
  ExtensionClass out;
  int level = size();
  if (!final) {
    for (int f : d.edges()) {
      if (entry_[f] == level && !entry_good_[f]) {
        out.tag = ExtensionTag::B1;
        out.bad_edge = f;
        int w = wstack_.back();
        out.bad_c = d.vertex(f) == w ? d.vertex(d.mate[f]) : d.vertex(f);
        if (d.vertex(f) == w && d.vertex(d.mate[f]) == w) out.bad_c = w;
        break;
      }
    }
  }
  if (out.tag == ExtensionTag::Good) {
    auto arc = find_cutting_arc();
    if (arc) {
      int p = wstack_.back();
      int se = d.slot(d.vertex(e) == p ? e : d.mate[e]);
      int s = d.slot(arc->corner_p);
      int t = (s + 3) & 3;
      if (t == ((se + 1) & 3))
        out.tag = ExtensionTag::B3;
      else
        out.tag = ExtensionTag::B2;
      out.arc = std::move(arc);
    }
  }
  self.pop();
  return out;
}

std::vector<int> TreeCtx::find_good_extensions() const {
  std::vector<int> out;
  for (int e : extension_candidates())
    if (classify_extension(e).tag == ExtensionTag::Good) out.push_back(e);
  return out;
}

bool TreeCtx::good_sided_cycle(int e) const {
  const Diagram& d = *d_;
  if (entry_[e] < 0) return false;
  int i = entry_[e];
  std::vector<int> cyc = tree_path(d.vertex(e), d.vertex(d.mate[e]));
  cyc.push_back(e);
  SideColoring sc = color_cycle(cyc, -1, -1, -1);
  if (!sc.ok) return false;
  std::vector<char> on_cycle(d.darts(), 0);
  for (int ce : cyc) on_cycle[ce] = 1;
  // Allowed inside: tree edges (they contract into the hub corner) and
  // good closure edges of prefixes up to T_{i-2} (spokes of the contracted
  // cluster). Later entries would be chords cutting the region.
  bool side_ok[2] = {true, true};
  for (int g : d.edges()) {
    if (on_cycle[g]) continue;
    int side = sc.node_color[node_of(sc, g)];
    bool fine = (elevel_[g] >= 1 && elevel_[g] <= i) ||
                (entry_[g] >= 0 && entry_[g] <= i - 2 && entry_good_[g]);
    if (!fine) side_ok[side] = false;
  }
  return side_ok[0] || side_ok[1];
}

bool TreeCtx::detect_doubly_good(int e) const {
  if (entry_[e] < 0 || !entry_good_[e]) return false;
  if (!d_->edge_nonalternating(e)) return false;
  return good_sided_cycle(e) && triangle_cycle(e);
}

bool TreeCtx::triangle_cycle(int e) const {
  // e joins the two newest vertices and its cycle runs through both e_i
  // and e_{i-1}; contracting T_{i-2} then leaves the triangular region
  // bounded by e, e_i, e_{i-1} with the hub as the third corner
  int i = entry_[e];
  if (i < 2) return false;
  int wi = wstack_[i - 1], wprev = wstack_[i - 2];
  int u = d_->vertex(e), v = d_->vertex(d_->mate[e]);
  if (!((u == wi && v == wprev) || (u == wprev && v == wi))) return false;
  for (int g : tree_path(u, v))
    if (elevel_[g] == i - 1) return true;
  return false;
}

bool TreeCtx::verify_good(const Diagram& d, const FilteredTree& t, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  TreeCtx ctx(d, t.root);
  for (size_t i = 0; i < t.edges.size(); ++i) {
    int e = t.edges[i];
    bool iu = ctx.vertex_in_tree(d.vertex(e));
    bool iv = ctx.vertex_in_tree(d.vertex(d.mate[e]));
    if (iu == iv) return fail("edge " + std::to_string(e) + " is not an extension");
    auto cls = ctx.classify_extension(e);
    if (cls.tag != ExtensionTag::Good)
      return fail("extension " + std::to_string(i + 1) + " is not good");
    ctx.push(e);
  }
  return true;
}

}  // namespace knotarc
