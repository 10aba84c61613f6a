#include "knotarc/arc_builder.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace knotarc {

ArcBuilder::ArcBuilder(const Diagram& d, const FilteredTree& t,
                       std::vector<int> retract_edges)
    : d_(d), tree_(t), retract_(retract_edges.begin(), retract_edges.end()) {}

void ArcBuilder::init_root() {
  int r = tree_.root;
  for (int s = 0; s < 4; ++s) {
    rot_.push_back({false, d_.dart(r, s)});
    dart_item_[d_.dart(r, s)] = std::prev(rot_.end());
  }
  int a = d_.axis[r];
  auto add_pass = [&](int d1, int d2) {
    Pass p;
    p.a = {false, d1, 0};
    p.b = {false, d2, 0};
    passes_.push_back(p);
    pos_.push_back(static_cast<int>(passes_.size()) - 1);
    pass_pos_.push_back(std::prev(pos_.end()));
    dart_pass_[d1] = dart_pass_[d2] = static_cast<int>(passes_.size()) - 1;
  };
  add_pass(d_.dart(r, a), d_.dart(r, a + 2));      // under strand at the bottom
  add_pass(d_.dart(r, a + 1), d_.dart(r, a + 3));  // over strand above it
  scan_new_loops({d_.dart(r, 0), d_.dart(r, 1), d_.dart(r, 2), d_.dart(r, 3)});
}

void ArcBuilder::scan_new_loops(const std::vector<int>& darts) {
  for (int dd : darts) {
    int m = d_.mate[dd];
    if (dart_item_.count(dd) && dart_item_.count(m))
      live_loops_.insert(d_.edge_of(dd));
  }
}

void ArcBuilder::contract(int tree_edge) {
  int hub_dart = dart_item_.count(tree_edge) ? tree_edge : d_.mate[tree_edge];
  if (!dart_item_.count(hub_dart))
    throw ArcBuildError("tree edge not on the hub boundary");
  int far = d_.mate[hub_dart];
  int d1 = d_.ccw(far), d2 = d_.across(far), d3 = d_.cw(far);
  auto it = dart_item_[hub_dart];
  auto where = rot_.erase(it);
  dart_item_.erase(hub_dart);
  for (int nd : {d3, d2, d1}) {  // insert reversed so ccw order reads d1,d2,d3
    where = rot_.insert(where, {false, nd});
    dart_item_[nd] = where;
  }
  // strand continuation keeps the old pass slot
  int pe = dart_pass_.at(hub_dart);
  Pass& P = passes_[pe];
  Port& port = (!P.a.frozen && P.a.id == hub_dart) ? P.a : P.b;
  port = {false, d2, 0};
  dart_pass_.erase(hub_dart);
  dart_pass_[d2] = pe;
  // the strand crossing at v1 becomes a pass directly above or below it
  Pass np;
  np.a = {false, d1, 0};
  np.b = {false, d3, 0};
  passes_.push_back(np);
  int npid = static_cast<int>(passes_.size()) - 1;
  auto at = pass_pos_[pe];
  if (d_.over(d1)) ++at;
  pass_pos_.push_back(pos_.insert(at, npid));
  dart_pass_[d1] = dart_pass_[d3] = npid;
  ++contracted_;
  ++removed_edges_;
  scan_new_loops({d1, d2, d3});
}

int ArcBuilder::rot_index(const Port& p) const {
  int i = 0;
  for (const Item& it : rot_) {
    if (it.marker == p.frozen && it.id == p.id) return i;
    ++i;
  }
  return -1;
}

bool ArcBuilder::interleaves(int a1, int a2, int b1, int b2, int circle) const {
  auto inside = [&](int x) {
    int rel = ((x - a1) % circle + circle) % circle;
    int len = ((a2 - a1) % circle + circle) % circle;
    return rel > 0 && rel < len;
  };
  return inside(b1) != inside(b2);
}

bool ArcBuilder::passes_interleave(int p, int q) const {
  int circle = static_cast<int>(rot_.size());
  int a1 = rot_index(passes_[p].a), a2 = rot_index(passes_[p].b);
  int b1 = rot_index(passes_[q].a), b2 = rot_index(passes_[q].b);
  if (a1 < 0 || a2 < 0 || b1 < 0 || b2 < 0)
    throw ArcBuildError("pass port missing from the rotation");
  return interleaves(a1, a2, b1, b2, circle);
}

/// Bring the two passes to adjacent slots in the height order using swaps
/// of non-interleaved neighbours (such swaps change no crossing data).
bool ArcBuilder::make_adjacent(int p1, int p2) {
  for (int guard = 0; guard < 4 * static_cast<int>(passes_.size()) + 8; ++guard) {
    std::vector<int> mid;
    int lowend = -1, highend = -1;
    bool in = false;
    for (int p : pos_) {
      if (p == p1 || p == p2) {
        if (!in) {
          in = true;
          lowend = p;
          continue;
        }
        highend = p;
        break;
      }
      if (in) mid.push_back(p);
    }
    if (mid.empty()) return true;
    if (!passes_interleave(mid.front(), lowend)) {
      int q = mid.front();
      pos_.erase(pass_pos_[q]);
      pass_pos_[q] = pos_.insert(pass_pos_[lowend], q);
    } else if (!passes_interleave(mid.back(), highend)) {
      int q = mid.back();
      pos_.erase(pass_pos_[q]);
      pass_pos_[q] = pos_.insert(std::next(pass_pos_[highend]), q);
    } else {
      return false;
    }
  }
  return false;
}

int ArcBuilder::order_first(int p1, int p2) const {
  for (int p : pos_)
    if (p == p1 || p == p2) return p;
  return p1;
}

bool ArcBuilder::loop_clear_side(int edge, int* from_dart, bool allow_markers) const {
  int g1 = edge, g2 = d_.mate[edge];
  for (int start : {g1, g2}) {
    int other = start == g1 ? g2 : g1;
    std::list<Item>::const_iterator it = dart_item_.at(start);
    ++it;
    bool clear = true;
    while (true) {
      if (it == rot_.end()) it = rot_.begin();
      if (!it->marker && it->id == other) break;
      if (!it->marker || !allow_markers) {
        clear = false;
        break;
      }
      ++it;
    }
    if (clear) {
      *from_dart = start;
      return true;
    }
  }
  return false;
}

bool ArcBuilder::try_freeze(int edge) {
  int from = -1;
  if (!loop_clear_side(edge, &from, false)) return false;  // need an empty sector
  int g1 = from, g2 = d_.mate[from];
  int p1 = dart_pass_.at(g1), p2 = dart_pass_.at(g2);
  if (p1 == p2) return false;  // whole strand; handled by the final fold
  if (!make_adjacent(p1, p2)) return false;
  int sid = static_cast<int>(spokes_.size());
  spokes_.push_back({{p1, p2}});
  auto freeze_port = [&](int pass, int dart, int end) {
    Pass& P = passes_[pass];
    Port& port = (!P.a.frozen && P.a.id == dart) ? P.a : P.b;
    port = {true, sid, end};
  };
  freeze_port(p1, g1, 0);
  freeze_port(p2, g2, 1);
  dart_pass_.erase(g1);
  dart_pass_.erase(g2);
  auto where = rot_.erase(dart_item_.at(g1));
  where = rot_.insert(where, {true, sid});
  spoke_item_.resize(sid + 1);
  spoke_item_[sid] = where;
  rot_.erase(dart_item_.at(g2));
  dart_item_.erase(g1);
  dart_item_.erase(g2);
  live_loops_.erase(edge);
  ++removed_edges_;
  return true;
}

bool ArcBuilder::try_retract(int edge) {
  int from = -1;
  if (!loop_clear_side(edge, &from, true)) return false;  // markers may sit inside
  int g1 = edge, g2 = d_.mate[edge];
  int p1 = dart_pass_.at(g1), p2 = dart_pass_.at(g2);
  if (p1 == p2) return false;
  std::vector<int> order(pos_.begin(), pos_.end());
  auto idx = [&](int pass) {
    return static_cast<int>(std::find(order.begin(), order.end(), pass) -
                            order.begin());
  };
  int h1 = idx(p1), h2 = idx(p2);
  const Pass& P1 = passes_[p1];
  const Pass& P2 = passes_[p2];
  Port x = (!P1.a.frozen && P1.a.id == g1) ? P1.b : P1.a;
  Port y = (!P2.a.frozen && P2.a.id == g2) ? P2.b : P2.a;
  int circle = static_cast<int>(rot_.size());
  int rg1 = rot_index({false, g1, 0}), rg2 = rot_index({false, g2, 0});
  int rx = rot_index(x), ry = rot_index(y);
  if (rx < 0 || ry < 0 || rg1 < 0 || rg2 < 0) return false;
  // Height window for the merged pass: crossings that survive pin it to one
  // side of their other strand; vanishing pairs must be reducible; interior
  // spokes of the contracted region must not span it.
  int lo = -1, hi = static_cast<int>(order.size());
  int lo_pass = -1, hi_pass = -1;
  for (int q = 0; q < static_cast<int>(order.size()); ++q) {
    int qp = order[q];
    if (qp == p1 || qp == p2) continue;
    const Pass& Q = passes_[qp];
    int q1 = rot_index(Q.a), q2 = rot_index(Q.b);
    if (q1 < 0 || q2 < 0) return false;
    bool i1 = interleaves(rx, rg1, q1, q2, circle);
    bool i2 = interleaves(rg2, ry, q1, q2, circle);
    bool im = interleaves(rx, ry, q1, q2, circle);
    if (i1 && i2) {
      if (im) return false;
      if ((h1 > q) != (h2 > q)) return false;  // clasp, not removable
    } else if (i1 || i2) {
      if (!im) return false;
      int hk = i1 ? h1 : h2;
      if (hk > q) {
        if (q > lo) lo = q, lo_pass = qp;
      } else {
        if (q < hi) hi = q, hi_pass = qp;
      }
    } else {
      if (im) return false;
    }
  }
  // Interior spokes of the contracted region: the merged strand sweeps
  // across their pages and must pass entirely above or below each column.
  for (auto it = std::next(dart_item_.at(from));; ++it) {
    if (it == rot_.end()) it = rot_.begin();
    if (!it->marker) break;  // reached the far loop end
    const Spoke& s = spokes_[it->id];
    int a = idx(s.pass_end[0]), b = idx(s.pass_end[1]);
    int sl = std::min(a, b), sh = std::max(a, b);
    if (hi <= sl || lo >= sh) continue;  // window already clear of the column
    if (lo < sl && hi > sh) {
      hi = sl;  // both sides open; pass below
    } else if (lo < sl) {
      hi = std::min(hi, sl);
    } else if (hi > sh) {
      lo = std::max(lo, sh);
    } else {
      return false;
    }
  }
  if (lo >= hi) return false;
  Pass merged;
  merged.a = x;
  merged.b = y;
  passes_.push_back(merged);
  int mid = static_cast<int>(passes_.size()) - 1;
  std::list<int>::iterator insert_at;
  if (lo >= 0) {
    insert_at = std::next(pass_pos_[order[lo]]);
  } else if (hi < static_cast<int>(order.size())) {
    insert_at = pos_.begin();
  } else {
    insert_at = pass_pos_[p1];
  }
  pass_pos_.push_back(pos_.insert(insert_at, mid));
  pos_.erase(pass_pos_[p1]);
  pos_.erase(pass_pos_[p2]);
  passes_[p1].alive = passes_[p2].alive = false;
  if (!x.frozen)
    dart_pass_[x.id] = mid;
  else
    spokes_[x.id].pass_end[x.end] = mid;
  if (!y.frozen)
    dart_pass_[y.id] = mid;
  else
    spokes_[y.id].pass_end[y.end] = mid;
  dart_pass_.erase(g1);
  dart_pass_.erase(g2);
  rot_.erase(dart_item_.at(g1));
  rot_.erase(dart_item_.at(g2));
  dart_item_.erase(g1);
  dart_item_.erase(g2);
  live_loops_.erase(edge);
  ++removed_edges_;
  ++retractions_;
  return true;
}

bool ArcBuilder::process_loops(bool) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (int e : std::vector<int>(live_loops_.begin(), live_loops_.end())) {
      if (!retract_.count(e)) continue;
      if (try_retract(e)) {
        check_conservation();
        progress = true;
      }
      // infeasible designated retractions are retried on later rounds; a
      // persistent failure surfaces in the endgame check
    }
    int remaining = 2 * d_.crossings() - removed_edges_;
    for (int e : std::vector<int>(live_loops_.begin(), live_loops_.end())) {
      if (retract_.count(e)) continue;
      if (remaining <= 1) break;  // the last live edge folds at the end
      if (try_freeze(e)) {
        --remaining;
        check_conservation();
        progress = true;
      }
    }
  }
  return true;
}

void ArcBuilder::final_fold(int edge) {
  int g1 = edge, g2 = d_.mate[edge];
  int p1 = dart_pass_.at(g1), p2 = dart_pass_.at(g2);
  // no other pass may angularly separate the two loop ends
  int circle = static_cast<int>(rot_.size());
  int rg1 = rot_index({false, g1, 0}), rg2 = rot_index({false, g2, 0});
  for (int q = 0; q < static_cast<int>(passes_.size()); ++q) {
    if (!passes_[q].alive || q == p1 || q == p2) continue;
    int q1 = rot_index(passes_[q].a), q2 = rot_index(passes_[q].b);
    if (q1 < 0 || q2 < 0) continue;
    if (interleaves(rg1, rg2, q1, q2, circle))
      throw ArcBuildError("final fold blocked: a strand separates the loop ends");
  }
  if (!make_adjacent(p1, p2))
    throw ArcBuildError("final fold blocked: loop ends cannot reach adjacent heights");
  int sA = static_cast<int>(spokes_.size());
  spokes_.push_back({});
  int sB = sA + 1;
  spokes_.push_back({});
  Pass top;
  top.a = {true, sA, 1};
  top.b = {true, sB, 0};
  passes_.push_back(top);
  int tid = static_cast<int>(passes_.size()) - 1;
  // the joint sits between the two now-adjacent loop heights
  auto first_it = pass_pos_[order_first(p1, p2)];
  pass_pos_.push_back(pos_.insert(std::next(first_it), tid));
  spokes_[sA].pass_end[0] = p1;
  spokes_[sA].pass_end[1] = tid;
  spokes_[sB].pass_end[0] = tid;
  spokes_[sB].pass_end[1] = p2;
  auto freeze_port = [&](int pass, int dart, int sid, int end) {
    Pass& P = passes_[pass];
    Port& port = (!P.a.frozen && P.a.id == dart) ? P.a : P.b;
    port = {true, sid, end};
  };
  freeze_port(p1, g1, sA, 0);
  freeze_port(p2, g2, sB, 1);
  spoke_item_.resize(sB + 1);
  auto w1 = rot_.erase(dart_item_.at(g1));
  spoke_item_[sA] = rot_.insert(w1, {true, sA});
  auto w2 = rot_.erase(dart_item_.at(g2));
  spoke_item_[sB] = rot_.insert(w2, {true, sB});
  dart_item_.erase(g1);
  dart_item_.erase(g2);
  dart_pass_.erase(g1);
  dart_pass_.erase(g2);
  live_loops_.erase(edge);
  ++removed_edges_;
}

void ArcBuilder::check_conservation() {
  int V = d_.crossings() - contracted_;
  int E = 2 * d_.crossings() - removed_edges_;
  int F = E - V + 2;
  int S = static_cast<int>(spokes_.size());
  conservation_log_.push_back({F, S});
  int expect = d_.crossings() + 2 - retractions_;
  if (F + S != expect) {
    std::ostringstream os;
    os << "region+spoke conservation violated: F=" << F << " S=" << S
       << " expected sum " << expect;
    throw ArcBuildError(os.str());
  }
}

GridDiagram ArcBuilder::assemble() const {
  std::map<int, int> height;
  int h = 0;
  for (int p : pos_) height[p] = h++;
  GridDiagram g;
  g.n = static_cast<int>(spokes_.size());
  std::vector<std::pair<int, int>> cols;
  for (const Item& it : rot_) {
    if (!it.marker) throw ArcBuildError("live strand left at assembly");
    const Spoke& s = spokes_[it.id];
    cols.push_back({height.at(s.pass_end[0]), height.at(s.pass_end[1])});
  }
  if (static_cast<int>(cols.size()) != g.n)
    throw ArcBuildError("marker count mismatch at assembly");
  g.columns = cols;
  return g;
}

ArcPresentation ArcBuilder::build() {
  ArcPresentation a;
  if (d_.crossings() == 0) {
    a.grid = GridDiagram::make({{0, 1}, {0, 1}});
    return a;
  }
  init_root();
  check_conservation();
  process_loops(false);
  for (int i = 0; i < static_cast<int>(tree_.edges.size()); ++i) {
    contract(tree_.edges[i]);
    check_conservation();
    process_loops(i + 1 == static_cast<int>(tree_.edges.size()));
  }
  if (live_loops_.size() != 1) {
    std::ostringstream os;
    os << "endgame expects one live loop, have " << live_loops_.size()
       << " (deferred folds could not be completed)";
    throw ArcBuildError(os.str());
  }
  if (static_cast<int>(dart_item_.size()) != 2)
    throw ArcBuildError("live strands besides the final loop remain");
  final_fold(*live_loops_.begin());
  a.grid = assemble();
  auto bad = validate(a.grid);
  if (!bad.empty()) throw ArcBuildError("assembled grid invalid: " + bad[0]);
  return a;
}

ArcPresentation arc_presentation_from_tree(
    const Diagram& d, const FilteredTree& t, std::vector<int> retract_edges,
    std::vector<std::pair<int, int>>* conservation_log) {
  if (d.crossings() > 0 &&
      static_cast<int>(t.edges.size()) != d.crossings() - 1)
    throw std::invalid_argument("tree is not spanning");
  ArcBuilder b(d, t, std::move(retract_edges));
  ArcPresentation a = b.build();
  if (conservation_log) *conservation_log = b.conservation_log();
  return a;
}

}  // namespace knotarc
