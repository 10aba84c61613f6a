#include "knotarc/diagram.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace knotarc {

std::vector<int> Diagram::edges() const {
  std::vector<int> out;
  for (int d = 0; d < darts(); ++d)
    if (d < mate[d]) out.push_back(d);
  return out;
}

int Diagram::components() const {
  std::vector<char> seen(darts(), 0);
  int comp = 0;
  for (int d0 = 0; d0 < darts(); ++d0) {
    if (seen[d0]) continue;
    ++comp;
    int d = d0;
    do {
      seen[d] = 1;
      seen[mate[d]] = 1;
      d = strand_next(d);
    } while (d != d0);
  }
  return comp + free_loops;
}

bool Diagram::is_knot() const {
  if (crossings() == 0) return free_loops == 1;
  return free_loops == 0 && components() == 1;
}

int Diagram::writhe() const {
  // Walk every component once; the reverse orbit is skipped because each
  // edge has exactly one arrival dart per direction.
  std::vector<char> arrived(darts(), 0);
  std::vector<int> under_in(crossings(), -1), over_in(crossings(), -1);
  for (int d0 = 0; d0 < darts(); ++d0) {
    if (arrived[d0] || arrived[mate[d0]]) continue;
    int d = d0;
    do {
      arrived[d] = 1;
      int v = vertex(d);
      if (over(d))
        over_in[v] = slot(d);
      else
        under_in[v] = slot(d);
      d = strand_next(d);
    } while (d != d0);
  }
  int w = 0;
  for (int v = 0; v < crossings(); ++v) {
    if (under_in[v] < 0 || over_in[v] < 0) continue;
    w += ((under_in[v] - over_in[v]) & 3) == 1 ? 1 : -1;
  }
  return w;
}

bool Diagram::connected_shadow() const {
  if (crossings() == 0) return free_loops <= 1;
  if (free_loops > 0) return false;
  std::vector<char> seen(crossings(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int cnt = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int s = 0; s < 4; ++s) {
      int u = vertex(mate[dart(v, s)]);
      if (!seen[u]) {
        seen[u] = 1;
        ++cnt;
        q.push(u);
      }
    }
  }
  return cnt == crossings();
}

bool Diagram::structurally_valid(std::string* why) const {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (darts() != 4 * crossings()) return fail("dart count mismatch");
  for (int d = 0; d < darts(); ++d) {
    if (mate[d] < 0 || mate[d] >= darts()) return fail("mate out of range");
    if (mate[mate[d]] != d) return fail("mate not an involution");
    if (mate[d] == d) return fail("self-mated dart");
  }
  if (crossings() > 0 && !connected_shadow()) return fail("shadow not connected");
  return true;
}

bool Diagram::planar(std::string* why) const {
  if (!structurally_valid(why)) return false;
  if (crossings() == 0) return true;
  int V = crossings(), E = 2 * crossings(), F = faces(*this).count();
  if (V - E + F != 2) {
    if (why) {
      std::ostringstream os;
      os << "Euler check failed: V=" << V << " E=" << E << " F=" << F;
      *why = os.str();
    }
    return false;
  }
  return true;
}

std::vector<int> Diagram::nonalternating_edges() const {
  std::vector<int> out;
  for (int e : edges())
    if (edge_nonalternating(e)) out.push_back(e);
  return out;
}

FaceSet faces(const Diagram& d) {
  FaceSet fs;
  fs.face_of.assign(d.darts(), -1);
  for (int d0 = 0; d0 < d.darts(); ++d0) {
    if (fs.face_of[d0] >= 0) continue;
    Face f;
    int cur = d0;
    do {
      fs.face_of[cur] = fs.count();
      f.darts.push_back(cur);
      cur = d.ccw(d.mate[cur]);
    } while (cur != d0);
    fs.faces.push_back(std::move(f));
  }
  return fs;
}

std::vector<bool> classify_edges(const Diagram& d) {
  std::vector<bool> out(d.darts(), false);
  for (int e : d.edges()) out[e] = d.edge_nonalternating(e);
  return out;
}

int crossing_number(const Diagram& d) { return d.crossings(); }

std::vector<int> two_color_faces(const Diagram& d, const FaceSet& fs,
                                 const std::vector<bool>& barrier_edge) {
  std::vector<int> color(fs.count(), -1);
  std::queue<int> q;
  color[0] = 0;
  q.push(0);
  while (!q.empty()) {
    int f = q.front();
    q.pop();
    for (int dart : fs.faces[f].darts) {
      int g = fs.face_of[d.mate[dart]];
      int want = color[f] ^ (barrier_edge[d.edge_of(dart)] ? 1 : 0);
      if (color[g] < 0) {
        color[g] = want;
        q.push(g);
      } else if (color[g] != want) {
        return {};
      }
    }
  }
  return color;
}

bool prime_shadow(const Diagram& d) {
  if (d.crossings() < 2) return false;
  if (!d.connected_shadow()) return false;
  auto es = d.edges();
  for (int e : es)
    if (d.vertex(e) == d.vertex(d.mate[e])) return false;  // nugatory loop
  // 2-edge cuts separating crossings.
  int n = d.crossings();
  auto connected_without = [&](int e1, int e2) {
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int s = 0; s < 4; ++s) {
        int dd = d.dart(v, s);
        int e = d.edge_of(dd);
        if (e == e1 || e == e2) continue;
        int u = d.vertex(d.mate[dd]);
        if (!seen[u]) {
          seen[u] = 1;
          ++cnt;
          q.push(u);
        }
      }
    }
    return cnt == n;
  };
  for (size_t i = 0; i < es.size(); ++i)
    for (size_t j = i + 1; j < es.size(); ++j)
      if (!connected_without(es[i], es[j])) return false;
  return true;
}

Diagram relabel(const Diagram& d, const std::vector<int>& perm,
                const std::vector<int>& rot) {
  Diagram out;
  out.free_loops = d.free_loops;
  out.axis.assign(d.crossings(), 0);
  out.mate.assign(d.darts(), -1);
  auto map_dart = [&](int dart) {
    int v = d.vertex(dart), s = d.slot(dart);
    return 4 * perm[v] + ((s + rot[v]) & 3);
  };
  for (int v = 0; v < d.crossings(); ++v)
    out.axis[perm[v]] = static_cast<uint8_t>((d.axis[v] + rot[v]) & 1);
  for (int dart = 0; dart < d.darts(); ++dart)
    out.mate[map_dart(dart)] = map_dart(d.mate[dart]);
  return out;
}

std::string Diagram::canonical_code() const {
  int n = crossings();
  if (n == 0) return "()";
  std::string best;
  std::vector<int> newid(n), newrot(n), order;
  for (int start = 0; start < darts(); ++start) {
    std::fill(newid.begin(), newid.end(), -1);
    order.clear();
    auto visit = [&](int dart) {
      int v = vertex(dart);
      if (newid[v] < 0) {
        newid[v] = static_cast<int>(order.size());
        newrot[v] = (-slot(dart)) & 3;
        order.push_back(v);
      }
    };
    visit(start);
    std::string code;
    for (size_t qi = 0; qi < order.size(); ++qi) {
      int v = order[qi];
      for (int s2 = 0; s2 < 4; ++s2) {
        int s = (s2 - newrot[v]) & 3;
        int m = mate[dart(v, s)];
        visit(m);
        int mv = vertex(m);
        int ms = (slot(m) + newrot[mv]) & 3;
        code += static_cast<char>('a' + newid[mv]);
        code += static_cast<char>('0' + ms);
      }
      code += static_cast<char>('A' + ((axis[v] + newrot[v]) & 1));
    }
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

}  // namespace knotarc
