#include "knotarc/tangle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "knotarc/moves.hpp"

namespace knotarc {

std::string kind_name(TangleKind k, int n) {
  switch (k) {
    case TangleKind::Alternating:
      return "alternating";
    case TangleKind::AlmostAlternating:
      return "almost-alternating";
    case TangleKind::N1Nonalternating:
      return "(" + std::to_string(n) + ",1)-nonalternating";
    case TangleKind::NNonalternating:
      return std::to_string(n) + "-nonalternating";
    default:
      return "other";
  }
}

namespace {

bool all_edges_alternating(const Diagram& d) {
  return d.nonalternating_edges().empty();
}

// chains of crossings joined by bigon faces
std::vector<std::vector<int>> bigon_chains(const Diagram& d, const FaceSet& fs) {
  int n = d.crossings();
  std::vector<std::set<int>> adj(n);
  for (const Face& f : fs.faces) {
    if (f.size() != 2) continue;
    int u = d.vertex(f.darts[0]), v = d.vertex(f.darts[1]);
    if (u == v) continue;
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<std::vector<int>> chains;
  std::vector<char> used(n, 0);
  for (int v = 0; v < n; ++v) {
    if (used[v] || adj[v].empty()) continue;
    if (adj[v].size() > 2) continue;  // not a chain shape
    if (adj[v].size() == 2) continue; // interior; start from an end
    // v is a chain end
    std::vector<int> chain{v};
    used[v] = 1;
    int prev = -1, cur = v;
    while (true) {
      int nxt = -1;
      for (int u : adj[cur])
        if (u != prev) nxt = u;
      if (nxt < 0 || used[nxt]) break;
      chain.push_back(nxt);
      used[nxt] = 1;
      prev = cur;
      cur = nxt;
    }
    chains.push_back(chain);
  }
  return chains;
}

// internal edges of a chain: all edges between consecutive chain crossings
std::vector<int> chain_internal_edges(const Diagram& d, const std::vector<int>& chain) {
  std::set<int> inside(chain.begin(), chain.end());
  std::vector<int> internal;
  std::set<int> chainset(chain.begin(), chain.end());
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    for (int s = 0; s < 4; ++s) {
      int dd = d.dart(chain[i], s);
      if (d.vertex(d.mate[dd]) == chain[i + 1]) internal.push_back(d.edge_of(dd));
    }
  }
  std::sort(internal.begin(), internal.end());
  internal.erase(std::unique(internal.begin(), internal.end()), internal.end());
  return internal;
}

std::vector<int> chain_cut_edges(const Diagram& d, const std::vector<int>& chain) {
  std::set<int> internal;
  for (int e : chain_internal_edges(d, chain)) internal.insert(e);
  std::set<int> inset(chain.begin(), chain.end());
  std::vector<int> cuts;
  for (int v : chain)
    for (int s = 0; s < 4; ++s) {
      int e = d.edge_of(d.dart(v, s));
      if (internal.count(e)) continue;
      cuts.push_back(e);
    }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

}  // namespace

TangleClassification detect_tangle_structure(const Diagram& d) {
  TangleClassification tc;
  auto nonalt = d.nonalternating_edges();
  if (nonalt.empty()) {
    tc.kind = TangleKind::Alternating;
    return tc;
  }
  // almost alternating: one crossing switch restores alternation
  for (int v = 0; v < d.crossings(); ++v) {
    if (all_edges_alternating(switch_crossing(d, v))) {
      tc.kind = TangleKind::AlmostAlternating;
      tc.n = 1;
      tc.q = v;
      tc.tangle_vertices = {v};
      for (int s = 0; s < 4; ++s) tc.cut_edges.push_back(d.edge_of(d.dart(v, s)));
      std::sort(tc.cut_edges.begin(), tc.cut_edges.end());
      tc.cut_edges.erase(std::unique(tc.cut_edges.begin(), tc.cut_edges.end()),
                         tc.cut_edges.end());
      tc.mismatch_edges = nonalt;
      return tc;
    }
  }
  FaceSet fs = faces(d);
  auto chains = bigon_chains(d, fs);
  std::sort(chains.begin(), chains.end(),
            [](const auto& a, const auto& b) { return a.size() > b.size(); });
  std::set<int> nonalt_set(nonalt.begin(), nonalt.end());
  for (const auto& chain : chains) {
    int k = static_cast<int>(chain.size());
    if (k < 2) continue;
    auto internal = chain_internal_edges(d, chain);
    if (static_cast<int>(internal.size()) != 2 * (k - 1)) continue;
    bool internal_alt = true;
    for (int e : internal)
      if (d.edge_nonalternating(e)) internal_alt = false;
    if (!internal_alt) continue;
    auto cuts = chain_cut_edges(d, chain);
    if (cuts.size() != 4) continue;
    std::set<int> cutset(cuts.begin(), cuts.end());
    bool covered = true;
    for (int e : nonalt)
      if (!cutset.count(e)) covered = false;
    if (!covered) continue;
    // mismatch edges sharing a chain-end crossing make it (k-1,1)
    int shared_end = -1;
    for (int endv : {chain.front(), chain.back()}) {
      int cnt = 0;
      for (int e : nonalt)
        if (d.vertex(e) == endv || d.vertex(d.mate[e]) == endv) ++cnt;
      if (cnt >= 2) shared_end = endv;
    }
    tc.tangle_vertices = chain;
    tc.cut_edges = cuts;
    tc.mismatch_edges = nonalt;
    if (shared_end >= 0 && k >= 3) {
      tc.kind = TangleKind::N1Nonalternating;
      tc.n = k - 1;
      tc.q = shared_end;
    } else {
      tc.kind = TangleKind::NNonalternating;
      tc.n = k;
      // distinguished vertex: a chain end touching a mismatch
      tc.q = chain.front();
      for (int endv : {chain.front(), chain.back()})
        for (int e : nonalt)
          if (d.vertex(e) == endv || d.vertex(d.mate[e]) == endv) tc.q = endv;
    }
    return tc;
  }
  tc.kind = TangleKind::Other;
  return tc;
}

namespace {

std::set<int> face_vertices(const Diagram& d, const Face& f) {
  std::set<int> out;
  for (int dd : f.darts) out.insert(d.vertex(dd));
  return out;
}

std::set<int> face_edges(const Diagram& d, const Face& f) {
  std::set<int> out;
  for (int dd : f.darts) out.insert(d.edge_of(dd));
  return out;
}

/// Strand path from vertex v to vertex w avoiding forbidden edges; the
/// path follows the knot straight through crossings.
bool strand_path_exists(const Diagram& d, int v, int w,
                        const std::set<int>& forbidden) {
  if (v == w) return false;
  for (int s = 0; s < 4; ++s) {
    int cur = d.dart(v, s);
    for (int steps = 0; steps < 2 * d.crossings(); ++steps) {
      if (forbidden.count(d.edge_of(cur))) break;
      int arrive = d.mate[cur];
      if (d.vertex(arrive) == w) return true;
      cur = d.across(arrive);
    }
  }
  return false;
}

}  // namespace

ConditionReport check_theorem_conditions(const Diagram& d,
                                         const TangleClassification& tc) {
  if (tc.kind == TangleKind::Alternating || tc.kind == TangleKind::Other)
    throw std::invalid_argument(
        "condition check needs a nonalternating tangle classification");
  ConditionReport rep;
  rep.classification = tc;
  FaceSet fs = faces(d);

  // candidate F3: triangular faces with a nonalternating edge
  std::vector<int> f3s;
  for (int i = 0; i < fs.count(); ++i) {
    const Face& f = fs.faces[i];
    if (f.size() != 3) continue;
    for (int dd : f.darts)
      if (d.edge_nonalternating(d.edge_of(dd))) {
        f3s.push_back(i);
        break;
      }
  }

  // candidate flank pairs (F1, F2)
  std::vector<std::pair<int, int>> flank_pairs;
  if (tc.kind == TangleKind::AlmostAlternating) {
    int q = tc.q;
    int c0 = fs.corner_face(d, q, 0), c1 = fs.corner_face(d, q, 1);
    int c2 = fs.corner_face(d, q, 2), c3 = fs.corner_face(d, q, 3);
    for (auto [a, b] : std::vector<std::pair<int, int>>{{c0, c2}, {c2, c0},
                                                        {c1, c3}, {c3, c1}})
      flank_pairs.push_back({a, b});
  } else {
    // flanks of the chain: the non-bigon sides of one internal bigon pair
    auto internal = chain_internal_edges(d, tc.tangle_vertices);
    std::set<int> flanks;
    for (int e : internal) {
      for (int dd : {e, d.mate[e]}) {
        const Face& f = fs.faces[fs.face_of[dd]];
        if (f.size() != 2) flanks.insert(fs.face_of[dd]);
      }
    }
    std::vector<int> fl(flanks.begin(), flanks.end());
    if (fl.size() == 2) {
      flank_pairs.push_back({fl[0], fl[1]});
      flank_pairs.push_back({fl[1], fl[0]});
    }
  }

  auto add_labeling = [&](TheoremLabeling lab) {
    rep.labelings.push_back(std::move(lab));
    if (rep.labelings.back().pass) rep.any_pass = true;
  };

  auto facev = [&](int f) { return face_vertices(d, fs.faces[f]); };
  auto facee = [&](int f) { return face_edges(d, fs.faces[f]); };

  for (int f3 : f3s) {
    for (auto [f1, f2] : flank_pairs) {
      if (f1 == f3 || f2 == f3) continue;
      if (tc.kind == TangleKind::AlmostAlternating) {
        for (int s = 0; s < 4; ++s) {
          int e = d.edge_of(d.dart(tc.q, s));
          TheoremLabeling lab;
          lab.theorem = 10;
          lab.f1 = f1;
          lab.f2 = f2;
          lab.f3 = f3;
          lab.q = tc.q;
          lab.e = e;
          // F: union of the two faces flanking e
          int fa = fs.face_of[e], fb = fs.face_of[d.mate[e]];
          std::set<int> Fv = facev(fa);
          for (int x : facev(fb)) Fv.insert(x);
          std::set<int> Fe = facee(fa);
          for (int x : facee(fb)) Fe.insert(x);
          // (1) F meets F1 union F2 exactly in {q}
          std::set<int> shared;
          for (int x : facev(f1))
            if (Fv.count(x)) shared.insert(x);
          for (int x : facev(f2))
            if (Fv.count(x)) shared.insert(x);
          bool c1 = shared == std::set<int>{tc.q};
          std::set<int> shared_e;
          for (int x : facee(f1))
            if (Fe.count(x)) shared_e.insert(x);
          for (int x : facee(f2))
            if (Fe.count(x)) shared_e.insert(x);
          c1 = c1 && shared_e.empty();
          lab.conditions.push_back({"F meets F1 u F2 exactly in q", c1, ""});
          // (2) string from dF to dF2 avoiding dF1 u dF3
          std::set<int> forb = facee(f1);
          for (int x : facee(f3)) forb.insert(x);
          bool c2 = false;
          std::string wit;
          for (int v : Fv) {
            for (int w : facev(f2)) {
              if (strand_path_exists(d, v, w, forb)) {
                c2 = true;
                wit = "v=" + std::to_string(v) + " w=" + std::to_string(w);
                break;
              }
            }
            if (c2) break;
          }
          lab.conditions.push_back({"string to dF2 avoiding dF1 u dF3", c2, wit});
          lab.pass = c1 && c2;
          add_labeling(lab);
        }
        continue;
      }
      // theorems for (n,1)- and n-nonalternating diagrams
      std::vector<std::pair<int, int>> epairs;
      for (size_t i = 0; i < tc.mismatch_edges.size(); ++i)
        for (size_t j = i + 1; j < tc.mismatch_edges.size(); ++j)
          epairs.push_back({tc.mismatch_edges[i], tc.mismatch_edges[j]});
      for (auto [e1, e2] : epairs) {
        TheoremLabeling lab;
        lab.theorem = tc.kind == TangleKind::N1Nonalternating ? 8 : 9;
        lab.f1 = f1;
        lab.f2 = f2;
        lab.f3 = f3;
        lab.q = tc.q;
        lab.e1 = e1;
        lab.e2 = e2;
        // (1) some face F holds e1 and e2 and avoids F1, F2
        int F = -1;
        for (int f = 0; f < fs.count(); ++f) {
          auto fe = facee(f);
          if (!fe.count(e1) || !fe.count(e2)) continue;
          auto fv = facev(f);
          bool disjoint = true;
          for (int x : facev(f1))
            if (fv.count(x)) disjoint = false;
          for (int x : facev(f2))
            if (fv.count(x)) disjoint = false;
          if (disjoint) {
            F = f;
            break;
          }
        }
        bool c1 = F >= 0;
        lab.conditions.push_back(
            {"face F with e1,e2 on dF and F disjoint from F1 u F2", c1,
             c1 ? "F=" + std::to_string(F) : ""});
        // (2) string condition
        bool c2 = false;
        std::string wit;
        if (F >= 0) {
          std::set<int> forb = facee(f1);
          for (int x : facee(f3)) forb.insert(x);
          std::set<int> vs = facev(F);
          std::set<int> ws = facev(f2);
          if (lab.theorem == 8) {
            vs.insert(tc.q);
          } else {
            for (int x : facee(f2)) forb.insert(x);
            ws.erase(tc.q);
          }
          for (int v : vs) {
            for (int w : ws) {
              if (strand_path_exists(d, v, w, forb)) {
                c2 = true;
                wit = "v=" + std::to_string(v) + " w=" + std::to_string(w);
                break;
              }
            }
            if (c2) break;
          }
        }
        lab.conditions.push_back({"string from dF to dF2", c2, wit});
        // (3) for n-nonalternating: dF2 has at least n+3 edges
        bool c3 = true;
        if (lab.theorem == 9) {
          c3 = static_cast<int>(facee(f2).size()) >= tc.n + 3;
          lab.conditions.push_back(
              {"dF2 has at least n+3 edges", c3,
               "|dF2|=" + std::to_string(facee(f2).size())});
        }
        lab.pass = c1 && c2 && c3;
        add_labeling(lab);
      }
    }
  }
  return rep;
}

std::string ConditionReport::json() const {
  std::ostringstream os;
  os << "{\"kind\": \"" << kind_name(classification.kind, classification.n)
     << "\", \"any_pass\": " << (any_pass ? "true" : "false")
     << ", \"labelings\": [";
  for (size_t i = 0; i < labelings.size(); ++i) {
    const auto& L = labelings[i];
    os << (i ? ", " : "") << "{\"theorem\": " << L.theorem << ", \"F1\": " << L.f1
       << ", \"F2\": " << L.f2 << ", \"F3\": " << L.f3 << ", \"q\": " << L.q;
    if (L.e1 >= 0) os << ", \"e1\": " << L.e1 << ", \"e2\": " << L.e2;
    if (L.e >= 0) os << ", \"e\": " << L.e;
    os << ", \"pass\": " << (L.pass ? "true" : "false") << ", \"conditions\": [";
    for (size_t j = 0; j < L.conditions.size(); ++j) {
      const auto& c = L.conditions[j];
      os << (j ? ", " : "") << "{\"name\": \"" << c.name
         << "\", \"pass\": " << (c.pass ? "true" : "false") << ", \"witness\": \""
         << c.witness << "\"}";
    }
    os << "]}";
  }
  os << "]}";
  return os.str();
}

}  // namespace knotarc
