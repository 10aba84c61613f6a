#include "knotarc/construct.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "knotarc/moves.hpp"

namespace knotarc {

namespace {

struct Rng {
  uint64_t s;
  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  int below(int n) { return n > 0 ? static_cast<int>(next() % n) : 0; }
};

// Good extensions ordered for spanning-tree growth: keep nonalternating
// edges out of the tree when possible.
std::vector<int> ordered_good_extensions(const TreeCtx& ctx, Rng* rng) {
  std::vector<int> good = ctx.find_good_extensions();
  const Diagram& d = ctx.diagram();
  if (rng && good.size() > 1)
    std::rotate(good.begin(), good.begin() + rng->below(static_cast<int>(good.size())),
                good.end());
  std::stable_sort(good.begin(), good.end(), [&](int a, int b) {
    return d.edge_nonalternating(a) < d.edge_nonalternating(b);
  });
  return good;
}

bool grow_spanning(TreeCtx& ctx, int& budget, Rng* rng) {
  if (ctx.spanning()) return true;
  if (budget-- <= 0) return false;
  for (int e : ordered_good_extensions(ctx, rng)) {
    ctx.push(e);
    if (grow_spanning(ctx, budget, rng)) return true;
    ctx.pop();
    if (budget <= 0) return false;
  }
  return false;
}

bool grow_to_vertices(TreeCtx& ctx, const std::vector<int>& targets,
                      const std::set<int>& avoid_edges,
                      const std::set<int>& avoid_vertices, int& budget,
                      std::vector<int>* pushed) {
  auto missing = [&] {
    for (int v : targets)
      if (!ctx.vertex_in_tree(v)) return true;
    return false;
  };
  if (!missing()) return true;
  if (budget-- <= 0) return false;
  const Diagram& d = ctx.diagram();
  std::vector<int> good;
  for (int e : ctx.extension_candidates()) {
    if (avoid_edges.count(e)) continue;
    if (avoid_vertices.count(d.vertex(e)) || avoid_vertices.count(d.vertex(d.mate[e])))
      continue;
    if (ctx.classify_extension(e).tag == ExtensionTag::Good) good.push_back(e);
  }
  auto touches_target = [&](int e) {
    for (int v : targets)
      if (v == d.vertex(e) || v == d.vertex(d.mate[e])) return true;
    return false;
  };
  std::stable_sort(good.begin(), good.end(), [&](int a, int b) {
    return touches_target(a) > touches_target(b);
  });
  for (int e : good) {
    ctx.push(e);
    pushed->push_back(e);
    if (grow_to_vertices(ctx, targets, avoid_edges, avoid_vertices, budget, pushed))
      return true;
    ctx.pop();
    pushed->pop_back();
    if (budget <= 0) return false;
  }
  return false;
}

bool grow_region(TreeCtx& ctx, const std::set<int>& region,
                 std::optional<int> last, int& budget, std::vector<int>* out) {
  const Diagram& d = ctx.diagram();
  int p_last = -1;
  if (last) {
    int e = *last;
    p_last = ctx.vertex_in_tree(d.vertex(e)) ? d.vertex(d.mate[e]) : d.vertex(e);
  }
  auto done = [&] {
    for (int g : region) {
      if (last && (d.vertex(g) == p_last || d.vertex(d.mate[g]) == p_last))
        continue;  // settled once `last` joins
      if (!ctx.edge_in_tree(g) && ctx.entry_level(g) < 0) return false;
    }
    return true;
  };
  if (done()) {
    if (!last) return true;
    if (ctx.classify_extension(*last).tag != ExtensionTag::Good) return false;
    ctx.push(*last);
    out->push_back(*last);
    return true;
  }
  if (budget-- <= 0) return false;
  for (int e : ctx.extension_candidates()) {
    if (!region.count(e)) continue;
    if (last && (*last == e || d.vertex(e) == p_last ||
                 d.vertex(d.mate[e]) == p_last))
      continue;
    if (ctx.classify_extension(e).tag != ExtensionTag::Good) continue;
    ctx.push(e);
    out->push_back(e);
    if (grow_region(ctx, region, last, budget, out)) return true;
    ctx.pop();
    out->pop_back();
    if (budget <= 0) return false;
  }
  return false;
}

// Swallow a face around a nonalternating edge so that it becomes doubly
// good; the two shoulder edges are extended last.
bool plan_doubly_good(TreeCtx& ctx, const FaceSet& fs, int g, int face_id,
                      bool reverse, int& budget, std::vector<int>* pushed) {
  const Diagram& d = ctx.diagram();
  const Face& f = fs.faces[face_id];
  int L = f.size();
  if (L < 3) return false;
  int kpos = -1;
  for (int i = 0; i < L; ++i)
    if (d.edge_of(f.darts[i]) == g) kpos = i;
  if (kpos < 0) return false;
  auto corner_vertex = [&](int i) { return d.vertex(f.darts[((i % L) + L) % L]); };
  int p = corner_vertex(kpos), q = corner_vertex(kpos + 1);
  int e_q = d.edge_of(f.darts[(kpos + 1) % L]);
  int e_p = d.edge_of(f.darts[(kpos - 1 + L) % L]);
  if (reverse) {
    std::swap(p, q);
    std::swap(e_q, e_p);
  }
  if (e_q == g || e_p == g || p == q) return false;
  if (ctx.vertex_in_tree(p) || ctx.vertex_in_tree(q)) return false;
  std::vector<int> others;
  for (int i = 0; i < L; ++i) {
    int v = corner_vertex(i);
    if (v != p && v != q) others.push_back(v);
  }
  if (others.empty()) return false;
  std::set<int> avoid{g, e_q, e_p};
  std::set<int> avoid_v{p, q};
  size_t mark = pushed->size();
  auto undo = [&] {
    while (pushed->size() > mark) {
      ctx.pop();
      pushed->pop_back();
    }
  };
  if (!grow_to_vertices(ctx, others, avoid, avoid_v, budget, pushed)) {
    undo();
    return false;
  }
  auto try_push = [&](int e) -> bool {
    auto cls = ctx.classify_extension(e);
    if (cls.tag == ExtensionTag::Good) {
      ctx.push(e);
      pushed->push_back(e);
      return true;
    }
    if ((cls.tag == ExtensionTag::B3 || cls.tag == ExtensionTag::B2) && cls.arc) {
      std::set<int> region;
      for (int ge : d.edges())
        if (cls.arc->edge_side[ge] == cls.arc->side_of_ebar &&
            !ctx.edge_in_tree(ge) && ctx.entry_level(ge) < 0)
          region.insert(ge);
      region.insert(e);
      std::vector<int> seq;
      if (!grow_region(ctx, region, e, budget, &seq)) return false;
      pushed->insert(pushed->end(), seq.begin(), seq.end());
      return true;
    }
    return false;
  };
  if (!try_push(e_q)) {
    undo();
    return false;
  }
  if (!try_push(e_p)) {
    undo();
    return false;
  }
  if (!ctx.detect_doubly_good(g)) {
    undo();
    return false;
  }
  return true;
}

Construction replay(const Diagram& d, const FilteredTree& t,
                    std::vector<int> designated) {
  Construction c;
  c.tree = t;
  c.retracted = std::move(designated);
  c.arc = arc_presentation_from_tree(d, t, c.retracted, &c.conservation);
  return c;
}

Construction construct_with_savings(const Diagram& d, int want,
                                    const ConstructOptions& opt) {
  auto nonalt = d.nonalternating_edges();
  if (static_cast<int>(nonalt.size()) < want)
    throw ConstructError("diagram has too few nonalternating edges");
  FaceSet fs = faces(d);
  Rng rng{opt.seed * 88172645463325252ull + 7};

  struct Plan {
    int edge, face;
    bool reverse;
  };
  std::vector<std::vector<Plan>> plans;
  for (int g : nonalt) {
    std::vector<Plan> ps;
    int f1 = fs.face_of[g], f2 = fs.face_of[d.mate[g]];
    for (int fid : {f1, f2})
      for (bool rev : {false, true}) ps.push_back({g, fid, rev});
    plans.push_back(ps);
  }
  int m = static_cast<int>(nonalt.size());

  std::function<bool(int, int, TreeCtx&, std::vector<int>&, std::vector<int>&, int&)>
      rec = [&](int slot, int from, TreeCtx& ctx, std::vector<int>& pushed,
                std::vector<int>& designated, int& budget) -> bool {
    if (slot == want) return true;
    for (int i = from; i < m; ++i) {
      for (const Plan& pl : plans[i]) {
        size_t mark = pushed.size();
        if (plan_doubly_good(ctx, fs, pl.edge, pl.face, pl.reverse, budget, &pushed)) {
          designated.push_back(pl.edge);
          if (rec(slot + 1, i + 1, ctx, pushed, designated, budget)) return true;
          designated.pop_back();
          while (pushed.size() > mark) {
            ctx.pop();
            pushed.pop_back();
          }
        }
        if (budget <= 0) return false;
      }
    }
    return false;
  };

  std::string last_error = "no doubly-good plan succeeded";
  for (int root = 0; root < d.crossings(); ++root) {
    TreeCtx ctx(d, root);
    std::vector<int> pushed, designated;
    int budget = opt.node_budget;
    if (!rec(0, 0, ctx, pushed, designated, budget)) continue;
    if (!grow_spanning(ctx, budget, &rng)) continue;
    try {
      return replay(d, ctx.tree(), designated);
    } catch (const std::exception& ex) {
      last_error = ex.what();
      continue;
    }
  }

  // Fallback: randomized good trees with post-hoc doubly-good detection.
  for (int attempt = 0; attempt < 40; ++attempt) {
    ConstructOptions o2 = opt;
    o2.seed = opt.seed + 1000 + attempt;
    FilteredTree t;
    try {
      t = build_good_spanning_tree(d, attempt % std::max(1, d.crossings()), o2);
    } catch (const ConstructError&) {
      continue;
    }
    std::vector<int> dg = doubly_good_edges(d, t);
    if (static_cast<int>(dg.size()) < want) continue;
    std::vector<int> comb(want);
    std::optional<Construction> found;
    std::function<bool(int, int)> choose = [&](int slot, int from) -> bool {
      if (slot == want) {
        try {
          found = replay(d, t, comb);
          return true;
        } catch (const ArcBuildError&) {
          return false;
        }
      }
      for (int i = from; i < static_cast<int>(dg.size()); ++i) {
        comb[slot] = dg[i];
        if (choose(slot + 1, i + 1)) return true;
      }
      return false;
    };
    if (choose(0, 0) && found) return *found;
  }
  throw ConstructError("construction with " + std::to_string(want) +
                       " doubly-good edges failed: " + last_error);
}

}  // namespace

FilteredTree build_good_spanning_tree(const Diagram& d, int root,
                                      const ConstructOptions& opt) {
  if (d.crossings() == 0) return {0, {}};
  Rng rng{opt.seed * 2654435761u + 1};
  std::vector<int> roots;
  if (root >= 0)
    roots.push_back(root);
  else
    for (int v = 0; v < d.crossings(); ++v) roots.push_back(v);
  for (int r : roots) {
    TreeCtx ctx(d, r);
    int budget = opt.node_budget;
    if (grow_spanning(ctx, budget, &rng)) return ctx.tree();
  }
  throw ConstructError(
      "good spanning tree search failed (is the diagram prime and connected?)");
}

std::vector<int> jin_park_detour(const Diagram& d, const FilteredTree& t_m, int e) {
  TreeCtx ctx(d, t_m.root);
  for (int te : t_m.edges) ctx.push(te);
  auto cls = ctx.classify_extension(e);
  if (cls.tag == ExtensionTag::Good)
    throw ConstructError("detour requested for a good extension");
  if (cls.tag == ExtensionTag::B1)
    throw ConstructError("detour requested for a B1 extension (bad edge)");
  if (!cls.arc) throw ConstructError("missing cutting-arc witness");
  std::set<int> region;
  for (int g : d.edges())
    if (cls.arc->edge_side[g] == cls.arc->side_of_ebar && !ctx.edge_in_tree(g) &&
        ctx.entry_level(g) < 0)
      region.insert(g);
  region.insert(e);
  std::vector<int> seq;
  int budget = 100000;
  std::optional<int> last;
  if (cls.tag == ExtensionTag::B3) last = e;
  if (!grow_region(ctx, region, last, budget, &seq))
    throw ConstructError("detour search failed");
  for (int g : region)
    if (!ctx.edge_in_tree(g) && ctx.entry_level(g) < 0 && g != e)
      throw ConstructError("detour left region edges outside the closure");
  return seq;
}

std::vector<int> doubly_good_edges(const Diagram& d, const FilteredTree& t) {
  TreeCtx ctx(d, t.root);
  for (int e : t.edges) ctx.push(e);
  std::vector<int> out;
  for (int e : ctx.closure_edges())
    if (ctx.detect_doubly_good(e)) out.push_back(e);
  return out;
}

Construction construct_plus_two(const Diagram& d, const ConstructOptions& opt) {
  FilteredTree t = build_good_spanning_tree(d, -1, opt);
  Construction c;
  c.tree = t;
  c.arc = arc_presentation_from_tree(d, t, {}, &c.conservation);
  return c;
}

Construction construct_nonalternating(const Diagram& d, const ConstructOptions& opt) {
  if (d.nonalternating_edges().empty())
    throw ConstructError("diagram is alternating; no doubly-good edges exist");
  return construct_with_savings(d, 2, opt);
}

MinusOneResult construct_minus_one(const Diagram& d, int f3_face,
                                   const ConstructOptions& opt) {
  FaceSet fs = faces(d);
  Diagram moved = reidemeister3(d, fs, f3_face);
  MinusOneResult r;
  r.moved = moved;
  r.construction = construct_with_savings(moved, 3, opt);
  return r;
}

}  // namespace knotarc
