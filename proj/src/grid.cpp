#include "knotarc/grid.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace knotarc {

namespace {

// rows derived from columns: row -> list of columns holding a mark there
std::vector<std::vector<int>> row_marks(const GridDiagram& g) {
  std::vector<std::vector<int>> rows(g.n);
  for (int c = 0; c < g.n; ++c) {
    auto [a, b] = g.columns[c];
    if (a >= 0 && a < g.n) rows[a].push_back(c);
    if (b >= 0 && b < g.n) rows[b].push_back(c);
  }
  return rows;
}

}  // namespace

std::vector<std::string> validate(const GridDiagram& g) {
  std::vector<std::string> bad;
  if (g.n < 2) bad.push_back("grid must have at least 2 columns");
  if (static_cast<int>(g.columns.size()) != g.n)
    bad.push_back("column list length differs from n");
  for (int c = 0; c < static_cast<int>(g.columns.size()); ++c) {
    auto [a, b] = g.columns[c];
    if (a < 0 || a >= g.n || b < 0 || b >= g.n) {
      std::ostringstream os;
      os << "column " << c << ": row index out of range";
      bad.push_back(os.str());
    }
    if (a == b) {
      std::ostringstream os;
      os << "column " << c << ": degenerate pair";
      bad.push_back(os.str());
    }
  }
  if (!bad.empty()) return bad;
  auto rows = row_marks(g);
  for (int r = 0; r < g.n; ++r)
    if (rows[r].size() != 2) {
      std::ostringstream os;
      os << "row " << r << " carries " << rows[r].size() << " marks (want 2)";
      bad.push_back(os.str());
    }
  if (!bad.empty()) return bad;
  // single closed component: alternate column and row hops over marks
  int visited = 0, c = 0, r = g.columns[0].first;
  int total = 2 * g.n;
  // state: at mark (c, r), about to leave along the row
  int c0 = c, r0 = r;
  do {
    // row hop
    c = rows[r][0] == c ? rows[r][1] : rows[r][0];
    ++visited;
    // column hop
    r = g.columns[c].first == r ? g.columns[c].second : g.columns[c].first;
    ++visited;
  } while (!(c == c0 && r == r0));
  if (visited != total) {
    std::ostringstream os;
    os << "grid traces " << (visited < total ? "more than one component" : "inconsistently");
    bad.push_back(os.str());
  }
  return bad;
}

int interleaving_count(const GridDiagram& g) {
  auto rows = row_marks(g);
  int cnt = 0;
  for (int c = 0; c < g.n; ++c) {
    int r1 = std::min(g.columns[c].first, g.columns[c].second);
    int r2 = std::max(g.columns[c].first, g.columns[c].second);
    for (int r = 0; r < g.n; ++r) {
      if (rows[r].size() != 2) continue;
      int c1 = std::min(rows[r][0], rows[r][1]);
      int c2 = std::max(rows[r][0], rows[r][1]);
      if (c1 < c && c < c2 && r1 < r && r < r2) ++cnt;
    }
  }
  return cnt;
}

Diagram to_planar_diagram(const GridDiagram& g) {
  if (!grid_valid(g)) throw std::invalid_argument("invalid grid diagram");
  auto rows = row_marks(g);
  // crossings
  struct Xing {
    int c, r, id;
  };
  std::vector<Xing> xs;
  std::map<std::pair<int, int>, int> at;
  for (int c = 0; c < g.n; ++c) {
    int r1 = std::min(g.columns[c].first, g.columns[c].second);
    int r2 = std::max(g.columns[c].first, g.columns[c].second);
    for (int r = 0; r < g.n; ++r) {
      int c1 = std::min(rows[r][0], rows[r][1]);
      int c2 = std::max(rows[r][0], rows[r][1]);
      if (c1 < c && c < c2 && r1 < r && r < r2) {
        int id = static_cast<int>(xs.size());
        xs.push_back({c, r, id});
        at[{c, r}] = id;
      }
    }
  }
  int n = static_cast<int>(xs.size());
  Diagram d;
  d.axis.assign(n, 0);  // horizontal strand (slots 0,2) passes under
  d.mate.assign(4 * n, -1);
  if (n == 0) {
    d.free_loops = 1;
    return d;
  }
  // ports: E=0,N=1,W=2,S=3. Terminals: per column (lo,hi), per row (left,right).
  // node encoding: ports 0..4n-1; terminals 4n + 4*c + {0:lo,1:hi}, rows offset.
  int term_base = 4 * n;
  auto col_term = [&](int c, bool hi) { return term_base + 4 * c + (hi ? 1 : 0); };
  auto row_term = [&](int r, bool right) { return term_base + 4 * r + 2 + (right ? 1 : 0); };
  std::vector<std::vector<int>> adj(term_base + 4 * g.n);
  auto link = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (int c = 0; c < g.n; ++c) {
    std::vector<int> hits;
    int r1 = std::min(g.columns[c].first, g.columns[c].second);
    int r2 = std::max(g.columns[c].first, g.columns[c].second);
    for (int r = r1 + 1; r < r2; ++r)
      if (at.count({c, r})) hits.push_back(at[{c, r}]);
    int prev = col_term(c, false);
    for (int id : hits) {
      link(prev, 4 * id + 3);  // S port
      prev = 4 * id + 1;       // N port
    }
    link(prev, col_term(c, true));
  }
  for (int r = 0; r < g.n; ++r) {
    std::vector<int> hits;
    int c1 = std::min(rows[r][0], rows[r][1]);
    int c2 = std::max(rows[r][0], rows[r][1]);
    for (int c = c1 + 1; c < c2; ++c)
      if (at.count({c, r})) hits.push_back(at[{c, r}]);
    int prev = row_term(r, false);
    for (int id : hits) {
      link(prev, 4 * id + 2);  // W port
      prev = 4 * id;           // E port
    }
    link(prev, row_term(r, true));
  }
  // corner fusions at marks
  for (int c = 0; c < g.n; ++c) {
    int lo = std::min(g.columns[c].first, g.columns[c].second);
    int hi = std::max(g.columns[c].first, g.columns[c].second);
    for (int r : {lo, hi}) {
      bool is_hi = r == hi;
      bool is_right = c == std::max(rows[r][0], rows[r][1]);
      link(col_term(c, is_hi), row_term(r, is_right));
    }
  }
  // resolve: ports have degree 1, terminals degree 2
  for (int p = 0; p < 4 * n; ++p) {
    if (d.mate[p] >= 0) continue;
    int prev = p, cur = adj[p][0];
    while (cur >= term_base) {
      int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = nxt;
    }
    d.mate[p] = cur;
    d.mate[cur] = p;
  }
  return d;
}

GridDiagram from_arc_presentation(const ArcPresentation& a) {
  if (!grid_valid(a.grid)) throw std::invalid_argument("invalid arc presentation");
  return a.grid;
}

GridDiagram translate_rows(const GridDiagram& g, int k) {
  GridDiagram out = g;
  for (auto& [a, b] : out.columns) {
    a = ((a + k) % g.n + g.n) % g.n;
    b = ((b + k) % g.n + g.n) % g.n;
  }
  return out;
}

GridDiagram translate_cols(const GridDiagram& g, int k) {
  GridDiagram out = g;
  for (int c = 0; c < g.n; ++c) out.columns[((c + k) % g.n + g.n) % g.n] = g.columns[c];
  return out;
}

GridDiagram connected_sum(const GridDiagram& g1, const GridDiagram& g2) {
  if (!grid_valid(g1) || !grid_valid(g2))
    throw std::invalid_argument("connected sum needs valid grids");
  int n1 = g1.n, n2 = g2.n;
  // Rotate rows so the column to be deleted has a mark at row 0. The other
  // mark lands at k1 (resp. k2). Deleted: last column of g1, first of g2.
  auto [p1, q1] = g1.columns[n1 - 1];
  GridDiagram a = translate_rows(g1, -std::min(p1, q1));
  int k1 = std::max(a.columns[n1 - 1].first, a.columns[n1 - 1].second);
  auto [p2, q2] = g2.columns[0];
  GridDiagram b = translate_rows(g2, -std::min(p2, q2));
  int k2 = std::max(b.columns[0].first, b.columns[0].second);

  int big = k1 + k2 - 1;  // merged row of the two upper marks
  auto map1 = [&](int j) {
    if (j == 0) return 0;
    if (j < k1) return j;
    if (j == k1) return big;
    return j + k2 - 1;
  };
  auto map2 = [&](int j) {
    if (j == 0) return 0;
    if (j < k2) return k1 - 1 + j;
    if (j == k2) return big;
    return n1 - 2 + j;
  };
  GridDiagram out;
  out.n = n1 + n2 - 2;
  for (int c = 0; c < n1 - 1; ++c)
    out.columns.push_back({map1(a.columns[c].first), map1(a.columns[c].second)});
  for (int c = 1; c < n2; ++c)
    out.columns.push_back({map2(b.columns[c].first), map2(b.columns[c].second)});
  return out;
}

GridDiagram stabilize(const GridDiagram& g, const CornerSpec& spec) {
  if (!grid_valid(g)) throw std::invalid_argument("invalid grid");
  if (spec.column < 0 || spec.column >= g.n)
    throw std::invalid_argument("stabilize: no such column");
  int i = spec.column;
  int a = std::min(g.columns[i].first, g.columns[i].second);
  int b = std::max(g.columns[i].first, g.columns[i].second);
  int newrow = spec.upper ? b : a + 1;  // rows >= newrow shift up
  auto mr = [&](int r) { return r >= newrow ? r + 1 : r; };
  GridDiagram out;
  out.n = g.n + 1;
  for (int c = 0; c < g.n; ++c) {
    if (c == i) {
      if (spec.upper) {
        out.columns.push_back({mr(a), newrow});           // [a, b] lower piece
        out.columns.push_back({newrow, mr(b)});           // top corner piece
      } else {
        out.columns.push_back({a, newrow});               // bottom corner piece
        out.columns.push_back({newrow, mr(b)});           // main piece
      }
    } else {
      out.columns.push_back({mr(g.columns[c].first), mr(g.columns[c].second)});
    }
  }
  return out;
}

GridDiagram parse_grid(const std::string& text) {
  // strip comments
  std::string src;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      src += '\n';
    } else
      src += text[i];
  }
  size_t first = src.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw std::runtime_error("empty grid file");
  if (src[first] == '{') {
    // JSON mirror: {"n": n, "columns": [[r1,r2],...]}
    GridDiagram g;
    auto num_at = [&](size_t& i) {
      while (i < src.size() && !std::isdigit(static_cast<unsigned char>(src[i])) && src[i] != '-') ++i;
      size_t j = i + (src[i] == '-' ? 1 : 0);
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      int v = std::stoi(src.substr(i, j - i));
      i = j;
      return v;
    };
    size_t i = src.find("\"n\"");
    if (i == std::string::npos) throw std::runtime_error("grid json: missing n");
    i += 3;
    g.n = num_at(i);
    i = src.find("\"columns\"");
    if (i == std::string::npos) throw std::runtime_error("grid json: missing columns");
    i += 9;
    while (i < src.size() && src[i] != '[') ++i;
    ++i;
    for (int c = 0; c < g.n; ++c) {
      int r1 = num_at(i), r2 = num_at(i);
      g.columns.push_back({r1, r2});
    }
    auto bad = validate(g);
    if (!bad.empty()) throw std::runtime_error("grid json: " + bad[0]);
    return g;
  }
  std::istringstream is(src);
  std::string word;
  if (!(is >> word) || word != "grid") throw std::runtime_error("expected 'grid <n>'");
  int n;
  if (!(is >> n) || n < 2) throw std::runtime_error("bad grid size");
  GridDiagram g;
  g.n = n;
  g.columns.assign(n, {-1, -1});
  std::vector<char> seen(n, 0);
  for (int k = 0; k < n; ++k) {
    std::string col, idx;
    int i, r1, r2;
    char colon;
    if (!(is >> col) || col != "col") throw std::runtime_error("expected 'col <i>: <r1> <r2>'");
    if (!(is >> i >> colon >> r1 >> r2) || colon != ':')
      throw std::runtime_error("expected 'col <i>: <r1> <r2>'");
    if (i < 0 || i >= n || seen[i]) throw std::runtime_error("bad or repeated column index");
    seen[i] = 1;
    g.columns[i] = {r1, r2};
  }
  auto bad = validate(g);
  if (!bad.empty()) throw std::runtime_error("invalid grid: " + bad[0]);
  return g;
}

std::string write_grid(const GridDiagram& g) {
  std::ostringstream os;
  os << "grid " << g.n << "\n";
  for (int c = 0; c < g.n; ++c) {
    int a = std::min(g.columns[c].first, g.columns[c].second);
    int b = std::max(g.columns[c].first, g.columns[c].second);
    os << "col " << c << ": " << a << " " << b << "\n";
  }
  return os.str();
}

std::string write_grid_json(const GridDiagram& g) {
  std::ostringstream os;
  os << "{\"n\": " << g.n << ", \"columns\": [";
  for (int c = 0; c < g.n; ++c) {
    int a = std::min(g.columns[c].first, g.columns[c].second);
    int b = std::max(g.columns[c].first, g.columns[c].second);
    os << (c ? ", " : "") << "[" << a << ", " << b << "]";
  }
  os << "]}";
  return os.str();
}

namespace {

std::string render_ascii(const GridDiagram& g) {
  auto rows = row_marks(g);
  int w = 2 * g.n - 1;
  std::vector<std::string> canvas(w, std::string(w, ' '));
  for (int r = 0; r < g.n; ++r) {
    int c1 = std::min(rows[r][0], rows[r][1]), c2 = std::max(rows[r][0], rows[r][1]);
    for (int x = 2 * c1; x <= 2 * c2; ++x) canvas[2 * r][x] = '-';
  }
  for (int c = 0; c < g.n; ++c) {
    int r1 = std::min(g.columns[c].first, g.columns[c].second);
    int r2 = std::max(g.columns[c].first, g.columns[c].second);
    for (int y = 2 * r1; y <= 2 * r2; ++y) canvas[y][2 * c] = '|';  // vertical over
  }
  for (int c = 0; c < g.n; ++c)
    for (int r : {g.columns[c].first, g.columns[c].second}) canvas[2 * r][2 * c] = '+';
  std::string out;
  for (int y = w - 1; y >= 0; --y) out += canvas[y] + "\n";
  return out;
}

std::string render_svg(const GridDiagram& g) {
  auto rows = row_marks(g);
  const int u = 5, pad = 5;
  auto X = [&](int c) { return pad + u * c; };
  auto Y = [&](int r) { return pad + u * (g.n - 1 - r); };  // larger rows on top
  std::ostringstream os;
  int wh = 2 * pad + u * (g.n - 1);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 4 * wh
     << "\" height=\"" << 4 * wh << "\" viewBox=\"0 0 " << wh << " " << wh
     << "\">\n<g stroke=\"black\" stroke-width=\"0.6\" fill=\"none\">\n";
  // horizontal segments broken at crossings (vertical passes over)
  for (int r = 0; r < g.n; ++r) {
    int c1 = std::min(rows[r][0], rows[r][1]), c2 = std::max(rows[r][0], rows[r][1]);
    std::vector<int> cuts;
    for (int c = c1 + 1; c < c2; ++c) {
      int r1 = std::min(g.columns[c].first, g.columns[c].second);
      int r2 = std::max(g.columns[c].first, g.columns[c].second);
      if (r1 < r && r < r2) cuts.push_back(c);
    }
    double x0 = X(c1);
    for (int c : cuts) {
      os << "<line x1=\"" << x0 << "\" y1=\"" << Y(r) << "\" x2=\"" << X(c) - 1.2
         << "\" y2=\"" << Y(r) << "\"/>\n";
      x0 = X(c) + 1.2;
    }
    os << "<line x1=\"" << x0 << "\" y1=\"" << Y(r) << "\" x2=\"" << X(c2)
       << "\" y2=\"" << Y(r) << "\"/>\n";
  }
  for (int c = 0; c < g.n; ++c) {
    int r1 = std::min(g.columns[c].first, g.columns[c].second);
    int r2 = std::max(g.columns[c].first, g.columns[c].second);
    os << "<line x1=\"" << X(c) << "\" y1=\"" << Y(r1) << "\" x2=\"" << X(c)
       << "\" y2=\"" << Y(r2) << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace

std::string render(const GridDiagram& g, const std::string& format) {
  if (!grid_valid(g)) throw std::invalid_argument("invalid grid");
  if (format == "ascii") return render_ascii(g);
  if (format == "svg") return render_svg(g);
  throw std::invalid_argument("unknown render format: " + format);
}

}  // namespace knotarc
