#include "knotarc/pd.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <vector>

namespace knotarc {

Diagram parse_pd(const std::string& text) {
  // strip comments
  std::string src;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      src += '\n';
    } else {
      src += text[i];
    }
  }
  std::vector<std::array<int, 4>> terms;
  size_t i = 0;
  auto skip = [&] {
    while (i < src.size() && (std::isspace(static_cast<unsigned char>(src[i])) || src[i] == ','))
      ++i;
  };
  skip();
  while (i < src.size()) {
    if (src[i] != 'X') throw PdError("expected 'X' in PD code");
    ++i;
    skip();
    if (i >= src.size() || src[i] != '[') throw PdError("expected '[' after X");
    ++i;
    std::array<int, 4> t{};
    for (int k = 0; k < 4; ++k) {
      skip();
      size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j == i) throw PdError("expected edge label");
      t[k] = std::stoi(src.substr(i, j - i));
      if (t[k] < 1) throw PdError("labels are 1-based");
      i = j;
      skip();
    }
    if (i >= src.size() || src[i] != ']') throw PdError("expected ']'");
    ++i;
    terms.push_back(t);
    skip();
  }
  if (terms.empty()) throw PdError("empty PD code");

  int n = static_cast<int>(terms.size());
  std::map<int, std::vector<int>> where;  // label -> darts
  for (int v = 0; v < n; ++v)
    for (int s = 0; s < 4; ++s) where[terms[v][s]].push_back(4 * v + s);
  Diagram d;
  d.axis.assign(n, 0);
  d.mate.assign(4 * n, -1);
  for (const auto& [label, ds] : where) {
    if (ds.size() != 2) {
      std::ostringstream os;
      os << "label " << label << " appears " << ds.size() << " times (want 2)";
      throw PdError(os.str());
    }
    d.mate[ds[0]] = ds[1];
    d.mate[ds[1]] = ds[0];
  }
  std::string why;
  if (!d.planar(&why)) throw PdError("non-planar rotation system: " + why);
  if (!d.is_knot()) throw PdError("PD code has more than one component");
  return d;
}

std::string write_pd(const Diagram& d) {
  if (d.crossings() == 0) return "";
  // Walk the knot once assigning increasing labels to edges.
  std::vector<int> label(d.darts(), 0);
  int start = 0;
  // start on an under-arrival so labels open at slot 0 of some crossing
  for (int dd = 0; dd < d.darts(); ++dd)
    if (!d.over(dd)) {
      start = dd;
      break;
    }
  int cur = start, next_label = 1;
  do {
    int exit = d.across(cur);
    label[exit] = next_label;
    label[d.mate[exit]] = next_label;
    ++next_label;
    cur = d.strand_next(cur);
  } while (cur != start);
  std::ostringstream os;
  for (int v = 0; v < d.crossings(); ++v) {
    // rotate so the incoming under dart is written first
    int s0 = 0;
    for (int s = 0; s < 4; ++s) {
      int dd = d.dart(v, s);
      if (!d.over(dd) && label[d.across(dd)] == (label[dd] % (2 * d.crossings())) + 1) s0 = s;
    }
    os << (v ? " " : "") << "X[";
    for (int k = 0; k < 4; ++k) os << (k ? "," : "") << label[d.dart(v, s0 + k)];
    os << "]";
  }
  return os.str();
}

}  // namespace knotarc
