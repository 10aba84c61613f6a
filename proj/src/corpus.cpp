#include "knotarc/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace knotarc {

namespace fs = std::filesystem;

std::vector<CorpusEntry> load_corpus(const std::string& dir) {
  std::vector<CorpusEntry> out;
  if (!fs::exists(dir))
    throw std::runtime_error("corpus directory missing: " + dir);
  for (const auto& de : fs::directory_iterator(dir)) {
    if (de.path().extension() != ".grid") continue;
    std::ifstream in(de.path());
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    CorpusEntry e;
    e.file = de.path().filename().string();
    e.name = de.path().stem().string();
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      auto grab = [&](const std::string& key) -> std::string {
        auto pos = line.find(key);
        if (pos == std::string::npos) return "";
        std::string v = line.substr(pos + key.size());
        while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.erase(v.begin());
        while (!v.empty() && (v.back() == '\r' || v.back() == ' ')) v.pop_back();
        return v;
      };
      if (line.rfind("# name:", 0) == 0) e.name = grab("# name:");
      if (line.rfind("# category:", 0) == 0) e.category = grab("# category:");
      if (line.rfind("# expected-columns:", 0) == 0)
        e.expected_columns = std::stoi(grab("# expected-columns:"));
    }
    try {
      e.grid = parse_grid(text);
    } catch (const std::exception&) {
      e.grid = GridDiagram{};  // invalid; reported by the check
      // still retain raw size if the header parsed
    }
    if (e.expected_columns == 0) {
      // knot labels encode the crossing number: c-crossing entries use c-1 columns
      if (e.name.size() > 2 && std::isdigit(static_cast<unsigned char>(e.name[0]))) {
        int c = std::stoi(e.name.substr(0, e.name.find_first_not_of("0123456789")));
        e.expected_columns = c - 1;
      }
    }
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(),
            [](const CorpusEntry& a, const CorpusEntry& b) { return a.name < b.name; });
  return out;
}

CorpusCheck corpus_check(const std::string& dir) {
  CorpusCheck ck;
  auto entries = load_corpus(dir);
  if (entries.empty()) {
    ck.all_pass = false;
    CorpusCheck::Row r;
    r.name = "(corpus)";
    r.problems.push_back("no .grid files found in " + dir);
    ck.rows.push_back(r);
    return ck;
  }
  for (const auto& e : entries) {
    CorpusCheck::Row r;
    r.name = e.name;
    r.category = e.category;
    r.file = e.file;
    r.columns = e.grid.n;
    r.expected = e.expected_columns;
    r.problems = validate(e.grid);
    if (e.grid.n == 0) r.problems.push_back("grid failed to parse");
    if (e.expected_columns > 0 && e.grid.n != e.expected_columns) {
      std::ostringstream os;
      os << "expected " << e.expected_columns << " columns, found " << e.grid.n;
      r.problems.push_back(os.str());
    }
    r.pass = r.problems.empty();
    if (!r.pass) ck.all_pass = false;
    auto& pc = ck.per_category[e.category.empty() ? "(uncategorized)" : e.category];
    pc.second += 1;
    if (r.pass) pc.first += 1;
    ck.rows.push_back(std::move(r));
  }
  return ck;
}

std::string CorpusCheck::text() const {
  std::ostringstream os;
  for (const auto& r : rows) {
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
    if (!r.category.empty()) os << "  [" << r.category << "]";
    os << "  columns=" << r.columns;
    for (const auto& p : r.problems) os << "\n      - " << p;
    os << "\n";
  }
  os << "--\n";
  for (const auto& [cat, pc] : per_category)
    os << cat << ": " << pc.first << "/" << pc.second << "\n";
  os << (all_pass ? "corpus: all entries pass" : "corpus: FAILURES present") << "\n";
  return os.str();
}

std::string CorpusCheck::json() const {
  std::ostringstream os;
  os << "{\"all_pass\": " << (all_pass ? "true" : "false") << ", \"entries\": [";
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    os << (i ? ", " : "") << "{\"name\": \"" << r.name << "\", \"category\": \""
       << r.category << "\", \"columns\": " << r.columns << ", \"pass\": "
       << (r.pass ? "true" : "false") << ", \"problems\": [";
    for (size_t j = 0; j < r.problems.size(); ++j)
      os << (j ? ", " : "") << "\"" << r.problems[j] << "\"";
    os << "]}";
  }
  os << "]}";
  return os.str();
}

}  // namespace knotarc
