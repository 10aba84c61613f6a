#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "knotarc/bounds.hpp"
#include "knotarc/construct.hpp"
#include "knotarc/corpus.hpp"
#include "knotarc/grid.hpp"
#include "knotarc/kauffman.hpp"
#include "knotarc/moves.hpp"
#include "knotarc/pd.hpp"
#include "knotarc/tangle.hpp"

using namespace knotarc;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_grid(const std::string& text) {
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
    return text[i] == 'g' || text[i] == '{';
  }
  return false;
}

int skein_budget_env(int fallback) {
  const char* v = std::getenv("KNOTARC_BUDGET");
  if (!v) return fallback;
  return std::atoi(v);
}

Diagram diagram_from_file(const std::string& path) {
  std::string text = slurp(path);
  if (looks_like_grid(text)) return to_planar_diagram(parse_grid(text));
  return parse_pd(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arc presentations, grid diagrams and arc-index bounds"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  std::string file, file2, target = "c+2", format = "ascii", outfile;
  bool prime = false, minimal = false;
  int max_crossings = skein_budget_env(12);

  auto* v = app.add_subcommand("validate", "validate a grid or PD file");
  v->add_option("file", file)->required();

  auto* inv = app.add_subcommand("invariant", "compute an invariant");
  auto* kau = inv->add_subcommand("kauffman", "two-variable Kauffman polynomial");
  kau->add_option("file", file)->required();
  kau->add_option("--max-crossings", max_crossings, "skein budget");

  auto* bnd = app.add_subcommand("bounds", "arc-index bounds from a PD diagram");
  bnd->add_option("file", file)->required();
  bnd->add_flag("--prime", prime, "assert the diagram is prime");
  bnd->add_flag("--minimal", minimal, "assert the diagram is minimal-crossing");
  bnd->add_option("--max-crossings", max_crossings, "skein budget");

  auto* con = app.add_subcommand("construct", "build an arc presentation");
  con->add_option("file", file)->required();
  con->add_option("--target", target, "c+2, c or c-1")
      ->check(CLI::IsMember({"c+2", "c", "c-1"}));
  con->add_option("-o,--output", outfile, "write the grid here");

  auto* cls = app.add_subcommand("classify", "tangle structure + conditions");
  cls->add_option("file", file)->required();

  auto* sum = app.add_subcommand("sum", "connected sum of two grids");
  sum->add_option("g1", file)->required();
  sum->add_option("g2", file2)->required();
  sum->add_option("-o,--output", outfile, "write the grid here");

  auto* ren = app.add_subcommand("render", "draw a grid");
  ren->add_option("file", file)->required();
  ren->add_option("--format", format)->check(CLI::IsMember({"ascii", "svg"}));

  auto* cor = app.add_subcommand("corpus", "corpus utilities");
  auto* chk = cor->add_subcommand("check", "validate the shipped grid corpus");
  std::string corpus_dir;
  chk->add_option("--dir", corpus_dir, "corpus directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (v->parsed()) {
      std::string text = slurp(file);
      if (looks_like_grid(text)) {
        GridDiagram g = parse_grid(text);  // throws with the violation
        if (json)
          std::cout << "{\"valid\": true, \"n\": " << g.n << "}\n";
        else
          std::cout << "valid, n=" << g.n << "\n";
      } else {
        Diagram d = parse_pd(text);
        if (json)
          std::cout << "{\"valid\": true, \"crossings\": " << d.crossings() << "}\n";
        else
          std::cout << "valid, crossings=" << d.crossings() << "\n";
      }
      return 0;
    }
    if (inv->parsed() && kau->parsed()) {
      Diagram d = diagram_from_file(file);
      KauffmanOptions ko;
      ko.max_crossings = max_crossings;
      LaurentPoly2 f = kauffman_polynomial(d, ko);
      if (json)
        std::cout << "{\"kauffman\": " << f.json()
                  << ", \"v_spread\": " << v_spread(f) << "}\n";
      else
        std::cout << "F = " << f.str() << "\nv-spread = " << v_spread(f) << "\n";
      return 0;
    }
    if (bnd->parsed()) {
      Diagram d = diagram_from_file(file);
      BoundsOptions bo;
      bo.assert_prime = prime;
      bo.assert_minimal = minimal;
      bo.skein_budget = max_crossings;
      BoundsReport rep = arc_index_bounds(d, bo);
      if (json)
        std::cout << rep.json() << "\n";
      else {
        if (rep.lower) std::cout << "lower " << rep.lower->value << " (" << rep.lower->justification << ")\n";
        if (rep.upper) std::cout << "upper " << rep.upper->value << " (" << rep.upper->justification << ")\n";
        if (rep.exact) std::cout << "exact " << *rep.exact << "\n";
        if (!rep.note.empty()) std::cout << "note: " << rep.note << "\n";
      }
      return 0;
    }
    if (con->parsed()) {
      Diagram d = diagram_from_file(file);
      Construction c;
      if (target == "c+2") {
        c = construct_plus_two(d);
      } else if (target == "c") {
        c = construct_nonalternating(d);
      } else {
        auto tc = detect_tangle_structure(d);
        if (tc.kind == TangleKind::Alternating || tc.kind == TangleKind::Other)
          throw std::runtime_error("no usable tangle structure: " +
                                   kind_name(tc.kind, tc.n));
        auto rep = check_theorem_conditions(d, tc);
        if (!rep.any_pass)
          throw std::runtime_error("sufficient conditions fail for every labeling");
        bool built = false;
        for (const auto& lab : rep.labelings) {
          if (!lab.pass) continue;
          try {
            c = construct_minus_one(d, lab.f3).construction;
            built = true;
            break;
          } catch (const ConstructError&) {
          }
        }
        if (!built) throw std::runtime_error("construction failed for passing labelings");
      }
      std::string text = write_grid(c.arc.grid);
      if (!outfile.empty()) {
        std::ofstream out(outfile);
        out << text;
      }
      if (json)
        std::cout << write_grid_json(c.arc.grid) << "\n";
      else
        std::cout << text;
      return 0;
    }
    if (cls->parsed()) {
      Diagram d = diagram_from_file(file);
      auto tc = detect_tangle_structure(d);
      if (tc.kind == TangleKind::Alternating || tc.kind == TangleKind::Other) {
        if (json)
          std::cout << "{\"kind\": \"" << kind_name(tc.kind, tc.n) << "\"}\n";
        else
          std::cout << "kind: " << kind_name(tc.kind, tc.n) << "\n";
        return 0;
      }
      auto rep = check_theorem_conditions(d, tc);
      if (json)
        std::cout << rep.json() << "\n";
      else {
        std::cout << "kind: " << kind_name(tc.kind, tc.n) << "\n";
        for (const auto& lab : rep.labelings) {
          std::cout << (lab.pass ? "PASS" : "fail") << " theorem-" << lab.theorem
                    << " F1=" << lab.f1 << " F2=" << lab.f2 << " F3=" << lab.f3;
          for (const auto& cc : lab.conditions)
            std::cout << " [" << cc.name << ": " << (cc.pass ? "ok" : "NO") << "]";
          std::cout << "\n";
        }
        std::cout << (rep.any_pass ? "conditions pass" : "conditions fail") << "\n";
      }
      return 0;
    }
    if (sum->parsed()) {
      GridDiagram g1 = parse_grid(slurp(file));
      GridDiagram g2 = parse_grid(slurp(file2));
      GridDiagram g = connected_sum(g1, g2);
      std::string text = write_grid(g);
      if (!outfile.empty()) {
        std::ofstream out(outfile);
        out << text;
      }
      std::cout << (json ? write_grid_json(g) + "\n" : text);
      return 0;
    }
    if (ren->parsed()) {
      GridDiagram g = parse_grid(slurp(file));
      std::cout << render(g, format);
      return 0;
    }
    if (chk->parsed()) {
      std::string dir = corpus_dir;
      if (dir.empty()) {
        const char* env = std::getenv("KNOTARC_DATA");
        dir = env ? std::string(env) + "/corpus" : "data/corpus";
      }
      CorpusCheck ck = corpus_check(dir);
      std::cout << (json ? ck.json() + "\n" : ck.text());
      return ck.all_pass ? 0 : 1;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  std::cerr << "usage error\n";
  return 2;
}
