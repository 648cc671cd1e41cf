// acceptance suite: one line per criterion, exit 0 iff everything passes.
// all comparisons are exact; golden files are transcriptions kept in data/.

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "gamma2/abelian.hpp"
#include "gamma2/assembly.hpp"
#include "gamma2/complex.hpp"
#include "gamma2/membership.hpp"
#include "gamma2/schreier.hpp"
#include "gamma2/verifier.hpp"

using namespace gamma2;

namespace {

int failures = 0;

void criterion(int number, const std::string& what, bool ok, const std::string& detail = "") {
  std::cout << "criterion " << number << " [" << (ok ? "PASS" : "FAIL") << "] " << what;
  if (!ok && !detail.empty()) std::cout << " -- " << detail;
  std::cout << std::endl;
  if (!ok) ++failures;
}

std::vector<std::string> golden_lines(const std::string& name) {
  std::ifstream in(std::string(GAMMA2_TEST_DATA_DIR) + "/" + name);
  if (!in.good()) throw std::runtime_error("missing golden file " + name);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  return lines;
}

}  // namespace

int main() {
  // 1. relator validity and exact counts
  {
    bool ok = true;
    std::string detail;
    const size_t expected[] = {0, 1, 7, 37};
    for (int n = 1; n <= 6 && ok; ++n) {
      Presentation p = gamma2_presentation(n);
      if (n <= 3 && p.relators.size() != expected[n]) {
        ok = false;
        detail = "count mismatch at n=" + std::to_string(n);
      }
      for (const auto& r : p.relators)
        if (!p.eval(r).is_identity()) {
          ok = false;
          detail = "non-identity relator at n=" + std::to_string(n) + ": " + r.to_string();
          break;
        }
    }
    criterion(1, "relator validity for n=1..6, counts 1/7/37 at n=1,2,3", ok, detail);
  }

  // 2. rewriting grid against the transcription
  {
    bool ok = true;
    std::string detail;
    try {
      auto grid = schreier_table();
      auto lines = golden_lines("rewrite_grid.golden");
      ok = lines.size() == 6;
      for (size_t i = 0; ok && i < 6; ++i) {
        std::istringstream row(lines[i]);
        for (size_t c = 0; ok && c < 5; ++c) {
          std::string cell;
          row >> cell;
          size_t eq = cell.find('=');
          IntMatrix want = IntMatrix::from_text(cell.substr(0, eq));
          std::string sym = cell.substr(eq + 1);
          const RewriteCell& got = grid[i][c];
          if (!(got.value == want) ||
              (got.symbol ? got.symbol->to_string() : "1") != sym) {
            ok = false;
            detail = "cell (" + std::to_string(i) + "," + std::to_string(c) + ")";
          }
        }
      }
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    criterion(2, "all 30 rewriting-grid cells match the transcription", ok, detail);
  }

  // 3. the rewritten subgroup relators, word by word
  {
    bool ok = true;
    std::string detail;
    try {
      CosetSystem cs = build_coset_system();
      for (const auto& line : golden_lines("s_words.golden")) {
        std::istringstream is(line);
        int r, i;
        is >> r >> i;
        std::string rest;
        std::getline(is, rest);
        size_t b = rest.find_first_not_of(' ');
        std::string body = b == std::string::npos ? "" : rest.substr(b);
        Word want = body == "1" ? Word() : parse_word(body);
        Word got = rewrite_relator(cs, cs.ambient().relators[static_cast<size_t>(r - 1)], i);
        if (!(got == want)) {
          ok = false;
          detail = "s(" + std::to_string(r) + "," + std::to_string(i) + ") = " +
                   got.to_string();
          break;
        }
      }
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    criterion(3, "all 24 rewritten relators match the transcription", ok, detail);
  }

  // 4. pipeline endpoint equals the canonical presentation
  {
    Derivation d = derive_gamma2_2();
    criterion(4, "derived presentation matches the canonical one", d.comparison.all_pass(),
              d.comparison.to_text());
  }

  // 5. complex combinatorics and mod-2 group orders
  {
    SimplicialComplex b3 = build_B_mod2(3);
    bool ok = b3.vertices.size() == 7 && b3.count(1) == 21 && b3.count(2) == 28;
    std::set<std::vector<int>> tris(b3.simplices[2].begin(), b3.simplices[2].end());
    std::set<std::vector<int>> excluded;
    for (int a = 0; a < 7; ++a)
      for (int b = a + 1; b < 7; ++b)
        for (int c = b + 1; c < 7; ++c)
          if (!tris.count({a, b, c})) excluded.insert({a, b, c});
    std::set<std::vector<int>> expected = {{0, 1, 3}, {0, 2, 4}, {0, 5, 6}, {1, 2, 5},
                                           {1, 4, 6}, {2, 3, 6}, {3, 4, 5}};
    ok = ok && excluded == expected;
    ok = ok && enumerate_gl_mod2(2).size() == 6 && enumerate_gl_mod2(3).size() == 168;
    criterion(5, "mod-2 complex counts 7/21/28, the seven excluded triples, group orders 6 and 168",
              ok);
  }

  // 6. stabilizer and edge contracts
  {
    bool ok = true;
    std::string detail;
    try {
      auto apply = [](const IntMatrix& m, const std::vector<Int>& v) {
        std::vector<Int> out(v.size(), Int(0));
        for (int r = 0; r < m.dim(); ++r)
          for (int c = 0; c < m.dim(); ++c)
            out[static_cast<size_t>(r)] += m.at(r, c) * v[static_cast<size_t>(c)];
        return out;
      };
      for (int i = 1; i <= 7 && ok; ++i) {
        StabilizerSystem sys = vertex_stabilizer(i, 3);
        for (const auto& g : sys.generators)
          if (!is_level2(g.matrix) || apply(g.matrix, sys.fixed[0]) != sys.fixed[0]) {
            ok = false;
            detail = "vertex v" + std::to_string(i);
          }
      }
      Report edges = check_edge_systems();
      if (!edges.all_pass()) {
        ok = false;
        detail = edges.to_text();
      }
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    criterion(6, "stabilizer membership/fixing and the edge family equalities", ok, detail);
  }

  // 7. assembly at n = 3, 4, 5
  {
    bool ok = true;
    std::string detail;
    for (int n = 3; n <= 5 && ok; ++n) {
      Assembly a = brown_assemble(n);
      for (const auto& r : a.presentation.relators)
        if (!a.presentation.eval(r).is_identity()) {
          ok = false;
          detail = "non-identity relator at n=" + std::to_string(n);
        }
      std::set<IntMatrix> got;
      for (const auto& g : a.presentation.generators)
        got.insert(a.presentation.matrix_of(g));
      for (int i = 1; i <= n && ok; ++i)
        for (int j = 1; j <= n && ok; ++j) {
          if (i != j && !got.count(generator_matrix(GeneratorId::E(i, j), n))) ok = false;
          if (i == j && !got.count(generator_matrix(GeneratorId::F(i), n))) ok = false;
        }
      if (!ok && detail.empty()) detail = "missing generator matrix at n=" + std::to_string(n);
    }
    criterion(7, "assembled relators hold and the generator matrices are complete (n=3,4,5)",
              ok, detail);
  }

  // 8. membership round-trips
  {
    bool ok = factor(IntMatrix::identity(3)).empty();
    std::string detail = ok ? "" : "factor(identity) not empty";
    try {
      factor(IntMatrix::from_text("1,1;0,1"));
      ok = false;
      detail = "factor accepted a non-member";
    } catch (const std::domain_error&) {
    }
    for (int n = 2; n <= 5 && ok; ++n) {
      Report r = roundtrip_suite(n, 100, 20, 7);
      if (!r.all_pass()) {
        ok = false;
        detail = "round-trip failure at n=" + std::to_string(n);
      }
    }
    criterion(8, "factor/evaluate round-trips (100 words, length <= 20, n=2..5)", ok, detail);
  }

  // 9. appendix identities
  {
    Report r = check_appendix_identities();
    criterion(9, "every tabulated word identity holds for both index assignments",
              r.all_pass(), r.to_text());
  }

  // 10. three-route abelianization agreement
  {
    Report r = cross_check_abelianization();
    criterion(10, "abelianization agrees along the three routes", r.all_pass(), r.to_text());
  }

  if (failures) std::cout << failures << " criterion(s) failed" << std::endl;
  return failures == 0 ? 0 : 1;
}
