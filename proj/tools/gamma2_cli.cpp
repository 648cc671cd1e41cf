// command-line surface: presentations, verification suites, word/matrix
// utilities, the coset rewriting pipeline and the stabilizer assembly.
//
// exit codes: 0 success (all checks pass), 1 usage or parse error, 2 domain
// error (e.g. factoring a non-member), 3 verification failure.

#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gamma2/abelian.hpp"
#include "gamma2/assembly.hpp"
#include "gamma2/complex.hpp"
#include "gamma2/membership.hpp"
#include "gamma2/schreier.hpp"
#include "gamma2/verifier.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitVerification = 3;

gamma2::PresentationFormat parse_format(const std::string& f) {
  if (f == "json") return gamma2::PresentationFormat::json;
  if (f == "gap") return gamma2::PresentationFormat::gap;
  if (f == "text" || f == "plain") return gamma2::PresentationFormat::plain;
  throw CLI::ValidationError("--format", "unknown format '" + f + "'");
}

std::string symbol_text(const gamma2::RewriteCell& cell) {
  return cell.symbol ? cell.symbol->to_string() : "1";
}

json cell_json(const gamma2::RewriteCell& cell) {
  json j;
  j["w"] = cell.w.to_string();
  j["i"] = cell.coset;
  j["matrix"] = cell.value.to_text();
  j["symbol"] = symbol_text(cell);
  return j;
}

void print_rs_text(std::ostream& os, const gamma2::Derivation& d) {
  auto grid = d.cosets.table();
  const auto& cols = gamma2::CosetSystem::column_letters();

  os << "wa-table (entry: bar(w a_i)^-1 w a_i):\n";
  os << "      ";
  for (const auto& w : cols) os << std::setw(12) << std::left << ("w=" + w.to_string());
  os << "\n";
  for (size_t i = 0; i < grid.size(); ++i) {
    os << "  i=" << i << " ";
    for (const auto& cell : grid[i]) os << std::setw(12) << std::left << cell.value.to_text();
    os << "\n";
  }
  os << "symbols:\n";
  for (size_t i = 0; i < grid.size(); ++i) {
    os << "  i=" << i << " ";
    for (const auto& cell : grid[i]) os << std::setw(12) << std::left << symbol_text(cell);
    os << "\n";
  }

  os << "s-words:\n";
  const auto& rels = d.cosets.ambient().relators;
  for (size_t r = 0; r < rels.size(); ++r) {
    os << "  r" << r + 1 << " = " << rels[r].to_string() << "\n";
    for (size_t i = 0; i < d.s_words[r].size(); ++i) {
      const gamma2::Word& w = d.s_words[r][i];
      os << "    s(r" << r + 1 << "," << i << ") = " << (w.empty() ? "1" : w.to_string())
         << "\n";
    }
  }

  os << "intermediate relators (" << d.intermediate.size() << "):\n";
  for (const auto& w : d.intermediate) os << "  " << w.to_string() << "\n";
  os << "final presentation:\n  "
     << gamma2::serialize(d.result, gamma2::PresentationFormat::plain) << "\n";
  os << d.comparison.to_text();
}

json rs_json(const gamma2::Derivation& d) {
  json j;
  j["table"] = json::array();
  for (const auto& row : d.cosets.table())
    for (const auto& cell : row) j["table"].push_back(cell_json(cell));
  j["s_words"] = json::array();
  const auto& rels = d.cosets.ambient().relators;
  for (size_t r = 0; r < rels.size(); ++r)
    for (size_t i = 0; i < d.s_words[r].size(); ++i) {
      json e;
      e["relator"] = rels[r].to_string();
      e["i"] = i;
      e["word"] = d.s_words[r][i].to_string();
      j["s_words"].push_back(e);
    }
  j["intermediate"] = json::array();
  for (const auto& w : d.intermediate) j["intermediate"].push_back(w.to_string());
  j["presentation"] = json::parse(gamma2::serialize(d.result, gamma2::PresentationFormat::json));
  j["comparison"] = json::parse(d.comparison.to_json());
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact presentations of the level-2 congruence subgroups"};
  app.require_subcommand(1);

  // present
  auto* present = app.add_subcommand("present", "emit the level-2 presentation at dimension n");
  int present_n = 2;
  std::string present_format = "text";
  present->add_option("--n", present_n, "dimension (1..6)")->required();
  present->add_option("--format", present_format, "text|json|gap");

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  int verify_n = 0;
  bool v_appendix = false, v_edges = false, v_roundtrip = false, v_abelian = false;
  int v_trials = 100, v_maxlen = 20;
  std::uint64_t v_seed = 7;
  std::string verify_format = "text";
  verify->add_option("--n", verify_n, "relator checks at this dimension (1..6)");
  verify->add_flag("--appendix", v_appendix, "word-identity manifest");
  verify->add_flag("--edges", v_edges, "edge stabilizer systems");
  verify->add_flag("--roundtrip", v_roundtrip, "factor/evaluate round-trips");
  verify->add_flag("--abelianization", v_abelian, "three-route abelianization agreement");
  verify->add_option("--trials", v_trials, "round-trip trials (default 100)");
  verify->add_option("--max-len", v_maxlen, "round-trip word length bound (default 20)");
  verify->add_option("--seed", v_seed, "round-trip seed (default 7)");
  verify->add_option("--format", verify_format, "text|json");

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a word to a matrix");
  int eval_n = 0;
  std::string eval_word;
  eval_cmd->add_option("--n", eval_n, "dimension")->required();
  eval_cmd->add_option("--word", eval_word, "word in the word grammar")->required();

  // factor
  auto* factor_cmd = app.add_subcommand("factor", "factor a level-2 matrix into generators");
  int factor_n = 0;
  std::string factor_matrix;
  bool factor_trace = false;
  factor_cmd->add_option("--n", factor_n, "dimension")->required();
  factor_cmd->add_option("--matrix", factor_matrix, "matrix text, rows ';', entries ','")
      ->required();
  factor_cmd->add_flag("--trace", factor_trace, "print the reduction metrics");

  // rs
  auto* rs = app.add_subcommand("rs", "coset rewriting pipeline at n = 2");
  std::string rs_format = "text";
  rs->add_option("--format", rs_format, "text|json");

  // complex
  auto* complex_cmd = app.add_subcommand("complex", "simplicial complex and stabilizer summary");
  int complex_n = 3;
  complex_cmd->add_option("--n", complex_n, "dimension")->required();

  // assemble
  auto* assemble = app.add_subcommand("assemble", "stabilizer assembly of the presentation");
  int assemble_n = 3;
  std::string assemble_format = "text";
  assemble->add_option("--n", assemble_n, "dimension (>= 3)")->required();
  assemble->add_option("--format", assemble_format, "text|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*present) {
      if (present_n < 1 || present_n > 6) {
        std::cerr << "present: --n must be in 1..6\n";
        return kExitUsage;
      }
      std::cout << gamma2::serialize(gamma2::gamma2_presentation(present_n),
                                     parse_format(present_format));
      if (present_format == "text" || present_format == "plain") std::cout << "\n";
      return kExitOk;
    }

    if (*verify) {
      std::vector<gamma2::Report> reports;
      if (verify_n != 0) {
        if (verify_n < 1 || verify_n > 6) {
          std::cerr << "verify: --n must be in 1..6\n";
          return kExitUsage;
        }
        reports.push_back(gamma2::check_canonical_presentation(verify_n));
      }
      if (v_appendix) reports.push_back(gamma2::check_appendix_identities());
      if (v_edges) reports.push_back(gamma2::check_edge_systems());
      if (v_roundtrip)
        reports.push_back(gamma2::roundtrip_suite(verify_n == 0 ? 2 : verify_n, v_trials,
                                                  v_maxlen, v_seed));
      if (v_abelian) reports.push_back(gamma2::cross_check_abelianization());
      if (reports.empty()) {
        std::cerr << "verify: pick at least one of --n/--appendix/--edges/--roundtrip/"
                     "--abelianization\n";
        return kExitUsage;
      }
      bool all = true;
      if (verify_format == "json") {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(json::parse(r.to_json()));
        std::cout << arr.dump(2) << "\n";
      } else {
        for (const auto& r : reports) std::cout << r.to_text();
      }
      for (const auto& r : reports) all = all && r.all_pass();
      return all ? kExitOk : kExitVerification;
    }

    if (*eval_cmd) {
      gamma2::Word w = gamma2::parse_word(eval_word);
      std::cout << gamma2::evaluate(w, eval_n).to_text() << "\n";
      return kExitOk;
    }

    if (*factor_cmd) {
      gamma2::IntMatrix m = gamma2::IntMatrix::from_text(factor_matrix);
      if (m.dim() != factor_n) {
        std::cerr << "factor: matrix is " << m.dim() << "x" << m.dim() << ", expected --n "
                  << factor_n << "\n";
        return kExitUsage;
      }
      if (!gamma2::is_level2(m)) {
        std::cerr << "not in Gamma_2(" << factor_n << ")\n";
        return kExitDomain;
      }
      std::vector<gamma2::ReductionTrace> traces;
      gamma2::Word w = gamma2::factor(m, factor_trace ? &traces : nullptr);
      std::cout << w.to_string() << "\n";
      if (factor_trace)
        for (size_t t = 0; t < traces.size(); ++t) {
          std::cout << "column " << t + 1 << " metrics:";
          for (const auto& v : traces[t].metrics) std::cout << " " << v;
          std::cout << "\n";
        }
      return kExitOk;
    }

    if (*rs) {
      gamma2::Derivation d = gamma2::derive_gamma2_2();
      if (rs_format == "json")
        std::cout << rs_json(d).dump(2) << "\n";
      else
        print_rs_text(std::cout, d);
      return d.comparison.all_pass() ? kExitOk : kExitVerification;
    }

    if (*complex_cmd) {
      if (complex_n < 1) {
        std::cerr << "complex: --n must be >= 1\n";
        return kExitUsage;
      }
      if (complex_n >= 2) {
        gamma2::SimplicialComplex orbit = gamma2::orbit_complex(complex_n);
        std::cout << "orbit complex (full simplex on e_1..e_" << complex_n << "):";
        for (int d = 0; d < complex_n; ++d) std::cout << " dim" << d << "=" << orbit.count(d);
        std::cout << "\n";
      }
      if (complex_n <= 4) {
        gamma2::SimplicialComplex b = gamma2::build_B_mod2(complex_n);
        std::cout << "mod-2 complex: vertices=" << b.vertices.size();
        for (int d = 0; d < complex_n; ++d) std::cout << " dim" << d << "=" << b.count(d);
        std::cout << "\n";
      }
      if (complex_n == 3) {
        for (int i = 1; i <= 7; ++i) {
          gamma2::StabilizerSystem sys = gamma2::vertex_stabilizer(i, 3);
          std::cout << "stabilizer v" << i << ": " << sys.generators.size() << " generators, "
                    << sys.presentation->relators.size() << " relators\n";
        }
        std::cout << "edge systems: " << gamma2::edge_stabilizer_data().size() << " edges in "
                  << gamma2::edge_families().size() << " transport groups\n";
      }
      return kExitOk;
    }

    if (*assemble) {
      if (assemble_n < 3) {
        std::cerr << "assemble: --n must be >= 3\n";
        return kExitUsage;
      }
      gamma2::Assembly a = gamma2::brown_assemble(assemble_n);
      if (assemble_format == "json") {
        std::cout << gamma2::serialize(a.presentation, gamma2::PresentationFormat::json);
      } else {
        std::cout << "vertex systems: " << a.vertex_systems
                  << ", edge systems: " << a.edge_systems << "\n";
        std::cout << "raw generators: " << a.raw_generators
                  << ", raw relators: " << a.raw_relators << "\n";
        std::cout << "assembled: " << a.presentation.generators.size() << " generators, "
                  << a.presentation.relators.size() << " relators\n";
        std::cout << gamma2::serialize(a.presentation, gamma2::PresentationFormat::plain)
                  << "\n";
      }
      return kExitOk;
    }
  } catch (const gamma2::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
