#include "gamma2/verifier.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "gamma2/abelian.hpp"
#include "gamma2/complex.hpp"
#include "gamma2/membership.hpp"
#include "gamma2/schreier.hpp"

namespace gamma2 {

int Report::passed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [](const Check& c) { return c.pass; }));
}

int Report::failed() const { return static_cast<int>(checks.size()) - passed(); }

void Report::check(const std::string& label, bool ok, const std::string& detail) {
  checks.push_back({label, ok, ok ? std::string() : detail});
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << suite << ": " << passed() << "/" << checks.size() << " passed\n";
  for (const auto& c : checks) {
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.label;
    if (!c.pass && !c.detail.empty()) os << " -- " << c.detail;
    os << "\n";
  }
  return os.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["passed"] = passed();
  j["failed"] = failed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json jc;
    jc["label"] = c.label;
    jc["status"] = c.pass ? "pass" : "fail";
    if (!c.pass && !c.detail.empty()) jc["detail"] = c.detail;
    j["checks"].push_back(jc);
  }
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

namespace {

// family of a relator by shape: 0 involution F^2, 1 squared pair (XY)^2,
// 2 three-index commutator families (including [E,E]E^2), 3 the long
// commutator, 4 disjoint-index commutator; -1 unrecognized
int classify_relator(const Word& w) {
  std::vector<Letter> f = flatten(w);
  auto is_inv = [](const Letter& a, const Letter& b) {
    return a.sym == b.sym && a.exp == -b.exp;
  };
  if (f.size() == 2 && f[0] == f[1] && f[0].sym.kind == GeneratorId::Kind::F &&
      f[0].exp == 1)
    return 0;
  if (f.size() == 4 && f[0] == f[2] && f[1] == f[3] && f[0].exp == 1 && f[1].exp == 1 &&
      f[1].sym.kind == GeneratorId::Kind::F)
    return 1;
  if (f.size() == 4 && is_inv(f[0], f[2]) && is_inv(f[1], f[3])) {
    const GeneratorId& a = f[2].sym;
    const GeneratorId& b = f[3].sym;
    if (a.kind == GeneratorId::Kind::E && b.kind == GeneratorId::Kind::E && a.i != b.i &&
        a.i != b.j && a.j != b.i && a.j != b.j)
      return 4;
    return 2;
  }
  if (f.size() == 6 && is_inv(f[0], f[2]) && is_inv(f[1], f[3]) && f[4] == f[5])
    return 2;
  if (f.size() == 24) return 3;
  return -1;
}

}  // namespace

Report check_canonical_presentation(int n) {
  if (n < 1 || n > 6)
    throw std::invalid_argument("check_canonical_presentation supports n in [1,6]");
  Report rep;
  rep.suite = "canonical-presentation n=" + std::to_string(n);
  Presentation p = gamma2_presentation(n);
  rep.check("generator count is n^2",
            p.generators.size() == static_cast<size_t>(n) * static_cast<size_t>(n),
            "got " + std::to_string(p.generators.size()));
  std::vector<size_t> fam = gamma2_relator_family_sizes(n);
  size_t total = std::accumulate(fam.begin(), fam.end(), size_t{0});
  rep.check("relator count matches the family census (" + std::to_string(total) + ")",
            p.relators.size() == total, "got " + std::to_string(p.relators.size()));
  std::vector<size_t> seen(5, 0);
  bool recognized = true;
  for (const auto& r : p.relators) {
    int c = classify_relator(r);
    if (c < 0)
      recognized = false;
    else
      ++seen[static_cast<size_t>(c)];
  }
  rep.check("every relator matches a family shape", recognized);
  static const char* family_names[5] = {"involutions", "squared pairs",
                                        "three-index commutators", "long commutators",
                                        "disjoint commutators"};
  for (size_t k = 0; k < 5; ++k)
    rep.check(std::string(family_names[k]) + ": " + std::to_string(fam[k]),
              seen[k] == fam[k], "got " + std::to_string(seen[k]));
  for (size_t k = 0; k < p.relators.size(); ++k) {
    const Word& w = p.relators[k];
    bool ok = p.eval(w).is_identity();
    rep.check("relator " + std::to_string(k + 1) + ": " + w.to_string(), ok,
              "does not evaluate to the identity");
  }
  return rep;
}

namespace {

Word W(const std::string& s) { return parse_word(s); }

std::string Es(int i, int j) {
  return "E(" + std::to_string(i) + "," + std::to_string(j) + ")";
}
std::string Fs(int i) { return "F(" + std::to_string(i) + ")"; }

}  // namespace

Report check_appendix_identities() {
  Report rep;
  rep.suite = "appendix-identities";
  size_t items = 0;
  auto expect_identity = [&](const std::string& label, const Word& w) {
    ++items;
    IntMatrix m = evaluate(w, 3);
    rep.check(label, m.is_identity(), "evaluates to " + m.to_text());
  };

  const int i = 1;
  for (auto [j, k] : {std::pair{2, 3}, std::pair{3, 2}}) {
    std::string jk = " (j,k)=(" + std::to_string(j) + "," + std::to_string(k) + ")";
    Word u = W(Es(j, i) + " " + Fs(j) + " " + Es(i, j) + " " + Fs(i) + " " +
               Es(k, i) + "^-1 " + Es(k, j));
    Word v = W(Es(k, i) + " " + Fs(k) + " " + Es(i, k) + " " + Fs(i) + " " +
               Es(j, i) + "^-1 " + Es(j, k));
    expect_identity("commutator of the six-letter stabilizer words" + jk,
                    commutator(u, v));
    expect_identity("its F-free equivalent" + jk,
                    power(W(Es(j, i) + " " + Es(i, j) + "^-1 " + Es(k, j) + "^-1 " +
                            Es(j, k) + " " + Es(i, k) + " " + Es(k, i) + "^-1"),
                          2));
    expect_identity("short-long commutator with the squared second word" + jk,
                    free_reduce(commutator(W(Es(j, i) + "^-1 " + Es(j, k)), u) * power(v, 2)));
    expect_identity("their F-free equivalent" + jk,
                    W(Es(k, j) + "^-1 " + Es(i, j) + " " + Es(j, i) + "^-1 " + Es(j, k) +
                      "^-1 " + Es(k, j) + " " + Es(i, j) + "^-1 " + Es(j, i) + " " +
                      Es(j, k) + " " + Es(i, k) + "^-1 " + Es(k, i) + " " + Es(i, k) +
                      "^-1 " + Es(k, i)));
    expect_identity("short-pair commutator with a squared four-letter word" + jk,
                    free_reduce(commutator(W(Es(j, i) + "^-1 " + Es(j, k)),
                                           W(Es(i, j) + " " + Es(k, j))) *
                                power(W(Es(k, i) + " " + Fs(k) + " " + Es(i, k) + " " + Fs(i)),
                                      2)));
    expect_identity("row-wise short-pair commutator, reconstructed expansion" + jk,
                    free_reduce(commutator(W(Es(i, j) + "^-1 " + Es(i, k)),
                                           W(Es(j, i) + " " + Es(k, i))) *
                                power(W(Es(k, j) + " " + Fs(k) + " " + Es(j, k) + " " + Fs(j)),
                                      2)));
  }
  rep.check("manifest covers 12 tabulated identities", items == 12,
            "got " + std::to_string(items));
  return rep;
}

Report check_edge_systems() {
  Report rep;
  rep.suite = "edge-systems";
  auto data = edge_stabilizer_data();
  rep.check("21 edges tabulated", data.size() == 21, "got " + std::to_string(data.size()));

  auto apply = [](const IntMatrix& m, const std::vector<Int>& v) {
    std::vector<Int> out(v.size(), Int(0));
    for (int r = 0; r < m.dim(); ++r)
      for (int c = 0; c < m.dim(); ++c)
        out[static_cast<size_t>(r)] += m.at(r, c) * v[static_cast<size_t>(c)];
    return out;
  };

  for (const auto& [edge, sys] : data) {
    bool ok = sys.generators.size() == 3;
    for (const auto& g : sys.generators) {
      if (!is_level2(g.matrix)) ok = false;
      for (const auto& v : sys.fixed)
        if (apply(g.matrix, v) != v) ok = false;
      if (g.ef_word && !(evaluate(*g.ef_word, 3) == g.matrix)) ok = false;
    }
    rep.check("edge (v" + std::to_string(edge.first) + ",v" + std::to_string(edge.second) +
                  "): membership and fixing",
              ok);
  }

  const auto& fams = edge_families();
  size_t triples = 0, singles = 0;
  for (const auto& fam : fams) {
    std::set<IntMatrix> first;
    bool agree = true;
    for (size_t e = 0; e < fam.edges.size(); ++e) {
      std::set<IntMatrix> triple;
      for (const auto& g : data.at(fam.edges[e]).generators) triple.insert(g.matrix);
      if (e == 0)
        first = triple;
      else if (triple != first)
        agree = false;
    }
    std::string label = "family {";
    for (size_t e = 0; e < fam.edges.size(); ++e)
      label += (e ? ", " : "") + std::string("(v") + std::to_string(fam.edges[e].first) +
               ",v" + std::to_string(fam.edges[e].second) + ")";
    label += "} shares one triple";
    rep.check(label, agree);
    (fam.edges.size() == 3 ? triples : singles) += 1;
  }
  rep.check("6 three-edge families and 3 singletons", triples == 6 && singles == 3);
  return rep;
}

Report roundtrip_suite(int n, int trials, int max_len, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("roundtrip_suite requires n >= 2");
  Report rep;
  rep.suite = "roundtrip n=" + std::to_string(n) + " trials=" + std::to_string(trials) +
              " max_len=" + std::to_string(max_len) + " seed=" + std::to_string(seed);
  std::mt19937_64 rng(seed);

  std::vector<Letter> alphabet;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) {
        alphabet.push_back({GeneratorId::E(i, j), 1});
        alphabet.push_back({GeneratorId::E(i, j), -1});
      }
  for (int i = 1; i <= n; ++i) alphabet.push_back({GeneratorId::F(i), 1});

  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
  for (int t = 1; t <= trials; ++t) {
    int len = len_dist(rng);
    Word w;
    for (int k = 0; k < len; ++k) w.append(alphabet[pick(rng)]);
    IntMatrix a = evaluate(w, n);
    bool ok = false;
    std::string detail;
    try {
      Word back = factor(a);
      ok = evaluate(back, n) == a;
      if (!ok) detail = "round-trip evaluation mismatch";
    } catch (const std::exception& e) {
      detail = e.what();
    }
    rep.check("trial " + std::to_string(t) + " (len " + std::to_string(len) + ")", ok, detail);
  }
  return rep;
}

Report cross_check_abelianization() {
  Report rep;
  rep.suite = "abelianization-cross-check";

  Presentation canonical = gamma2_presentation(2);
  Derivation d = derive_gamma2_2();
  Presentation intermediate;
  intermediate.n = 2;
  for (int k = 1; k <= 4; ++k)
    intermediate.generators.push_back(GeneratorId::named("g" + std::to_string(k)));
  intermediate.relators = d.intermediate;

  AbelianInvariants a = abelianization_invariants(canonical);
  AbelianInvariants b = abelianization_invariants(d.result);
  AbelianInvariants c = abelianization_invariants(intermediate);
  rep.check("canonical and derived routes agree (" + a.to_string() + ")", a == b,
            b.to_string());
  rep.check("four-generator intermediate route agrees", a == c, c.to_string());

  Presentation shuffled = canonical;
  std::reverse(shuffled.relators.begin(), shuffled.relators.end());
  std::rotate(shuffled.generators.begin(), shuffled.generators.begin() + 1,
              shuffled.generators.end());
  rep.check("invariants stable under relator and generator reordering",
            abelianization_invariants(shuffled) == a);

  Presentation redundant = canonical;
  redundant.relators.push_back(
      conjugate(redundant.relators[0], Word::of(redundant.generators[0])));
  rep.check("invariants stable under adding a conjugate relator",
            abelianization_invariants(redundant) == a);
  return rep;
}

}  // namespace gamma2
