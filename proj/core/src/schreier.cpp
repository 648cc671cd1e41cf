#include "gamma2/schreier.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gamma2 {

namespace {

GeneratorId gx() { return GeneratorId::named("x"); }
GeneratorId gy() { return GeneratorId::named("y"); }
GeneratorId gz() { return GeneratorId::named("z"); }

IntMatrix m2(int a, int b, int c, int d) {
  IntMatrix m(2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

GeneratorId g_sym(int k) { return GeneratorId::named("g" + std::to_string(k)); }

// the published six subgroup generators plus their tabled inverses
const std::map<IntMatrix, Letter>& symbol_table() {
  static const std::map<IntMatrix, Letter> table = {
      {m2(1, 2, 0, 1), Letter{g_sym(1), 1}},   {m2(1, -2, 0, 1), Letter{g_sym(1), -1}},
      {m2(1, 2, 0, -1), Letter{g_sym(2), 1}},  {m2(1, 0, 2, 1), Letter{g_sym(3), 1}},
      {m2(1, 0, -2, 1), Letter{g_sym(3), -1}}, {m2(-1, 0, 2, 1), Letter{g_sym(4), 1}},
  };
  return table;
}

}  // namespace

CosetSystem::CosetSystem() : ambient_(gl2z_presentation()) {
  Word wx = Word::of(gx()), wy = Word::of(gy()), wz = Word::of(gz());
  transversal_words_ = {Word(),
                        inverse(wx),
                        wy,
                        wz,
                        free_reduce(inverse(wx) * wz),
                        free_reduce(wy * wz)};
  for (const auto& w : transversal_words_) transversal_.push_back(ambient_.eval(w));

  std::set<Mod2Matrix> images;
  for (const auto& a : transversal_) images.insert(mod2_image(a));
  if (images.size() != transversal_.size())
    throw std::logic_error("transversal has duplicate mod-2 images");

  const auto& cols = column_letters();
  for (size_t c = 0; c < cols.size(); ++c)
    for (int i = 0; i < 6; ++i)
      action_[c][i] = bar(letter_matrix(cols[c]) * transversal_[i]);
}

IntMatrix CosetSystem::letter_matrix(const Letter& l) const {
  return ambient_.matrix_of(l.sym).pow(l.exp);
}

int CosetSystem::bar(const IntMatrix& a) const {
  Mod2Matrix img = mod2_image(a);
  if (!img.invertible()) throw std::domain_error("matrix is not unimodular mod 2");
  for (size_t i = 0; i < transversal_.size(); ++i)
    if (mod2_image(transversal_[i]) == img) return static_cast<int>(i);
  throw std::logic_error("mod-2 image missing from transversal");
}

const std::array<Letter, 5>& CosetSystem::column_letters() {
  static const std::array<Letter, 5> cols = {
      Letter{gx(), 1}, Letter{gx(), -1}, Letter{gy(), 1}, Letter{gy(), -1}, Letter{gz(), 1}};
  return cols;
}

int CosetSystem::action(int column, int coset) const { return action_[column][coset]; }

RewriteCell CosetSystem::cell(const Letter& w, int coset) const {
  IntMatrix wa = letter_matrix(w) * transversal_[coset];
  IntMatrix value = transversal_[bar(wa)].inverse() * wa;
  auto it = symbol_table().find(value);
  if (!value.is_identity() && it == symbol_table().end())
    throw std::logic_error("rewrite cell value outside the published generator set: " +
                           value.to_text());
  RewriteCell out;
  out.w = w;
  out.coset = coset;
  out.value = value;
  if (it != symbol_table().end()) out.symbol = it->second;
  return out;
}

std::vector<std::vector<RewriteCell>> CosetSystem::table() const {
  std::vector<std::vector<RewriteCell>> grid(6);
  for (int i = 0; i < 6; ++i)
    for (const auto& w : column_letters()) grid[i].push_back(cell(w, i));
  return grid;
}

CosetSystem build_coset_system() { return CosetSystem(); }

std::vector<std::vector<RewriteCell>> schreier_table() { return build_coset_system().table(); }

Word rewrite_relator(const CosetSystem& cs, const Word& r, int coset) {
  if (!cs.ambient().eval(r).is_identity())
    throw std::invalid_argument("rewrite_relator requires a relator: " + r.to_string());
  std::vector<Letter> flat = flatten(r);
  // coset of each proper suffix, right to left
  std::vector<int> at(flat.size());
  IntMatrix suffix = cs.transversal()[coset];
  for (size_t k = flat.size(); k-- > 0;) {
    at[k] = cs.bar(suffix);
    suffix = cs.ambient().matrix_of(flat[k].sym).pow(flat[k].exp) * suffix;
  }
  Word out;
  for (size_t k = 0; k < flat.size(); ++k) {
    RewriteCell c = cs.cell(flat[k], at[k]);
    if (c.symbol) out.append(*c.symbol);
  }
  return free_reduce(out);
}

Word rewrite_relator(const Word& r, int coset) {
  return rewrite_relator(build_coset_system(), r, coset);
}

// ---------------------------------------------------------------------------
// the Tietze substitution pass

namespace {

struct TietzeRules {
  std::set<GeneratorId> involutions;
  std::set<std::pair<Letter, Letter>> squares;
};

std::vector<Letter> reduce_flat(std::vector<Letter> f) {
  return flatten(free_reduce(Word(std::move(f))));
}

// rewrite to fixpoint: involution exponents to +1, and subword collapses
// X Y X -> Y^-1 (with sign variants) for every learned square (XY)^2
std::vector<Letter> simplify_flat(std::vector<Letter> f, const TietzeRules& rules) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& l : f)
      if (l.exp == -1 && rules.involutions.count(l.sym)) {
        l.exp = 1;
        changed = true;
      }
    if (changed) {
      f = reduce_flat(std::move(f));
      continue;
    }
    for (const auto& [X, Y] : rules.squares) {
      Letter Xi{X.sym, -X.exp}, Yi{Y.sym, -Y.exp};
      const std::array<std::pair<std::array<Letter, 3>, Letter>, 4> patterns = {{
          {{X, Y, X}, Yi},
          {{Y, X, Y}, Xi},
          {{Xi, Yi, Xi}, Y},
          {{Yi, Xi, Yi}, X},
      }};
      for (const auto& [pat, repl] : patterns) {
        for (size_t i = 0; i + 3 <= f.size();) {
          if (f[i] == pat[0] && f[i + 1] == pat[1] && f[i + 2] == pat[2]) {
            f.erase(f.begin() + static_cast<long>(i), f.begin() + static_cast<long>(i) + 3);
            f.insert(f.begin() + static_cast<long>(i), repl);
            f = reduce_flat(std::move(f));
            changed = true;
          } else {
            ++i;
          }
        }
      }
    }
  }
  return f;
}

void learn_rules(const std::vector<Letter>& f, TietzeRules& rules) {
  std::vector<Letter> c = f;
  while (c.size() >= 2 && c.front().sym == c.back().sym && c.front().exp == -c.back().exp) {
    c.erase(c.begin());
    c.pop_back();
  }
  if (c.size() == 2 && c[0] == c[1] && std::abs(c[0].exp) == 1)
    rules.involutions.insert(c[0].sym);
  if (c.size() == 4 && c[0] == c[2] && c[1] == c[3] && c[0].sym != c[1].sym &&
      std::abs(c[0].exp) == 1 && std::abs(c[1].exp) == 1)
    rules.squares.insert({c[0], c[1]});
}

}  // namespace

Derivation derive_gamma2_2() {
  Derivation d;
  const CosetSystem& cs = d.cosets;

  for (const auto& r : cs.ambient().relators) {
    std::vector<Word> row;
    for (int i = 0; i < 6; ++i) row.push_back(rewrite_relator(cs, r, i));
    d.s_words.push_back(std::move(row));
  }

  std::set<Word> seen;
  for (const auto& row : d.s_words)
    for (const auto& w : row) {
      if (w.empty()) continue;
      Word nf = cyclic_normal_form(w);
      if (seen.insert(nf).second) d.intermediate.push_back(w);
    }

  const std::map<GeneratorId, Word> subst = {
      {g_sym(1), Word::of(GeneratorId::E(1, 2))},
      {g_sym(2), Word::of(GeneratorId::F(2)) * Word::of(GeneratorId::E(1, 2))},
      {g_sym(3), Word::of(GeneratorId::E(2, 1))},
      {g_sym(4), Word::of(GeneratorId::F(1)) * Word::of(GeneratorId::E(2, 1))},
  };
  for (const auto& w : d.intermediate) {
    Word s;
    for (const auto& l : flatten(w)) {
      const Word& repl = subst.at(l.sym);
      s.append(l.exp == 1 ? repl : inverse(repl));
    }
    d.substituted.push_back(free_reduce(s));
  }

  // shortest first, so involution and square rules are learned before the
  // words that need them
  std::vector<std::vector<Letter>> flats;
  for (const auto& w : d.substituted) flats.push_back(flatten(w));
  std::sort(flats.begin(), flats.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  TietzeRules rules;
  std::vector<Word> simplified;
  for (auto& f : flats) {
    std::vector<Letter> s = simplify_flat(std::move(f), rules);
    learn_rules(s, rules);
    simplified.push_back(from_flat(s));
  }

  d.result.n = 2;
  d.result.generators = {GeneratorId::E(1, 2), GeneratorId::E(2, 1), GeneratorId::F(1),
                         GeneratorId::F(2)};
  std::set<Word> final_seen;
  for (const auto& w : simplified) {
    Word nf = cyclic_normal_form(w, rules.involutions);
    if (nf.empty()) continue;
    if (final_seen.insert(nf).second) d.result.relators.push_back(w);
  }
  for (const auto& g : d.result.generators)
    d.result.evaluation.emplace(g, generator_matrix(g, 2));

  // structural match against the canonical presentation
  d.comparison.suite = "derive_gamma2_2";
  Presentation target = gamma2_presentation(2);
  std::set<GeneratorId> got_gens(d.result.generators.begin(), d.result.generators.end());
  std::set<GeneratorId> want_gens(target.generators.begin(), target.generators.end());
  d.comparison.check("generator sets identical", got_gens == want_gens);
  d.comparison.check("intermediate relator count is 8",
                     d.intermediate.size() == 8,
                     "got " + std::to_string(d.intermediate.size()));
  std::set<Word> got_nf, want_nf;
  for (const auto& w : d.result.relators)
    got_nf.insert(cyclic_normal_form(w, rules.involutions));
  for (const auto& w : target.relators)
    want_nf.insert(cyclic_normal_form(w, rules.involutions));
  std::string detail;
  if (got_nf != want_nf) {
    for (const auto& w : got_nf)
      if (!want_nf.count(w)) detail += "unexpected: " + w.to_string() + "; ";
    for (const auto& w : want_nf)
      if (!got_nf.count(w)) detail += "missing: " + w.to_string() + "; ";
  }
  d.comparison.check("relator normal-form sets identical", got_nf == want_nf, detail);
  bool all_identity = true;
  for (const auto& w : d.result.relators)
    if (!d.result.eval(w).is_identity()) all_identity = false;
  d.comparison.check("derived relators evaluate to identity", all_identity);
  return d;
}

}  // namespace gamma2
