#include "gamma2/assembly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gamma2 {

namespace {

// union-find over generator indices
struct UnionFind {
  std::vector<size_t> parent;
  explicit UnionFind(size_t n) : parent(n) {
    for (size_t i = 0; i < n; ++i) parent[i] = i;
  }
  size_t find(size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(size_t a, size_t b) { parent[find(a)] = find(b); }
};

std::string site_label(const GeneratorId& g, int t) {
  std::string base;
  switch (g.kind) {
    case GeneratorId::Kind::E:
      base = "E" + std::to_string(g.i) + "_" + std::to_string(g.j);
      break;
    case GeneratorId::Kind::F:
      base = "F" + std::to_string(g.i);
      break;
    default:
      base = g.label;
      break;
  }
  return base + "@v" + std::to_string(t);
}

struct RawAssembly {
  std::vector<GeneratorId> gens;
  std::vector<IntMatrix> matrices;
  std::vector<Word> relators;
  std::map<GeneratorId, size_t> index;

  size_t add_gen(const GeneratorId& g, const IntMatrix& m) {
    auto [it, fresh] = index.emplace(g, gens.size());
    if (fresh) {
      gens.push_back(g);
      matrices.push_back(m);
    }
    return it->second;
  }
};

// identify single-symbol equalities, rename classes onto the named E/F
// symbols where the matrices allow it, rebuild the relators
Presentation contract(RawAssembly raw, int n) {
  UnionFind uf(raw.gens.size());
  for (const auto& r : raw.relators) {
    const auto& ls = r.letters();
    if (ls.size() == 2 && ls[0].exp == 1 && ls[1].exp == -1)
      uf.unite(raw.index.at(ls[0].sym), raw.index.at(ls[1].sym));
  }

  // canonical matrices of the named generators
  std::map<IntMatrix, GeneratorId> named;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) named.emplace(generator_matrix(GeneratorId::E(i, j), n), GeneratorId::E(i, j));
  for (int i = 1; i <= n; ++i)
    named.emplace(generator_matrix(GeneratorId::F(i), n), GeneratorId::F(i));

  std::map<size_t, GeneratorId> rep;
  for (size_t i = 0; i < raw.gens.size(); ++i) {
    size_t root = uf.find(i);
    if (!(raw.matrices[i] == raw.matrices[root]))
      throw std::logic_error("identified generators with distinct matrices");
    auto it = rep.find(root);
    if (it == rep.end()) {
      auto hit = named.find(raw.matrices[root]);
      rep.emplace(root, hit != named.end() ? hit->second : raw.gens[root]);
    }
  }
  // prefer the lexicographically least label among class members when no
  // named symbol matches
  for (size_t i = 0; i < raw.gens.size(); ++i) {
    size_t root = uf.find(i);
    GeneratorId& r = rep.at(root);
    if (r.kind == GeneratorId::Kind::Named && raw.gens[i].kind == GeneratorId::Kind::Named &&
        raw.gens[i] < r)
      r = raw.gens[i];
  }

  Presentation out;
  out.n = n;
  std::set<GeneratorId> emitted;
  for (size_t i = 0; i < raw.gens.size(); ++i) {
    size_t root = uf.find(i);
    const GeneratorId& g = rep.at(root);
    if (emitted.insert(g).second) {
      out.generators.push_back(g);
      out.evaluation.emplace(g, raw.matrices[root]);
    }
  }
  std::sort(out.generators.begin(), out.generators.end());

  std::set<Word> seen;
  for (const auto& r : raw.relators) {
    Word w;
    for (const auto& l : r.letters()) w.append({rep.at(uf.find(raw.index.at(l.sym))), l.exp});
    w = free_reduce(w);
    if (w.empty()) continue;
    if (seen.insert(cyclic_normal_form(w)).second) out.relators.push_back(w);
  }
  return out;
}

Assembly assemble_from_basis_vertices(int n) {
  Assembly out;
  Presentation inner = gamma2_presentation(n - 1);

  RawAssembly raw;
  for (int t = 1; t <= n; ++t) {
    Presentation st = stabilizer_presentation(n, t, inner);
    std::map<GeneratorId, GeneratorId> tag;
    for (const auto& g : st.generators) {
      GeneratorId named = GeneratorId::named(site_label(g, t));
      tag.emplace(g, named);
      raw.add_gen(named, st.matrix_of(g));
    }
    for (const auto& r : st.relators) {
      Word w;
      for (const auto& l : r.letters()) w.append({tag.at(l.sym), l.exp});
      raw.relators.push_back(free_reduce(w));
    }
  }
  out.vertex_systems = static_cast<size_t>(n);

  for (int s = 1; s <= n; ++s)
    for (int t = s + 1; t <= n; ++t) {
      // generators fixing both e_s and e_t occur in both stabilizers
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          if (i == j || j == s || j == t) continue;
          GeneratorId a = GeneratorId::named(site_label(GeneratorId::E(i, j), s));
          GeneratorId b = GeneratorId::named(site_label(GeneratorId::E(i, j), t));
          raw.relators.push_back(Word({Letter{a, 1}, Letter{b, -1}}));
        }
      for (int i = 1; i <= n; ++i) {
        if (i == s || i == t) continue;
        GeneratorId a = GeneratorId::named(site_label(GeneratorId::F(i), s));
        GeneratorId b = GeneratorId::named(site_label(GeneratorId::F(i), t));
        raw.relators.push_back(Word({Letter{a, 1}, Letter{b, -1}}));
      }
      ++out.edge_systems;
      out.plan.edges.emplace_back(s, t);
      out.plan.edge_words.emplace(std::make_pair(s, t), Word());
      if (s == 1) out.plan.tree_edges.emplace_back(s, t);
    }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) out.plan.triangles.push_back({i, j, k});

  out.raw_generators = raw.gens.size();
  out.raw_relators = raw.relators.size();
  out.presentation = contract(std::move(raw), n);
  return out;
}

Assembly assemble_from_mod2_complex() {
  const int n = 3;
  Assembly out;

  std::vector<StabilizerSystem> systems;
  systems.reserve(7);
  for (int i = 1; i <= 7; ++i) systems.push_back(vertex_stabilizer(i, 3));
  out.vertex_systems = systems.size();

  RawAssembly raw;
  for (const auto& sys : systems) {
    for (const auto& g : sys.generators) raw.add_gen(g.label, g.matrix);
    for (const auto& r : sys.presentation->relators) raw.relators.push_back(r);
  }

  // a word for matrix m over the generators of vertex i's system: a single
  // symbol when the matrix is itself a generator (ambiguity is an error), or
  // the transported e_1-stabilizer factorization
  auto word_at = [&systems](const IntMatrix& m, int vi) {
    const StabilizerSystem& sys = systems[static_cast<size_t>(vi - 1)];
    const StabilizerGenerator* hit = nullptr;
    for (const auto& g : sys.generators)
      if (g.matrix == m) {
        if (hit)
          throw std::logic_error("ambiguous generator match in vertex system " +
                                 std::to_string(vi));
        hit = &g;
      }
    if (hit) return Word::of(hit->label);
    IntMatrix x = vertex_conjugator(vi);
    Word base = stabilizer_word_e1(x.inverse() * m * x);
    Word w;
    for (const auto& l : flatten(base)) {
      // map the e_1-stabilizer symbol to this vertex's label by position
      const auto& base_sys = systems[0];
      bool mapped = false;
      for (size_t k = 0; k < base_sys.generators.size(); ++k)
        if (base_sys.generators[k].label == l.sym) {
          w.append({sys.generators[k].label, l.exp});
          mapped = true;
          break;
        }
      if (!mapped) throw std::logic_error("symbol outside the stabilizer alphabet");
    }
    w = free_reduce(w);
    if (!(sys.presentation->eval(w) == m))
      throw std::logic_error("edge word does not evaluate to its matrix");
    return w;
  };

  for (const auto& [edge, esys] : edge_stabilizer_data()) {
    for (const auto& g : esys.generators) {
      Word left = word_at(g.matrix, edge.first);
      Word right = word_at(g.matrix, edge.second);
      raw.relators.push_back(free_reduce(left * inverse(right)));
    }
    ++out.edge_systems;
    out.plan.edges.push_back(edge);
    out.plan.edge_words.emplace(edge, Word());
    if (edge.first == 1) out.plan.tree_edges.push_back(edge);
  }

  SimplicialComplex b3 = build_B_mod2(3);
  for (const auto& tri : b3.simplices[2])
    out.plan.triangles.push_back({tri[0] + 1, tri[1] + 1, tri[2] + 1});

  out.raw_generators = raw.gens.size();
  out.raw_relators = raw.relators.size();
  out.presentation = contract(std::move(raw), n);
  return out;
}

}  // namespace

Assembly brown_assemble(int n) {
  if (n == 3) return assemble_from_mod2_complex();
  if (n >= 4) return assemble_from_basis_vertices(n);
  throw std::invalid_argument("brown_assemble requires n >= 3");
}

}  // namespace gamma2
