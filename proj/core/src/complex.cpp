#include "gamma2/complex.hpp"

#include <algorithm>
#include <stdexcept>

#include "gamma2/membership.hpp"

namespace gamma2 {

namespace {

int rank_mod2(const std::vector<unsigned>& rows_in) {
  std::vector<unsigned> rows = rows_in;
  int rank = 0;
  for (int c = 0; c < 32 && rank < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i)
      if ((rows[static_cast<size_t>(i)] >> c) & 1u) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(piv)]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
      if (i != rank && ((rows[static_cast<size_t>(i)] >> c) & 1u))
        rows[static_cast<size_t>(i)] ^= rows[static_cast<size_t>(rank)];
    ++rank;
  }
  return rank;
}

}  // namespace

SimplicialComplex build_B_mod2(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("build_B_mod2 supports n in [1,4]");
  SimplicialComplex x;
  x.ring = SimplicialComplex::Ring::Z2;
  // nonzero vectors ordered by weight, then by index set
  std::vector<unsigned> masks;
  for (int w = 1; w <= n; ++w)
    for (unsigned m = 1; m < (1u << n); ++m)
      if (__builtin_popcount(m) == w) masks.push_back(m);
  for (unsigned m : masks) {
    std::vector<int> v(static_cast<size_t>(n), 0);
    for (int b = 0; b < n; ++b)
      if ((m >> b) & 1u) v[static_cast<size_t>(b)] = 1;
    x.vertices.push_back(std::move(v));
  }
  const int nv = static_cast<int>(x.vertices.size());
  x.simplices.assign(static_cast<size_t>(n), {});
  // k-subsets with full rank, for k = 1..n
  std::vector<int> idx;
  auto rec = [&](auto&& self, int start, int k) -> void {
    if (static_cast<int>(idx.size()) == k) {
      std::vector<unsigned> rows;
      for (int i : idx) rows.push_back(masks[static_cast<size_t>(i)]);
      if (rank_mod2(rows) == k)
        x.simplices[static_cast<size_t>(k - 1)].push_back(idx);
      return;
    }
    for (int i = start; i < nv; ++i) {
      idx.push_back(i);
      self(self, i + 1, k);
      idx.pop_back();
    }
  };
  for (int k = 1; k <= n; ++k) rec(rec, 0, k);
  return x;
}

SimplicialComplex orbit_complex(int n) {
  if (n < 2) throw std::invalid_argument("orbit_complex requires n >= 2");
  SimplicialComplex x;
  x.ring = SimplicialComplex::Ring::Z;
  for (int i = 0; i < n; ++i) {
    std::vector<int> v(static_cast<size_t>(n), 0);
    v[static_cast<size_t>(i)] = 1;
    x.vertices.push_back(std::move(v));
  }
  x.simplices.assign(static_cast<size_t>(n), {});
  std::vector<int> idx;
  auto rec = [&](auto&& self, int start, int k) -> void {
    if (static_cast<int>(idx.size()) == k) {
      x.simplices[static_cast<size_t>(k - 1)].push_back(idx);
      return;
    }
    for (int i = start; i < n; ++i) {
      idx.push_back(i);
      self(self, i + 1, k);
      idx.pop_back();
    }
  };
  for (int k = 1; k <= n; ++k) rec(rec, 0, k);
  return x;
}

bool is_extension(const IntMatrix& a, const std::vector<std::vector<Int>>& delta) {
  if (!is_level2(a)) return false;
  const int n = a.dim();
  for (const auto& v : delta) {
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument("vector dimension mismatch");
    bool hit = false;
    for (int c = 0; c < n && !hit; ++c) {
      bool same = true;
      for (int r = 0; r < n; ++r)
        if (a.at(r, c) != v[static_cast<size_t>(r)]) { same = false; break; }
      hit = same;
    }
    if (!hit) return false;
  }
  return true;
}

const std::vector<std::vector<Int>>& b3_vertex_vectors() {
  static const std::vector<std::vector<Int>> verts = {
      {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
  return verts;
}

namespace {

IntMatrix gmat(const GeneratorId& g) { return generator_matrix(g, 3); }

std::vector<Int> apply(const IntMatrix& m, const std::vector<Int>& v) {
  std::vector<Int> out(static_cast<size_t>(m.dim()), Int(0));
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) out[static_cast<size_t>(r)] += m.at(r, c) * v[static_cast<size_t>(c)];
  return out;
}

}  // namespace

IntMatrix vertex_conjugator(int i) {
  switch (i) {
    case 1: return IntMatrix::identity(3);
    case 2: return gmat(GeneratorId::S(1));
    case 3: return gmat(GeneratorId::S(2)) * gmat(GeneratorId::S(1));
    case 4: return gmat(GeneratorId::T(2, 1));
    case 5: return gmat(GeneratorId::S(2)) * gmat(GeneratorId::T(2, 1));
    case 6: return gmat(GeneratorId::S(1)) * gmat(GeneratorId::S(2)) * gmat(GeneratorId::T(2, 1));
    case 7: return gmat(GeneratorId::T(3, 1)) * gmat(GeneratorId::T(2, 1));
    default: throw std::invalid_argument("vertex index must be in 1..7");
  }
}

StabilizerSystem conjugation_transport(const IntMatrix& x, const StabilizerSystem& sys) {
  Int d = x.det();
  if (d != 1 && d != -1) throw std::invalid_argument("conjugator must be unimodular");
  IntMatrix xi = x.inverse();
  StabilizerSystem out;
  for (const auto& v : sys.fixed) out.fixed.push_back(apply(x, v));
  for (const auto& g : sys.generators) {
    IntMatrix m = x * g.matrix * xi;
    out.generators.push_back({g.label, m, factor(m)});
  }
  if (sys.presentation) {
    Presentation p = *sys.presentation;
    p.evaluation.clear();
    for (const auto& g : out.generators) p.evaluation.emplace(g.label, g.matrix);
    out.presentation = std::move(p);
  }
  return out;
}

StabilizerSystem vertex_stabilizer(int vertex_index, int n) {
  if (n != 3) throw std::invalid_argument("vertex stabilizers are tabulated at n = 3 only");
  if (vertex_index < 1 || vertex_index > 7)
    throw std::invalid_argument("vertex index must be in 1..7");

  Presentation p1 = stabilizer_presentation(3, 1, gamma2_presentation(2));
  StabilizerSystem base;
  base.fixed = {b3_vertex_vectors()[0]};
  for (const auto& g : p1.generators)
    base.generators.push_back({g, p1.matrix_of(g), Word::of(g)});
  base.presentation = p1;
  if (vertex_index == 1) return base;

  StabilizerSystem out = conjugation_transport(vertex_conjugator(vertex_index), base);
  // per-vertex symbols; the transported matrices are no longer the named E/F
  // matrices in general
  std::map<GeneratorId, GeneratorId> rename;
  for (size_t k = 0; k < out.generators.size(); ++k) {
    GeneratorId fresh = GeneratorId::named(
        "v" + std::to_string(vertex_index) + ".g" + std::to_string(k + 1));
    rename[out.generators[k].label] = fresh;
    out.generators[k].label = fresh;
  }
  if (out.presentation) {
    Presentation& p = *out.presentation;
    std::vector<GeneratorId> gens;
    for (const auto& g : p.generators) gens.push_back(rename.at(g));
    p.generators = std::move(gens);
    std::vector<Word> rels;
    for (const auto& r : p.relators) {
      Word w;
      for (const auto& l : r.letters()) w.append({rename.at(l.sym), l.exp});
      rels.push_back(free_reduce(w));
    }
    p.relators = std::move(rels);
    p.evaluation.clear();
    for (const auto& g : out.generators) p.evaluation.emplace(g.label, g.matrix);
  }
  return out;
}

namespace {

struct EdgeFamilyData {
  std::vector<std::pair<int, int>> edges;
  Word conjugator_word;  // over T/S symbols
  const char* m1;
  const char* m2;
  const char* m3;
};

Word tsword(std::initializer_list<GeneratorId> gs) {
  Word w;
  for (const auto& g : gs) w.append({g, 1});
  return w;
}

// tabulated stabilizer triples, one per transport group
const std::vector<EdgeFamilyData>& family_data() {
  using G = GeneratorId;
  static const std::vector<EdgeFamilyData> fams = {
      {{{1, 2}, {1, 4}, {2, 4}}, Word(), "1,0,2;0,1,0;0,0,1", "1,0,0;0,1,2;0,0,1",
       "1,0,0;0,1,0;0,0,-1"},
      {{{1, 3}, {1, 5}, {3, 5}}, tsword({G::S(2)}), "1,2,0;0,1,0;0,0,1",
       "1,0,0;0,1,0;0,2,1", "1,0,0;0,-1,0;0,0,1"},
      {{{2, 3}, {2, 6}, {3, 6}}, tsword({G::S(1), G::S(2)}), "1,0,0;2,1,0;0,0,1",
       "1,0,0;0,1,0;2,0,1", "-1,0,0;0,1,0;0,0,1"},
      {{{1, 6}, {1, 7}, {6, 7}}, tsword({G::T(3, 2)}), "1,-2,2;0,1,0;0,0,1",
       "1,0,0;0,-1,2;0,-2,3", "1,0,0;0,1,0;0,2,-1"},
      {{{2, 5}, {2, 7}, {5, 7}}, tsword({G::S(1), G::T(3, 2)}), "1,0,0;-2,1,2;0,0,1",
       "-1,0,2;0,1,0;-2,0,3", "1,0,0;0,1,0;2,0,-1"},
      {{{3, 4}, {3, 7}, {4, 7}}, tsword({G::S(2), G::S(1), G::T(3, 2)}),
       "1,0,0;0,1,0;-2,2,1", "-1,2,0;-2,3,0;0,0,1", "1,0,0;2,-1,0;0,0,1"},
      {{{5, 6}}, tsword({G::T(3, 1), G::T(3, 2)}), "-1,-2,2;0,1,0;-2,-2,3",
       "1,0,0;-2,-1,2;-2,-2,3", "1,0,0;0,1,0;2,2,-1"},
      {{{4, 6}}, tsword({G::S(2), G::T(3, 1), G::T(3, 2)}), "-1,2,-2;-2,3,-2;0,0,1",
       "1,0,0;-2,3,-2;-2,2,-1", "1,0,0;2,-1,2;0,0,1"},
      {{{4, 5}}, tsword({G::S(1), G::S(2), G::T(3, 1), G::T(3, 2)}),
       "3,-2,-2;2,-1,-2;0,0,1", "3,-2,-2;0,1,0;2,-2,-1", "-1,2,2;0,1,0;0,0,1"},
  };
  return fams;
}

}  // namespace

const std::vector<EdgeFamily>& edge_families() {
  static const std::vector<EdgeFamily> fams = [] {
    std::vector<EdgeFamily> out;
    for (const auto& f : family_data())
      out.push_back({f.edges, evaluate(f.conjugator_word, 3)});
    return out;
  }();
  return fams;
}

std::map<std::pair<int, int>, StabilizerSystem> edge_stabilizer_data() {
  const std::vector<IntMatrix> base = {gmat(GeneratorId::E(1, 3)), gmat(GeneratorId::E(2, 3)),
                                       gmat(GeneratorId::F(3))};
  std::map<std::pair<int, int>, StabilizerSystem> out;
  for (const auto& fam : family_data()) {
    IntMatrix x = evaluate(fam.conjugator_word, 3);
    IntMatrix xi = x.inverse();
    std::vector<IntMatrix> triple;
    for (const auto& m : base) triple.push_back(x * m * xi);
    const std::array<const char*, 3> displayed = {fam.m1, fam.m2, fam.m3};
    for (size_t k = 0; k < 3; ++k)
      if (!(triple[k] == IntMatrix::from_text(displayed[k])))
        throw std::logic_error("edge stabilizer transcription mismatch");
    for (const auto& edge : fam.edges) {
      StabilizerSystem sys;
      sys.fixed = {b3_vertex_vectors()[static_cast<size_t>(edge.first - 1)],
                   b3_vertex_vectors()[static_cast<size_t>(edge.second - 1)]};
      for (size_t k = 0; k < 3; ++k) {
        const IntMatrix& m = triple[k];
        if (!is_level2(m)) throw std::logic_error("edge stabilizer generator not level 2");
        for (const auto& v : sys.fixed)
          if (apply(m, v) != v) throw std::logic_error("edge stabilizer generator moves an endpoint");
        GeneratorId label = GeneratorId::named("e" + std::to_string(edge.first) +
                                               "_" + std::to_string(edge.second) +
                                               ".g" + std::to_string(k + 1));
        sys.generators.push_back({label, m, factor(m)});
      }
      out.emplace(edge, std::move(sys));
    }
  }
  return out;
}

Word stabilizer_word_e1(const IntMatrix& m) {
  if (m.dim() != 3) throw std::invalid_argument("stabilizer_word_e1 expects a 3x3 matrix");
  if (!is_level2(m)) throw std::invalid_argument("matrix is not level 2");
  for (int r = 0; r < 3; ++r)
    if (m.at(r, 0) != (r == 0 ? 1 : 0))
      throw std::invalid_argument("matrix does not fix e_1");

  // m = diag(1, A') * [[1, r],[0, I]]; factor the block, then the top row
  IntMatrix block(2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) block.at(r, c) = m.at(r + 1, c + 1);
  Word block_word = factor(block);
  Word lifted;
  for (const auto& l : block_word.letters()) lifted.append({rho_shift(l.sym, 1), l.exp});
  Word w = lifted;
  if (m.at(0, 1) != 0)
    w.append({GeneratorId::E(1, 2), static_cast<long long>(m.at(0, 1) / 2)});
  if (m.at(0, 2) != 0)
    w.append({GeneratorId::E(1, 3), static_cast<long long>(m.at(0, 2) / 2)});
  w = free_reduce(w);
  if (!(evaluate(w, 3) == m)) throw std::logic_error("stabilizer factorization failed");
  return w;
}

}  // namespace gamma2
