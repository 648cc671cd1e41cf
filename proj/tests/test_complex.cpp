#include <doctest.h>

#include <random>
#include <set>

#include "gamma2/complex.hpp"
#include "gamma2/membership.hpp"

using namespace gamma2;

namespace {

std::vector<Int> apply_vec(const IntMatrix& m, const std::vector<Int>& v) {
  std::vector<Int> out(v.size(), Int(0));
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c)
      out[static_cast<size_t>(r)] += m.at(r, c) * v[static_cast<size_t>(c)];
  return out;
}

// independent count of linearly independent k-subsets of nonzero vectors in
// Z_2^n: prod_{i<k} (2^n - 2^i) ordered tuples, divided by k!
long long independent_subsets(int n, int k) {
  long long tuples = 1;
  for (int i = 0; i < k; ++i) tuples *= (1LL << n) - (1LL << i);
  long long fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  return tuples / fact;
}

}  // namespace

TEST_CASE("mod-2 basis complex at n = 3") {
  SimplicialComplex x = build_B_mod2(3);
  CHECK(x.vertices.size() == 7);
  CHECK(x.count(0) == 7);
  CHECK(x.count(1) == 21);
  CHECK(x.count(2) == 28);

  // vertex order matches the tabulated v_1..v_7
  const auto& vv = b3_vertex_vectors();
  REQUIRE(vv.size() == 7);
  for (size_t i = 0; i < 7; ++i)
    for (size_t c = 0; c < 3; ++c)
      CHECK(Int(x.vertices[i][c]) == vv[i][c]);

  // the non-simplex triples, exactly
  std::set<std::vector<int>> tris(x.simplices[2].begin(), x.simplices[2].end());
  std::set<std::vector<int>> excluded;
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b)
      for (int c = b + 1; c < 7; ++c)
        if (!tris.count({a, b, c})) excluded.insert({a, b, c});
  // 1-based: {1,2,4},{1,3,5},{1,6,7},{2,3,6},{2,5,7},{3,4,7},{4,5,6}
  std::set<std::vector<int>> expected = {{0, 1, 3}, {0, 2, 4}, {0, 5, 6}, {1, 2, 5},
                                         {1, 4, 6}, {2, 3, 6}, {3, 4, 5}};
  CHECK(excluded == expected);
}

TEST_CASE("mod-2 basis complex counts across dimensions") {
  for (int n = 1; n <= 4; ++n) {
    SimplicialComplex x = build_B_mod2(n);
    CHECK(x.vertices.size() == (1u << n) - 1);
    for (int k = 1; k <= n; ++k)
      CHECK(x.count(k - 1) == static_cast<size_t>(independent_subsets(n, k)));
  }
  CHECK_THROWS_AS(build_B_mod2(5), std::invalid_argument);
}

TEST_CASE("orbit complex is the full simplex") {
  SimplicialComplex x = orbit_complex(4);
  CHECK(x.count(0) == 4);
  CHECK(x.count(1) == 6);
  CHECK(x.count(2) == 4);
  CHECK(x.count(3) == 1);

  SimplicialComplex y = orbit_complex(2);
  CHECK(y.count(0) == 2);
  CHECK(y.count(1) == 1);

  // the identity extends every simplex
  for (int d = 0; d < 4; ++d)
    for (const auto& s : x.simplices[static_cast<size_t>(d)]) {
      std::vector<std::vector<Int>> delta;
      for (int i : s) {
        std::vector<Int> v;
        for (int e : x.vertices[static_cast<size_t>(i)]) v.push_back(e);
        delta.push_back(v);
      }
      CHECK(is_extension(IntMatrix::identity(4), delta));
    }
}

TEST_CASE("extension predicate") {
  CHECK(is_extension(IntMatrix::identity(2), {{1, 0}, {0, 1}}));
  CHECK(is_extension(generator_matrix(GeneratorId::E(1, 2), 2), {{1, 0}}));
  CHECK_FALSE(is_extension(IntMatrix::identity(2), {{1, 2}}));
  CHECK_FALSE(is_extension(IntMatrix::from_text("1,1;0,1"), {{1, 0}}));  // not level 2
  CHECK_THROWS_AS(is_extension(IntMatrix::identity(2), {{1, 0, 0}}), std::invalid_argument);
}

TEST_CASE("vertex stabilizers") {
  StabilizerSystem v1 = vertex_stabilizer(1, 3);
  CHECK(v1.generators.size() == 6);
  REQUIRE(v1.presentation.has_value());
  CHECK(v1.presentation->relators.size() == 16);

  for (int i = 1; i <= 7; ++i) {
    StabilizerSystem sys = vertex_stabilizer(i, 3);
    const auto& v = b3_vertex_vectors()[static_cast<size_t>(i - 1)];
    CHECK(sys.fixed == std::vector<std::vector<Int>>{v});
    for (const auto& g : sys.generators) {
      CHECK(is_level2(g.matrix));
      CHECK(apply_vec(g.matrix, v) == v);
      REQUIRE(g.ef_word.has_value());
      CHECK(evaluate(*g.ef_word, 3) == g.matrix);
    }
    REQUIRE(sys.presentation.has_value());
    for (const auto& r : sys.presentation->relators)
      CHECK(sys.presentation->eval(r).is_identity());
  }
  CHECK_THROWS_AS(vertex_stabilizer(8, 3), std::invalid_argument);
  CHECK_THROWS_AS(vertex_stabilizer(1, 4), std::invalid_argument);
}

TEST_CASE("conjugation transport") {
  StabilizerSystem v1 = vertex_stabilizer(1, 3);
  StabilizerSystem same = conjugation_transport(IntMatrix::identity(3), v1);
  for (size_t k = 0; k < v1.generators.size(); ++k)
    CHECK(same.generators[k].matrix == v1.generators[k].matrix);

  // S1 E23 S1^-1 = E13
  IntMatrix s1 = generator_matrix(GeneratorId::S(1), 3);
  CHECK(s1 * generator_matrix(GeneratorId::E(2, 3), 3) * s1.inverse() ==
        generator_matrix(GeneratorId::E(1, 3), 3));

  IntMatrix s2s1 = generator_matrix(GeneratorId::S(2), 3) * s1;
  StabilizerSystem moved = conjugation_transport(s2s1, v1);
  std::vector<Int> e3 = {0, 0, 1};
  CHECK(moved.fixed == std::vector<std::vector<Int>>{e3});
  for (const auto& g : moved.generators) CHECK(apply_vec(g.matrix, e3) == e3);
  for (const auto& r : moved.presentation->relators)
    CHECK(moved.presentation->eval(r).is_identity());

  CHECK_THROWS_AS(conjugation_transport(IntMatrix::from_text("2,0;0,2"), v1),
                  std::invalid_argument);
}

TEST_CASE("edge stabilizer data") {
  auto data = edge_stabilizer_data();
  REQUIRE(data.size() == 21);

  // first tabulated triple
  std::set<IntMatrix> base;
  for (const auto& g : data.at({1, 2}).generators) base.insert(g.matrix);
  std::set<IntMatrix> want = {IntMatrix::from_text("1,0,2;0,1,0;0,0,1"),
                              IntMatrix::from_text("1,0,0;0,1,2;0,0,1"),
                              IntMatrix::from_text("1,0,0;0,1,0;0,0,-1")};
  CHECK(base == want);

  // second group is the coordinate-swap image of the first
  IntMatrix s2 = generator_matrix(GeneratorId::S(2), 3);
  std::set<IntMatrix> moved;
  for (const auto& m : want) moved.insert(s2 * m * s2.inverse());
  std::set<IntMatrix> got13;
  for (const auto& g : data.at({1, 3}).generators) got13.insert(g.matrix);
  CHECK(got13 == moved);

  for (const auto& [edge, sys] : data) {
    REQUIRE(sys.fixed.size() == 2);
    REQUIRE(sys.generators.size() == 3);
    for (const auto& g : sys.generators) {
      CHECK(is_level2(g.matrix));
      for (const auto& v : sys.fixed) CHECK(apply_vec(g.matrix, v) == v);
    }
  }

  const auto& fams = edge_families();
  REQUIRE(fams.size() == 9);
  size_t edges_covered = 0;
  for (const auto& f : fams) edges_covered += f.edges.size();
  CHECK(edges_covered == 21);
}

TEST_CASE("factorization over the e_1 stabilizer alphabet") {
  std::mt19937_64 rng(51);
  StabilizerSystem v1 = vertex_stabilizer(1, 3);
  std::uniform_int_distribution<size_t> pick(0, v1.generators.size() - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix m = IntMatrix::identity(3);
    for (int k = 0; k < trial % 9; ++k) {
      const IntMatrix& g = v1.generators[pick(rng)].matrix;
      m = m * (sign(rng) ? g : g.inverse());
    }
    Word w = stabilizer_word_e1(m);
    CHECK(evaluate(w, 3) == m);
    // only the six stabilizer symbols occur
    for (const auto& l : w.letters()) {
      bool row1 = l.sym.kind == GeneratorId::Kind::E && l.sym.i == 1;
      bool inner_e = l.sym.kind == GeneratorId::Kind::E && l.sym.i >= 2 && l.sym.j >= 2;
      bool inner_f = l.sym.kind == GeneratorId::Kind::F && l.sym.i >= 2;
      CHECK((row1 || inner_e || inner_f));
    }
  }
  CHECK_THROWS_AS(stabilizer_word_e1(generator_matrix(GeneratorId::E(2, 1), 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(stabilizer_word_e1(IntMatrix::from_text("1,1;0,1")), std::invalid_argument);
}
