#include <doctest.h>

#include <set>

#include "gamma2/assembly.hpp"

using namespace gamma2;

namespace {

std::set<IntMatrix> named_generator_matrices(int n) {
  std::set<IntMatrix> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) out.insert(generator_matrix(GeneratorId::E(i, j), n));
  for (int i = 1; i <= n; ++i) out.insert(generator_matrix(GeneratorId::F(i), n));
  return out;
}

std::set<Word> nf_set(const std::vector<Word>& ws) {
  std::set<Word> out;
  for (const auto& w : ws) out.insert(cyclic_normal_form(w));
  return out;
}

}  // namespace

TEST_CASE("assembly from the seven-vertex complex") {
  Assembly a = brown_assemble(3);
  CHECK(a.vertex_systems == 7);
  CHECK(a.edge_systems == 21);
  CHECK(a.raw_generators == 42);

  // every relator evaluates to the identity
  for (const auto& r : a.presentation.relators)
    CHECK(a.presentation.eval(r).is_identity());

  // after identification the nine named generator matrices are all present
  std::set<IntMatrix> got;
  for (const auto& g : a.presentation.generators) got.insert(a.presentation.matrix_of(g));
  for (const auto& m : named_generator_matrices(3)) CHECK(got.count(m) == 1);

  // identified symbols carry the named ids
  std::set<GeneratorId> gens(a.presentation.generators.begin(),
                             a.presentation.generators.end());
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j) CHECK(gens.count(GeneratorId::E(i, j)) == 1);
  for (int i = 1; i <= 3; ++i) CHECK(gens.count(GeneratorId::F(i)) == 1);

  // plan bookkeeping: spanning tree from the first vertex, based triangles
  CHECK(a.plan.tree_edges.size() == 6);
  for (const auto& e : a.plan.tree_edges) CHECK(e.first == 1);
  CHECK(a.plan.edges.size() == 21);
  CHECK(a.plan.triangles.size() == 28);
  for (const auto& [edge, w] : a.plan.edge_words) CHECK(w.empty());
}

TEST_CASE("assembly from basis vertices at n = 4") {
  Assembly a = brown_assemble(4);
  CHECK(a.vertex_systems == 4);
  CHECK(a.edge_systems == 6);

  for (const auto& r : a.presentation.relators)
    CHECK(a.presentation.eval(r).is_identity());

  // identification collapses everything onto the sixteen named generators
  std::set<IntMatrix> got;
  for (const auto& g : a.presentation.generators) {
    CHECK(g.kind != GeneratorId::Kind::Named);
    got.insert(a.presentation.matrix_of(g));
  }
  CHECK(got == named_generator_matrices(4));

  // and the relator set coincides with the canonical presentation
  Presentation canonical = gamma2_presentation(4);
  CHECK(a.presentation.relators.size() == canonical.relators.size());
  CHECK(nf_set(a.presentation.relators) == nf_set(canonical.relators));

  CHECK(a.plan.tree_edges.size() == 3);
  CHECK(a.plan.edges.size() == 6);
  CHECK(a.plan.triangles.size() == 4);
}

TEST_CASE("assembled presentations serialize and parse back") {
  Assembly a = brown_assemble(3);
  Presentation back = parse_presentation(serialize(a.presentation, PresentationFormat::json),
                                         PresentationFormat::json);
  CHECK(back.generators == a.presentation.generators);
  CHECK(back.relators == a.presentation.relators);
  CHECK(back.n == a.presentation.n);
}

TEST_CASE("assembly rejects too-small dimensions") {
  CHECK_THROWS_AS(brown_assemble(2), std::invalid_argument);
}
