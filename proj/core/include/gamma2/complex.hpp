#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gamma2/presentation.hpp"

namespace gamma2 {

/// Finite simplicial complex with explicit vertex vectors. Simplices are
/// stored per dimension as sorted lists of 0-based vertex indices; the
/// construction keeps the set downward closed.
struct SimplicialComplex {
  enum class Ring { Z, Z2 };
  Ring ring = Ring::Z;
  std::vector<std::vector<int>> vertices;
  std::vector<std::vector<std::vector<int>>> simplices;  // [dim][which]

  size_t count(int dim) const {
    return dim >= 0 && dim < static_cast<int>(simplices.size())
               ? simplices[static_cast<size_t>(dim)].size()
               : 0;
  }
};

/// The mod-2 basis complex: vertices are the nonzero vectors of Z_2^n
/// (ordered by weight, then by index set), and a k-set is a simplex iff it is
/// linearly independent. Brute force, n capped at 4.
SimplicialComplex build_B_mod2(int n);

/// The quotient complex for the level-2 action: the full simplex on the
/// standard basis e_1..e_n.
SimplicialComplex orbit_complex(int n);

/// True iff `a` is level 2 and every vector of `delta` occurs among the
/// columns of `a`.
bool is_extension(const IntMatrix& a, const std::vector<std::vector<Int>>& delta);

struct StabilizerGenerator {
  GeneratorId label;
  IntMatrix matrix;
  std::optional<Word> ef_word;  // expression over E/F evaluating to `matrix`
};

/// Generating system (and optional presentation) of the stabilizer of a
/// vertex or an edge, with the fixed vectors recorded.
struct StabilizerSystem {
  std::vector<std::vector<Int>> fixed;
  std::vector<StabilizerGenerator> generators;
  std::optional<Presentation> presentation;
};

/// The seven vertex vectors of the n=3 mod-2 complex, in order.
const std::vector<std::vector<Int>>& b3_vertex_vectors();

/// Conjugator X_i with X_i e_1 = v_i (the identity for i = 1).
IntMatrix vertex_conjugator(int vertex_index);

/// Stabilizer system of vertex v_i at n = 3. The v_1 system is the
/// stabilizer presentation over honest E/F symbols; the others are its
/// conjugation transports with per-vertex relabeled generators.
StabilizerSystem vertex_stabilizer(int vertex_index, int n = 3);

/// Conjugate every generator by x (fixed vectors move along); relators are
/// carried over symbol-wise, E/F expressions are recomputed by factorization.
StabilizerSystem conjugation_transport(const IntMatrix& x, const StabilizerSystem& sys);

/// Generating triples of all 21 edge stabilizers at n = 3, keyed by the
/// (1-based) endpoint pair. Each triple is transported from the base edge and
/// verified against the transcribed matrices and the fixing contract.
std::map<std::pair<int, int>, StabilizerSystem> edge_stabilizer_data();

/// The nine transport groups of edges sharing a stabilizer triple (six
/// three-edge families and three singletons), with their conjugators.
struct EdgeFamily {
  std::vector<std::pair<int, int>> edges;
  IntMatrix conjugator{3};
};
const std::vector<EdgeFamily>& edge_families();

/// Express a level-2 matrix fixing e_1 at n = 3 as a word over the six
/// v_1-stabilizer generators E(1,2), E(1,3), E(2,3), E(3,2), F(2), F(3).
Word stabilizer_word_e1(const IntMatrix& m);

}  // namespace gamma2
