#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gamma2/word.hpp"

namespace gamma2 {

/// A finite presentation: ordered generators, relator words, and an optional
/// evaluation into exact matrices of dimension n. When an evaluation is
/// attached, every generator has a matrix and every relator is expected to
/// evaluate to the identity (the verifier checks that contract).
struct Presentation {
  int n = 0;  // evaluation dimension; 0 when no evaluation is attached
  std::vector<GeneratorId> generators;
  std::vector<Word> relators;
  std::map<GeneratorId, IntMatrix> evaluation;

  bool has_evaluation() const { return !evaluation.empty(); }
  const IntMatrix& matrix_of(const GeneratorId& g) const;
  IntMatrix eval(const Word& w) const;
};

/// The level-2 congruence subgroup presentation at dimension n: generators
/// E(i,j) for i != j and F(i), with the four relator families, enumerated in
/// a fixed canonical order and deduplicated by cyclic normal form.
Presentation gamma2_presentation(int n);

/// Sizes of the relator families of gamma2_presentation(n), in emission
/// order: involutions, squared pairs, triple-index commutators, the long
/// triple commutators, and disjoint commutators.
std::vector<size_t> gamma2_relator_family_sizes(int n);

/// <x, y, z | xyxy^-1x^-1y^-1, (xy)^6, z^2, xzyz> with the standard 2x2
/// evaluation; the ambient group for the coset rewriting pipeline.
Presentation gl2z_presentation();

/// Index shift that embeds a dimension-(n-1) generator symbol into the
/// stabilizer of e_t at dimension n (indices >= t move up by one).
GeneratorId rho_shift(const GeneratorId& g, int t);

/// Presentation of the stabilizer of e_t inside the level-2 group at
/// dimension n, built from a presentation `inner` of the level-2 group at
/// dimension n-1: generators E(t,i) for i != t plus the shifted inner
/// generators, with the commutator, lifted-inner and mixed relator families.
Presentation stabilizer_presentation(int n, int t, const Presentation& inner);

enum class PresentationFormat { json, gap, plain };

std::string serialize(const Presentation& p, PresentationFormat f);

/// Inverse of serialize for json and plain (gap is write-only). Reattaches
/// the canonical evaluation when all generators are indexed symbols and a
/// dimension is present. Throws ParseError on malformed input.
Presentation parse_presentation(const std::string& text, PresentationFormat f);

}  // namespace gamma2
