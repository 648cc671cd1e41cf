#pragma once

#include <array>
#include <optional>

#include "gamma2/presentation.hpp"
#include "gamma2/verifier_report.hpp"

namespace gamma2 {

/// One cell of the rewriting grid: the correction bar(w*a_i)^-1 * w * a_i for
/// an ambient letter w and coset representative a_i, with its name over the
/// subgroup alphabet g1..g4 (or nothing when the value is the identity).
struct RewriteCell {
  Letter w;
  int coset = 0;
  IntMatrix value{2};
  std::optional<Letter> symbol;
};

/// Schreier transversal and coset action for the index-6 level-2 subgroup of
/// the ambient 2x2 group. The transversal is the fixed six-element list from
/// which the rewriting grid is defined; it is not recomputed.
class CosetSystem {
 public:
  CosetSystem();

  const Presentation& ambient() const { return ambient_; }
  /// Representatives a_0..a_5 (identity first).
  const std::vector<IntMatrix>& transversal() const { return transversal_; }
  const std::vector<Word>& transversal_words() const { return transversal_words_; }

  /// Index of the unique representative with the same mod-2 image.
  int bar(const IntMatrix& a) const;

  /// Letters indexing the action/grid columns: x, x^-1, y, y^-1, z.
  static const std::array<Letter, 5>& column_letters();

  /// Coset reached from coset i by left-multiplying with column letter c.
  int action(int column, int coset) const;

  /// The correction cell for an arbitrary ambient letter at a coset.
  RewriteCell cell(const Letter& w, int coset) const;

  /// The full 6x5 grid in transversal-row, column-letter order.
  std::vector<std::vector<RewriteCell>> table() const;

 private:
  Presentation ambient_;
  std::vector<IntMatrix> transversal_;
  std::vector<Word> transversal_words_;
  std::array<std::array<int, 6>, 5> action_{};
  IntMatrix letter_matrix(const Letter& l) const;
};

CosetSystem build_coset_system();

/// Convenience accessor for the published 30-cell grid.
std::vector<std::vector<RewriteCell>> schreier_table();

/// Rewrite an ambient relator r at coset i into a word over g1..g4 (the
/// product of correction cells, freely reduced). Throws std::invalid_argument
/// when r does not evaluate to the identity.
Word rewrite_relator(const CosetSystem& cs, const Word& r, int coset);
Word rewrite_relator(const Word& r, int coset);

/// Full pipeline from the ambient presentation down to the four-generator
/// level-2 presentation, with every intermediate stage kept for inspection.
struct Derivation {
  CosetSystem cosets;
  std::vector<std::vector<Word>> s_words;  // [ambient relator][coset]
  std::vector<Word> intermediate;          // deduplicated relators over g1..g4
  std::vector<Word> substituted;           // after g -> E/F substitution
  Presentation result;                     // simplified, evaluation attached
  Report comparison;                       // structural match against gamma2_presentation(2)
};

Derivation derive_gamma2_2();

}  // namespace gamma2
