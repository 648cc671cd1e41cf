#pragma once

#include <vector>

#include "gamma2/word.hpp"

namespace gamma2 {

/// Record of the Euclidean reduction: the letters applied (as left
/// multiplications) and the size measure after each off-pivot step. The
/// measure is the sum of absolute values of the off-pivot entries and
/// strictly decreases across recorded steps.
struct ReductionTrace {
  std::vector<Letter> steps;
  std::vector<Int> metrics;
};

/// Factor a level-2 matrix into a word over E(i,j) and F(i), column by
/// column. Deterministic; evaluate(result, n) == a. Throws std::domain_error
/// when a is not level 2. Per-column traces are appended when `traces` is
/// non-null.
Word factor(const IntMatrix& a, std::vector<ReductionTrace>* traces = nullptr);

/// Reduce a vector with odd pivot at position t (1-based) and even entries
/// elsewhere to e_t: the returned word satisfies evaluate(word, n) * v = e_t.
Word reduce_vector(const std::vector<Int>& v, int t, ReductionTrace* trace = nullptr);

/// Factor an arbitrary unimodular 2x2 matrix over the ambient alphabet
/// {x, y, z}; evaluate under gl2z_presentation() reproduces the input.
Word factor_gl2(const IntMatrix& a);

}  // namespace gamma2
