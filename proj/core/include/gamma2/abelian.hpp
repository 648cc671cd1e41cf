#pragma once

#include <string>
#include <vector>

#include "gamma2/presentation.hpp"

namespace gamma2 {

/// Invariants of the abelianized group: free rank plus the elementary divisor
/// chain d1 | d2 | ... (each >= 2).
struct AbelianInvariants {
  int free_rank = 0;
  std::vector<Int> torsion;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
  std::string to_string() const;
};

/// Smith normal form diagonal of an arbitrary integer matrix, as nonnegative
/// entries in a divisibility chain (zeros trailing). Standard pivoting over
/// arbitrary-precision integers, no modular shortcuts.
std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> m);

/// Smith normal form of the relator-by-generator exponent-sum matrix.
AbelianInvariants abelianization_invariants(const Presentation& p);

}  // namespace gamma2
