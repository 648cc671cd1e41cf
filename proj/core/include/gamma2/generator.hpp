#pragma once

#include <compare>
#include <string>

#include "gamma2/int_matrix.hpp"
#include "gamma2/mod2_matrix.hpp"

namespace gamma2 {

/// Symbolic generator. E(i,j) and F(i) are the level-2 generators; T(i,j) and
/// S(i) are the ambient conjugators; Named covers everything else (coset
/// symbols, transported stabilizer generators). Indices are 1-based.
struct GeneratorId {
  enum class Kind { E, F, T, S, Named };

  Kind kind = Kind::Named;
  int i = 0;
  int j = 0;
  std::string label;

  static GeneratorId E(int i, int j) { return {Kind::E, i, j, {}}; }
  static GeneratorId F(int i) { return {Kind::F, i, 0, {}}; }
  static GeneratorId T(int i, int j) { return {Kind::T, i, j, {}}; }
  static GeneratorId S(int i) { return {Kind::S, i, 0, {}}; }
  static GeneratorId named(std::string label) { return {Kind::Named, 0, 0, std::move(label)}; }

  friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
  friend std::strong_ordering operator<=>(const GeneratorId& a, const GeneratorId& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    if (auto c = a.i <=> b.i; c != 0) return c;
    if (auto c = a.j <=> b.j; c != 0) return c;
    return a.label <=> b.label;
  }

  std::string to_string() const;
};

/// The exact matrix of a generator symbol at dimension n.
/// E_ij = I + 2*unit(i,j), F_i flips the sign of the i-th diagonal entry,
/// T_ij = I + unit(i,j), S_i swaps coordinates i and i+1.
IntMatrix generator_matrix(const GeneratorId& g, int n);

/// True iff det = +-1, diagonal entries odd, off-diagonal entries even.
bool is_level2(const IntMatrix& a);

/// Entrywise reduction mod 2.
Mod2Matrix mod2_image(const IntMatrix& a);

}  // namespace gamma2
