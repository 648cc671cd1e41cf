#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gamma2 {

/// Square bit-matrix over Z_2; one word per row, dimension capped at 64.
class Mod2Matrix {
 public:
  explicit Mod2Matrix(int n);
  static Mod2Matrix identity(int n);

  int dim() const { return n_; }

  bool get(int r, int c) const { return (rows_[r] >> c) & 1u; }
  void set(int r, int c, bool v);

  Mod2Matrix operator*(const Mod2Matrix& rhs) const;
  bool operator==(const Mod2Matrix& rhs) const = default;
  bool operator<(const Mod2Matrix& rhs) const;

  bool invertible() const;

  std::string to_text() const;

 private:
  int n_;
  std::vector<std::uint64_t> rows_;
};

/// All invertible n x n matrices over Z_2, deduplicated. Brute force, so n is
/// capped at 4.
std::vector<Mod2Matrix> enumerate_gl_mod2(int n);

}  // namespace gamma2
