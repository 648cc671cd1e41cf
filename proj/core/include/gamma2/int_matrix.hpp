#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace gamma2 {

/// Exact arbitrary-precision integer. Entry magnitudes grow exponentially in
/// word length, so fixed-width types are not an option here.
using Int = boost::multiprecision::cpp_int;

/// Square integer matrix with exact arithmetic. Immutable by convention:
/// operations return fresh values.
class IntMatrix {
 public:
  explicit IntMatrix(int n);
  static IntMatrix identity(int n);

  int dim() const { return n_; }

  /// 0-based entry access.
  Int& at(int r, int c) { return a_[static_cast<size_t>(r) * n_ + c]; }
  const Int& at(int r, int c) const { return a_[static_cast<size_t>(r) * n_ + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;
  bool operator<(const IntMatrix& rhs) const;  // lexicographic, for ordered containers

  /// Fraction-free (Bareiss) determinant.
  Int det() const;

  /// Exact inverse; requires det = +-1, throws std::domain_error otherwise.
  IntMatrix inverse() const;

  IntMatrix pow(long long e) const;

  bool is_identity() const;

  std::vector<Int> column(int c) const;

  /// Row-by-';', entry-by-',' text form, e.g. "1,2;0,-1".
  std::string to_text() const;
  static IntMatrix from_text(const std::string& text);

 private:
  int n_;
  std::vector<Int> a_;
};

}  // namespace gamma2
