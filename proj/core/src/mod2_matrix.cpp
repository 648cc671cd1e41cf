#include "gamma2/mod2_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace gamma2 {

Mod2Matrix::Mod2Matrix(int n) : n_(n), rows_(n, 0) {
  if (n < 1 || n > 64) throw std::invalid_argument("mod-2 dimension out of range [1,64]");
}

Mod2Matrix Mod2Matrix::identity(int n) {
  Mod2Matrix m(n);
  for (int i = 0; i < n; ++i) m.rows_[i] = std::uint64_t{1} << i;
  return m;
}

void Mod2Matrix::set(int r, int c, bool v) {
  if (v)
    rows_[r] |= std::uint64_t{1} << c;
  else
    rows_[r] &= ~(std::uint64_t{1} << c);
}

Mod2Matrix Mod2Matrix::operator*(const Mod2Matrix& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("dimension mismatch in mod-2 product");
  Mod2Matrix out(n_);
  for (int i = 0; i < n_; ++i) {
    std::uint64_t acc = 0;
    std::uint64_t row = rows_[i];
    for (int k = 0; k < n_; ++k)
      if ((row >> k) & 1u) acc ^= rhs.rows_[k];
    out.rows_[i] = acc;
  }
  return out;
}

bool Mod2Matrix::operator<(const Mod2Matrix& rhs) const {
  if (n_ != rhs.n_) return n_ < rhs.n_;
  return rows_ < rhs.rows_;
}

bool Mod2Matrix::invertible() const {
  std::vector<std::uint64_t> rows = rows_;
  int rank = 0;
  for (int c = 0; c < n_ && rank < n_; ++c) {
    int piv = -1;
    for (int i = rank; i < n_; ++i)
      if ((rows[i] >> c) & 1u) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (int i = 0; i < n_; ++i)
      if (i != rank && ((rows[i] >> c) & 1u)) rows[i] ^= rows[rank];
    ++rank;
  }
  return rank == n_;
}

std::string Mod2Matrix::to_text() const {
  std::ostringstream os;
  for (int i = 0; i < n_; ++i) {
    if (i) os << ';';
    for (int j = 0; j < n_; ++j) {
      if (j) os << ',';
      os << (get(i, j) ? '1' : '0');
    }
  }
  return os.str();
}

std::vector<Mod2Matrix> enumerate_gl_mod2(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("enumerate_gl_mod2 supports n in [1,4]");
  std::vector<Mod2Matrix> out;
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Mod2Matrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if ((bits >> (i * n + j)) & 1u) m.set(i, j, true);
    if (m.invertible()) out.push_back(m);
  }
  return out;
}

}  // namespace gamma2
