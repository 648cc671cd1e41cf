#include "gamma2/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace gamma2 {

IntMatrix::IntMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, Int(0)) {
  if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("dimension mismatch in matrix product");
  IntMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < n_; ++j) out.at(i, j) += x * rhs.at(k, j);
    }
  return out;
}

bool IntMatrix::operator<(const IntMatrix& rhs) const {
  if (n_ != rhs.n_) return n_ < rhs.n_;
  return a_ < rhs.a_;
}

Int IntMatrix::det() const {
  // Bareiss fraction-free elimination; all divisions are exact.
  IntMatrix m = *this;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n_ - 1; ++k) {
    if (m.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n_; ++i)
        if (m.at(i, k) != 0) { piv = i; break; }
      if (piv < 0) return 0;
      for (int j = 0; j < n_; ++j) std::swap(m.at(k, j), m.at(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n_; ++i) {
      for (int j = k + 1; j < n_; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign * m.at(n_ - 1, n_ - 1);
}

IntMatrix IntMatrix::inverse() const {
  Int d = det();
  if (d != 1 && d != -1)
    throw std::domain_error("inverse requires det = +-1, got " + d.str());
  if (n_ == 1) {
    IntMatrix out(1);
    out.at(0, 0) = d;
    return out;
  }
  // adjugate route: cofactor determinants are Bareiss-exact
  IntMatrix out(n_);
  IntMatrix minor(n_ - 1);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) {
      for (int i = 0, mi = 0; i < n_; ++i) {
        if (i == r) continue;
        for (int j = 0, mj = 0; j < n_; ++j) {
          if (j == c) continue;
          minor.at(mi, mj) = at(i, j);
          ++mj;
        }
        ++mi;
      }
      Int cof = minor.det();
      if ((r + c) % 2 != 0) cof = -cof;
      out.at(c, r) = cof * d;  // adjugate transposes; multiply by det^-1 = det
    }
  return out;
}

IntMatrix IntMatrix::pow(long long e) const {
  IntMatrix base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e)
                               : static_cast<unsigned long long>(e);
  IntMatrix acc = identity(n_);
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool IntMatrix::is_identity() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::vector<Int> IntMatrix::column(int c) const {
  std::vector<Int> v(n_);
  for (int i = 0; i < n_; ++i) v[i] = at(i, c);
  return v;
}

std::string IntMatrix::to_text() const {
  std::ostringstream os;
  for (int i = 0; i < n_; ++i) {
    if (i) os << ';';
    for (int j = 0; j < n_; ++j) {
      if (j) os << ',';
      os << at(i, j);
    }
  }
  return os.str();
}

IntMatrix IntMatrix::from_text(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  std::vector<std::vector<Int>> rows;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t semi = s.find(';', pos);
    std::string row = s.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
    std::vector<Int> entries;
    size_t rp = 0;
    while (rp <= row.size()) {
      size_t comma = row.find(',', rp);
      std::string tok = row.substr(rp, comma == std::string::npos ? std::string::npos : comma - rp);
      if (tok.empty()) throw std::invalid_argument("matrix text: empty entry");
      try {
        entries.emplace_back(tok);
      } catch (const std::exception&) {
        throw std::invalid_argument("matrix text: bad integer '" + tok + "'");
      }
      if (comma == std::string::npos) break;
      rp = comma + 1;
    }
    rows.push_back(std::move(entries));
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  size_t n = rows.size();
  for (const auto& r : rows)
    if (r.size() != n) throw std::invalid_argument("matrix text: not square");
  IntMatrix m(static_cast<int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  return m;
}

}  // namespace gamma2
