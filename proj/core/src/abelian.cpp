#include "gamma2/abelian.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gamma2 {

std::string AbelianInvariants::to_string() const {
  std::ostringstream os;
  os << "Z^" << free_rank;
  for (const auto& d : torsion) os << " x Z/" << d;
  return os.str();
}

namespace {

Int iabs(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> m) {
  const size_t rows = m.size();
  const size_t cols = rows ? m[0].size() : 0;
  const size_t k = std::min(rows, cols);
  std::vector<Int> diag;

  size_t t = 0;
  while (t < k) {
    // pick the nonzero entry of least magnitude in the remaining block
    size_t pr = t, pc = t;
    bool found = false;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (!found || iabs(m[i][j]) < iabs(m[pr][pc]))) {
          pr = i;
          pc = j;
          found = true;
        }
    if (!found) break;
    std::swap(m[t], m[pr]);
    for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);

    bool clean = true;
    for (size_t i = t + 1; i < rows; ++i)
      if (m[i][t] != 0) {
        Int q = m[i][t] / m[t][t];
        for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
    for (size_t j = t + 1; j < cols; ++j)
      if (m[t][j] != 0) {
        Int q = m[t][j] / m[t][t];
        for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
    if (!clean) continue;  // smaller remainders appeared, re-pivot

    // divisibility fix: pivot must divide the whole remaining block
    bool fixed = false;
    for (size_t i = t + 1; i < rows && !fixed; ++i)
      for (size_t j = t + 1; j < cols && !fixed; ++j)
        if (m[i][j] % m[t][t] != 0) {
          for (size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
          fixed = true;
        }
    if (fixed) continue;

    diag.push_back(iabs(m[t][t]));
    ++t;
  }
  diag.resize(k, Int(0));
  return diag;
}

AbelianInvariants abelianization_invariants(const Presentation& p) {
  std::map<GeneratorId, size_t> index;
  for (size_t i = 0; i < p.generators.size(); ++i) index[p.generators[i]] = i;
  std::vector<std::vector<Int>> m(p.relators.size(),
                                  std::vector<Int>(p.generators.size(), Int(0)));
  for (size_t r = 0; r < p.relators.size(); ++r)
    for (const auto& l : p.relators[r].letters()) m[r][index.at(l.sym)] += l.exp;

  std::vector<Int> diag = smith_diagonal(std::move(m));
  AbelianInvariants out;
  size_t rank = 0;
  for (const auto& d : diag)
    if (d != 0) {
      ++rank;
      if (d >= 2) out.torsion.push_back(d);
    }
  out.free_rank = static_cast<int>(p.generators.size() - rank);
  return out;
}

}  // namespace gamma2
