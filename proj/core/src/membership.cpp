#include "gamma2/membership.hpp"

#include <limits>
#include <stdexcept>

#include "gamma2/presentation.hpp"

namespace gamma2 {

namespace {

Int iabs(const Int& x) { return x < 0 ? Int(-x) : x; }

long long to_ll(const Int& x) {
  if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
    throw std::overflow_error("letter exponent exceeds the representable range");
  return static_cast<long long>(x);
}

// u minimizing |a + 2u*b|; ties resolved toward the nonnegative remainder
Int best_multiple(const Int& a, const Int& b) {
  Int num = -a, den = 2 * b;
  Int q = num / den;  // truncated
  Int lo = (num - q * den != 0 && (num < 0) != (den < 0)) ? Int(q - 1) : q;  // floor
  Int u0 = lo, u1 = lo + 1;
  Int r0 = a + 2 * u0 * b, r1 = a + 2 * u1 * b;
  if (iabs(r1) < iabs(r0) || (iabs(r1) == iabs(r0) && r1 >= 0 && r0 < 0)) return u1;
  return u0;
}

}  // namespace

Word reduce_vector(const std::vector<Int>& v0, int t, ReductionTrace* trace) {
  const int n = static_cast<int>(v0.size());
  if (t < 1 || t > n) throw std::invalid_argument("pivot index out of range");
  for (int i = 1; i <= n; ++i) {
    bool odd = v0[i - 1] % 2 != 0;
    if ((i == t) != odd)
      throw std::invalid_argument("vector parity: pivot must be odd, the rest even");
  }

  std::vector<Int> v = v0;
  std::vector<Letter> applied;
  auto apply_E = [&](int i, int j, Int u) {
    if (u == 0) return;
    v[i - 1] += 2 * u * v[j - 1];
    applied.push_back({GeneratorId::E(i, j), to_ll(u)});
  };
  auto off_metric = [&]() {
    Int s = 0;
    for (int i = 1; i <= n; ++i)
      if (i != t) s += iabs(v[i - 1]);
    return s;
  };

  while (true) {
    int pick = 0;
    for (int i = 1; i <= n; ++i) {
      if (i == t || v[i - 1] == 0) continue;
      if (pick == 0 || iabs(v[i - 1]) > iabs(v[pick - 1])) pick = i;
    }
    if (pick == 0) break;
    if (iabs(v[t - 1]) < iabs(v[pick - 1])) {
      apply_E(pick, t, best_multiple(v[pick - 1], v[t - 1]));
      if (trace) {
        trace->steps.push_back(applied.back());
        trace->metrics.push_back(off_metric());
      }
    } else {
      apply_E(t, pick, best_multiple(v[t - 1], v[pick - 1]));
      if (trace) trace->steps.push_back(applied.back());
    }
  }
  if (v[t - 1] == -1) {
    v[t - 1] = 1;
    applied.push_back({GeneratorId::F(t), 1});
  }
  if (v[t - 1] != 1) throw std::invalid_argument("column cannot be reduced (gcd > 1)");

  // ops were applied on the left in sequence, so the acting product is the
  // reverse of the application order
  Word w;
  for (auto it = applied.rbegin(); it != applied.rend(); ++it) w.append(*it);
  return free_reduce(w);
}

Word factor(const IntMatrix& a, std::vector<ReductionTrace>* traces) {
  if (!is_level2(a)) throw std::domain_error("matrix is not in the level-2 subgroup");
  const int n = a.dim();
  IntMatrix m = a;
  std::vector<Letter> applied;

  auto lmul_E = [&](int i, int j, Int u) {
    if (u == 0) return;
    for (int c = 0; c < n; ++c) m.at(i - 1, c) += 2 * u * m.at(j - 1, c);
    applied.push_back({GeneratorId::E(i, j), to_ll(u)});
  };
  auto lmul_F = [&](int i) {
    for (int c = 0; c < n; ++c) m.at(i - 1, c) = -m.at(i - 1, c);
    applied.push_back({GeneratorId::F(i), 1});
  };

  for (int t = 1; t <= n; ++t) {
    ReductionTrace* trace = nullptr;
    if (traces) {
      traces->emplace_back();
      trace = &traces->back();
    }
    auto off_metric = [&]() {
      Int s = 0;
      for (int i = t + 1; i <= n; ++i) s += iabs(m.at(i - 1, t - 1));
      return s;
    };
    // Euclidean alternation between the pivot and the rows below it; row
    // operations with source column >= t leave the fixed columns alone
    while (true) {
      int pick = 0;
      for (int i = t + 1; i <= n; ++i) {
        if (m.at(i - 1, t - 1) == 0) continue;
        if (pick == 0 || iabs(m.at(i - 1, t - 1)) > iabs(m.at(pick - 1, t - 1))) pick = i;
      }
      if (pick == 0) break;
      const Int piv = m.at(t - 1, t - 1);
      const Int off = m.at(pick - 1, t - 1);
      if (iabs(piv) < iabs(off)) {
        lmul_E(pick, t, best_multiple(off, piv));
        if (trace) {
          trace->steps.push_back(applied.back());
          trace->metrics.push_back(off_metric());
        }
      } else {
        lmul_E(t, pick, best_multiple(piv, off));
        if (trace) trace->steps.push_back(applied.back());
      }
    }
    if (m.at(t - 1, t - 1) == -1) lmul_F(t);
    if (m.at(t - 1, t - 1) != 1) throw std::logic_error("pivot did not reduce to 1");
    // entries above the pivot are even; clear them against the pivot row
    for (int i = 1; i < t; ++i) {
      const Int e = m.at(i - 1, t - 1);
      if (e != 0) lmul_E(i, t, Int(-e / 2));
    }
  }
  if (!m.is_identity()) throw std::logic_error("reduction did not reach the identity");

  // Op_k ... Op_1 * a = I, hence a = inv(Op_1) inv(Op_2) ... inv(Op_k)
  Word w;
  for (const auto& l : applied) {
    if (l.sym.kind == GeneratorId::Kind::F)
      w.append(l);
    else
      w.append({l.sym, -l.exp});
  }
  return free_reduce(w);
}

Word factor_gl2(const IntMatrix& a) {
  if (a.dim() != 2) throw std::invalid_argument("factor_gl2 expects a 2x2 matrix");
  Int d = a.det();
  if (d != 1 && d != -1) throw std::domain_error("matrix is not unimodular");

  GeneratorId X = GeneratorId::named("x");
  GeneratorId Y = GeneratorId::named("y");
  GeneratorId Z = GeneratorId::named("z");

  Word prefix;
  IntMatrix m = a;
  if (d == -1) {
    // z swaps the rows and z^2 = 1, so a = z * (z*a) with det(z*a) = +1
    prefix.append({Z, 1});
    std::swap(m.at(0, 0), m.at(1, 0));
    std::swap(m.at(0, 1), m.at(1, 1));
  }

  std::vector<Letter> applied;
  auto lmul_x = [&](Int k) {  // row1 -= k*row2
    if (k == 0) return;
    m.at(0, 0) -= k * m.at(1, 0);
    m.at(0, 1) -= k * m.at(1, 1);
    applied.push_back({X, to_ll(k)});
  };
  auto lmul_y = [&](Int k) {  // row2 += k*row1
    if (k == 0) return;
    m.at(1, 0) += k * m.at(0, 0);
    m.at(1, 1) += k * m.at(0, 1);
    applied.push_back({Y, to_ll(k)});
  };

  // Euclid on the first column
  while (m.at(1, 0) != 0) {
    const Int top = m.at(0, 0);
    const Int bot = m.at(1, 0);
    if (top == 0) {
      lmul_x(Int(-bot));  // makes the corner bot^2 = 1
    } else if (iabs(top) > iabs(bot)) {
      lmul_x(Int(top / bot));
    } else {
      lmul_y(Int(-(bot / top)));
    }
  }
  if (m.at(0, 0) == -1) {
    // (xy)^3 = -I
    for (int r = 0; r < 3; ++r) {
      lmul_x(Int(1));
      lmul_y(Int(1));
    }
    // lmul_x(1) is row1 -= row2 and lmul_y(1) is row2 += row1; together they
    // realize the left product (yx)^3 = -I on m
  }
  if (m.at(0, 0) != 1 || m.at(1, 1) != 1) throw std::logic_error("gl2 reduction failed");
  lmul_x(m.at(0, 1));

  Word w = prefix;
  for (const auto& l : applied) w.append({l.sym, -l.exp});
  return free_reduce(w);
}

}  // namespace gamma2
