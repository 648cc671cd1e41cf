#include "gamma2/generator.hpp"

#include <stdexcept>

namespace gamma2 {

std::string GeneratorId::to_string() const {
  switch (kind) {
    case Kind::E: return "E(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case Kind::F: return "F(" + std::to_string(i) + ")";
    case Kind::T: return "T(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case Kind::S: return "S(" + std::to_string(i) + ")";
    case Kind::Named: return label;
  }
  return label;
}

IntMatrix generator_matrix(const GeneratorId& g, int n) {
  auto check_index = [n](int idx, const char* what) {
    if (idx < 1 || idx > n)
      throw std::invalid_argument(std::string(what) + " index out of range at dimension " +
                                  std::to_string(n));
  };
  switch (g.kind) {
    case GeneratorId::Kind::E: {
      check_index(g.i, "E row");
      check_index(g.j, "E column");
      if (g.i == g.j) throw std::invalid_argument("E(i,j) requires i != j");
      IntMatrix m = IntMatrix::identity(n);
      m.at(g.i - 1, g.j - 1) = 2;
      return m;
    }
    case GeneratorId::Kind::F: {
      check_index(g.i, "F");
      IntMatrix m = IntMatrix::identity(n);
      m.at(g.i - 1, g.i - 1) = -1;
      return m;
    }
    case GeneratorId::Kind::T: {
      check_index(g.i, "T row");
      check_index(g.j, "T column");
      if (g.i == g.j) throw std::invalid_argument("T(i,j) requires i != j");
      IntMatrix m = IntMatrix::identity(n);
      m.at(g.i - 1, g.j - 1) = 1;
      return m;
    }
    case GeneratorId::Kind::S: {
      if (g.i < 1 || g.i > n - 1)
        throw std::invalid_argument("S(i) requires 1 <= i <= n-1");
      IntMatrix m = IntMatrix::identity(n);
      m.at(g.i - 1, g.i - 1) = 0;
      m.at(g.i, g.i) = 0;
      m.at(g.i - 1, g.i) = 1;
      m.at(g.i, g.i - 1) = 1;
      return m;
    }
    case GeneratorId::Kind::Named:
      throw std::invalid_argument("named symbol '" + g.label + "' has no canonical matrix");
  }
  throw std::logic_error("unreachable");
}

bool is_level2(const IntMatrix& a) {
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool odd = a.at(i, j) % 2 != 0;
      if ((i == j) != odd) return false;
    }
  Int d = a.det();
  return d == 1 || d == -1;
}

Mod2Matrix mod2_image(const IntMatrix& a) {
  const int n = a.dim();
  Mod2Matrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(i, j, a.at(i, j) % 2 != 0);
  return m;
}

}  // namespace gamma2
