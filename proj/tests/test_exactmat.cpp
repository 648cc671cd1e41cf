#include <doctest.h>

#include <random>

#include "gamma2/generator.hpp"
#include "gamma2/int_matrix.hpp"
#include "gamma2/mod2_matrix.hpp"

using namespace gamma2;

namespace {

IntMatrix m2(int a, int b, int c, int d) {
  IntMatrix m(2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

// seeded random level-2 element as a product of generators
IntMatrix random_level2(std::mt19937_64& rng, int n, int len) {
  IntMatrix a = IntMatrix::identity(n);
  std::uniform_int_distribution<int> idx(1, n);
  std::uniform_int_distribution<int> coin(0, 4);
  for (int k = 0; k < len; ++k) {
    int i = idx(rng), j = idx(rng);
    if (coin(rng) == 0 || i == j) {
      a = a * generator_matrix(GeneratorId::F(i), n);
    } else {
      IntMatrix e = generator_matrix(GeneratorId::E(i, j), n);
      a = a * (coin(rng) % 2 ? e : e.inverse());
    }
  }
  return a;
}

}  // namespace

TEST_CASE("generator matrices") {
  CHECK(generator_matrix(GeneratorId::E(1, 2), 2) == m2(1, 2, 0, 1));
  CHECK(generator_matrix(GeneratorId::F(1), 2) == m2(-1, 0, 0, 1));
  CHECK(generator_matrix(GeneratorId::T(2, 1), 2) == m2(1, 0, 1, 1));

  IntMatrix s1 = generator_matrix(GeneratorId::S(1), 3);
  CHECK(s1 == IntMatrix::from_text("0,1,0;1,0,0;0,0,1"));

  CHECK_THROWS_AS(generator_matrix(GeneratorId::E(1, 1), 2), std::invalid_argument);
  CHECK_THROWS_AS(generator_matrix(GeneratorId::E(1, 3), 2), std::invalid_argument);
  CHECK_THROWS_AS(generator_matrix(GeneratorId::S(3), 3), std::invalid_argument);
  CHECK_THROWS_AS(generator_matrix(GeneratorId::named("q"), 2), std::invalid_argument);
}

TEST_CASE("generator determinants") {
  for (int n = 2; n <= 5; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i != j) {
          CHECK(generator_matrix(GeneratorId::E(i, j), n).det() == 1);
          CHECK(generator_matrix(GeneratorId::T(i, j), n).det() == 1);
        }
        if (i == j) {
          CHECK(generator_matrix(GeneratorId::F(i), n).det() == -1);
          if (i < n) CHECK(generator_matrix(GeneratorId::S(i), n).det() == -1);
        }
      }
}

TEST_CASE("is_level2") {
  CHECK(is_level2(IntMatrix::identity(3)));
  CHECK(is_level2(m2(1, 2, 0, -1)));
  CHECK_FALSE(is_level2(m2(1, 1, 0, 1)));
  CHECK_FALSE(is_level2(m2(3, 0, 0, 1)));  // det 3

  // subgroup closure on random products
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    IntMatrix a = random_level2(rng, 3, 8);
    IntMatrix b = random_level2(rng, 3, 8);
    CHECK(is_level2(a));
    CHECK(is_level2(a * b));
    CHECK(is_level2(a.inverse()));
  }
}

TEST_CASE("mod2_image") {
  CHECK(mod2_image(generator_matrix(GeneratorId::E(1, 2), 2)) == Mod2Matrix::identity(2));
  Mod2Matrix x(2);
  x.set(0, 0, true);
  x.set(0, 1, true);
  x.set(1, 1, true);
  CHECK(mod2_image(m2(1, -1, 0, 1)) == x);
  Mod2Matrix swp(2);
  swp.set(0, 1, true);
  swp.set(1, 0, true);
  CHECK(mod2_image(m2(0, 1, 1, 0)) == swp);

  // homomorphism into the mod-2 group
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 25; ++trial) {
    IntMatrix a = random_level2(rng, 3, 6) * generator_matrix(GeneratorId::T(1, 2), 3);
    IntMatrix b = random_level2(rng, 3, 6) * generator_matrix(GeneratorId::S(2), 3);
    CHECK(mod2_image(a * b) == mod2_image(a) * mod2_image(b));
  }
}

TEST_CASE("enumerate_gl_mod2") {
  auto order = [](int n) {  // prod (2^n - 2^k)
    long long p = 1;
    for (int k = 0; k < n; ++k) p *= (1LL << n) - (1LL << k);
    return p;
  };
  for (int n = 1; n <= 4; ++n)
    CHECK(enumerate_gl_mod2(n).size() == static_cast<size_t>(order(n)));
  CHECK(enumerate_gl_mod2(2).size() == 6);
  CHECK(enumerate_gl_mod2(3).size() == 168);
  CHECK_THROWS_AS(enumerate_gl_mod2(5), std::invalid_argument);
}

TEST_CASE("exact matrix arithmetic") {
  IntMatrix f1 = generator_matrix(GeneratorId::F(1), 2);
  CHECK((f1 * f1).is_identity());

  IntMatrix g4 = m2(-1, 0, 2, 1), g3 = m2(1, 0, 2, 1);
  CHECK(g4 * g3.inverse() == m2(-1, 0, 0, 1));
  CHECK(m2(1, 2, 0, 1).inverse() == m2(1, -2, 0, 1));
  CHECK_THROWS_AS(m2(2, 0, 0, 2).inverse(), std::domain_error);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix a = random_level2(rng, 4, 10);
    CHECK((a * a.inverse()).is_identity());
    IntMatrix b = random_level2(rng, 4, 10);
    CHECK(a.det() * b.det() == (a * b).det());
    CHECK(a.pow(3) == a * a * a);
    CHECK(a.pow(-2) == (a.inverse() * a.inverse()));
    CHECK(a.pow(0).is_identity());
  }
}

TEST_CASE("matrix text format") {
  CHECK(m2(1, 2, 0, -1).to_text() == "1,2;0,-1");
  CHECK(IntMatrix::from_text("1,2;0,-1") == m2(1, 2, 0, -1));
  CHECK(IntMatrix::from_text(" 1 , 2 ; 0 , -1 ") == m2(1, 2, 0, -1));
  CHECK_THROWS_AS(IntMatrix::from_text("1,2;3"), std::invalid_argument);
  CHECK_THROWS_AS(IntMatrix::from_text("1,x;0,1"), std::invalid_argument);
  CHECK_THROWS_AS(IntMatrix::from_text("1,,2;0,1"), std::invalid_argument);

  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    IntMatrix a = random_level2(rng, 3, 12);
    CHECK(IntMatrix::from_text(a.to_text()) == a);
  }
}

TEST_CASE("bareiss determinant handles zero pivots") {
  CHECK(IntMatrix::from_text("0,1;1,0").det() == -1);
  CHECK(IntMatrix::from_text("0,0,1;0,1,0;1,0,0").det() == -1);
  CHECK(IntMatrix::from_text("1,2;2,4").det() == 0);
  CHECK(IntMatrix::from_text("0,2;0,4").det() == 0);
}
