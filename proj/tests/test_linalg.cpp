#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "moufang/linalg.hpp"
#include "moufang/prng.hpp"

using namespace moufang;

namespace {

Rational random_rational(SplitMix64& rng) {
  long num = static_cast<long>(rng.below(41)) - 20;
  long den = static_cast<long>(rng.below(6)) + 1;
  return Rational(num, den);
}

Matrix random_matrix(SplitMix64& rng, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = random_rational(rng);
  return m;
}

Vector random_vector(SplitMix64& rng, std::size_t n) {
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i)
    v.at(i) = random_rational(rng);
  return v;
}

} // namespace

TEST_CASE("commutator identity cases") {
  SplitMix64 rng(11);
  Matrix a = random_matrix(rng, 4);
  CHECK(commutator(a, a).is_zero());
  CHECK(commutator(Matrix::identity(4), a).is_zero());

  // elementary matrices: [E12, E21] = diag(1, -1)
  Matrix e12(2, 2), e21(2, 2);
  e12.at(0, 1) = Rational(1);
  e21.at(1, 0) = Rational(1);
  Matrix expected(2, 2);
  expected.at(0, 0) = Rational(1);
  expected.at(1, 1) = Rational(-1);
  CHECK(commutator(e12, e21) == expected);
}

TEST_CASE("commutator shape errors") {
  Matrix a(2, 3), b(3, 2), c(3, 3);
  CHECK_THROWS_AS(commutator(a, a), DimensionError);
  CHECK_THROWS_AS(commutator(a, b), DimensionError);
  CHECK_THROWS_AS(commutator(c, Matrix(2, 2)), DimensionError);
}

TEST_CASE("commutator is antisymmetric on random matrices") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix a = random_matrix(rng, 5);
    Matrix b = random_matrix(rng, 5);
    CHECK(commutator(a, b) == -commutator(b, a));
  }
}

TEST_CASE("jacobi identity of matrix commutators") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix a = random_matrix(rng, 4);
    Matrix b = random_matrix(rng, 4);
    Matrix c = random_matrix(rng, 4);
    Matrix sum = commutator(commutator(a, b), c) +
                 commutator(commutator(b, c), a) +
                 commutator(commutator(c, a), b);
    CHECK(sum.is_zero());
  }
}

TEST_CASE("contract_bilinear zero and antisymmetric cases") {
  SplitMix64 rng(41);
  Tensor3 t(3, 3, 3);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 3; ++c)
        t.at(a, b, c) = random_rational(rng);

  Vector y = random_vector(rng, 3);
  CHECK(contract_bilinear(t, Vector::zero(3), y).is_zero());
  CHECK(contract_bilinear(t, y, Vector::zero(3)).is_zero());
  CHECK_THROWS_AS(contract_bilinear(t, Vector::zero(4), y), DimensionError);

  // antisymmetric tensor annihilates the diagonal
  Tensor3 anti(3, 3, 3);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 3; ++c) {
        Rational v = random_rational(rng);
        anti.at(a, b, c) += v;
        anti.at(a, c, b) -= v;
      }
  for (int trial = 0; trial < 10; ++trial) {
    Vector x = random_vector(rng, 3);
    CHECK(contract_bilinear(anti, x, x).is_zero());
  }
}

TEST_CASE("contract_bilinear is linear in each argument") {
  SplitMix64 rng(43);
  Tensor3 t(4, 4, 4);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t c = 0; c < 4; ++c)
        t.at(a, b, c) = random_rational(rng);

  for (int trial = 0; trial < 10; ++trial) {
    Vector x = random_vector(rng, 4);
    Vector xp = random_vector(rng, 4);
    Vector y = random_vector(rng, 4);
    Rational lambda = random_rational(rng);
    Vector lhs = contract_bilinear(t, x + lambda * xp, y);
    Vector rhs = contract_bilinear(t, x, y) +
                 lambda * contract_bilinear(t, xp, y);
    CHECK(lhs == rhs);
    Vector lhs2 = contract_bilinear(t, y, x + lambda * xp);
    Vector rhs2 = contract_bilinear(t, y, x) +
                  lambda * contract_bilinear(t, y, xp);
    CHECK(lhs2 == rhs2);
  }
}

TEST_CASE("contract_trilinear zero slots and shape errors") {
  SplitMix64 rng(47);
  Tensor4 t(2, 2, 2, 2);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t d = 0; d < 2; ++d)
          t.at(a, b, c, d) = random_rational(rng);
  Vector y = random_vector(rng, 2), z = random_vector(rng, 2);
  CHECK(contract_trilinear(t, Vector::zero(2), y, z).is_zero());
  CHECK(contract_trilinear(t, y, Vector::zero(2), z).is_zero());
  CHECK(contract_trilinear(t, y, z, Vector::zero(2)).is_zero());
  CHECK_THROWS_AS(contract_trilinear(t, Vector::zero(3), y, z),
                  DimensionError);
}

TEST_CASE("rank and exact solve") {
  Matrix a(3, 3);
  a.at(0, 0) = Rational(1);
  a.at(0, 1) = Rational(2);
  a.at(1, 1) = Rational(1, 3);
  a.at(2, 2) = Rational(-5);
  CHECK(rank(a) == 3);

  Matrix singular(2, 2);
  singular.at(0, 0) = Rational(1);
  singular.at(0, 1) = Rational(2);
  singular.at(1, 0) = Rational(2);
  singular.at(1, 1) = Rational(4);
  CHECK(rank(singular) == 1);

  Vector rhs(3);
  rhs.at(0) = Rational(5);
  rhs.at(1) = Rational(1);
  rhs.at(2) = Rational(10);
  auto x = solve_exact(a, rhs);
  REQUIRE(x.has_value());
  CHECK(a.apply(*x) == rhs);

  // inconsistent system
  Vector bad(2);
  bad.at(0) = Rational(1);
  Matrix zero2(2, 2);
  CHECK(!solve_exact(zero2, bad).has_value());
}

TEST_CASE("matrix apply matches matrix-vector product by definition") {
  SplitMix64 rng(53);
  Matrix m = random_matrix(rng, 4);
  Vector v = random_vector(rng, 4);
  Vector w = m.apply(v);
  for (std::size_t i = 0; i < 4; ++i) {
    Rational s;
    for (std::size_t j = 0; j < 4; ++j)
      s += m(i, j) * v[j];
    CHECK(w[i] == s);
  }
}
