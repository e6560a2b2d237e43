#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tjurina/qlinalg.hpp"

using namespace tjurina;

namespace {

QMatrix random_matrix(int m, int n, std::mt19937_64& rng) {
  QMatrix a(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      a.at(i, j) = Rational(static_cast<int>(rng() % 11) - 5,
                            1 + static_cast<int>(rng() % 3));
  return a;
}

QVector random_vector(int n, std::mt19937_64& rng) {
  QVector v(static_cast<std::size_t>(n));
  for (auto& c : v) c = Rational(static_cast<int>(rng() % 11) - 5);
  return v;
}

bool is_zero_vector(const QVector& v) {
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    int m = 1 + static_cast<int>(rng() % 4);
    int n = 1 + static_cast<int>(rng() % 4);
    QMatrix a = random_matrix(m, n, rng);
    QSubspace ker = QSubspace::kernel(a);
    QSubspace im = QSubspace::column_space(a);
    CHECK(a.rank() + ker.dim() == n);
    CHECK(im.dim() == a.rank());
    // Every kernel vector is annihilated; every A*x lands in the column space.
    for (const auto& k : ker.basis()) CHECK(is_zero_vector(a * k));
    QVector x = random_vector(n, rng);
    CHECK(im.contains(a * x));
  }
}

TEST_CASE("rref idempotence and pivot shape") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 20; ++trial) {
    QMatrix a = random_matrix(3, 5, rng);
    QMatrix b = a;
    std::vector<int> pivots = b.rref_in_place();
    QMatrix c = b;
    std::vector<int> pivots2 = c.rref_in_place();
    CHECK(b == c);
    CHECK(pivots == pivots2);
    // Pivot columns carry unit vectors.
    for (std::size_t r = 0; r < pivots.size(); ++r)
      for (int i = 0; i < b.rows(); ++i)
        CHECK(b.at(i, pivots[r]) == (i == static_cast<int>(r) ? 1 : 0));
  }
}

TEST_CASE("inverse and determinant") {
  std::mt19937_64 rng(7);
  int invertible_seen = 0;
  for (int trial = 0; trial < 30; ++trial) {
    QMatrix a = random_matrix(3, 3, rng);
    Rational det = a.determinant();
    if (det == 0) {
      CHECK(a.rank() < 3);
      CHECK_THROWS_AS(a.inverse(), DomainError);
      continue;
    }
    ++invertible_seen;
    QMatrix inv = a.inverse();
    QMatrix prod = a * inv;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(prod.at(i, j) == (i == j ? 1 : 0));
    // det(A^{-1}) = 1/det(A); det is multiplicative on a sample.
    CHECK(inv.determinant() == Rational(1) / det);
    QMatrix b = random_matrix(3, 3, rng);
    CHECK((a * b).determinant() == det * b.determinant());
  }
  CHECK(invertible_seen > 10);
}

TEST_CASE("solve returns particular solutions exactly when consistent") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    QMatrix a = random_matrix(3, 4, rng);
    QVector x = random_vector(4, rng);
    QVector b = a * x;
    auto sol = solve(a, b);
    REQUIRE(sol.has_value());
    CHECK(a * *sol == b);
  }
  // An inconsistent system: x = 0 and x = 1.
  QMatrix a(2, 1);
  a.at(0, 0) = 1;
  a.at(1, 0) = 1;
  QVector rhs = {Rational(0), Rational(1)};
  CHECK_FALSE(solve(a, rhs).has_value());
}

TEST_CASE("subspace span canonicalizes") {
  // Same plane from different spanning sets compares equal.
  QVector e1 = {Rational(1), Rational(0), Rational(0)};
  QVector e2 = {Rational(0), Rational(1), Rational(0)};
  QVector d1 = {Rational(1), Rational(1), Rational(0)};
  QVector d2 = {Rational(2), Rational(-1), Rational(0)};
  QSubspace s1 = QSubspace::span({e1, e2}, 3);
  QSubspace s2 = QSubspace::span({d1, d2}, 3);
  CHECK(s1 == s2);
  CHECK(s1.dim() == 2);
  CHECK(s1.contains(d1));
  QVector off = {Rational(0), Rational(0), Rational(1)};
  CHECK_FALSE(s1.contains(off));
  CHECK_THROWS_AS(QSubspace::span({e1}, 2), DomainError);
}

TEST_CASE("sum and intersection dimension formula") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 4;
    QSubspace a = QSubspace::column_space(random_matrix(n, 2, rng));
    QSubspace b = QSubspace::column_space(random_matrix(n, 2, rng));
    QSubspace s = sum(a, b);
    QSubspace i = intersect(a, b);
    CHECK(a.dim() + b.dim() == s.dim() + i.dim());
    CHECK(s.contains(a));
    CHECK(s.contains(b));
    CHECK(a.contains(i));
    CHECK(b.contains(i));
  }
}

TEST_CASE("complement_in splits a containing space") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    QSubspace small = QSubspace::column_space(random_matrix(4, 2, rng));
    QSubspace big = QSubspace::full_space(4);
    QSubspace comp = small.complement_in(big);
    CHECK(small.dim() + comp.dim() == big.dim());
    CHECK(intersect(small, comp).dim() == 0);
    CHECK(sum(small, comp) == big);
  }
  QSubspace line = QSubspace::span({{Rational(1), Rational(0)}}, 2);
  QSubspace other = QSubspace::span({{Rational(0), Rational(1)}}, 2);
  CHECK_THROWS_AS(other.complement_in(line), DomainError);
}

TEST_CASE("zero and full space conventions") {
  QSubspace z = QSubspace::zero_space(3);
  QSubspace f = QSubspace::full_space(3);
  CHECK(z.dim() == 0);
  CHECK(f.dim() == 3);
  CHECK(f.contains(z));
  CHECK(z.contains(QSubspace::zero_space(3)));
  CHECK(z.complement_in(f) == f);
}
