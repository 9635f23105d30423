#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "delstar/lattice.hpp"
#include "delstar/linalg.hpp"

using namespace delstar;

namespace {

QMat from_rows(const std::vector<std::vector<long>>& rows) {
  QMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("rank examples") {
  CHECK(rank_q(QMat::identity(3)) == 3);
  CHECK(rank_q(from_rows({{1, 2, 3}, {1, 2, 3}})) == 1);
  // Signed incidence matrix of a triangle graph: columns are edges ab, bc, ca.
  CHECK(rank_q(from_rows({{-1, 0, 1}, {1, -1, 0}, {0, 1, -1}})) == 2);
  CHECK(rank_q(QMat(3, 3)) == 0);
}

TEST_CASE("rank equals transpose rank on random instances") {
  std::mt19937_64 rng(12345);
  for (int t = 0; t < 40; ++t) {
    int r = 1 + static_cast<int>(rng() % 6), c = 1 + static_cast<int>(rng() % 6);
    QMat m(r, c);
    for (auto& x : m.a) x = Rational(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
    CHECK(rank_q(m) == rank_q(transpose(m)));
  }
}

TEST_CASE("solve examples") {
  auto x = solve_q(QMat::identity(2), QVec{Rational(1, 2), Rational(-3)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(1, 2));
  CHECK((*x)[1] == Rational(-3));

  CHECK(!solve_q(from_rows({{1, 1}, {1, 1}}), QVec{Rational(1), Rational(2)}).has_value());

  auto y = solve_q(from_rows({{2, 0}, {0, 4}}), QVec{Rational(1), Rational(1)});
  REQUIRE(y.has_value());
  CHECK((*y)[0] == Rational(1, 2));
  CHECK((*y)[1] == Rational(1, 4));
}

TEST_CASE("solve on random nonsingular instances") {
  std::mt19937_64 rng(777);
  int solved = 0;
  while (solved < 100) {
    int n = 1 + static_cast<int>(rng() % 12);
    QMat m(n, n);
    for (auto& v : m.a) v = Rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4));
    if (det_q(m) == 0) continue;
    QVec b(n);
    for (auto& v : b) v = Rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
    auto x = solve_q(m, b);
    REQUIRE(x.has_value());
    CHECK(mul_vec(m, *x) == b);
    ++solved;
  }
}

TEST_CASE("underdetermined solve sets free variables to zero") {
  auto x = solve_q(from_rows({{1, 1, 0}}), QVec{Rational(5)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 5);
  CHECK((*x)[1] == 0);
  CHECK((*x)[2] == 0);
}

TEST_CASE("inverse examples") {
  CHECK(inverse_q(QMat::identity(4)) == QMat::identity(4));
  QMat two(1, 1);
  two.at(0, 0) = 2;
  CHECK(inverse_q(two).at(0, 0) == Rational(1, 2));

  auto d4 = named_lattice(Family::D, 4).gram;
  CHECK(mul(d4, inverse_q(d4)) == QMat::identity(4));

  CHECK_THROWS_WITH_AS(inverse_q(from_rows({{1, 1}, {1, 1}})), "singular matrix", std::invalid_argument);
}

TEST_CASE("determinant") {
  CHECK(det_q(from_rows({{2, 1}, {1, 2}})) == 3);
  CHECK(det_q(from_rows({{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("positive definiteness") {
  CHECK(is_positive_definite(named_lattice(Family::D, 4).gram));
  CHECK(is_positive_definite(named_lattice(Family::Dstar, 6).gram));
  CHECK(is_positive_definite(named_lattice(Family::E8, 8).gram));
  CHECK(!is_positive_definite(QMat(2, 2)));
  CHECK(!is_positive_definite(from_rows({{1, 2}, {2, 1}})));
  CHECK_THROWS_AS(is_positive_definite(from_rows({{1, 2}, {0, 1}})), std::invalid_argument);
}

TEST_CASE("ldlt reconstructs the input") {
  for (auto fam : {Family::Dstar, Family::Astar, Family::E7star}) {
    int d = fam == Family::Dstar ? 6 : (fam == Family::Astar ? 4 : 7);
    QMat g = named_lattice(fam, d).gram;
    auto f = ldlt(g);
    QMat dm(g.rows, g.rows);
    for (int i = 0; i < g.rows; ++i) dm.at(i, i) = f.d[i];
    CHECK(mul(mul(f.l, dm), transpose(f.l)) == g);
    for (const auto& di : f.d) CHECK(di > 0);
  }
  CHECK_THROWS_AS(ldlt(from_rows({{0, 0}, {0, 1}})), std::invalid_argument);
}

TEST_CASE("nullspace") {
  auto ns = nullspace_q(from_rows({{1, 1, 0}, {0, 0, 1}}));
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][0] == -1);
  CHECK(ns[0][1] == 1);
  CHECK(ns[0][2] == 0);
  CHECK(nullspace_q(QMat::identity(3)).empty());
}
