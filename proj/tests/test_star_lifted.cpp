#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "delstar/star_analytic.hpp"
#include "delstar/star_lifted.hpp"

using namespace delstar;

namespace {

PointVec pv(std::initializer_list<Coord> v) { return PointVec(v); }

/* Z^2 in the skewed basis b1 = e1, b2 = 9 e1 + e2; the unit square then
 * spans 10 basis units in the first coordinate. */
Lattice skewed_z2() {
  Lattice l;
  l.dim = 2;
  l.gram = QMat(2, 2);
  l.gram.at(0, 0) = 1;
  l.gram.at(0, 1) = 9;
  l.gram.at(1, 0) = 9;
  l.gram.at(1, 1) = 82;
  return l;
}

void check_same_star(const DeloneStar& a, const DeloneStar& b) {
  REQUIRE(a.cells.size() == b.cells.size());
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    CHECK(a.cells[i].vertices == b.cells[i].vertices);
    CHECK(a.cells[i].center == b.cells[i].center);
    CHECK(a.cells[i].sq_radius == b.cells[i].sq_radius);
  }
}

}  // namespace

TEST_CASE("cubic lattices give one cube class") {
  for (int d = 1; d <= 3; ++d) {
    auto star = delone_star_lifted(named_lattice(Family::Zd, d), 2);
    REQUIRE(star.cells.size() == 1);
    const auto& c = star.cells[0];
    CHECK(c.vertices.size() == (std::size_t{1} << d));
    CHECK(c.sq_radius == Rational(d, 4));
    CHECK(c.dim == d);
    CHECK(star.provenance == Provenance::Lifted);
  }
  auto z2 = delone_star_lifted(named_lattice(Family::Zd, 2), 2);
  std::vector<PointVec> square{pv({0, 0}), pv({0, 1}), pv({1, 0}), pv({1, 1})};
  CHECK(z2.cells[0].vertices == square);
  CHECK(z2.cells[0].center == QVec{Rational(1, 2), Rational(1, 2)});
}

TEST_CASE("window too small to reach a neighbor") {
  CHECK_THROWS_WITH_AS(delone_star_lifted(named_lattice(Family::Zd, 2), 1),
                       "window too small", WindowError);
}

TEST_CASE("skewed basis needs a wide window") {
  Lattice skew = skewed_z2();
  CHECK_THROWS_AS(delone_star_lifted(skew, 2), WindowError);
  CHECK_THROWS_AS(delone_star_lifted_auto(skew, 4), WindowError);
  auto star = delone_star_lifted_auto(skew, 16);
  REQUIRE(star.cells.size() == 1);
  CHECK(star.cells[0].vertices.size() == 4);
  CHECK(star.cells[0].sq_radius == Rational(1, 2));
}

TEST_CASE("oversized windows are rejected") {
  CHECK_THROWS_WITH_AS(delone_star_lifted(named_lattice(Family::Dstar, 8), 16),
                       "window too large for dimension", std::runtime_error);
}

TEST_CASE("seed cell of the square lattice") {
  auto cell = lifted_seed_cell(named_lattice(Family::Zd, 2), 2);
  CHECK(cell.vertices.size() == 4);
  CHECK(cell.sq_radius == Rational(1, 2));
  CHECK(cell.dim == 2);
}

TEST_CASE("agrees with the closed-form stars for Dstar") {
  for (int d = 4; d <= 6; ++d) {
    auto lifted = delone_star_lifted_auto(named_lattice(Family::Dstar, d), 16);
    auto closed = delone_star_analytic(Family::Dstar, d);
    check_same_star(lifted, closed);
    CHECK(lifted.provenance == Provenance::Lifted);
    CHECK(closed.provenance == Provenance::Analytic);
  }
}

TEST_CASE("agrees with the closed-form stars for Astar") {
  for (int d = 2; d <= 4; ++d) {
    auto lifted = delone_star_lifted_auto(named_lattice(Family::Astar, d), 16);
    auto closed = delone_star_analytic(Family::Astar, d);
    check_same_star(lifted, closed);
  }
}
