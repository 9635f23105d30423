#include "delstar/enumerate.hpp"

#include <stdexcept>

namespace delstar {

namespace {

struct Walker {
  const Ldlt& f;
  const QVec& center;
  int d;
  PointVec z;
  QVec y;  // z - center, filled from the top index down
  std::vector<PointVec> out;

  /* u_i = z_i - a with a = center_i - sum_{j>i} l_ji (z_j - center_j); the
   * admissible z_i form one contiguous integer range around a. */
  void level(int i, const Rational& budget) {
    if (i < 0) {
      out.push_back(z);
      return;
    }
    Rational s = 0;
    for (int j = i + 1; j < d; ++j)
      if (f.l.at(j, i) != 0) s += f.l.at(j, i) * y[j];
    Rational a = center[i] - s;
    Int fl = floor_q(a);
    if (abs(fl) > (Int(1) << 48)) throw std::runtime_error("points_in_ellipsoid: bound too large");
    Coord z0 = fl.convert_to<Coord>();
    auto descend = [&](Coord zi) -> bool {
      Rational u = Rational(zi) - a;
      Rational used = f.d[i] * u * u;
      if (used > budget) return false;
      z[i] = zi;
      y[i] = Rational(zi) - center[i];
      level(i - 1, budget - used);
      return true;
    };
    for (Coord zi = z0; descend(zi); --zi) {}
    for (Coord zi = z0 + 1; descend(zi); ++zi) {}
  }
};

}  // namespace

std::vector<PointVec> points_in_ellipsoid(const QMat& g, const QVec& center,
                                          const Rational& sq_radius) {
  if (g.rows != g.cols || static_cast<int>(center.size()) != g.rows)
    throw std::invalid_argument("points_in_ellipsoid: shape mismatch");
  if (sq_radius < 0) return {};
  Ldlt f = ldlt(g);
  Walker w{f, center, g.rows, PointVec(g.rows), QVec(g.rows), {}};
  w.level(g.rows - 1, sq_radius);
  return std::move(w.out);
}

}  // namespace delstar
