#include "delstar/cell.hpp"

#include <algorithm>
#include <stdexcept>

#include "delstar/enumerate.hpp"

namespace delstar {

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Analytic: return "analytic";
    case Provenance::Lifted: return "lifted";
    case Provenance::Subdivided: return "subdivided";
  }
  return "?";
}

std::optional<Provenance> provenance_from_name(const std::string& s) {
  if (s == "analytic") return Provenance::Analytic;
  if (s == "lifted") return Provenance::Lifted;
  if (s == "subdivided") return Provenance::Subdivided;
  return std::nullopt;
}

std::pair<QVec, Rational> circumsphere(const std::vector<PointVec>& vertices, const QMat& g) {
  int n = static_cast<int>(vertices.size());
  if (n < 2) throw std::invalid_argument("circumsphere: need at least 2 vertices");
  int d = g.rows;
  const PointVec& v0 = vertices[0];
  // c = v0 + sum_j t_j (v_j - v0); equidistance to v0 gives, for each i,
  //   2 (v_i - v0)^T G (c - v0) = |v_i - v0|_G^2.
  std::vector<QVec> gd(n - 1, QVec(d, Rational(0)));  // G (v_i - v0)
  for (int i = 1; i < n; ++i)
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        Coord diff = vertices[i][c] - v0[c];
        if (diff != 0) gd[i - 1][r] += g.at(r, c) * diff;
      }
  QMat m(n - 1, n - 1);
  QVec rhs(n - 1);
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      Rational s = 0;
      for (int c = 0; c < d; ++c) {
        Coord diff = vertices[j][c] - v0[c];
        if (diff != 0) s += gd[i - 1][c] * diff;
      }
      m.at(i - 1, j - 1) = 2 * s;
    }
    rhs[i - 1] = m.at(i - 1, i - 1) / 2;  // |v_i - v0|_G^2
  }
  auto t = solve_q(m, rhs);
  if (!t) throw std::invalid_argument("degenerate: no equidistant center");
  QVec center(d);
  for (int c = 0; c < d; ++c) {
    center[c] = v0[c];
    for (int j = 1; j < n; ++j)
      if ((*t)[j - 1] != 0) center[c] += (*t)[j - 1] * (vertices[j][c] - v0[c]);
  }
  QVec y(d);
  for (int c = 0; c < d; ++c) y[c] = center[c] - v0[c];
  Rational r2 = 0;
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      if (y[r] != 0 && y[c] != 0) r2 += y[r] * g.at(r, c) * y[c];
  return {center, r2};
}

int affine_dim_points(const std::vector<PointVec>& vertices) {
  if (vertices.empty()) throw std::invalid_argument("affine_dim_points: empty");
  int n = static_cast<int>(vertices.size());
  if (n == 1) return 0;
  int d = static_cast<int>(vertices[0].size());
  QMat diffs(n - 1, d);
  for (int i = 1; i < n; ++i)
    for (int c = 0; c < d; ++c) diffs.at(i - 1, c) = vertices[i][c] - vertices[0][c];
  return rank_q(diffs);
}

DeloneCell make_cell(std::vector<PointVec> vertices, const QMat& g) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.empty()) throw std::invalid_argument("make_cell: empty");
  DeloneCell c;
  c.dim = affine_dim_points(vertices);
  if (vertices.size() == 1) {
    c.center = to_qvec(vertices[0]);
    c.sq_radius = 0;
  } else {
    auto [ctr, r2] = circumsphere(vertices, g);
    c.center = std::move(ctr);
    c.sq_radius = std::move(r2);
  }
  c.vertices = std::move(vertices);
  return c;
}

namespace {

std::vector<PointVec> translate_lexmin_to_origin(std::vector<PointVec> vs) {
  std::sort(vs.begin(), vs.end());
  PointVec t = vs.front();
  for (auto& v : vs) v = sub(v, t);
  return vs;
}

}  // namespace

std::vector<PointVec> canonical_vertex_class(std::vector<PointVec> vs) {
  if (vs.empty()) throw std::invalid_argument("canonical_vertex_class: empty");
  auto direct = translate_lexmin_to_origin(vs);
  for (auto& v : vs) v = neg(std::move(v));
  auto reflected = translate_lexmin_to_origin(std::move(vs));
  return std::min(direct, reflected);
}

DeloneCell canonical_cell(const std::vector<PointVec>& vs, const QMat& g) {
  return make_cell(canonical_vertex_class(vs), g);
}

bool verify_empty(const DeloneCell& cell, const Lattice& l) {
  auto pts = points_in_ellipsoid(l.gram, cell.center, cell.sq_radius);
  std::sort(pts.begin(), pts.end());
  return pts == cell.vertices;
}

}  // namespace delstar
