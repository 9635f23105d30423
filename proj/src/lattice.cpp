#include "delstar/lattice.hpp"

#include <map>
#include <stdexcept>

namespace delstar {

std::string family_name(Family f) {
  switch (f) {
    case Family::Zd: return "Zd";
    case Family::A: return "A";
    case Family::Astar: return "Astar";
    case Family::D: return "D";
    case Family::Dstar: return "Dstar";
    case Family::E6: return "E6";
    case Family::E6star: return "E6star";
    case Family::E7: return "E7";
    case Family::E7star: return "E7star";
    case Family::E8: return "E8";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& s) {
  static const std::map<std::string, Family> m = {
      {"Zd", Family::Zd},         {"A", Family::A},       {"Astar", Family::Astar},
      {"D", Family::D},           {"Dstar", Family::Dstar}, {"E6", Family::E6},
      {"E6star", Family::E6star}, {"E7", Family::E7},     {"E7star", Family::E7star},
      {"E8", Family::E8}};
  auto it = m.find(s);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

/* Bourbaki simple roots of E8 in R^8; E7 and E6 are the leading 7 and 6. */
std::vector<QVec> e8_roots() {
  std::vector<QVec> r(8, QVec(8, Rational(0)));
  r[0] = QVec{Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2),
              Rational(-1, 2), Rational(-1, 2), Rational(-1, 2), Rational(1, 2)};
  r[1][0] = 1; r[1][1] = 1;
  for (int k = 2; k < 8; ++k) {
    r[k][k - 2] = -1;
    r[k][k - 1] = 1;
  }
  return r;
}

namespace {

QMat gram_from_ambient_rows(const std::vector<QVec>& rows) {
  int n = static_cast<int>(rows.size());
  QMat g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.at(i, j) = dot(rows[i], rows[j]);
  return g;
}

QMat a_gram(int d) {
  std::vector<QVec> rows(d, QVec(d + 1, Rational(0)));
  for (int i = 0; i < d; ++i) {
    rows[i][i] = 1;
    rows[i][i + 1] = -1;
  }
  return gram_from_ambient_rows(rows);
}

QMat d_gram(int d) {
  std::vector<QVec> rows(d, QVec(d, Rational(0)));
  for (int i = 0; i < d - 1; ++i) {
    rows[i][i] = 1;
    rows[i][i + 1] = -1;
  }
  rows[d - 1][d - 2] = 1;
  rows[d - 1][d - 1] = 1;
  return gram_from_ambient_rows(rows);
}

QMat e_gram(int d) {
  auto roots = e8_roots();
  roots.resize(d);
  return gram_from_ambient_rows(roots);
}

QMat astar_gram(int d) {
  QMat g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g.at(i, j) = (i == j ? Rational(1) : Rational(0)) - Rational(1, d + 1);
  return g;
}

QMat dstar_gram(int d) {
  QMat g(d, d);
  for (int i = 0; i < d - 1; ++i) {
    g.at(i, i) = 1;
    g.at(i, d - 1) = Rational(1, 2);
    g.at(d - 1, i) = Rational(1, 2);
  }
  g.at(d - 1, d - 1) = Rational(d, 4);
  return g;
}

}  // namespace

Lattice named_lattice(Family f, int d) {
  auto bad = [&] { throw std::invalid_argument("named_lattice: unsupported family/dimension"); };
  Lattice l;
  l.dim = d;
  l.family = f;
  switch (f) {
    case Family::Zd:
      if (d < 1) bad();
      l.gram = QMat::identity(d);
      break;
    case Family::A:
      if (d < 1) bad();
      l.gram = a_gram(d);
      break;
    case Family::Astar:
      if (d < 1) bad();
      l.gram = astar_gram(d);
      break;
    case Family::D:
      if (d < 3) bad();
      l.gram = d_gram(d);
      break;
    case Family::Dstar:
      if (d < 3) bad();
      l.gram = dstar_gram(d);
      break;
    case Family::E6:
      if (d != 6) bad();
      l.gram = e_gram(6);
      break;
    case Family::E6star:
      if (d != 6) bad();
      l.gram = inverse_q(e_gram(6));
      break;
    case Family::E7:
      if (d != 7) bad();
      l.gram = e_gram(7);
      break;
    case Family::E7star:
      if (d != 7) bad();
      l.gram = inverse_q(e_gram(7));
      break;
    case Family::E8:
      if (d != 8) bad();
      l.gram = e_gram(8);
      break;
  }
  l.name = family_name(f) + (f == Family::E6 || f == Family::E6star || f == Family::E7 ||
                                     f == Family::E7star || f == Family::E8
                                 ? ""
                                 : "_" + std::to_string(d));
  return l;
}

Lattice dual_lattice(const Lattice& l) {
  Lattice d;
  d.dim = l.dim;
  d.gram = inverse_q(l.gram);
  if (l.family) {
    switch (*l.family) {
      case Family::Zd: d.family = Family::Zd; break;
      case Family::A: d.family = Family::Astar; break;
      case Family::Astar: d.family = Family::A; break;
      case Family::D: d.family = Family::Dstar; break;
      case Family::Dstar: d.family = Family::D; break;
      case Family::E6: d.family = Family::E6star; break;
      case Family::E6star: d.family = Family::E6; break;
      case Family::E7: d.family = Family::E7star; break;
      case Family::E7star: d.family = Family::E7; break;
      case Family::E8: d.family = Family::E8; break;
    }
  }
  return d;
}

QMat blend_gram(const QMat& g, const QMat& gp, const Rational& eps) {
  if (g.rows != gp.rows || g.cols != gp.cols) throw std::invalid_argument("blend_gram: shape mismatch");
  QMat r(g.rows, g.cols);
  for (std::size_t i = 0; i < g.a.size(); ++i) r.a[i] = g.a[i] + eps * gp.a[i];
  return r;
}

std::vector<int> parity_sum(const PointVec& x, const PointVec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("parity_sum: shape mismatch");
  std::vector<int> p(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) p[i] = static_cast<int>(((x[i] + y[i]) % 2 + 2) % 2);
  return p;
}

PointVec canonical_edge_class(PointVec v) {
  for (Coord c : v) {
    if (c > 0) return v;
    if (c < 0) {
      for (Coord& x : v) x = -x;
      return v;
    }
  }
  throw std::invalid_argument("canonical_edge_class: zero vector");
}

bool is_zero(const PointVec& v) {
  for (Coord c : v)
    if (c != 0) return false;
  return true;
}

PointVec sub(const PointVec& x, const PointVec& y) {
  PointVec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

PointVec add(const PointVec& x, const PointVec& y) {
  PointVec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

PointVec neg(PointVec v) {
  for (Coord& c : v) c = -c;
  return v;
}

PointVec dstar_ambient_doubled(const PointVec& x) {
  int d = static_cast<int>(x.size());
  PointVec a(d);
  for (int i = 0; i < d - 1; ++i) a[i] = 2 * x[i] + x[d - 1];
  a[d - 1] = x[d - 1];
  return a;
}

PointVec dstar_basis_from_ambient_doubled(const PointVec& a) {
  int d = static_cast<int>(a.size());
  PointVec x(d);
  x[d - 1] = a[d - 1];
  for (int i = 0; i < d - 1; ++i) {
    Coord num = a[i] - a[d - 1];
    if (num % 2 != 0) throw std::invalid_argument("dstar_basis_from_ambient_doubled: not a lattice vector");
    x[i] = num / 2;
  }
  return x;
}

Rational gram_norm(const QMat& g, const PointVec& v) {
  Rational s = 0;
  for (int i = 0; i < g.rows; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < g.cols; ++j)
      if (v[j] != 0) s += g.at(i, j) * Rational(v[i]) * Rational(v[j]);
  }
  return s;
}

}  // namespace delstar
