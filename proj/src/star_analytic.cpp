#include "delstar/star_analytic.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "delstar/star_lifted.hpp"

namespace delstar {

namespace {

struct StarBuilder {
  Lattice l;
  std::map<std::vector<PointVec>, DeloneCell> classes;

  void add(const std::vector<PointVec>& vs) {
    auto canon = canonical_vertex_class(vs);
    if (classes.count(canon)) return;
    DeloneCell cc = make_cell(canon, l.gram);
    if (cc.dim != l.dim || !verify_empty(cc, l))
      throw std::logic_error("analytic cell is not a Delone cell");
    classes.emplace(std::move(canon), std::move(cc));
  }

  DeloneStar star() {
    DeloneStar s;
    s.lattice = std::move(l);
    s.provenance = Provenance::Analytic;
    for (auto& [vs, cell] : classes) s.cells.push_back(std::move(cell));
    return s;
  }
};

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

/* Even d = 2m: cell(S) = {0,1}-cube on the m positions S plus the cube of
 * half-integer points fixed to 1/2 on S and free off S (free sum, center
 * 1/2 on S, squared radius m/4). Odd d = 2m+1: cell(j, S) additionally
 * pins position j to 0 on the integer part and to +1/2 on the half part
 * (join, center 1/2 on S and 1/4 at j, squared radius (4m+1)/16).
 * Vertices are assembled in doubled ambient coordinates. */
void add_dstar_cell(StarBuilder& b, int d, int j, const std::vector<int>& s) {
  std::vector<int> in_s(d, 0);
  for (int i : s) in_s[i] = 1;
  std::vector<int> off;
  for (int i = 0; i < d; ++i)
    if (!in_s[i] && i != j) off.push_back(i);
  int m = static_cast<int>(s.size());
  std::vector<PointVec> vs;
  for (int mask = 0; mask < (1 << m); ++mask) {
    PointVec amb(d, 0);
    for (int t = 0; t < m; ++t)
      if ((mask >> t) & 1) amb[s[t]] = 2;
    vs.push_back(dstar_basis_from_ambient_doubled(amb));
  }
  int nf = static_cast<int>(off.size());
  for (int mask = 0; mask < (1 << nf); ++mask) {
    PointVec amb(d, 1);
    for (int t = 0; t < nf; ++t)
      if (!((mask >> t) & 1)) amb[off[t]] = -1;
    vs.push_back(dstar_basis_from_ambient_doubled(amb));
  }
  b.add(vs);
}

DeloneStar dstar_star(int d) {
  StarBuilder b{named_lattice(Family::Dstar, d), {}};
  int m = d / 2;
  if (d % 2 == 0) {
    for (const auto& s : subsets(d, m)) add_dstar_cell(b, d, -1, s);
  } else {
    for (int j = 0; j < d; ++j) {
      std::vector<int> rest;
      for (int i = 0; i < d; ++i)
        if (i != j) rest.push_back(i);
      for (const auto& sr : subsets(d - 1, m)) {
        std::vector<int> s;
        for (int i : sr) s.push_back(rest[i]);
        add_dstar_cell(b, d, j, s);
      }
    }
  }
  return b.star();
}

/* Simplices of consecutive partial sums of the d+1 frame vectors; the slot
 * holding value d stands for f_{d+1} = -(f_1 + ... + f_d). */
DeloneStar astar_star(int d) {
  StarBuilder b{named_lattice(Family::Astar, d), {}};
  std::vector<int> perm(d + 1);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<PointVec> vs;
    PointVec v(d, 0);
    vs.push_back(v);
    for (int k = 0; k < d; ++k) {
      if (perm[k] < d)
        v[perm[k]] += 1;
      else
        for (int c = 0; c < d; ++c) v[c] -= 1;
      vs.push_back(v);
    }
    b.add(vs);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return b.star();
}

DeloneStar e8_star(int d) {
  StarBuilder b{named_lattice(Family::E8, d), {}};
  auto roots = e8_roots();
  QMat r(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) r.at(i, j) = roots[j][i];
  auto to_basis = [&](const QVec& amb) {
    auto x = solve_q(r, amb);
    if (!x) throw std::logic_error("not an E8 lattice point");
    PointVec p(8);
    for (int i = 0; i < 8; ++i) {
      if (denominator((*x)[i]) != 1) throw std::logic_error("not an E8 lattice point");
      p[i] = (*x)[i].convert_to<long long>();
    }
    return p;
  };
  QVec zero(8, Rational(0)), t;
  // cross-polytope: 0, 2e1, e1 +- ej
  std::vector<QVec> amb;
  amb.push_back(zero);
  t = zero;
  t[0] = 2;
  amb.push_back(t);
  for (int j = 1; j < 8; ++j) {
    t = zero;
    t[0] = 1;
    t[j] = 1;
    amb.push_back(t);
    t[j] = -1;
    amb.push_back(t);
  }
  std::vector<PointVec> vs;
  for (const auto& a : amb) vs.push_back(to_basis(a));
  b.add(vs);
  // simplex: 0, e1 + ej, the all-halves vector
  amb.clear();
  amb.push_back(zero);
  for (int j = 1; j < 8; ++j) {
    t = zero;
    t[0] = 1;
    t[j] = 1;
    amb.push_back(t);
  }
  amb.push_back(QVec(8, Rational(1, 2)));
  vs.clear();
  for (const auto& a : amb) vs.push_back(to_basis(a));
  b.add(vs);
  return b.star();
}

DeloneStar dual_e_star(Family f, int d) {
  DeloneStar s = delone_star_lifted(named_lattice(f, d), 2);
  s.provenance = Provenance::Analytic;
  return s;
}

}  // namespace

DeloneStar delone_star_analytic(Family family, int d) {
  switch (family) {
    case Family::Dstar:
      return dstar_star(d);
    case Family::Astar:
      return astar_star(d);
    case Family::E8:
      return e8_star(d);
    case Family::E6star:
    case Family::E7star:
      return dual_e_star(family, d);
    default:
      throw std::invalid_argument("unsupported family");
  }
}

}  // namespace delstar
