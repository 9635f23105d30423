#include "delstar/faces.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

namespace delstar {

namespace {

using I128 = __int128;
using Mask = std::uint64_t;

struct IntOverflow {};

I128 iabs(I128 v) { return v < 0 ? -v : v; }

void guard(I128 v) {
  if (iabs(v) > (I128(1) << 62)) throw IntOverflow{};
}

Int mpz_from_i128(I128 v) {
  bool negv = v < 0;
  I128 a = negv ? -v : v;
  Int r = static_cast<unsigned long long>(a >> 64);
  r <<= 64;
  r += static_cast<unsigned long long>(a);
  return negv ? Int(-r) : r;
}

/* Fraction-free (Bareiss) elimination; exact over the integers. */
int bareiss_rank(std::vector<std::vector<I128>> m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  I128 prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) std::swap(m[p], m[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        guard(m[r][c]);
        guard(m[i][j]);
        guard(m[i][c]);
        guard(m[r][j]);
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

I128 bareiss_det(std::vector<std::vector<I128>> m) {
  int k = static_cast<int>(m.size());
  if (k == 0) return 1;
  I128 prev = 1;
  int sign = 1;
  for (int c = 0; c < k; ++c) {
    int p = -1;
    for (int i = c; i < k; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      sign = -sign;
    }
    for (int i = c + 1; i < k; ++i) {
      for (int j = c + 1; j < k; ++j) {
        guard(m[c][c]);
        guard(m[i][j]);
        guard(m[i][c]);
        guard(m[c][j]);
        m[i][j] = (m[c][c] * m[i][j] - m[i][c] * m[c][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[c][c];
  }
  return sign < 0 ? -m[k - 1][k - 1] : m[k - 1][k - 1];
}

/* phi_j = (-1)^j det(rows without column j): orthogonal to every row; zero
 * vector iff the rows do not span a hyperplane. rows is (D-1) x D. */
std::vector<I128> hyperplane_normal_int(const std::vector<std::vector<I128>>& rows, int D) {
  std::vector<I128> phi(D, 0);
  for (int drop = 0; drop < D; ++drop) {
    std::vector<std::vector<I128>> minor(rows.size(), std::vector<I128>(D - 1));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      int c = 0;
      for (int j = 0; j < D; ++j)
        if (j != drop) minor[i][c++] = rows[i][j];
    }
    I128 det = bareiss_det(std::move(minor));
    phi[drop] = (drop % 2 == 0) ? det : -det;
  }
  return phi;
}

struct Chart {
  int D = 0;
  PointVec origin;
  QMat b;                // d x D, columns = affine basis differences
  std::vector<QVec> t;   // chart coordinates per vertex
  bool has_int = false;
  std::vector<std::vector<long long>> ti;  // scale * t
};

Chart build_chart(const std::vector<PointVec>& pts) {
  int n = static_cast<int>(pts.size());
  int d = static_cast<int>(pts[0].size());
  Chart ch;
  ch.origin = pts[0];
  std::vector<int> chosen;
  for (int i = 1; i < n; ++i) {
    QMat m(static_cast<int>(chosen.size()) + 1, d);
    for (std::size_t r = 0; r < chosen.size(); ++r)
      for (int c = 0; c < d; ++c) m.at(static_cast<int>(r), c) = pts[chosen[r]][c] - pts[0][c];
    for (int c = 0; c < d; ++c) m.at(static_cast<int>(chosen.size()), c) = pts[i][c] - pts[0][c];
    if (rank_q(m) == static_cast<int>(chosen.size()) + 1) chosen.push_back(i);
  }
  ch.D = static_cast<int>(chosen.size());
  ch.b = QMat(d, ch.D);
  for (int j = 0; j < ch.D; ++j)
    for (int c = 0; c < d; ++c) ch.b.at(c, j) = pts[chosen[j]][c] - pts[0][c];
  ch.t.reserve(n);
  for (int i = 0; i < n; ++i) {
    QVec rhs(d);
    for (int c = 0; c < d; ++c) rhs[c] = pts[i][c] - pts[0][c];
    auto sol = solve_q(ch.b, rhs);
    if (!sol) throw std::logic_error("chart: vertex outside affine hull");
    sol->resize(ch.D);
    ch.t.push_back(std::move(*sol));
  }
  Int l = 1;
  for (const auto& tv : ch.t)
    for (const auto& c : tv) l = lcm(l, Int(denominator(c)));
  if (l <= 1000000) {
    ch.has_int = true;
    ch.ti.assign(n, std::vector<long long>(ch.D));
    for (int i = 0; i < n && ch.has_int; ++i)
      for (int j = 0; j < ch.D; ++j) {
        Rational scaled = ch.t[i][j] * l;
        Int v = numerator(scaled);
        if (abs(v) > (Int(1) << 40)) {
          ch.has_int = false;
          break;
        }
        ch.ti[i][j] = v.convert_to<long long>();
      }
  }
  return ch;
}

struct Facet {
  Mask mask = 0;
  QVec functional;  // ambient, maximal exactly on the facet
  Rational offset;
};

/* Lifts a chart-level functional to an ambient one and certifies it against
 * every vertex. chi acts on chart coordinates (any positive multiple works). */
Facet certify_facet(const std::vector<PointVec>& pts, const Chart& ch, Mask mask,
                    const QVec& chi) {
  auto fa = solve_q(transpose(ch.b), chi);
  if (!fa) throw std::logic_error("facet functional lift failed");
  fa->resize(pts[0].size());
  int rep = 0;
  while (!((mask >> rep) & 1)) ++rep;
  Rational off = dot(*fa, to_qvec(pts[rep]));
  for (std::size_t v = 0; v < pts.size(); ++v) {
    Rational val = dot(*fa, to_qvec(pts[v]));
    bool on = (mask >> v) & 1;
    if (on ? (val != off) : (val >= off)) throw std::logic_error("facet certification failed");
  }
  return Facet{mask, std::move(*fa), std::move(off)};
}

/* Hyperplane through the given spanning point rows: returns (mask of points
 * on it, chart functional) oriented so the off-hyperplane points are below,
 * or nothing when the points are one-sided-violating or degenerate. */
std::optional<std::pair<Mask, QVec>> hyperplane_from_rows(
    const Chart& ch, int n, const std::vector<int>& span_pts) {
  int D = ch.D;
  QVec chi(D);
  bool have = false;
  if (ch.has_int) {
    try {
      std::vector<std::vector<I128>> rows(span_pts.size() - 1, std::vector<I128>(D));
      for (std::size_t i = 1; i < span_pts.size(); ++i)
        for (int j = 0; j < D; ++j)
          rows[i - 1][j] = I128(ch.ti[span_pts[i]][j]) - ch.ti[span_pts[0]][j];
      auto phi = hyperplane_normal_int(rows, D);
      bool zero = true;
      for (const auto& p : phi)
        if (p != 0) zero = false;
      if (zero) return std::nullopt;
      for (int j = 0; j < D; ++j) chi[j] = Rational(mpz_from_i128(phi[j]));
      have = true;
    } catch (const IntOverflow&) {
      have = false;
    }
  }
  if (!have) {
    QMat rows(static_cast<int>(span_pts.size()) - 1, D);
    for (std::size_t i = 1; i < span_pts.size(); ++i)
      for (int j = 0; j < D; ++j)
        rows.at(static_cast<int>(i) - 1, j) = ch.t[span_pts[i]][j] - ch.t[span_pts[0]][j];
    auto ns = nullspace_q(rows);
    if (ns.size() != 1) return std::nullopt;
    chi = ns[0];
  }
  QVec vals(n);
  for (int v = 0; v < n; ++v) vals[v] = dot(chi, ch.t[v]);
  const Rational& c = vals[span_pts[0]];
  bool above = false, below = false;
  for (int v = 0; v < n; ++v) {
    if (vals[v] > c) above = true;
    if (vals[v] < c) below = true;
  }
  if (above && below) return std::nullopt;
  if (above)
    for (auto& x : chi) x = -x;
  Mask mask = 0;
  for (int v = 0; v < n; ++v)
    if (vals[v] == c) mask |= Mask(1) << v;
  return std::make_pair(mask, chi);
}

std::vector<Facet> find_facets_generic(const std::vector<PointVec>& pts, const Chart& ch) {
  int n = static_cast<int>(pts.size());
  int D = ch.D;
  std::vector<Facet> facets;
  std::set<Mask> seen;
  std::vector<int> idx(D);
  for (int i = 0; i < D; ++i) idx[i] = i;
  auto advance = [&]() -> bool {
    int i = D - 1;
    while (i >= 0 && idx[i] == n - D + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < D; ++j) idx[j] = idx[j - 1] + 1;
    return true;
  };
  if (D == 0) return facets;
  do {
    Mask cm = 0;
    for (int i : idx) cm |= Mask(1) << i;
    bool covered = false;
    for (const auto& f : facets)
      if ((cm & ~f.mask) == 0) {
        covered = true;
        break;
      }
    if (covered) continue;
    auto hp = hyperplane_from_rows(ch, n, idx);
    if (!hp) continue;
    if (seen.insert(hp->first).second)
      facets.push_back(certify_facet(pts, ch, hp->first, hp->second));
  } while (advance());
  return facets;
}

/* Large cells: split by the parity of the last basis coordinate (integer vs
 * half-integer ambient points of the Dstar model) and assemble facets from
 * the factors: pairs of factor facets for an even-dimensional free sum, whole
 * factor x factor facet for an odd-dimensional join. Every candidate is
 * re-derived and certified from scratch; completeness is enforced by the
 * ridge count check in analyze(). */
std::vector<Facet> find_facets_product(const std::vector<PointVec>& pts, const Chart& ch) {
  int n = static_cast<int>(pts.size());
  std::vector<int> ga, gb;
  for (int i = 0; i < n; ++i)
    (pts[i].back() % 2 == 0 ? ga : gb).push_back(i);
  if (ga.empty() || gb.empty()) throw std::runtime_error("cell too large for face enumeration");
  auto group_facets = [&](const std::vector<int>& grp) {
    std::vector<PointVec> sub;
    for (int i : grp) sub.push_back(pts[i]);
    Chart sch = build_chart(sub);
    auto fs = find_facets_generic(sub, sch);
    std::vector<std::vector<int>> out;  // facet vertex lists in big-cell indices
    for (const auto& f : fs) {
      std::vector<int> ids;
      for (std::size_t v = 0; v < sub.size(); ++v)
        if ((f.mask >> v) & 1) ids.push_back(grp[v]);
      out.push_back(std::move(ids));
    }
    return out;
  };
  auto fa = group_facets(ga);
  auto fb = group_facets(gb);
  std::vector<std::vector<int>> candidates;
  if (ch.D % 2 == 0) {
    for (const auto& x : fa)
      for (const auto& y : fb) {
        std::vector<int> c = x;
        c.insert(c.end(), y.begin(), y.end());
        candidates.push_back(std::move(c));
      }
  } else {
    for (const auto& y : fb) {
      std::vector<int> c = ga;
      c.insert(c.end(), y.begin(), y.end());
      candidates.push_back(std::move(c));
    }
    for (const auto& x : fa) {
      std::vector<int> c = gb;
      c.insert(c.end(), x.begin(), x.end());
      candidates.push_back(std::move(c));
    }
  }
  std::vector<Facet> facets;
  std::set<Mask> seen;
  for (auto& cand : candidates) {
    // greedy affinely independent spanning subset of the candidate
    std::vector<int> span{cand[0]};
    std::vector<std::vector<I128>> rows;
    for (std::size_t i = 1; i < cand.size() && static_cast<int>(span.size()) < ch.D; ++i) {
      std::vector<I128> row(ch.D);
      for (int j = 0; j < ch.D; ++j)
        row[j] = I128(ch.ti[cand[i]][j]) - ch.ti[cand[0]][j];
      rows.push_back(row);
      if (bareiss_rank(rows) == static_cast<int>(rows.size()))
        span.push_back(cand[i]);
      else
        rows.pop_back();
    }
    if (static_cast<int>(span.size()) != ch.D) throw std::runtime_error("free-sum facet candidate degenerate");
    auto hp = hyperplane_from_rows(ch, n, span);
    if (!hp) throw std::runtime_error("free-sum facet candidate not supporting");
    Mask expect = 0;
    for (int i : cand) expect |= Mask(1) << i;
    if (hp->first != expect) throw std::runtime_error("free-sum facet candidate mismatch");
    if (seen.insert(hp->first).second)
      facets.push_back(certify_facet(pts, ch, hp->first, hp->second));
  }
  return facets;
}

struct Analysis {
  Chart ch;
  std::vector<Facet> facets;
  std::vector<Mask> face_masks;  // proper faces, sorted by mask
  std::vector<int> face_dims;
};

int mask_dim(const Analysis& an, Mask m) {
  std::vector<int> ids;
  for (int v = 0; v < 64; ++v)
    if ((m >> v) & 1) ids.push_back(v);
  if (ids.size() == 1) return 0;
  if (an.ch.has_int) {
    try {
      std::vector<std::vector<I128>> rows(ids.size() - 1, std::vector<I128>(an.ch.D));
      for (std::size_t i = 1; i < ids.size(); ++i)
        for (int j = 0; j < an.ch.D; ++j)
          rows[i - 1][j] = I128(an.ch.ti[ids[i]][j]) - an.ch.ti[ids[0]][j];
      return bareiss_rank(std::move(rows));
    } catch (const IntOverflow&) {
    }
  }
  QMat rows(static_cast<int>(ids.size()) - 1, an.ch.D);
  for (std::size_t i = 1; i < ids.size(); ++i)
    for (int j = 0; j < an.ch.D; ++j)
      rows.at(static_cast<int>(i) - 1, j) = an.ch.t[ids[i]][j] - an.ch.t[ids[0]][j];
  return rank_q(rows);
}

Analysis analyze(const std::vector<PointVec>& pts) {
  int n = static_cast<int>(pts.size());
  if (n == 0) throw std::invalid_argument("analyze: empty cell");
  if (n > 64) throw std::runtime_error("cell too large for face enumeration");
  Analysis an;
  an.ch = build_chart(pts);
  if (n <= 20)
    an.facets = find_facets_generic(pts, an.ch);
  else if (an.ch.has_int)
    an.facets = find_facets_product(pts, an.ch);
  else
    throw std::runtime_error("cell too large for face enumeration");
  Mask full = (n == 64) ? ~Mask(0) : ((Mask(1) << n) - 1);
  std::set<Mask> fs;
  std::vector<Mask> queue{full};
  while (!queue.empty()) {
    Mask w = queue.back();
    queue.pop_back();
    for (const auto& f : an.facets) {
      Mask x = w & f.mask;
      if (x != 0 && x != full && fs.insert(x).second) queue.push_back(x);
    }
  }
  an.face_masks.assign(fs.begin(), fs.end());
  an.face_dims.reserve(an.face_masks.size());
  for (Mask m : an.face_masks) an.face_dims.push_back(mask_dim(an, m));
  // every ridge must lie in exactly two facets; catches an incomplete facet list
  for (std::size_t i = 0; i < an.face_masks.size(); ++i) {
    if (an.face_dims[i] != an.ch.D - 2) continue;
    int count = 0;
    for (const auto& f : an.facets)
      if ((an.face_masks[i] & ~f.mask) == 0) ++count;
    if (count != 2) throw std::runtime_error("incomplete facet enumeration");
  }
  return an;
}

Face face_from_mask(const Analysis& an, Mask m, int dim, int d) {
  Face f;
  f.dim = dim;
  for (int v = 0; v < 64; ++v)
    if ((m >> v) & 1) f.vertex_subset.push_back(v);
  f.functional.assign(d, Rational(0));
  f.offset = 0;
  for (const auto& fc : an.facets) {
    if ((m & ~fc.mask) != 0) continue;
    for (int c = 0; c < d; ++c) f.functional[c] += fc.functional[c];
    f.offset += fc.offset;
  }
  return f;
}

std::vector<PointVec> face_points(const DeloneCell& cell, const Face& f) {
  std::vector<PointVec> pts;
  pts.reserve(f.vertex_subset.size());
  for (int i : f.vertex_subset) pts.push_back(cell.vertices[i]);
  return pts;
}

bool is_parallelogram(const std::vector<PointVec>& p) {
  if (p.size() != 4) return false;
  return add(p[0], p[3]) == add(p[1], p[2]) || add(p[0], p[1]) == add(p[2], p[3]) ||
         add(p[0], p[2]) == add(p[1], p[3]);
}

}  // namespace

std::string face_kind_name(FaceKind k) {
  switch (k) {
    case FaceKind::Triangle: return "Triangle";
    case FaceKind::Parallelogram: return "Parallelogram";
    case FaceKind::Tetrahedron: return "Tetrahedron";
    case FaceKind::Octahedron: return "Octahedron";
    case FaceKind::PyramidOverParallelogram: return "PyramidOverParallelogram";
    case FaceKind::TriangularPrism: return "TriangularPrism";
    case FaceKind::Parallelepiped: return "Parallelepiped";
    case FaceKind::Other: return "Other";
  }
  return "?";
}

std::vector<Face> all_proper_faces(const DeloneCell& cell) {
  Analysis an = analyze(cell.vertices);
  int d = static_cast<int>(cell.vertices[0].size());
  std::vector<Face> out;
  out.reserve(an.face_masks.size());
  for (std::size_t i = 0; i < an.face_masks.size(); ++i)
    out.push_back(face_from_mask(an, an.face_masks[i], an.face_dims[i], d));
  return out;
}

std::vector<Face> faces_k(const DeloneCell& cell, int k) {
  if (k < 0 || k > cell.dim) throw std::invalid_argument("faces_k: k out of range");
  int d = static_cast<int>(cell.vertices[0].size());
  if (k == cell.dim) {
    Face f;
    f.dim = k;
    for (std::size_t i = 0; i < cell.vertices.size(); ++i)
      f.vertex_subset.push_back(static_cast<int>(i));
    f.functional.assign(d, Rational(0));
    f.offset = 0;
    return {f};
  }
  Analysis an = analyze(cell.vertices);
  std::vector<Face> out;
  for (std::size_t i = 0; i < an.face_masks.size(); ++i)
    if (an.face_dims[i] == k) out.push_back(face_from_mask(an, an.face_masks[i], an.face_dims[i], d));
  return out;
}

FaceKind classify_face(const DeloneCell& cell, const Face& f) {
  if (f.dim != 2 && f.dim != 3) throw std::invalid_argument("not a 2- or 3-face");
  auto pts = face_points(cell, f);
  int n = static_cast<int>(pts.size());
  if (f.dim == 2) {
    if (n == 3) return FaceKind::Triangle;
    if (n == 4 && is_parallelogram(pts)) return FaceKind::Parallelogram;
    return FaceKind::Other;
  }
  if (n < 4 || n > 12) return FaceKind::Other;
  if (n == 4) return FaceKind::Tetrahedron;
  Analysis an = analyze(pts);
  std::vector<int> deg(n, 0);
  for (std::size_t i = 0; i < an.face_masks.size(); ++i) {
    if (an.face_dims[i] != 1) continue;
    for (int v = 0; v < n; ++v)
      if ((an.face_masks[i] >> v) & 1) ++deg[v];
  }
  auto facet_pts = [&](std::size_t i) {
    std::vector<PointVec> q;
    for (int v = 0; v < n; ++v)
      if ((an.facets[i].mask >> v) & 1) q.push_back(pts[v]);
    return q;
  };
  if (n == 5) {
    std::vector<int> s = deg;
    std::sort(s.begin(), s.end());
    if (s != std::vector<int>{3, 3, 3, 3, 4}) return FaceKind::Other;
    for (std::size_t i = 0; i < an.facets.size(); ++i) {
      auto q = facet_pts(i);
      if (q.size() == 4 && !is_parallelogram(q)) return FaceKind::Other;
    }
    return FaceKind::PyramidOverParallelogram;
  }
  if (n == 6) {
    bool all4 = true, all3 = true;
    for (int v = 0; v < n; ++v) {
      if (deg[v] != 4) all4 = false;
      if (deg[v] != 3) all3 = false;
    }
    if (all4) return FaceKind::Octahedron;
    if (all3) {
      int tri = 0, par = 0;
      for (std::size_t i = 0; i < an.facets.size(); ++i) {
        auto q = facet_pts(i);
        if (q.size() == 3)
          ++tri;
        else if (q.size() == 4 && is_parallelogram(q))
          ++par;
        else
          return FaceKind::Other;
      }
      if (tri == 2 && par == 3) return FaceKind::TriangularPrism;
    }
    return FaceKind::Other;
  }
  if (n == 8) {
    for (int v = 0; v < n; ++v)
      if (deg[v] != 3) return FaceKind::Other;
    if (an.facets.size() != 6) return FaceKind::Other;
    for (std::size_t i = 0; i < an.facets.size(); ++i) {
      auto q = facet_pts(i);
      if (q.size() != 4 || !is_parallelogram(q)) return FaceKind::Other;
    }
    return FaceKind::Parallelepiped;
  }
  return FaceKind::Other;
}

std::pair<bool, int> neighborliness_profile(const DeloneCell& cell) {
  Analysis an = analyze(cell.vertices);
  int n = static_cast<int>(cell.vertices.size());
  std::vector<int> deg(n, 0);
  for (std::size_t i = 0; i < an.face_masks.size(); ++i) {
    if (an.face_dims[i] != 1) continue;
    for (int v = 0; v < n; ++v)
      if ((an.face_masks[i] >> v) & 1) ++deg[v];
  }
  int worst = 0;
  for (int v = 0; v < n; ++v) worst = std::max(worst, n - 1 - deg[v]);
  return {worst == 0, worst};
}

}  // namespace delstar
