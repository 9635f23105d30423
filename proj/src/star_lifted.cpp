#include "delstar/star_lifted.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "delstar/faces.hpp"

namespace delstar {

namespace {

using I128 = __int128;

constexpr long long kMaxBoxPoints = 4000000;

long long box_points(int d, int window) {
  long long c = 1;
  for (int i = 0; i < d; ++i) {
    c *= 2 * window + 1;
    if (c > kMaxBoxPoints) return -1;
  }
  return c;
}

/* Exact linear form (coef . z + cst) / den with den > 0; ok=false when the
 * integer representation would overflow the sweep's int128 budget. */
struct LinForm {
  std::vector<long long> coef;
  long long cst = 0;
  long long den = 1;
  bool ok = false;
};

LinForm to_linform(const QVec& u, const Rational& cst) {
  LinForm f;
  Int l = denominator(cst);
  for (const auto& c : u) l = lcm(l, Int(denominator(c)));
  if (l > (Int(1) << 10)) return f;
  f.den = l.convert_to<long long>();
  f.coef.reserve(u.size());
  for (const auto& c : u) {
    Rational s = c * l;
    Int n = numerator(s);
    if (abs(n) > (Int(1) << 30)) return f;
    f.coef.push_back(n.convert_to<long long>());
  }
  Rational s = cst * l;
  Int n = numerator(s);
  if (abs(n) > (Int(1) << 30)) return f;
  f.cst = n.convert_to<long long>();
  f.ok = true;
  return f;
}

/* Candidate point pool for the moving-sphere sweeps, with cached norms. */
struct Box {
  const QMat* g = nullptr;
  std::vector<PointVec> pts;
  std::vector<long long> inorm;  // M * |z|^2_G, valid iff int_ok
  long long m = 1;               // common denominator of G
  bool int_ok = false;
  mutable std::vector<Rational> qnorm;  // |z|^2_G, filled lazily

  const std::vector<Rational>& rational_norms() const {
    if (qnorm.empty()) {
      qnorm.reserve(pts.size());
      for (const auto& z : pts) qnorm.push_back(gram_norm(*g, z));
    }
    return qnorm;
  }
};

void cache_int_norms(Box& box) {
  Int m = 1;
  for (const auto& e : box.g->a) m = lcm(m, Int(denominator(e)));
  if (m > (Int(1) << 10)) return;
  box.m = m.convert_to<long long>();
  box.int_ok = true;
  box.inorm.reserve(box.pts.size());
  for (const auto& p : box.pts) {
    Rational s = gram_norm(*box.g, p) * box.m;
    Int n = numerator(s);
    if (abs(n) > (Int(1) << 30)) {
      box.int_ok = false;
      return;
    }
    box.inorm.push_back(n.convert_to<long long>());
  }
}

Box make_window_box(const QMat& g, int d, int window) {
  if (box_points(d, window) < 0) throw std::runtime_error("window too large for dimension");
  Box box;
  box.g = &g;
  PointVec z(d, -window);
  for (;;) {
    box.pts.push_back(z);
    int i = 0;
    while (i < d && z[i] == window) z[i++] = -window;
    if (i == d) break;
    ++z[i];
  }
  cache_int_norms(box);
  return box;
}

Box make_point_box(const QMat& g, std::vector<PointVec> pts) {
  Box box;
  box.g = &g;
  box.pts = std::move(pts);
  cache_int_norms(box);
  return box;
}

/* One sweep of a moving empty sphere: phi_z(s) = phi_z(0) - 2 s beta_z where
 * phi_z(0) = |z|^2_G + neg_u.z + k >= 0 over the box and beta_z = bcoef.z + bcst.
 * Returns the indices whose phi vanishes at the first hit s* = min over beta>0
 * of phi/(2 beta); points with phi = beta = 0 (the pinned set) are included.
 * nullopt when no box point has beta > 0. */
std::optional<std::vector<int>> sweep(const Box& box, const QVec& neg_u, const Rational& k,
                                      const QVec& bcoef, const Rational& bcst) {
  int n = static_cast<int>(box.pts.size());
  int d = static_cast<int>(neg_u.size());
  if (box.int_ok) {
    LinForm a = to_linform(neg_u, k);
    LinForm b = to_linform(bcoef, bcst);
    if (a.ok && b.ok) {
      long long p = std::lcm(box.m, a.den);
      I128 mn = p / box.m, ma = p / a.den;
      std::vector<I128> phi(n), beta(n);
      int best = -1;
      for (int i = 0; i < n; ++i) {
        const PointVec& z = box.pts[i];
        I128 av = a.cst, bv = b.cst;
        for (int c = 0; c < d; ++c) {
          av += I128(a.coef[c]) * z[c];
          bv += I128(b.coef[c]) * z[c];
        }
        phi[i] = I128(box.inorm[i]) * mn + av * ma;
        beta[i] = bv;
        if (bv > 0 && (best < 0 || phi[i] * beta[best] < phi[best] * beta[i])) best = i;
      }
      if (best < 0) return std::nullopt;
      std::vector<int> zero;
      for (int i = 0; i < n; ++i)
        if (phi[i] * beta[best] == phi[best] * beta[i]) zero.push_back(i);
      return zero;
    }
  }
  const auto& norms = box.rational_norms();
  std::vector<Rational> phi(n), beta(n);
  int best = -1;
  for (int i = 0; i < n; ++i) {
    const PointVec& z = box.pts[i];
    Rational av = k, bv = bcst;
    for (int c = 0; c < d; ++c) {
      if (z[c] == 0) continue;
      av += neg_u[c] * z[c];
      bv += bcoef[c] * z[c];
    }
    phi[i] = norms[i] + av;
    beta[i] = bv;
    if (bv > 0 && (best < 0 || phi[i] * beta[best] < phi[best] * beta[i])) best = i;
  }
  if (best < 0) return std::nullopt;
  std::vector<int> zero;
  for (int i = 0; i < n; ++i)
    if (phi[i] * beta[best] == phi[best] * beta[i]) zero.push_back(i);
  return zero;
}

/* phi coefficients (-2Gc, |c|^2_G - r^2) of the sphere (c, r^2). */
std::pair<QVec, Rational> sphere_form(const QMat& g, const QVec& center, const Rational& r2) {
  QVec gc = mul_vec(g, center);
  Rational k = dot(gc, center) - r2;
  for (auto& x : gc) x *= -2;
  return {std::move(gc), std::move(k)};
}

/* Grows the zero set of an empty sphere pinned at box point `start` until it
 * spans dimension d, sweeping along directions G-orthogonal to the current
 * affine hull. Throws WindowError when no direction finds another box point
 * (full-dimensional pools always do). */
std::vector<PointVec> grow_cell_at(const QMat& g, const Box& box, const PointVec& start) {
  int d = g.rows;
  std::vector<PointVec> cset{start};
  for (int iter = 0; iter <= d + 1; ++iter) {
    if (affine_dim_points(cset) == d) return cset;
    QVec center = to_qvec(cset[0]);
    Rational r2 = 0;
    if (cset.size() >= 2) {
      auto s = circumsphere(cset, g);
      center = std::move(s.first);
      r2 = std::move(s.second);
    }
    QMat rows(static_cast<int>(cset.size()) - 1, d);
    for (std::size_t i = 1; i < cset.size(); ++i) {
      QVec gd = mul_vec(g, to_qvec(sub(cset[i], cset[0])));
      for (int c = 0; c < d; ++c) rows.at(static_cast<int>(i) - 1, c) = gd[c];
    }
    auto ns = nullspace_q(rows);
    if (ns.empty()) throw std::logic_error("cell growth: no orthogonal direction");
    auto [neg_u, k] = sphere_form(g, center, r2);
    std::optional<std::vector<int>> hit;
    for (const auto& w : ns) {
      QVec gw = mul_vec(g, w);
      Rational bcst = -dot(gw, to_qvec(cset[0]));
      hit = sweep(box, neg_u, k, gw, bcst);
      if (hit) break;
      for (auto& x : gw) x = -x;
      hit = sweep(box, neg_u, k, gw, -bcst);
      if (hit) break;
    }
    if (!hit) throw WindowError{};
    std::vector<PointVec> next;
    for (int i : *hit) next.push_back(box.pts[i]);
    cset = std::move(next);
  }
  throw std::logic_error("cell growth did not terminate");
}

/* Keeps queue cells inside the sweep box: recenters the integer bounding box
 * of the vertex set around the origin. */
std::vector<PointVec> recenter(std::vector<PointVec> vs) {
  int d = static_cast<int>(vs.front().size());
  PointVec t(d, 0);
  for (int c = 0; c < d; ++c) {
    Coord lo = vs.front()[c], hi = lo;
    for (const auto& v : vs) {
      lo = std::min(lo, v[c]);
      hi = std::max(hi, v[c]);
    }
    t[c] = (lo + hi) / 2;
  }
  for (auto& v : vs) v = sub(v, t);
  std::sort(vs.begin(), vs.end());
  return vs;
}

}  // namespace

DeloneCell lifted_seed_cell(const Lattice& l, int window) {
  Box box = make_window_box(l.gram, l.dim, window);
  return make_cell(grow_cell_at(l.gram, box, PointVec(l.dim, 0)), l.gram);
}

DeloneStar delone_star_lifted(const Lattice& l, int window) {
  Box box = make_window_box(l.gram, l.dim, window);
  std::vector<PointVec> seed = grow_cell_at(l.gram, box, PointVec(l.dim, 0));

  std::map<std::vector<PointVec>, DeloneCell> classes;
  std::vector<DeloneCell> queue;
  auto admit = [&](const std::vector<PointVec>& vs) {
    auto canon = canonical_vertex_class(vs);
    if (classes.count(canon)) return;
    DeloneCell cc = make_cell(canon, l.gram);
    if (cc.dim != l.dim) throw WindowError{};
    if (!verify_empty(cc, l)) throw WindowError{};
    classes.emplace(std::move(canon), std::move(cc));
    queue.push_back(make_cell(recenter(vs), l.gram));
  };
  admit(seed);
  while (!queue.empty()) {
    DeloneCell cell = std::move(queue.back());
    queue.pop_back();
    auto [neg_u, k] = sphere_form(l.gram, cell.center, cell.sq_radius);
    for (const auto& facet : faces_k(cell, l.dim - 1)) {
      auto hit = sweep(box, neg_u, k, facet.functional, -facet.offset);
      if (!hit) throw WindowError{};
      std::vector<PointVec> neighbor;
      for (int i : *hit) neighbor.push_back(box.pts[i]);
      admit(neighbor);
    }
  }

  DeloneStar star;
  star.lattice = l;
  star.provenance = Provenance::Lifted;
  for (auto& [vs, cell] : classes) star.cells.push_back(std::move(cell));
  return star;
}

DeloneStar delone_star_lifted_auto(const Lattice& l, int max_window) {
  for (int w = 2; w <= max_window; w *= 2) {
    try {
      return delone_star_lifted(l, w);
    } catch (const WindowError&) {
      if (2 * w > max_window || box_points(l.dim, 2 * w) < 0) throw;
    }
  }
  throw WindowError{};
}

std::vector<DeloneCell> finite_delone_cells(std::vector<PointVec> pts, const QMat& g) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  int d = g.rows;
  if (pts.empty() || affine_dim_points(pts) != d)
    throw std::invalid_argument("point set is not full-dimensional");
  Box box = make_point_box(g, pts);

  std::map<std::vector<PointVec>, DeloneCell> cells;
  std::vector<DeloneCell> queue;
  auto admit = [&](std::vector<PointVec> vs) {
    std::sort(vs.begin(), vs.end());
    if (cells.count(vs)) return;
    DeloneCell piece = make_cell(vs, g);
    cells.emplace(std::move(vs), piece);
    queue.push_back(std::move(piece));
  };
  admit(grow_cell_at(g, box, box.pts[0]));
  while (!queue.empty()) {
    DeloneCell cell = std::move(queue.back());
    queue.pop_back();
    auto [neg_u, k] = sphere_form(g, cell.center, cell.sq_radius);
    for (const auto& facet : faces_k(cell, d - 1)) {
      auto hit = sweep(box, neg_u, k, facet.functional, -facet.offset);
      if (!hit) continue;  // boundary facet of the hull
      std::vector<PointVec> neighbor;
      for (int i : *hit) neighbor.push_back(box.pts[i]);
      admit(std::move(neighbor));
    }
  }

  std::vector<DeloneCell> out;
  for (auto& [vs, cell] : cells) out.push_back(std::move(cell));
  return out;
}

}  // namespace delstar
