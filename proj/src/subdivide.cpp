#include "delstar/subdivide.hpp"

#include <algorithm>
#include <map>

#include "delstar/star_lifted.hpp"

namespace delstar {

namespace {

bool is_symmetric(const QMat& g) {
  if (g.rows != g.cols) return false;
  for (int i = 0; i < g.rows; ++i)
    for (int j = i + 1; j < g.cols; ++j)
      if (g.at(i, j) != g.at(j, i)) return false;
  return true;
}

/* vs + t subset of sorted `host`? */
bool translate_into(const std::vector<PointVec>& vs, const PointVec& t,
                    const std::vector<PointVec>& host) {
  for (const auto& v : vs)
    if (!std::binary_search(host.begin(), host.end(), add(v, t))) return false;
  return true;
}

}  // namespace

DeloneStar subdivide_star(const DeloneStar& star, const QMat& gnew) {
  if (gnew.rows != star.lattice.dim || !is_symmetric(gnew) || !is_positive_definite(gnew))
    throw std::invalid_argument("perturbed Gram must be symmetric positive definite");
  Lattice pert;
  pert.dim = star.lattice.dim;
  pert.gram = gnew;

  std::map<std::vector<PointVec>, DeloneCell> classes;
  for (const auto& cell : star.cells) {
    for (const auto& piece : finite_delone_cells(cell.vertices, gnew)) {
      auto canon = canonical_vertex_class(piece.vertices);
      if (classes.count(canon)) continue;
      DeloneCell cc = make_cell(canon, gnew);
      if (cc.dim != pert.dim || !verify_empty(cc, pert))
        throw std::runtime_error("inconsistent subdivision");
      classes.emplace(std::move(canon), std::move(cc));
    }
  }

  DeloneStar out;
  out.lattice = std::move(pert);
  out.provenance = Provenance::Subdivided;
  for (auto& [vs, cell] : classes) out.cells.push_back(std::move(cell));
  return out;
}

bool refines(const DeloneStar& fine, const DeloneStar& coarse) {
  if (fine.lattice.dim != coarse.lattice.dim)
    throw std::invalid_argument("stars have different dimensions");
  for (const auto& f : fine.cells) {
    std::vector<PointVec> direct = f.vertices;
    std::vector<PointVec> mirror;
    for (const auto& v : direct) mirror.push_back(neg(v));
    std::sort(mirror.begin(), mirror.end());
    bool placed = false;
    for (const auto& c : coarse.cells) {
      for (const auto* vs : {&direct, &mirror}) {
        for (const auto& anchor : c.vertices) {
          if (translate_into(*vs, sub(anchor, vs->front()), c.vertices)) {
            placed = true;
            break;
          }
        }
        if (placed) break;
      }
      if (placed) break;
    }
    if (!placed) return false;
  }
  return true;
}

Rational find_refining_epsilon(const QMat& g, const QMat& gp, const DeloneStar& star,
                               int budget) {
  Rational eps = 1;
  for (int k = 0; k < budget; ++k, eps /= 2) {
    QMat blend = blend_gram(g, gp, eps);
    if (!is_symmetric(blend) || !is_positive_definite(blend)) continue;
    try {
      DeloneStar fine = subdivide_star(star, blend);
      if (refines(fine, star)) return eps;
    } catch (const std::runtime_error&) {
      // inconsistent at this eps; halve and retry
    }
  }
  throw std::runtime_error("no epsilon found within budget");
}

}  // namespace delstar
