#ifndef DELSTAR_CELL_HPP
#define DELSTAR_CELL_HPP

#include <utility>

#include "delstar/lattice.hpp"

namespace delstar {

struct DeloneCell {
  std::vector<PointVec> vertices;  // distinct, sorted lexicographically
  QVec center;                     // basis coordinates, may be non-integer
  Rational sq_radius;
  int dim = 0;  // affine dimension of the vertex set
};

enum class Provenance { Analytic, Lifted, Subdivided };
std::string provenance_name(Provenance p);
std::optional<Provenance> provenance_from_name(const std::string& s);

struct DeloneStar {
  Lattice lattice;
  std::vector<DeloneCell> cells;  // translation-class representatives, lex-min vertex at origin
  Provenance provenance = Provenance::Analytic;
};

/* Unique G-equidistant point in the affine hull of the vertices, with the
 * common squared distance. Throws std::invalid_argument
 * ("degenerate: no equidistant center") when no such point exists. */
std::pair<QVec, Rational> circumsphere(const std::vector<PointVec>& vertices, const QMat& g);

int affine_dim_points(const std::vector<PointVec>& vertices);

/* Sorts and dedupes the vertices, computes circumsphere and affine dim. */
DeloneCell make_cell(std::vector<PointVec> vertices, const QMat& g);

/* Translation-class representative additionally quotiented by central
 * symmetry: translate the lex-min vertex to the origin, do the same for the
 * point-reflected copy, keep the lex-smaller sorted list. */
std::vector<PointVec> canonical_vertex_class(std::vector<PointVec> vs);

DeloneCell canonical_cell(const std::vector<PointVec>& vs, const QMat& g);

/* True iff every lattice point on or inside the circumsphere is a vertex. */
bool verify_empty(const DeloneCell& cell, const Lattice& l);

}  // namespace delstar

#endif
