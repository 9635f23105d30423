#ifndef DELSTAR_LATTICE_HPP
#define DELSTAR_LATTICE_HPP

#include <optional>
#include <string>

#include "delstar/linalg.hpp"
#include "delstar/rational.hpp"

namespace delstar {

enum class Family { Zd, A, Astar, D, Dstar, E6, E6star, E7, E7star, E8 };

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);

/* A full-rank lattice given by the Gram matrix of a fixed basis; points are
 * integer coordinate vectors in that basis.
 *
 * Bases used by the named constructions:
 *   Zd      standard basis.
 *   A, D, E Bourbaki simple roots (Gram = Cartan matrix).
 *   Astar   frame basis f_1..f_d with f_{d+1} = -(f_1+..+f_d),
 *           Gram = I - J/(d+1).
 *   Dstar   e_1, ..., e_{d-1}, h = (1/2, ..., 1/2) in ambient R^d.
 *   E6star, E7star  dual basis of the simple roots (Gram = inverse Cartan).
 */
struct Lattice {
  int dim = 0;
  QMat gram;
  std::optional<Family> family;
  std::optional<std::string> name;
};

/* Throws std::invalid_argument("unsupported family/dimension") outside the
 * allowed ranges (Dstar/D need d >= 3, E-families fix d, Zd/A/Astar d >= 1). */
Lattice named_lattice(Family f, int d);

/* Same Q-span convention as the primal basis: gram := gram^{-1}, family tag
 * flipped to the dual family. */
Lattice dual_lattice(const Lattice& l);

QMat blend_gram(const QMat& g, const QMat& gp, const Rational& eps);

/* Coordinatewise parity of x+y, as bits. */
std::vector<int> parity_sum(const PointVec& x, const PointVec& y);

/* Canonical representative of {v, -v}: flip so the first nonzero entry is
 * positive. Zero vectors are rejected. */
PointVec canonical_edge_class(PointVec v);

bool is_zero(const PointVec& v);
PointVec sub(const PointVec& x, const PointVec& y);
PointVec add(const PointVec& x, const PointVec& y);
PointVec neg(PointVec v);

/* Dstar basis <-> ambient coordinates. Ambient vectors are rational with
 * denominator dividing 2; doubled ambient coordinates are integers. A lattice
 * vector is ambient-integer iff the last basis coordinate is even. */
PointVec dstar_ambient_doubled(const PointVec& basis_coords);
PointVec dstar_basis_from_ambient_doubled(const PointVec& doubled_ambient);

Rational gram_norm(const QMat& g, const PointVec& v);

/* Bourbaki simple roots of E8 as ambient vectors in R^8. */
std::vector<QVec> e8_roots();

}  // namespace delstar

#endif
