#ifndef DELSTAR_SUBDIVIDE_HPP
#define DELSTAR_SUBDIVIDE_HPP

#include "delstar/cell.hpp"

namespace delstar {

/* Delone subdivision of the star induced by replacing the Gram matrix with
 * gnew: each representative cell is split by the regular subdivision of its
 * vertex set under gnew, the pieces are canonicalized into classes, and each
 * class is certified as a genuine Delone cell of the perturbed lattice
 * (integer points with Gram gnew). The returned star carries gnew and the
 * Subdivided provenance. Throws std::runtime_error("inconsistent
 * subdivision") when certification fails (the perturbation is too large to
 * induce a cell-by-cell refinement), std::invalid_argument when gnew is not
 * symmetric positive definite of the right size. */
DeloneStar subdivide_star(const DeloneStar& star, const QMat& gnew);

/* True iff every cell class of `fine`, up to lattice translation and central
 * symmetry, has its vertex set contained in the vertex set of one cell of
 * `coarse`. Stars must share the point lattice (dimension checked). */
bool refines(const DeloneStar& fine, const DeloneStar& coarse);

/* First eps in 1, 1/2, 1/4, ... (at most `budget` candidates) such that
 * g + eps*gp is positive definite and subdivide_star of the star under it
 * succeeds and refines the star. Throws std::runtime_error("no epsilon found
 * within budget"). */
Rational find_refining_epsilon(const QMat& g, const QMat& gp, const DeloneStar& star,
                               int budget = 40);

}  // namespace delstar

#endif
