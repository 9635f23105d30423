#ifndef DELSTAR_STAR_ANALYTIC_HPP
#define DELSTAR_STAR_ANALYTIC_HPP

#include "delstar/cell.hpp"

namespace delstar {

/* Closed-form Delone stars for the named families.
 *
 *   Dstar, even d = 2m : free sums of two m-cubes, one class per choice of
 *                        the m half-integer coordinate positions up to
 *                        complementation.
 *   Dstar, odd d = 2m+1: joins of two m-cubes, classes found by canonical
 *                        enumeration over (unique position, half support).
 *   Astar              : simplices of consecutive partial sums of the d+1
 *                        frame vectors, one class per ordering up to
 *                        rotation and reversal.
 *   E8                 : one cross-polytope cell and one simplex cell.
 *   E6star, E7star     : every class is a copy of one cell shape; the classes
 *                        are found by certified empty-sphere growth and
 *                        pivoting (40 classes for E6star, 36 for E7star).
 *
 * Every emitted cell is checked with verify_empty. Throws
 * std::invalid_argument("unsupported family") for other families. */
DeloneStar delone_star_analytic(Family family, int d);

}  // namespace delstar

#endif
