#ifndef DELSTAR_ENUMERATE_HPP
#define DELSTAR_ENUMERATE_HPP

#include "delstar/linalg.hpp"

namespace delstar {

/* All z in Z^d with (z - center)^T G (z - center) <= sq_radius, G positive
 * definite. Exhaustive recursive coordinate bounding from the LDL^T
 * decomposition; no square roots, the per-coordinate range is scanned outward
 * from the nearest integers with the exact quadratic predicate. */
std::vector<PointVec> points_in_ellipsoid(const QMat& g, const QVec& center,
                                          const Rational& sq_radius);

}  // namespace delstar

#endif
