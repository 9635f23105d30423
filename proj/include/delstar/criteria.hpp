#ifndef DELSTAR_CRITERIA_HPP
#define DELSTAR_CRITERIA_HPP

#include "delstar/span.hpp"

namespace delstar {

struct BasicGenerationReport {
  bool holds = false;
  int rank = 0;
  int dim = 0;
  bool vacuous = false;  // zero-dimensional cycle space
};

/* Sufficient conditions checked on a star, named as in the report schema:
 * primitive       every cell is a simplex;
 * zhitomirski     every 2-face of every cell is a triangle;
 * ordine          no 3-face is a triangular prism or a parallelepiped;
 * basic_generation the basic cycles span the cycle space of the class graph.
 * conclusion is "yes" when any of the four holds, else "unknown".
 * no_triangles flags the degenerate situation of a graph with no edges at
 * all (then basic_generation holds vacuously). */
struct CriteriaReport {
  bool primitive = false;
  bool zhitomirski = false;
  bool ordine = false;
  BasicGenerationReport basic_generation;
  bool no_triangles = false;
  std::string conclusion;
};

CriteriaReport criteria_report(const DeloneStar& star);

}  // namespace delstar

#endif
