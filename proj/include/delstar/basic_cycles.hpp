#ifndef DELSTAR_BASIC_CYCLES_HPP
#define DELSTAR_BASIC_CYCLES_HPP

#include "delstar/venkov.hpp"

namespace delstar {

enum class BasicKind { HalfBelt, Contractible };

/* HalfBelt: the signed 3-cycle on the edge classes of one triangular 2-face;
 * witness = the triangle's vertex indices in `cell`. Contractible: the cycle
 * of edge classes around vertex `apex` of the 3-face `witness` (vertex
 * indices in `cell`) all of whose 2-faces at the apex are triangles. */
struct BasicCycle {
  CycleVector cycle;
  BasicKind kind = BasicKind::HalfBelt;
  int cell = -1;
  std::vector<int> witness;
  int apex = -1;
};

struct BasicCycleSet {
  std::vector<BasicCycle> cycles;
};

/* One HalfBelt per distinct class triple (listed first, ordered by triple),
 * then one Contractible per (3-face class, eligible vertex): every vertex of
 * a tetrahedron or octahedron, the apex of a pyramid over a parallelogram;
 * prisms and parallelepipeds contribute none. 3-faces are deduplicated per
 * canonical vertex class across the star. */
BasicCycleSet enumerate_basic_cycles(const DeloneStar& star, const VenkovGraph& g);

}  // namespace delstar

#endif
