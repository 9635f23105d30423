#ifndef DELSTAR_REDUCE_HPP
#define DELSTAR_REDUCE_HPP

#include "delstar/span.hpp"
#include "delstar/taxonomy.hpp"

namespace delstar {

enum class ReduceStage {
  DVertexRemoval,
  IIEdgeSwap,
  DEdgeSwap,
  HEdgeSwap,
  IVertexRemoval,
};
std::string reduce_stage_name(ReduceStage s);

/* One splice x -= coefficient * delta, where delta is the recorded
 * combination of basic cycles. Edge stages target a graph edge index,
 * vertex stages a graph vertex index. */
struct ReduceStep {
  ReduceStage stage;
  int target = -1;
  Rational coefficient;
  std::vector<std::pair<Rational, int>> local_terms;  // delta over basic cycles
};

struct ReduceResult {
  std::vector<ReduceStep> trace;
  CycleVector s_only;       // representative reached before the final discharge
  Certificate certificate;  // expresses the input cycle over the basic set
};

/* Rewrites x within its coset modulo the basic span, in stages: remove
 * diagonal-vertex incidences, then integer-integer edges, then diagonal
 * edges, then long half-half edges, then integer-vertex incidences. Each
 * splice difference is certified as a combination of basic cycles supported
 * on one 3-face of the star; the surviving cycle runs along skeleton (S)
 * edges only and is discharged by exact solve over the whole basic set.
 * Witness searches are exhaustive and smallest-index first, so the result
 * is deterministic. Throws std::runtime_error starting with "witness not
 * found" when a stage cannot locate its supporting face,
 * std::invalid_argument("not a cycle") for invalid input; propagates
 * NotInSpanError from the final discharge. */
ReduceResult reduce_cycle_d2m(const DeloneStar& star, const VenkovGraph& g,
                              const BasicCycleSet& basics, const DStarTaxonomy& tax,
                              const CycleVector& x);

}  // namespace delstar

#endif
