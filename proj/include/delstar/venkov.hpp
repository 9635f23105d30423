#ifndef DELSTAR_VENKOV_HPP
#define DELSTAR_VENKOV_HPP

#include <array>
#include <map>

#include "delstar/faces.hpp"

namespace delstar {

/* Edge of the class graph: an unordered pair of vertex indices (a < b) plus
 * one witness triangle, identified by a cell index of the star and the three
 * vertex indices of the triangular 2-face inside that cell. */
struct GraphEdge {
  int a = 0, b = 0;
  int witness_cell = -1;
  std::array<int, 3> witness_triangle{};
};

/* Graph on the +-classes of cell edge vectors of a star. Two classes are
 * adjacent iff they occur together as edges of a triangular 2-face of some
 * representative cell. Simple by construction; vertices sorted
 * lexicographically, edges sorted by index pair. */
struct VenkovGraph {
  std::vector<PointVec> vertices;
  std::vector<GraphEdge> edges;
  std::vector<std::vector<std::pair<int, int>>> adj;  // vertex -> (neighbor, edge index)

  int vertex_index(const PointVec& cls) const;  // -1 if absent
  int edge_index(int a, int b) const;           // -1 if absent
};

VenkovGraph build_venkov_graph(const DeloneStar& star);

/* Rational edge weights with zero net flow at every vertex. The edge (a, b)
 * with a < b is oriented a -> b; a positive coefficient means flow from the
 * lex-smaller class to the larger one. */
struct CycleVector {
  std::map<int, Rational> coeffs;  // edge index -> nonzero coefficient
};

bool in_cycle_space(const VenkovGraph& g, const CycleVector& x);

/* First Betti number |E| - |V| + #components. */
int cycle_space_dim(const VenkovGraph& g);

/* One cycle per non-tree edge of a fixed spanning forest (breadth-first in
 * index order). Together they form a basis of the cycle space. */
std::vector<CycleVector> fundamental_cycles(const VenkovGraph& g);

/* True iff every vertex class of `sub` appears in `super` and every edge of
 * `sub` joins classes that are also adjacent in `super`. */
bool graph_is_subgraph(const VenkovGraph& sub, const VenkovGraph& super);

}  // namespace delstar

#endif
