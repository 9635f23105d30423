#ifndef DELSTAR_TAXONOMY_HPP
#define DELSTAR_TAXONOMY_HPP

#include <string>

#include "delstar/venkov.hpp"

namespace delstar {

enum class VertexKind { HalfInteger, DVertex, IVertex };
enum class EdgeKind { IH, II, Dd, S, H };

/* Kinds of classes and adjacencies in a Dstar-subdivision graph, d = 2m or
 * 2m + 1. A class is integer when its doubled ambient coordinates are all
 * even, half-integer when all odd. DVertex = integer class with exactly m
 * nonzero ambient coordinates (even d only; folded into IVertex for odd d).
 * Half-integer pairs are graded by the number of differing ambient
 * coordinates, min over the two sign representatives: 1 -> S, m -> Dd (even
 * d only, folded into H for odd d), anything else -> H. */
struct DStarTaxonomy {
  std::vector<VertexKind> vertex_kind;  // by graph vertex index
  std::vector<EdgeKind> edge_kind;      // by graph edge index
  int m = 0;
  bool odd = false;
};

/* Throws std::runtime_error("not a Dstar graph") when some class is neither
 * ambient-integer nor all-half-integer. */
DStarTaxonomy classify_dstar_elements(const VenkovGraph& g, int m, bool odd);

struct ShapeReport {
  bool ok = true;
  int n_vertices = 0;
  int n_edges = 0;
  std::vector<std::string> failures;
};

/* Checks the unsubdivided graph: d integer and 2^(d-1) half-integer classes,
 * no integer-integer edges, every integer class adjacent to every
 * half-integer class, and half-integer adjacency exactly "differ in one
 * coordinate". */
ShapeReport verify_dstar_graph_shape(const VenkovGraph& g, int m, bool odd);

struct DegreeReport {
  bool ok = true;
  std::vector<std::string> violations;
  std::map<int, int> dvertex_degrees;  // DVertex index -> half-integer degree
};

/* For every integer vertex with k nonzero coordinates (skipping k = m when d
 * is even): its half-integer neighborhood must be exactly the 2^(d-k)
 * classes that agree with half of it on its support. DVertex degrees are
 * recorded without judgment. */
DegreeReport lemma_degree_check(const VenkovGraph& g, const DStarTaxonomy& tax, int m, bool odd);

}  // namespace delstar

#endif
