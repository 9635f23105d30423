#ifndef DELSTAR_FACES_HPP
#define DELSTAR_FACES_HPP

#include "delstar/cell.hpp"

namespace delstar {

/* A face of a cell, certified by a supporting functional: <functional, v> ==
 * offset for vertices on the face and < offset for all other vertices. */
struct Face {
  int cell_index = -1;
  std::vector<int> vertex_subset;  // sorted indices into the cell's vertex list
  int dim = 0;
  QVec functional;
  Rational offset;
};

enum class FaceKind {
  Triangle,
  Parallelogram,
  Tetrahedron,
  Octahedron,
  PyramidOverParallelogram,
  TriangularPrism,
  Parallelepiped,
  Other,
};
std::string face_kind_name(FaceKind k);

/* All k-faces of the cell, 0 <= k <= cell.dim. The k = cell.dim case returns
 * the cell itself with the zero functional. */
std::vector<Face> faces_k(const DeloneCell& cell, int k);

/* Proper faces of every dimension 0..dim-1 in one pass. */
std::vector<Face> all_proper_faces(const DeloneCell& cell);

/* Classification of 2- and 3-faces by exact vertex/edge combinatorics.
 * Throws std::invalid_argument("not a 2- or 3-face") otherwise. */
FaceKind classify_face(const DeloneCell& cell, const Face& f);

/* (is_2_neighborly, max over vertices of non-adjacent other vertices),
 * computed from the edge graph. */
std::pair<bool, int> neighborliness_profile(const DeloneCell& cell);

}  // namespace delstar

#endif
