#ifndef DELSTAR_STAR_LIFTED_HPP
#define DELSTAR_STAR_LIFTED_HPP

#include <stdexcept>

#include "delstar/cell.hpp"

namespace delstar {

struct WindowError : std::runtime_error {
  WindowError() : std::runtime_error("window too small") {}
};

/* Generic exact backend: grows an empty sphere to a seed cell at the origin,
 * then walks the facet-neighbor graph of translation classes. Candidate
 * lattice points are restricted to the coordinate box [-window, window]^d;
 * the restriction is validated a posteriori (every produced cell must pass
 * the global verify_empty and every facet pivot must land), otherwise
 * WindowError ("window too small") is thrown. */
DeloneStar delone_star_lifted(const Lattice& l, int window);

/* Retries delone_star_lifted with doubling windows starting at 2. */
DeloneStar delone_star_lifted_auto(const Lattice& l, int max_window = 16);

/* One full-dimensional Delone cell incident to the origin, found by
 * deterministic empty-sphere growth. */
DeloneCell lifted_seed_cell(const Lattice& l, int window);

/* Full-dimensional cells of the Delone subdivision of a finite point set
 * under the metric g (equivalently, the regular subdivision induced by the
 * lifting v -> v^T g v). Cells keep their geometric positions; the list is
 * sorted by vertex list. Throws std::invalid_argument if the points do not
 * affinely span dimension g.rows. */
std::vector<DeloneCell> finite_delone_cells(std::vector<PointVec> pts, const QMat& g);

}  // namespace delstar

#endif
