#include "delstar/criteria.hpp"

namespace delstar {

CriteriaReport criteria_report(const DeloneStar& star) {
  CriteriaReport rep;
  rep.primitive = true;
  rep.zhitomirski = true;
  rep.ordine = true;
  for (const DeloneCell& cell : star.cells) {
    if (int(cell.vertices.size()) != cell.dim + 1) rep.primitive = false;
    std::vector<Face> fl = all_proper_faces(cell);
    if (cell.dim >= 2 && cell.dim <= 3) fl.push_back(faces_k(cell, cell.dim)[0]);  // the cell itself
    for (const Face& f : fl) {
      if (f.dim == 2 && classify_face(cell, f) != FaceKind::Triangle) rep.zhitomirski = false;
      if (f.dim == 3) {
        FaceKind k = classify_face(cell, f);
        if (k == FaceKind::TriangularPrism || k == FaceKind::Parallelepiped) rep.ordine = false;
      }
    }
  }

  VenkovGraph g = build_venkov_graph(star);
  rep.no_triangles = g.edges.empty();
  BasicCycleSet basics = enumerate_basic_cycles(star, g);
  SpanResult span = check_basic_generation(g, basics);
  rep.basic_generation.holds = span.holds;
  rep.basic_generation.rank = span.span_rank;
  rep.basic_generation.dim = span.cycle_dim;
  rep.basic_generation.vacuous = span.cycle_dim == 0;

  bool yes = rep.primitive || rep.zhitomirski || rep.ordine || rep.basic_generation.holds;
  rep.conclusion = yes ? "yes" : "unknown";
  return rep;
}

}  // namespace delstar
