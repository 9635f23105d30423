#include "delstar/basic_cycles.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace delstar {

namespace {

int class_id(const VenkovGraph& g, const DeloneCell& cell, int i, int j) {
  int id = g.vertex_index(canonical_edge_class(sub(cell.vertices[j], cell.vertices[i])));
  if (id < 0) throw std::logic_error("edge class missing from graph");
  return id;
}

/* Signed step u -> w appended to a cycle vector. */
void add_step(const VenkovGraph& g, CycleVector& x, int u, int w) {
  int ei = g.edge_index(u, w);
  if (ei < 0) throw std::logic_error("cycle step without a graph edge");
  int s = u < w ? 1 : -1;
  auto it = x.coeffs.find(ei);
  if (it == x.coeffs.end()) {
    x.coeffs[ei] = s;
  } else {
    it->second += s;
    if (it->second == 0) x.coeffs.erase(it);
  }
}

uint64_t subset_mask(const std::vector<int>& idx) {
  uint64_t m = 0;
  for (int i : idx) m |= uint64_t(1) << i;
  return m;
}

/* The vertex figure of `apex` inside a 3-face whose 2-faces at the apex are
 * all triangles is a polygon; returns the apex's neighbors in cyclic order.
 * `tris` lists the triangles at the apex as (other, other) vertex pairs. */
std::vector<int> link_polygon(const std::vector<std::pair<int, int>>& tris) {
  std::map<int, std::vector<int>> nbrs;
  for (auto& [x, y] : tris) {
    nbrs[x].push_back(y);
    nbrs[y].push_back(x);
  }
  for (auto& [v, lst] : nbrs)
    if (lst.size() != 2) throw std::logic_error("apex figure is not a single polygon");
  std::vector<int> seq;
  int start = nbrs.begin()->first;
  int prev = -1, cur = start;
  do {
    seq.push_back(cur);
    const auto& lst = nbrs[cur];
    int nxt = (lst[0] == prev) ? lst[1] : ((lst[1] == prev || prev == -1) ? lst[0] : -1);
    if (nxt == -1) throw std::logic_error("apex figure is not a single polygon");
    /* deterministic direction: from the start, prefer the smaller neighbor */
    if (prev == -1) nxt = std::min(lst[0], lst[1]);
    prev = cur;
    cur = nxt;
  } while (cur != start);
  if (seq.size() != nbrs.size()) throw std::logic_error("apex figure is not a single polygon");
  return seq;
}

}  // namespace

BasicCycleSet enumerate_basic_cycles(const DeloneStar& star, const VenkovGraph& g) {
  BasicCycleSet out;

  /* Half-belts, one per distinct class triple. */
  std::map<std::array<int, 3>, std::pair<int, std::array<int, 3>>> triples;
  std::vector<std::vector<Face>> twofaces(star.cells.size()), threefaces(star.cells.size());
  for (size_t ci = 0; ci < star.cells.size(); ++ci) {
    const DeloneCell& cell = star.cells[ci];
    if (cell.vertices.size() > 64) throw std::logic_error("cell too large for face masks");
    std::vector<Face> fl = all_proper_faces(cell);
    if (cell.dim >= 2 && cell.dim <= 3) fl.push_back(faces_k(cell, cell.dim)[0]);  // the cell itself
    for (Face& f : fl) {
      if (f.dim == 2)
        twofaces[ci].push_back(std::move(f));
      else if (f.dim == 3)
        threefaces[ci].push_back(std::move(f));
    }
    for (const Face& f : twofaces[ci]) {
      if (classify_face(cell, f) != FaceKind::Triangle) continue;
      int a = f.vertex_subset[0], b = f.vertex_subset[1], c = f.vertex_subset[2];
      std::array<int, 3> t = {class_id(g, cell, a, b), class_id(g, cell, a, c),
                              class_id(g, cell, b, c)};
      std::sort(t.begin(), t.end());
      triples.emplace(t, std::pair<int, std::array<int, 3>>{int(ci), {a, b, c}});
    }
  }
  for (const auto& [t, wit] : triples) {
    BasicCycle bc;
    add_step(g, bc.cycle, t[0], t[1]);
    add_step(g, bc.cycle, t[1], t[2]);
    add_step(g, bc.cycle, t[2], t[0]);
    bc.kind = BasicKind::HalfBelt;
    bc.cell = wit.first;
    bc.witness.assign(wit.second.begin(), wit.second.end());
    out.cycles.push_back(std::move(bc));
  }

  /* Contractible cycles around all-triangle vertices of 3-face classes. */
  std::set<std::vector<PointVec>> seen3;
  for (size_t ci = 0; ci < star.cells.size(); ++ci) {
    const DeloneCell& cell = star.cells[ci];
    std::vector<std::pair<uint64_t, const Face*>> tri2, par2;
    for (const Face& f : twofaces[ci]) {
      auto kind = classify_face(cell, f);
      (kind == FaceKind::Triangle ? tri2 : par2).push_back({subset_mask(f.vertex_subset), &f});
    }
    for (const Face& f3 : threefaces[ci]) {
      std::vector<PointVec> pts;
      for (int i : f3.vertex_subset) pts.push_back(cell.vertices[i]);
      if (!seen3.insert(canonical_vertex_class(std::move(pts))).second) continue;
      uint64_t m3 = subset_mask(f3.vertex_subset);
      for (int v : f3.vertex_subset) {
        uint64_t vbit = uint64_t(1) << v;
        bool all_triangles = true;
        for (auto& [m2, f2] : par2)
          if ((m2 & ~m3) == 0 && (m2 & vbit)) {
            all_triangles = false;
            break;
          }
        if (!all_triangles) continue;
        std::vector<std::pair<int, int>> tris;
        for (auto& [m2, f2] : tri2) {
          if ((m2 & ~m3) != 0 || !(m2 & vbit)) continue;
          int o[2], n = 0;
          for (int i : f2->vertex_subset)
            if (i != v) o[n++] = i;
          tris.push_back({o[0], o[1]});
        }
        if (tris.empty()) continue;
        BasicCycle bc;
        std::vector<int> seq = link_polygon(tris);
        for (size_t i = 0; i < seq.size(); ++i) {
          int u = class_id(g, cell, v, seq[i]);
          int w = class_id(g, cell, v, seq[(i + 1) % seq.size()]);
          add_step(g, bc.cycle, u, w);
        }
        if (bc.cycle.coeffs.empty()) continue;
        bc.kind = BasicKind::Contractible;
        bc.cell = int(ci);
        bc.witness = f3.vertex_subset;
        bc.apex = v;
        out.cycles.push_back(std::move(bc));
      }
    }
  }
  return out;
}

}  // namespace delstar
