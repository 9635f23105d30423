#include "delstar/venkov.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace delstar {

int VenkovGraph::vertex_index(const PointVec& cls) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), cls);
  if (it == vertices.end() || *it != cls) return -1;
  return int(it - vertices.begin());
}

int VenkovGraph::edge_index(int a, int b) const {
  if (a > b) std::swap(a, b);
  std::pair<int, int> key{a, b};
  auto it = std::lower_bound(
      edges.begin(), edges.end(), key,
      [](const GraphEdge& e, const std::pair<int, int>& p) {
        return std::pair<int, int>{e.a, e.b} < p;
      });
  if (it == edges.end() || it->a != a || it->b != b) return -1;
  return int(it - edges.begin());
}

namespace {

PointVec edge_class_of(const DeloneCell& cell, int i, int j) {
  return canonical_edge_class(sub(cell.vertices[j], cell.vertices[i]));
}

}  // namespace

VenkovGraph build_venkov_graph(const DeloneStar& star) {
  VenkovGraph g;

  std::set<PointVec> classes;
  std::vector<std::vector<Face>> twofaces(star.cells.size());
  for (size_t ci = 0; ci < star.cells.size(); ++ci) {
    const DeloneCell& cell = star.cells[ci];
    std::vector<Face> fl = all_proper_faces(cell);
    if (cell.dim <= 2) fl.push_back(faces_k(cell, cell.dim)[0]);  // the cell itself
    for (Face& f : fl) {
      if (f.dim == 1)
        classes.insert(edge_class_of(cell, f.vertex_subset[0], f.vertex_subset[1]));
      else if (f.dim == 2)
        twofaces[ci].push_back(std::move(f));
    }
  }
  g.vertices.assign(classes.begin(), classes.end());

  std::map<std::pair<int, int>, GraphEdge> em;
  for (size_t ci = 0; ci < star.cells.size(); ++ci) {
    const DeloneCell& cell = star.cells[ci];
    for (const Face& f : twofaces[ci]) {
      if (classify_face(cell, f) != FaceKind::Triangle) continue;
      int a = f.vertex_subset[0], b = f.vertex_subset[1], c = f.vertex_subset[2];
      int ids[3] = {g.vertex_index(edge_class_of(cell, a, b)),
                    g.vertex_index(edge_class_of(cell, a, c)),
                    g.vertex_index(edge_class_of(cell, b, c))};
      if (ids[0] == ids[1] || ids[0] == ids[2] || ids[1] == ids[2])
        throw std::logic_error("triangle with a repeated edge class");
      for (int u = 0; u < 3; ++u)
        for (int v = u + 1; v < 3; ++v) {
          std::pair<int, int> key{std::min(ids[u], ids[v]), std::max(ids[u], ids[v])};
          if (em.count(key)) continue;
          GraphEdge e;
          e.a = key.first;
          e.b = key.second;
          e.witness_cell = int(ci);
          e.witness_triangle = {a, b, c};
          em.emplace(key, e);
        }
    }
  }

  g.edges.reserve(em.size());
  for (auto& [key, e] : em) g.edges.push_back(e);
  g.adj.assign(g.vertices.size(), {});
  for (size_t ei = 0; ei < g.edges.size(); ++ei) {
    g.adj[g.edges[ei].a].push_back({g.edges[ei].b, int(ei)});
    g.adj[g.edges[ei].b].push_back({g.edges[ei].a, int(ei)});
  }
  for (auto& lst : g.adj) std::sort(lst.begin(), lst.end());
  return g;
}

bool in_cycle_space(const VenkovGraph& g, const CycleVector& x) {
  std::map<int, Rational> flow;
  for (const auto& [ei, c] : x.coeffs) {
    if (ei < 0 || ei >= int(g.edges.size())) return false;
    if (c == 0) continue;
    flow[g.edges[ei].a] -= c;
    flow[g.edges[ei].b] += c;
  }
  for (const auto& [v, f] : flow)
    if (!(f == 0)) return false;
  return true;
}

namespace {

/* Forest as parent pointers; roots have parent -1. */
struct Forest {
  std::vector<int> parent, parent_edge, depth;
};

Forest spanning_forest(const VenkovGraph& g) {
  int n = int(g.vertices.size());
  Forest f{std::vector<int>(n, -1), std::vector<int>(n, -1), std::vector<int>(n, 0)};
  std::vector<bool> seen(n, false);
  std::vector<int> queue;
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    queue.assign(1, root);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (const auto& [v, ei] : g.adj[u]) {
        if (seen[v]) continue;
        seen[v] = true;
        f.parent[v] = u;
        f.parent_edge[v] = ei;
        f.depth[v] = f.depth[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return f;
}

/* Adds the +-1 contribution of traversing edge `ei` from `u`. */
void add_step(const VenkovGraph& g, CycleVector& x, int ei, int u) {
  int s = g.edges[ei].a == u ? 1 : -1;
  auto it = x.coeffs.find(ei);
  if (it == x.coeffs.end()) {
    x.coeffs[ei] = s;
  } else {
    it->second += s;
    if (it->second == 0) x.coeffs.erase(it);
  }
}

}  // namespace

int cycle_space_dim(const VenkovGraph& g) {
  const Forest f = spanning_forest(g);
  int components = 0;
  for (int v = 0; v < int(g.vertices.size()); ++v)
    if (f.parent[v] == -1) ++components;
  return int(g.edges.size()) - int(g.vertices.size()) + components;
}

std::vector<CycleVector> fundamental_cycles(const VenkovGraph& g) {
  const Forest f = spanning_forest(g);
  std::vector<bool> in_tree(g.edges.size(), false);
  for (int v = 0; v < int(g.vertices.size()); ++v)
    if (f.parent_edge[v] >= 0) in_tree[f.parent_edge[v]] = true;

  std::vector<CycleVector> out;
  for (size_t ei = 0; ei < g.edges.size(); ++ei) {
    if (in_tree[ei]) continue;
    int a = g.edges[ei].a, b = g.edges[ei].b;
    CycleVector x;
    add_step(g, x, int(ei), a);  // a -> b across the non-tree edge
    /* then back from b to a along the forest */
    int u = b, v = a;
    while (f.depth[u] > f.depth[v]) {
      add_step(g, x, f.parent_edge[u], u);
      u = f.parent[u];
    }
    while (f.depth[v] > f.depth[u]) {
      add_step(g, x, f.parent_edge[v], f.parent[v]);
      v = f.parent[v];
    }
    while (u != v) {
      add_step(g, x, f.parent_edge[u], u);
      u = f.parent[u];
      add_step(g, x, f.parent_edge[v], f.parent[v]);
      v = f.parent[v];
    }
    out.push_back(std::move(x));
  }
  return out;
}

bool graph_is_subgraph(const VenkovGraph& sub, const VenkovGraph& super) {
  std::vector<int> to_super(sub.vertices.size());
  for (size_t i = 0; i < sub.vertices.size(); ++i) {
    to_super[i] = super.vertex_index(sub.vertices[i]);
    if (to_super[i] < 0) return false;
  }
  for (const GraphEdge& e : sub.edges)
    if (super.edge_index(to_super[e.a], to_super[e.b]) < 0) return false;
  return true;
}

}  // namespace delstar
