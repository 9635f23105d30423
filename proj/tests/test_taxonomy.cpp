#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "delstar/star_analytic.hpp"
#include "delstar/taxonomy.hpp"

using namespace delstar;

namespace {

struct GraphAndStar {
  DeloneStar star;
  VenkovGraph g;
};

const GraphAndStar& dstar_graph(int d) {
  static std::map<int, GraphAndStar> cache;
  auto it = cache.find(d);
  if (it == cache.end()) {
    GraphAndStar gs;
    gs.star = delone_star_analytic(Family::Dstar, d);
    gs.g = build_venkov_graph(gs.star);
    it = cache.emplace(d, std::move(gs)).first;
  }
  return it->second;
}

/* Hand-built graph from doubled ambient vectors plus an edge list (indices
 * into the input order). Witnesses are dummies. */
VenkovGraph synth(const std::vector<PointVec>& doubled,
                  const std::vector<std::pair<int, int>>& edge_pairs) {
  VenkovGraph g;
  std::vector<PointVec> classes;
  for (const PointVec& da : doubled)
    classes.push_back(canonical_edge_class(dstar_basis_from_ambient_doubled(da)));
  g.vertices = classes;
  std::sort(g.vertices.begin(), g.vertices.end());
  std::map<std::pair<int, int>, GraphEdge> em;
  for (auto [i, j] : edge_pairs) {
    GraphEdge e;
    e.a = g.vertex_index(classes[i]);
    e.b = g.vertex_index(classes[j]);
    if (e.a > e.b) std::swap(e.a, e.b);
    em.emplace(std::pair{e.a, e.b}, e);
  }
  for (auto& [k, e] : em) g.edges.push_back(e);
  g.adj.assign(g.vertices.size(), {});
  for (size_t ei = 0; ei < g.edges.size(); ++ei) {
    g.adj[g.edges[ei].a].push_back({g.edges[ei].b, int(ei)});
    g.adj[g.edges[ei].b].push_back({g.edges[ei].a, int(ei)});
  }
  for (auto& lst : g.adj) std::sort(lst.begin(), lst.end());
  return g;
}

std::map<EdgeKind, int> edge_tally(const DStarTaxonomy& tax) {
  std::map<EdgeKind, int> t;
  for (EdgeKind k : tax.edge_kind) t[k]++;
  return t;
}

std::map<VertexKind, int> vertex_tally(const DStarTaxonomy& tax) {
  std::map<VertexKind, int> t;
  for (VertexKind k : tax.vertex_kind) t[k]++;
  return t;
}

/* Graph with one edge removed (adjacency rebuilt). */
VenkovGraph drop_edge(VenkovGraph g, int ei) {
  g.edges.erase(g.edges.begin() + ei);
  g.adj.assign(g.vertices.size(), {});
  for (size_t k = 0; k < g.edges.size(); ++k) {
    g.adj[g.edges[k].a].push_back({g.edges[k].b, int(k)});
    g.adj[g.edges[k].b].push_back({g.edges[k].a, int(k)});
  }
  for (auto& lst : g.adj) std::sort(lst.begin(), lst.end());
  return g;
}

}  // namespace

TEST_CASE("kinds in the base graph of Dstar 6") {
  const auto& gs = dstar_graph(6);
  auto tax = classify_dstar_elements(gs.g, 3, false);
  auto vt = vertex_tally(tax);
  CHECK(vt[VertexKind::IVertex] == 6);
  CHECK(vt[VertexKind::HalfInteger] == 32);
  CHECK(vt[VertexKind::DVertex] == 0);
  auto et = edge_tally(tax);
  CHECK(et[EdgeKind::IH] == 192);
  CHECK(et[EdgeKind::S] == 96);
  CHECK(et[EdgeKind::II] == 0);
  CHECK(et[EdgeKind::Dd] == 0);
  CHECK(et[EdgeKind::H] == 0);

  SUBCASE("two half classes differing in one coordinate sit on an S-edge") {
    PointVec h1 = canonical_edge_class(
        dstar_basis_from_ambient_doubled(PointVec{1, 1, 1, 1, 1, 1}));
    PointVec h2 = canonical_edge_class(
        dstar_basis_from_ambient_doubled(PointVec{-1, 1, 1, 1, 1, 1}));
    int a = gs.g.vertex_index(h1), b = gs.g.vertex_index(h2);
    REQUIRE(a >= 0);
    REQUIRE(b >= 0);
    int ei = gs.g.edge_index(a, b);
    REQUIRE(ei >= 0);
    CHECK(tax.edge_kind[ei] == EdgeKind::S);
  }

  SUBCASE("dimension mismatch is rejected") {
    CHECK_THROWS_WITH_AS(classify_dstar_elements(gs.g, 2, false), "not a Dstar graph",
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(classify_dstar_elements(gs.g, 3, true), "not a Dstar graph",
                         std::runtime_error);
  }
}

TEST_CASE("diagonal kinds on a synthetic even-dimension graph") {
  // doubled ambient: a DVertex (1,1,1,0,0,0), an I-vertex e_1, and a
  // half-integer pair differing in m = 3 coordinates
  std::vector<PointVec> doubled = {
      {2, 2, 2, 0, 0, 0}, {2, 0, 0, 0, 0, 0}, {1, 1, 1, 1, 1, 1}, {1, 1, 1, -1, -1, -1}};
  auto g = synth(doubled, {{0, 2}, {2, 3}, {1, 0}, {1, 2}});
  auto tax = classify_dstar_elements(g, 3, false);

  int dv = g.vertex_index(canonical_edge_class(dstar_basis_from_ambient_doubled(doubled[0])));
  int iv = g.vertex_index(canonical_edge_class(dstar_basis_from_ambient_doubled(doubled[1])));
  int h1 = g.vertex_index(canonical_edge_class(dstar_basis_from_ambient_doubled(doubled[2])));
  int h2 = g.vertex_index(canonical_edge_class(dstar_basis_from_ambient_doubled(doubled[3])));
  CHECK(tax.vertex_kind[dv] == VertexKind::DVertex);
  CHECK(tax.vertex_kind[iv] == VertexKind::IVertex);
  CHECK(tax.vertex_kind[h1] == VertexKind::HalfInteger);
  CHECK(tax.edge_kind[g.edge_index(dv, h1)] == EdgeKind::IH);
  CHECK(tax.edge_kind[g.edge_index(h1, h2)] == EdgeKind::Dd);
  CHECK(tax.edge_kind[g.edge_index(iv, dv)] == EdgeKind::II);
  CHECK(tax.edge_kind[g.edge_index(iv, h1)] == EdgeKind::IH);

  SUBCASE("odd dimension folds the diagonal kinds away") {
    std::vector<PointVec> d7 = {
        {2, 2, 2, 0, 0, 0, 0}, {1, 1, 1, 1, 1, 1, 1}, {1, 1, 1, -1, -1, -1, 1}};
    auto g7 = synth(d7, {{0, 1}, {1, 2}});
    auto tax7 = classify_dstar_elements(g7, 3, true);
    int v0 = g7.vertex_index(canonical_edge_class(dstar_basis_from_ambient_doubled(d7[0])));
    int v1 = g7.vertex_index(canonical_edge_class(dstar_basis_from_ambient_doubled(d7[1])));
    int v2 = g7.vertex_index(canonical_edge_class(dstar_basis_from_ambient_doubled(d7[2])));
    CHECK(tax7.vertex_kind[v0] == VertexKind::IVertex);  // k = m but odd d
    CHECK(tax7.edge_kind[g7.edge_index(v1, v2)] == EdgeKind::H);  // differ in m but odd d
  }
}

TEST_CASE("base graph shapes") {
  for (int d : {6, 7, 8}) {
    const auto& gs = dstar_graph(d);
    auto rep = verify_dstar_graph_shape(gs.g, d / 2, d % 2 == 1);
    CHECK(rep.ok);
    CHECK(rep.failures.empty());
    CHECK(rep.n_vertices == (d == 6 ? 38 : d == 7 ? 71 : 136));
    CHECK(rep.n_edges == (d == 6 ? 288 : d == 7 ? 672 : 1536));
  }

  SUBCASE("a dropped edge breaks the shape") {
    const auto& gs = dstar_graph(6);
    auto tax = classify_dstar_elements(gs.g, 3, false);
    int ih = -1, sk = -1;
    for (size_t ei = 0; ei < gs.g.edges.size(); ++ei) {
      if (tax.edge_kind[ei] == EdgeKind::IH && ih < 0) ih = int(ei);
      if (tax.edge_kind[ei] == EdgeKind::S && sk < 0) sk = int(ei);
    }
    auto rep1 = verify_dstar_graph_shape(drop_edge(gs.g, ih), 3, false);
    CHECK_FALSE(rep1.ok);
    auto rep2 = verify_dstar_graph_shape(drop_edge(gs.g, sk), 3, false);
    CHECK_FALSE(rep2.ok);
  }
}

TEST_CASE("degree law for integer vertices") {
  for (int d : {6, 7}) {
    const auto& gs = dstar_graph(d);
    auto tax = classify_dstar_elements(gs.g, d / 2, d % 2 == 1);
    auto rep = lemma_degree_check(gs.g, tax, d / 2, d % 2 == 1);
    CHECK(rep.ok);
    CHECK(rep.violations.empty());
    CHECK(rep.dvertex_degrees.empty());  // base graphs have no diagonal vertices
    // base integer classes have k = 1, so degree 2^(d-1)
    for (int v = 0; v < int(gs.g.vertices.size()); ++v) {
      if (tax.vertex_kind[v] == VertexKind::HalfInteger) continue;
      int halves = 0;
      for (const auto& [w, ei] : gs.g.adj[v])
        if (tax.vertex_kind[w] == VertexKind::HalfInteger) ++halves;
      CHECK(halves == (1 << (d - 1)));
    }
  }

  SUBCASE("a dropped integer-half edge is flagged") {
    const auto& gs = dstar_graph(6);
    auto tax = classify_dstar_elements(gs.g, 3, false);
    int ih = -1;
    for (size_t ei = 0; ei < gs.g.edges.size(); ++ei)
      if (tax.edge_kind[ei] == EdgeKind::IH) {
        ih = int(ei);
        break;
      }
    auto broken = drop_edge(gs.g, ih);
    auto tax2 = classify_dstar_elements(broken, 3, false);
    auto rep = lemma_degree_check(broken, tax2, 3, false);
    CHECK_FALSE(rep.ok);
    CHECK(!rep.violations.empty());
  }

  SUBCASE("diagonal degrees are recorded, not judged") {
    std::vector<PointVec> doubled = {{2, 2, 2, 0, 0, 0}, {1, 1, 1, 1, 1, 1}};
    auto g = synth(doubled, {{0, 1}});
    auto tax = classify_dstar_elements(g, 3, false);
    auto rep = lemma_degree_check(g, tax, 3, false);
    int dv = g.vertex_index(canonical_edge_class(dstar_basis_from_ambient_doubled(doubled[0])));
    REQUIRE(rep.dvertex_degrees.count(dv) == 1);
    CHECK(rep.dvertex_degrees.at(dv) == 1);
  }
}
