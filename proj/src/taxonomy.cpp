#include "delstar/taxonomy.hpp"

#include <algorithm>
#include <stdexcept>

namespace delstar {

namespace {

bool all_even(const PointVec& v) {
  return std::all_of(v.begin(), v.end(), [](Coord c) { return c % 2 == 0; });
}

bool all_odd(const PointVec& v) {
  return std::all_of(v.begin(), v.end(), [](Coord c) { return c % 2 != 0; });
}

int nonzeros(const PointVec& v) {
  return int(std::count_if(v.begin(), v.end(), [](Coord c) { return c != 0; }));
}

/* Differing ambient coordinates of two half-integer classes, min over the
 * two sign representatives of the second. */
int half_diff(const PointVec& a, const PointVec& b) {
  int d1 = 0, d2 = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) ++d1;
    if (a[i] != -b[i]) ++d2;
  }
  return std::min(d1, d2);
}

/* Does some sign representative of half-integer class h agree with half of
 * the integer vector u on the support of u? (Doubled coordinates: h == u/2.) */
bool agrees_on_support(const PointVec& u, const PointVec& h) {
  bool plus = true, minus = true;
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    if (2 * h[i] != u[i]) plus = false;
    if (-2 * h[i] != u[i]) minus = false;
  }
  return plus || minus;
}

}  // namespace

DStarTaxonomy classify_dstar_elements(const VenkovGraph& g, int m, bool odd) {
  const int d = odd ? 2 * m + 1 : 2 * m;
  DStarTaxonomy tax;
  tax.m = m;
  tax.odd = odd;

  std::vector<PointVec> doubled;
  doubled.reserve(g.vertices.size());
  for (const PointVec& v : g.vertices) {
    if (int(v.size()) != d) throw std::runtime_error("not a Dstar graph");
    doubled.push_back(dstar_ambient_doubled(v));
  }

  tax.vertex_kind.reserve(g.vertices.size());
  for (const PointVec& da : doubled) {
    if (all_even(da))
      tax.vertex_kind.push_back(!odd && nonzeros(da) == m ? VertexKind::DVertex
                                                          : VertexKind::IVertex);
    else if (all_odd(da))
      tax.vertex_kind.push_back(VertexKind::HalfInteger);
    else
      throw std::runtime_error("not a Dstar graph");
  }

  tax.edge_kind.reserve(g.edges.size());
  for (const GraphEdge& e : g.edges) {
    bool ha = tax.vertex_kind[e.a] == VertexKind::HalfInteger;
    bool hb = tax.vertex_kind[e.b] == VertexKind::HalfInteger;
    if (!ha && !hb) {
      tax.edge_kind.push_back(EdgeKind::II);
    } else if (ha != hb) {
      tax.edge_kind.push_back(EdgeKind::IH);
    } else {
      int j = half_diff(doubled[e.a], doubled[e.b]);
      if (j == 1)
        tax.edge_kind.push_back(EdgeKind::S);
      else if (!odd && j == m)
        tax.edge_kind.push_back(EdgeKind::Dd);
      else
        tax.edge_kind.push_back(EdgeKind::H);
    }
  }
  return tax;
}

ShapeReport verify_dstar_graph_shape(const VenkovGraph& g, int m, bool odd) {
  const int d = odd ? 2 * m + 1 : 2 * m;
  DStarTaxonomy tax = classify_dstar_elements(g, m, odd);
  ShapeReport rep;
  rep.n_vertices = int(g.vertices.size());
  rep.n_edges = int(g.edges.size());
  auto fail = [&](std::string msg) {
    rep.ok = false;
    if (rep.failures.size() < 20) rep.failures.push_back(std::move(msg));
  };

  std::vector<int> ints, halves;
  for (int v = 0; v < int(g.vertices.size()); ++v)
    (tax.vertex_kind[v] == VertexKind::HalfInteger ? halves : ints).push_back(v);
  if (int(ints.size()) != d)
    fail("expected " + std::to_string(d) + " integer classes, found " +
         std::to_string(ints.size()));
  long long want_halves = 1LL << (d - 1);
  if ((long long)halves.size() != want_halves)
    fail("expected " + std::to_string(want_halves) + " half-integer classes, found " +
         std::to_string(halves.size()));

  for (size_t ei = 0; ei < g.edges.size(); ++ei)
    if (tax.edge_kind[ei] == EdgeKind::II)
      fail("integer-integer edge at index " + std::to_string(ei));

  for (int u : ints)
    for (int h : halves)
      if (g.edge_index(u, h) < 0)
        fail("missing integer-half edge " + std::to_string(u) + "-" + std::to_string(h));

  std::vector<PointVec> doubled;
  for (const PointVec& v : g.vertices) doubled.push_back(dstar_ambient_doubled(v));
  for (size_t i = 0; i < halves.size(); ++i)
    for (size_t j = i + 1; j < halves.size(); ++j) {
      bool expect = half_diff(doubled[halves[i]], doubled[halves[j]]) == 1;
      bool have = g.edge_index(halves[i], halves[j]) >= 0;
      if (expect != have)
        fail(std::string(expect ? "missing" : "unexpected") + " skeleton edge " +
             std::to_string(halves[i]) + "-" + std::to_string(halves[j]));
    }
  return rep;
}

DegreeReport lemma_degree_check(const VenkovGraph& g, const DStarTaxonomy& tax, int m, bool odd) {
  const int d = odd ? 2 * m + 1 : 2 * m;
  DegreeReport rep;
  auto violate = [&](std::string msg) {
    rep.ok = false;
    if (rep.violations.size() < 20) rep.violations.push_back(std::move(msg));
  };

  std::vector<PointVec> doubled;
  for (const PointVec& v : g.vertices) doubled.push_back(dstar_ambient_doubled(v));

  for (int u = 0; u < int(g.vertices.size()); ++u) {
    if (tax.vertex_kind[u] == VertexKind::HalfInteger) continue;
    std::vector<int> nbrs;
    for (const auto& [w, ei] : g.adj[u])
      if (tax.vertex_kind[w] == VertexKind::HalfInteger) nbrs.push_back(w);
    if (tax.vertex_kind[u] == VertexKind::DVertex) {
      rep.dvertex_degrees[u] = int(nbrs.size());
      continue;
    }
    int k = nonzeros(doubled[u]);
    std::vector<int> expect;
    for (int h = 0; h < int(g.vertices.size()); ++h)
      if (tax.vertex_kind[h] == VertexKind::HalfInteger &&
          agrees_on_support(doubled[u], doubled[h]))
        expect.push_back(h);
    if ((long long)expect.size() != (1LL << (d - k)))
      violate("integer vertex " + std::to_string(u) + ": " + std::to_string(expect.size()) +
              " agreeing classes, expected 2^" + std::to_string(d - k));
    if (nbrs != expect)
      violate("integer vertex " + std::to_string(u) +
              ": half-integer neighborhood differs from the agreeing classes");
  }
  return rep;
}

}  // namespace delstar
