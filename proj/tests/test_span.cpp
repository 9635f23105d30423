#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "delstar/span.hpp"
#include "delstar/star_analytic.hpp"

using namespace delstar;

namespace {

struct D6Fixture {
  DeloneStar star = delone_star_analytic(Family::Dstar, 6);
  VenkovGraph g = build_venkov_graph(star);
  BasicCycleSet basics = enumerate_basic_cycles(star, g);
};

const D6Fixture& d6() {
  static D6Fixture f;
  return f;
}

/* A plain 4-cycle with no triangles behind it; witnesses are dummies. */
VenkovGraph square_graph() {
  VenkovGraph g;
  g.vertices = {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
  std::sort(g.vertices.begin(), g.vertices.end());
  auto mk = [](int a, int b) {
    GraphEdge e;
    e.a = a;
    e.b = b;
    return e;
  };
  g.edges = {mk(0, 1), mk(0, 2), mk(1, 3), mk(2, 3)};
  g.adj.assign(4, {});
  for (size_t ei = 0; ei < g.edges.size(); ++ei) {
    g.adj[g.edges[ei].a].push_back({g.edges[ei].b, int(ei)});
    g.adj[g.edges[ei].b].push_back({g.edges[ei].a, int(ei)});
  }
  for (auto& lst : g.adj) std::sort(lst.begin(), lst.end());
  return g;
}

}  // namespace

TEST_CASE("basic cycles of the Dstar 6 star") {
  const auto& f = d6();
  int halfbelts = 0, contractibles = 0;
  for (const BasicCycle& c : f.basics.cycles) {
    CHECK(in_cycle_space(f.g, c.cycle));
    size_t support = c.cycle.coeffs.size();
    if (c.kind == BasicKind::HalfBelt) {
      ++halfbelts;
      CHECK(support == 3);
      CHECK(c.apex == -1);
      CHECK(c.witness.size() == 3);
    } else {
      ++contractibles;
      CHECK((support == 3 || support == 4));
      CHECK(c.apex >= 0);
      CHECK(std::count(c.witness.begin(), c.witness.end(), c.apex) == 1);
    }
    for (const auto& [ei, coeff] : c.cycle.coeffs) {
      CHECK(ei >= 0);
      CHECK(ei < int(f.g.edges.size()));
      CHECK(coeff != 0);
    }
  }
  CHECK(halfbelts == 96);
  CHECK(contractibles == 600);

  SUBCASE("contractible witnesses are all-triangle 3-face vertices") {
    std::vector<std::vector<Face>> threefaces(f.star.cells.size());
    for (size_t ci = 0; ci < f.star.cells.size(); ++ci)
      threefaces[ci] = faces_k(f.star.cells[ci], 3);
    int tets = 0, octs = 0, pyramids = 0;
    for (const BasicCycle& c : f.basics.cycles) {
      if (c.kind != BasicKind::Contractible) continue;
      const DeloneCell& cell = f.star.cells[c.cell];
      for (const Face& f3 : threefaces[c.cell]) {
        if (f3.vertex_subset != c.witness) continue;
        FaceKind kind = classify_face(cell, f3);
        if (kind == FaceKind::Tetrahedron) ++tets;
        if (kind == FaceKind::Octahedron) ++octs;
        if (kind == FaceKind::PyramidOverParallelogram) {
          ++pyramids;
          CHECK(c.cycle.coeffs.size() == 4);  // apex figure is the base square
        }
        CHECK((kind == FaceKind::Tetrahedron || kind == FaceKind::Octahedron ||
               kind == FaceKind::PyramidOverParallelogram));
      }
    }
    CHECK(tets + octs + pyramids == 600);
    CHECK(tets == 480);    // 120 tetrahedron classes, every vertex
    CHECK(pyramids == 120);  // one apex per pyramid class
    CHECK(octs == 0);
  }
}

TEST_CASE("basic generation for Dstar 6 through 8") {
  const auto& f = d6();
  auto res = check_basic_generation(f.g, f.basics);
  CHECK(res.holds);
  CHECK(res.span_rank == 251);
  CHECK(res.cycle_dim == 251);

  SUBCASE("invariant under cell reordering") {
    DeloneStar shuffled = f.star;
    std::reverse(shuffled.cells.begin(), shuffled.cells.end());
    std::rotate(shuffled.cells.begin(), shuffled.cells.begin() + 3, shuffled.cells.end());
    auto g2 = build_venkov_graph(shuffled);
    auto b2 = enumerate_basic_cycles(shuffled, g2);
    auto res2 = check_basic_generation(g2, b2);
    CHECK(res2.holds == res.holds);
    CHECK(res2.span_rank == res.span_rank);
    CHECK(res2.cycle_dim == res.cycle_dim);
  }

  SUBCASE("higher dimensions") {
    for (int d : {7, 8}) {
      auto star = delone_star_analytic(Family::Dstar, d);
      auto g = build_venkov_graph(star);
      auto b = enumerate_basic_cycles(star, g);
      auto r = check_basic_generation(g, b);
      CHECK(r.holds);
      CHECK(r.cycle_dim == (d == 7 ? 602 : 1401));
    }
  }
}

TEST_CASE("decomposition certificates") {
  const auto& f = d6();

  SUBCASE("a half-belt is its own certificate") {
    auto cert = decompose_cycle(f.g, f.basics, f.basics.cycles[0].cycle);
    REQUIRE(cert.terms.size() == 1);
    CHECK(cert.terms[0].first == 1);
    CHECK(cert.terms[0].second == 0);
    CHECK(verify_certificate(f.basics, cert));
  }

  SUBCASE("linear combinations round-trip") {
    CycleVector x;
    for (const auto& [ei, c] : f.basics.cycles[5].cycle.coeffs) x.coeffs[ei] += c * 2;
    for (const auto& [ei, c] : f.basics.cycles[300].cycle.coeffs) {
      x.coeffs[ei] += c * Rational(-7, 3);
      if (x.coeffs[ei] == 0) x.coeffs.erase(ei);
    }
    auto cert = decompose_cycle(f.g, f.basics, x);
    CHECK(verify_certificate(f.basics, cert));
  }

  SUBCASE("fundamental cycles all decompose") {
    auto fc = fundamental_cycles(f.g);
    REQUIRE(fc.size() == 251);
    for (size_t i = 0; i < fc.size(); i += 25) {
      auto cert = decompose_cycle(f.g, f.basics, fc[i]);
      CHECK(verify_certificate(f.basics, cert));
    }
  }

  SUBCASE("tampered certificates fail verification") {
    auto cert = decompose_cycle(f.g, f.basics, f.basics.cycles[10].cycle);
    cert.terms[0].first += 1;
    CHECK_FALSE(verify_certificate(f.basics, cert));
    cert.terms[0].first -= 1;
    cert.terms.push_back({Rational(1, 2), 99999});
    CHECK_FALSE(verify_certificate(f.basics, cert));
  }

  SUBCASE("non-cycles are rejected") {
    CycleVector bad;
    bad.coeffs[0] = 1;
    CHECK_THROWS_AS(decompose_cycle(f.g, f.basics, bad), std::invalid_argument);
  }
}

TEST_CASE("span shortfall is certified by a separating functional") {
  SUBCASE("empty basic set on a plain 4-cycle") {
    auto g = square_graph();
    BasicCycleSet none;
    auto res = check_basic_generation(g, none);
    CHECK_FALSE(res.holds);
    CHECK(res.span_rank == 0);
    CHECK(res.cycle_dim == 1);
    auto fc = fundamental_cycles(g);
    REQUIRE(fc.size() == 1);
    try {
      decompose_cycle(g, none, fc[0]);
      CHECK(false);
    } catch (const NotInSpanError& e) {
      CHECK(apply_functional(e.functional, fc[0]) != 0);
    }
  }

  SUBCASE("half-belts alone do not span for Dstar 6") {
    const auto& f = d6();
    BasicCycleSet hb;
    for (const BasicCycle& c : f.basics.cycles)
      if (c.kind == BasicKind::HalfBelt) hb.cycles.push_back(c);
    auto res = check_basic_generation(f.g, hb);
    CHECK_FALSE(res.holds);
    CHECK(res.span_rank == 96);
    CHECK(res.cycle_dim == 251);

    auto fc = fundamental_cycles(f.g);
    bool found_outside = false;
    for (const auto& x : fc) {
      try {
        decompose_cycle(f.g, hb, x);
      } catch (const NotInSpanError& e) {
        found_outside = true;
        CHECK(apply_functional(e.functional, x) != 0);
        for (size_t i = 0; i < hb.cycles.size(); i += 7)
          CHECK(apply_functional(e.functional, hb.cycles[i].cycle) == 0);
        break;
      }
    }
    CHECK(found_outside);
  }

  SUBCASE("contractibles alone still span for Dstar 6") {
    const auto& f = d6();
    BasicCycleSet ct;
    for (const BasicCycle& c : f.basics.cycles)
      if (c.kind == BasicKind::Contractible) ct.cycles.push_back(c);
    auto res = check_basic_generation(f.g, ct);
    CHECK(res.holds);
    CHECK(res.span_rank == 251);
  }
}
