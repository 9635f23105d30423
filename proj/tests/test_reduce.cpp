#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "delstar/reduce.hpp"
#include "delstar/star_analytic.hpp"
#include "delstar/subdivide.hpp"

using namespace delstar;

namespace {

struct Setup {
  DeloneStar star;
  VenkovGraph g;
  BasicCycleSet basics;
  DStarTaxonomy tax;
};

Setup make_setup(DeloneStar star) {
  Setup s;
  s.star = std::move(star);
  s.g = build_venkov_graph(s.star);
  s.basics = enumerate_basic_cycles(s.star, s.g);
  s.tax = classify_dstar_elements(s.g, 3, false);
  return s;
}

const Setup& base6() {
  static Setup s = make_setup(delone_star_analytic(Family::Dstar, 6));
  return s;
}

QMat dense_perturbation_6() {
  QMat gp(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) gp.at(i, j) = Rational((i * 7 + j * 3) % 5 - 2, 8 + ((i + j) % 3));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < i; ++j) gp.at(i, j) = gp.at(j, i);
  return gp;
}

const Setup& sub6() {
  static Setup s = [] {
    const DeloneStar& d6 = base6().star;
    return make_setup(
        subdivide_star(d6, blend_gram(d6.lattice.gram, dense_perturbation_6(), Rational(1, 4))));
  }();
  return s;
}

bool all_skeleton(const Setup& s, const CycleVector& x) {
  for (const auto& [ei, c] : x.coeffs)
    if (s.tax.edge_kind[ei] != EdgeKind::S) return false;
  return true;
}

bool stage_targets_consistent(const Setup& s, const ReduceResult& r) {
  for (const ReduceStep& st : r.trace) {
    switch (st.stage) {
      case ReduceStage::DVertexRemoval:
        if (s.tax.vertex_kind[st.target] != VertexKind::DVertex) return false;
        break;
      case ReduceStage::IVertexRemoval:
        if (s.tax.vertex_kind[st.target] != VertexKind::IVertex) return false;
        break;
      case ReduceStage::IIEdgeSwap:
        if (s.tax.edge_kind[st.target] != EdgeKind::II) return false;
        break;
      case ReduceStage::DEdgeSwap:
        if (s.tax.edge_kind[st.target] != EdgeKind::Dd) return false;
        break;
      case ReduceStage::HEdgeSwap:
        if (s.tax.edge_kind[st.target] != EdgeKind::H) return false;
        break;
    }
  }
  return true;
}

bool has_stage(const ReduceResult& r, ReduceStage st) {
  return std::any_of(r.trace.begin(), r.trace.end(),
                     [&](const ReduceStep& s) { return s.stage == st; });
}

/* first fundamental cycle whose support touches the predicate */
template <class Pred>
int find_cycle(const std::vector<CycleVector>& fc, Pred pred) {
  for (size_t i = 0; i < fc.size(); ++i)
    for (const auto& [ei, c] : fc[i].coeffs)
      if (pred(ei)) return int(i);
  return -1;
}

}  // namespace

TEST_CASE("a basic cycle reduces to itself") {
  const Setup& s = base6();
  ReduceResult r = reduce_cycle_d2m(s.star, s.g, s.basics, s.tax, s.basics.cycles[0].cycle);
  CHECK(r.trace.size() <= 1);
  REQUIRE(r.certificate.terms.size() == 1);
  CHECK(r.certificate.terms[0].first == 1);
  CHECK(r.certificate.terms[0].second == 0);
  CHECK(r.s_only.coeffs.empty());
  CHECK(verify_certificate(s.basics, r.certificate));
}

TEST_CASE("base fundamental cycles reach skeleton-only representatives") {
  const Setup& s = base6();
  auto fc = fundamental_cycles(s.g);
  REQUIRE(fc.size() == 251);
  for (const CycleVector& x : fc) {
    ReduceResult r = reduce_cycle_d2m(s.star, s.g, s.basics, s.tax, x);
    CHECK(all_skeleton(s, r.s_only));
    CHECK(in_cycle_space(s.g, r.s_only));
    CHECK(stage_targets_consistent(s, r));
    // the base graph has no diagonal vertices and no integer-integer,
    // diagonal, or long edges, so only integer vertices get removed
    for (const ReduceStep& st : r.trace) CHECK(st.stage == ReduceStage::IVertexRemoval);
    CHECK(verify_certificate(s.basics, r.certificate));
  }

  SUBCASE("rational multiples ride along") {
    CycleVector x;
    for (const auto& [ei, c] : fc[10].coeffs) x.coeffs[ei] = c * Rational(3, 7);
    ReduceResult r = reduce_cycle_d2m(s.star, s.g, s.basics, s.tax, x);
    CHECK(r.certificate.target.coeffs == x.coeffs);
    CHECK(verify_certificate(s.basics, r.certificate));
  }

  SUBCASE("repeat runs are identical") {
    ReduceResult r1 = reduce_cycle_d2m(s.star, s.g, s.basics, s.tax, fc[42]);
    ReduceResult r2 = reduce_cycle_d2m(s.star, s.g, s.basics, s.tax, fc[42]);
    REQUIRE(r1.trace.size() == r2.trace.size());
    for (size_t i = 0; i < r1.trace.size(); ++i) {
      CHECK(r1.trace[i].stage == r2.trace[i].stage);
      CHECK(r1.trace[i].target == r2.trace[i].target);
      CHECK(r1.trace[i].coefficient == r2.trace[i].coefficient);
      CHECK(r1.trace[i].local_terms == r2.trace[i].local_terms);
    }
    CHECK(r1.certificate.terms == r2.certificate.terms);
  }
}

TEST_CASE("swaps clear the special edges of a subdivided star") {
  const Setup& s = sub6();
  REQUIRE(s.g.vertices.size() == 62);
  REQUIRE(s.g.edges.size() == 873);
  std::map<EdgeKind, int> ek;
  for (EdgeKind k : s.tax.edge_kind) ek[k]++;
  REQUIRE(ek[EdgeKind::II] == 129);
  REQUIRE(ek[EdgeKind::Dd] == 40);
  REQUIRE(ek[EdgeKind::H] == 112);
  REQUIRE(ek[EdgeKind::S] == 96);
  std::map<VertexKind, int> vk;
  for (VertexKind k : s.tax.vertex_kind) vk[k]++;
  REQUIRE(vk[VertexKind::DVertex] == 10);
  CHECK(graph_is_subgraph(base6().g, s.g));

  auto fc = fundamental_cycles(s.g);
  auto edge_kind_is = [&](EdgeKind k) { return [&, k](int ei) { return s.tax.edge_kind[ei] == k; }; };
  auto run = [&](int idx) {
    REQUIRE(idx >= 0);
    ReduceResult r = reduce_cycle_d2m(s.star, s.g, s.basics, s.tax, fc[idx]);
    CHECK(all_skeleton(s, r.s_only));
    CHECK(stage_targets_consistent(s, r));
    CHECK(verify_certificate(s.basics, r.certificate));
    return r;
  };

  SUBCASE("integer-integer edge") {
    int idx = find_cycle(fc, edge_kind_is(EdgeKind::II));
    ReduceResult r = run(idx);
    CHECK(has_stage(r, ReduceStage::IIEdgeSwap));
  }
  SUBCASE("diagonal edge") {
    int idx = find_cycle(fc, edge_kind_is(EdgeKind::Dd));
    ReduceResult r = run(idx);
    CHECK(has_stage(r, ReduceStage::DEdgeSwap));
  }
  SUBCASE("long half-half edge") {
    int idx = find_cycle(fc, edge_kind_is(EdgeKind::H));
    ReduceResult r = run(idx);
    CHECK(has_stage(r, ReduceStage::HEdgeSwap));
  }
  SUBCASE("diagonal vertex") {
    int idx = find_cycle(fc, [&](int ei) {
      return s.tax.vertex_kind[s.g.edges[ei].a] == VertexKind::DVertex ||
             s.tax.vertex_kind[s.g.edges[ei].b] == VertexKind::DVertex;
    });
    ReduceResult r = run(idx);
    CHECK(has_stage(r, ReduceStage::DVertexRemoval));
  }
}

TEST_CASE("bad inputs are rejected") {
  const Setup& s = base6();
  auto fc = fundamental_cycles(s.g);

  SUBCASE("not a cycle") {
    CycleVector bad;
    bad.coeffs[0] = 1;
    CHECK_THROWS_WITH_AS(reduce_cycle_d2m(s.star, s.g, s.basics, s.tax, bad), "not a cycle",
                         std::invalid_argument);
  }

  SUBCASE("taxonomy of a different graph") {
    CHECK_THROWS_WITH_AS(reduce_cycle_d2m(s.star, s.g, s.basics, sub6().tax, fc[0]),
                         "taxonomy does not match the graph", std::invalid_argument);
  }

  SUBCASE("a lying taxonomy surfaces as a missing witness") {
    // claim one skeleton edge of a cycle is integer-integer: no face can
    // certify that swap, because no triangle joins three half classes
    int idx = -1, edge = -1;
    for (size_t i = 0; i < fc.size() && idx < 0; ++i)
      for (const auto& [ei, c] : fc[i].coeffs)
        if (s.tax.edge_kind[ei] == EdgeKind::S) {
          idx = int(i);
          edge = ei;
          break;
        }
    REQUIRE(idx >= 0);
    DStarTaxonomy lying = s.tax;
    lying.edge_kind[edge] = EdgeKind::II;
    try {
      reduce_cycle_d2m(s.star, s.g, s.basics, lying, fc[idx]);
      FAIL("expected a witness failure");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()).find("witness not found") == 0);
    }
  }
}
