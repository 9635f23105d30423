#include "delstar/reduce.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <stdexcept>

namespace delstar {

std::string reduce_stage_name(ReduceStage s) {
  switch (s) {
    case ReduceStage::DVertexRemoval: return "diagonal-vertex removal";
    case ReduceStage::IIEdgeSwap: return "integer-edge swap";
    case ReduceStage::DEdgeSwap: return "diagonal-edge swap";
    case ReduceStage::HEdgeSwap: return "long-edge swap";
    case ReduceStage::IVertexRemoval: return "integer-vertex removal";
  }
  return "?";
}

namespace {

void cyc_axpy(CycleVector& x, const Rational& c, const CycleVector& y) {
  if (c == 0) return;
  for (const auto& [ei, v] : y.coeffs) {
    auto it = x.coeffs.find(ei);
    if (it == x.coeffs.end()) {
      x.coeffs.emplace(ei, c * v);
    } else {
      it->second += c * v;
      if (it->second == 0) x.coeffs.erase(it);
    }
  }
}

void bump(std::map<int, Rational>& m, int key, const Rational& c) {
  auto it = m.find(key);
  if (it == m.end()) {
    if (c != 0) m.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

[[noreturn]] void no_witness(ReduceStage st, const std::string& what) {
  throw std::runtime_error("witness not found (" + reduce_stage_name(st) + ", " + what + ")");
}

struct Reducer {
  const DeloneStar& star;
  const VenkovGraph& g;
  const BasicCycleSet& basics;
  const DStarTaxonomy& tax;
  CycleVector x;
  std::vector<ReduceStep> trace;
  std::map<int, Rational> acc;  // basic index -> accumulated coefficient

  std::map<std::vector<int>, int> by_triple;  // sorted 3-edge support -> first basic
  std::vector<std::vector<int>> tri_by_edge;  // edge -> support-3 basics through it

  /* built on demand, only when a diagonal vertex actually shows up */
  bool faces_ready = false;
  std::vector<std::vector<int>> face_classes;  // per 3-face class: sorted edge-class ids
  std::vector<std::vector<int>> basic_verts;   // per basic: sorted support endpoints

  Reducer(const DeloneStar& s, const VenkovGraph& gg, const BasicCycleSet& bb,
          const DStarTaxonomy& tt, CycleVector x0)
      : star(s), g(gg), basics(bb), tax(tt), x(std::move(x0)) {
    tri_by_edge.assign(g.edges.size(), {});
    for (size_t bi = 0; bi < basics.cycles.size(); ++bi) {
      const auto& cc = basics.cycles[bi].cycle.coeffs;
      if (cc.size() != 3) continue;
      std::vector<int> key;
      for (const auto& [ei, c] : cc) key.push_back(ei);
      by_triple.emplace(key, int(bi));
      for (int ei : key) tri_by_edge[ei].push_back(int(bi));
    }
  }

  int other_end(int ei, int v) const {
    const GraphEdge& e = g.edges[ei];
    return e.a == v ? e.b : e.a;
  }

  void step_into(ReduceStage st, CycleVector& d, int u, int w) const {
    int ei = g.edge_index(u, w);
    if (ei < 0) no_witness(st, "a splice path left the graph");
    bump(d.coeffs, ei, u < w ? 1 : -1);
  }

  /* Apply x -= mu * delta and log the step; delta == sum of local_terms. */
  void record(ReduceStage st, int target, const Rational& mu,
              std::vector<std::pair<Rational, int>> terms, const CycleVector& delta) {
    cyc_axpy(x, -mu, delta);
    for (const auto& [c, idx] : terms) bump(acc, idx, mu * c);
    trace.push_back({st, target, mu, std::move(terms)});
  }

  std::vector<int> incident_support(int v) const {
    std::vector<int> inc;
    for (const auto& [w, ei] : g.adj[v])
      if (x.coeffs.count(ei)) inc.push_back(ei);
    return inc;
  }

  int find_vertex(VertexKind k) const {
    std::set<int> verts;
    for (const auto& [ei, c] : x.coeffs) {
      verts.insert(g.edges[ei].a);
      verts.insert(g.edges[ei].b);
    }
    for (int v : verts)
      if (tax.vertex_kind[v] == k) return v;
    return -1;
  }

  /* The class of a support-3 basic that is not an endpoint of edge e. */
  int third_class(int bidx, int e) const {
    const GraphEdge& ge = g.edges[e];
    for (const auto& [ei, c] : basics.cycles[bidx].cycle.coeffs) {
      const GraphEdge& o = g.edges[ei];
      if (o.a != ge.a && o.a != ge.b) return o.a;
      if (o.b != ge.a && o.b != ge.b) return o.b;
    }
    return -1;
  }

  /* ---- diagonal-vertex stage ------------------------------------------- */

  void build_faces() {
    std::set<std::vector<PointVec>> seen;
    for (const DeloneCell& cell : star.cells) {
      if (cell.vertices.size() > 64) throw std::logic_error("cell too large for face masks");
      std::vector<Face> fl = all_proper_faces(cell);
      if (cell.dim == 3) fl.push_back(faces_k(cell, 3)[0]);  // the cell itself
      std::vector<uint64_t> seg_mask;
      std::vector<int> seg_class;
      std::vector<const Face*> f3;
      for (const Face& f : fl) {
        if (f.dim == 1) {
          seg_mask.push_back((uint64_t(1) << f.vertex_subset[0]) |
                             (uint64_t(1) << f.vertex_subset[1]));
          int id = g.vertex_index(canonical_edge_class(
              sub(cell.vertices[f.vertex_subset[1]], cell.vertices[f.vertex_subset[0]])));
          if (id < 0) throw std::logic_error("edge class missing from graph");
          seg_class.push_back(id);
        } else if (f.dim == 3) {
          f3.push_back(&f);
        }
      }
      for (const Face* f : f3) {
        std::vector<PointVec> pts;
        for (int i : f->vertex_subset) pts.push_back(cell.vertices[i]);
        if (!seen.insert(canonical_vertex_class(std::move(pts))).second) continue;
        uint64_t m3 = 0;
        for (int i : f->vertex_subset) m3 |= uint64_t(1) << i;
        std::vector<int> cls;
        for (size_t s = 0; s < seg_mask.size(); ++s)
          if ((seg_mask[s] & ~m3) == 0) cls.push_back(seg_class[s]);
        std::sort(cls.begin(), cls.end());
        cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
        face_classes.push_back(std::move(cls));
      }
    }
    basic_verts.resize(basics.cycles.size());
    for (size_t bi = 0; bi < basics.cycles.size(); ++bi) {
      std::set<int> vs;
      for (const auto& [ei, c] : basics.cycles[bi].cycle.coeffs) {
        vs.insert(g.edges[ei].a);
        vs.insert(g.edges[ei].b);
      }
      basic_verts[bi].assign(vs.begin(), vs.end());
    }
    faces_ready = true;
  }

  /* Breadth-first path from b to c inside the classes of one 3-face,
   * avoiding every diagonal-kind class; empty when none exists. */
  std::vector<int> path_in_face(const std::vector<int>& cls, int b, int c) const {
    std::map<int, int> parent;
    parent[b] = b;
    std::deque<int> q{b};
    while (!q.empty() && !parent.count(c)) {
      int u = q.front();
      q.pop_front();
      for (const auto& [w, ei] : g.adj[u]) {
        if (parent.count(w) || tax.vertex_kind[w] == VertexKind::DVertex) continue;
        if (!std::binary_search(cls.begin(), cls.end(), w)) continue;
        parent[w] = u;
        q.push_back(w);
      }
    }
    if (!parent.count(c)) return {};
    std::vector<int> path{c};
    while (path.back() != b) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
  }

  void stage_dvertex() {
    for (;;) {
      int a = find_vertex(VertexKind::DVertex);
      if (a < 0) return;
      if (!faces_ready) build_faces();
      std::vector<int> inc = incident_support(a);
      if (inc.size() < 2) throw std::logic_error("cycle unbalanced at a vertex");
      size_t before = inc.size();
      bool done = false;
      for (size_t i = 0; i < inc.size() && !done; ++i) {
        for (size_t j = 0; j < inc.size() && !done; ++j) {
          if (i == j) continue;
          int e1 = inc[i], e2 = inc[j];
          int b = other_end(e1, a), c = other_end(e2, a);
          for (size_t fi = 0; fi < face_classes.size() && !done; ++fi) {
            const std::vector<int>& cls = face_classes[fi];
            if (!std::binary_search(cls.begin(), cls.end(), a) ||
                !std::binary_search(cls.begin(), cls.end(), b) ||
                !std::binary_search(cls.begin(), cls.end(), c))
              continue;
            std::vector<int> path = path_in_face(cls, b, c);
            if (path.empty()) continue;
            CycleVector delta;
            step_into(ReduceStage::DVertexRemoval, delta, b, a);
            step_into(ReduceStage::DVertexRemoval, delta, a, c);
            for (size_t t = path.size(); t-- > 1;)
              step_into(ReduceStage::DVertexRemoval, delta, path[t], path[t - 1]);
            BasicCycleSet local;
            std::vector<int> loc2glob;
            for (size_t bi = 0; bi < basics.cycles.size(); ++bi)
              if (std::includes(cls.begin(), cls.end(), basic_verts[bi].begin(),
                                basic_verts[bi].end())) {
                local.cycles.push_back(basics.cycles[bi]);
                loc2glob.push_back(int(bi));
              }
            Certificate cert;
            try {
              cert = decompose_cycle(g, local, delta);
            } catch (const NotInSpanError&) {
              continue;  // not generated within this face; try the next one
            }
            Rational mu = x.coeffs.at(e1) / delta.coeffs.at(e1);
            std::vector<std::pair<Rational, int>> terms;
            for (const auto& [cc, li] : cert.terms) terms.push_back({cc, loc2glob[li]});
            record(ReduceStage::DVertexRemoval, a, mu, std::move(terms), delta);
            done = true;
          }
        }
      }
      if (!done) no_witness(ReduceStage::DVertexRemoval, "vertex " + std::to_string(a));
      if (incident_support(a).size() >= before)
        throw std::logic_error("splice did not reduce the vertex");
    }
  }

  /* ---- edge stages ------------------------------------------------------ */

  void stage_edges(ReduceStage st) {
    EdgeKind want = st == ReduceStage::IIEdgeSwap  ? EdgeKind::II
                    : st == ReduceStage::DEdgeSwap ? EdgeKind::Dd
                                                   : EdgeKind::H;
    for (;;) {
      int e = -1;
      for (const auto& [ei, c] : x.coeffs)
        if (tax.edge_kind[ei] == want) {
          e = ei;
          break;
        }
      if (e < 0) return;
      int chosen = -1;
      for (int bidx : tri_by_edge[e]) {
        int t = third_class(bidx, e);
        if (t < 0) continue;
        bool ok = false;
        if (st == ReduceStage::IIEdgeSwap) {
          ok = tax.vertex_kind[t] == VertexKind::HalfInteger;
        } else if (st == ReduceStage::DEdgeSwap) {
          if (tax.vertex_kind[t] == VertexKind::HalfInteger) {
            int f1 = g.edge_index(g.edges[e].a, t);
            int f2 = g.edge_index(g.edges[e].b, t);
            ok = tax.edge_kind[f1] != EdgeKind::Dd && tax.edge_kind[f2] != EdgeKind::Dd;
          } else {
            ok = tax.vertex_kind[t] == VertexKind::IVertex;
          }
        } else {
          ok = tax.vertex_kind[t] == VertexKind::IVertex;
        }
        if (ok) {
          chosen = bidx;
          break;
        }
      }
      if (chosen < 0) no_witness(st, "edge " + std::to_string(e));
      const CycleVector& d = basics.cycles[chosen].cycle;
      Rational mu = x.coeffs.at(e) / d.coeffs.at(e);
      record(st, e, mu, {{Rational(1), chosen}}, d);
    }
  }

  /* ---- integer-vertex stage --------------------------------------------- */

  /* Sign representative of half class `cls` matching half of the doubled
   * integer vector `da` on its support. */
  PointVec aligned_rep(const PointVec& da, const PointVec& cls) const {
    PointVec h = dstar_ambient_doubled(cls);
    for (int s = 0; s < 2; ++s) {
      bool ok = true;
      for (size_t i = 0; i < da.size() && ok; ++i)
        if (da[i] != 0 && 2 * h[i] != da[i]) ok = false;
      if (ok) return h;
      for (auto& e : h) e = -e;
    }
    no_witness(ReduceStage::IVertexRemoval, "a neighbor disagrees with half the vertex");
  }

  void stage_ivertex() {
    for (;;) {
      int a = find_vertex(VertexKind::IVertex);
      if (a < 0) return;
      std::vector<int> inc = incident_support(a);
      if (inc.size() < 2) throw std::logic_error("cycle unbalanced at a vertex");
      size_t before = inc.size();
      int e1 = inc[0], e2 = inc[1];
      int b = other_end(e1, a), c = other_end(e2, a);
      if (tax.vertex_kind[b] != VertexKind::HalfInteger ||
          tax.vertex_kind[c] != VertexKind::HalfInteger)
        throw std::logic_error("integer-integer edge survived its stage");
      /* direct triangle first: one certified face closes b a c immediately */
      int e_bc = g.edge_index(b, c);
      if (e_bc >= 0 && tax.edge_kind[e_bc] == EdgeKind::S) {
        std::vector<int> key{e1, e2, e_bc};
        std::sort(key.begin(), key.end());
        auto it = by_triple.find(key);
        if (it != by_triple.end()) {
          const CycleVector& d = basics.cycles[it->second].cycle;
          Rational mu = x.coeffs.at(e1) / d.coeffs.at(e1);
          record(ReduceStage::IVertexRemoval, a, mu, {{Rational(1), it->second}}, d);
          if (incident_support(a).size() >= before)
            throw std::logic_error("splice did not reduce the vertex");
          continue;
        }
      }
      PointVec da = dstar_ambient_doubled(g.vertices[a]);
      PointVec cur = aligned_rep(da, g.vertices[b]);
      PointVec rc = aligned_rep(da, g.vertices[c]);
      /* hop to c one coordinate flip at a time; every stop shares the
       * support values, so it neighbors a */
      std::vector<int> seq{b};
      for (size_t pos = 0; pos < cur.size(); ++pos) {
        if (cur[pos] == rc[pos]) continue;
        cur[pos] = rc[pos];
        int id = g.vertex_index(canonical_edge_class(dstar_basis_from_ambient_doubled(cur)));
        if (id < 0) no_witness(ReduceStage::IVertexRemoval, "a skeleton stop left the graph");
        seq.push_back(id);
      }
      if (seq.back() != c) throw std::logic_error("skeleton path missed its endpoint");
      CycleVector delta;
      std::vector<std::pair<Rational, int>> terms;
      for (size_t i = 0; i + 1 < seq.size(); ++i) {
        int u = seq[i], w = seq[i + 1];
        int e_uw = g.edge_index(u, w), e_au = g.edge_index(a, u), e_aw = g.edge_index(a, w);
        if (e_uw < 0 || e_au < 0 || e_aw < 0)
          no_witness(ReduceStage::IVertexRemoval, "a skeleton step left the graph");
        std::vector<int> key{e_uw, e_au, e_aw};
        std::sort(key.begin(), key.end());
        auto it = by_triple.find(key);
        if (it == by_triple.end())
          no_witness(ReduceStage::IVertexRemoval, "no face certifies a skeleton-path triangle");
        const CycleVector& bc = basics.cycles[it->second].cycle;
        Rational sigma = Rational(u < w ? 1 : -1) / bc.coeffs.at(e_uw);
        cyc_axpy(delta, sigma, bc);
        terms.push_back({sigma, it->second});
      }
      auto d1 = delta.coeffs.find(e1);
      if (d1 == delta.coeffs.end()) throw std::logic_error("splice difference misses its target");
      Rational mu = x.coeffs.at(e1) / d1->second;
      record(ReduceStage::IVertexRemoval, a, mu, std::move(terms), delta);
      if (incident_support(a).size() >= before)
        throw std::logic_error("splice did not reduce the vertex");
    }
  }
};

}  // namespace

ReduceResult reduce_cycle_d2m(const DeloneStar& star, const VenkovGraph& g,
                              const BasicCycleSet& basics, const DStarTaxonomy& tax,
                              const CycleVector& x) {
  if (tax.vertex_kind.size() != g.vertices.size() || tax.edge_kind.size() != g.edges.size())
    throw std::invalid_argument("taxonomy does not match the graph");
  if (!in_cycle_space(g, x)) throw std::invalid_argument("not a cycle");

  Reducer r(star, g, basics, tax, x);
  r.stage_dvertex();
  r.stage_edges(ReduceStage::IIEdgeSwap);
  r.stage_edges(ReduceStage::DEdgeSwap);
  r.stage_edges(ReduceStage::HEdgeSwap);
  r.stage_ivertex();
  for (const auto& [ei, c] : r.x.coeffs)
    if (tax.edge_kind[ei] != EdgeKind::S)
      throw std::logic_error("reduction left a non-skeleton edge");

  ReduceResult out;
  out.s_only = r.x;
  Certificate fin = decompose_cycle(g, basics, r.x);
  for (const auto& [c, idx] : fin.terms) bump(r.acc, idx, c);
  out.trace = std::move(r.trace);
  out.certificate.target = x;
  for (const auto& [idx, c] : r.acc) out.certificate.terms.push_back({c, idx});
  if (!verify_certificate(basics, out.certificate))
    throw std::logic_error("reduction certificate failed re-verification");
  return out;
}

}  // namespace delstar
