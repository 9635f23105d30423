#include "delstar/json_io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace delstar {

namespace {

const Json& need(const Json& j, const char* key) {
  if (!j.is_object())
    throw std::invalid_argument(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw std::invalid_argument(std::string("missing key '") + key + "'");
  return *it;
}

long long need_int(const Json& j, const char* what) {
  if (!j.is_number_integer())
    throw std::invalid_argument(std::string("'") + what + "': expected an integer");
  return j.get<long long>();
}

std::string need_str(const Json& j, const char* what) {
  if (!j.is_string())
    throw std::invalid_argument(std::string("'") + what + "': expected a string");
  return j.get<std::string>();
}

const Json& need_array(const Json& j, const char* what) {
  if (!j.is_array())
    throw std::invalid_argument(std::string("'") + what + "': expected an array");
  return j;
}

Rational need_q(const Json& j, const char* what) {
  return parse_rational(need_str(j, what));  // parse_rational names the bad token
}

PointVec read_point(const Json& j, const char* what) {
  PointVec p;
  for (const Json& e : need_array(j, what)) p.push_back(need_int(e, what));
  return p;
}

QVec read_qvec(const Json& j, const char* what) {
  QVec v;
  for (const Json& e : need_array(j, what)) v.push_back(need_q(e, what));
  return v;
}

Json point_json(const PointVec& p) {
  Json a = Json::array();
  for (Coord c : p) a.push_back(c);
  return a;
}

Json qvec_json(const QVec& v) {
  Json a = Json::array();
  for (const Rational& q : v) a.push_back(format_rational(q));
  return a;
}

int parse_index_key(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty edge-index key");
  for (char c : s)
    if (c < '0' || c > '9')
      throw std::invalid_argument("edge-index key '" + s + "': expected digits");
  return std::stoi(s);
}

std::vector<std::pair<Rational, int>> read_terms(const Json& j) {
  std::vector<std::pair<Rational, int>> out;
  for (const Json& t : need_array(j, "terms")) {
    if (!t.is_array() || t.size() != 2)
      throw std::invalid_argument("'terms': expected [coefficient, index] pairs");
    out.emplace_back(need_q(t[0], "terms"), int(need_int(t[1], "terms")));
    if (out.back().second < 0) throw std::invalid_argument("'terms': negative index");
  }
  return out;
}

Json terms_json(const std::vector<std::pair<Rational, int>>& terms) {
  Json a = Json::array();
  for (const auto& [c, i] : terms) a.push_back(Json::array({format_rational(c), i}));
  return a;
}

}  // namespace

Json lattice_to_json(const Lattice& l) {
  Json j = Json::object();
  if (l.name) j["name"] = *l.name;
  j["dim"] = l.dim;
  Json gram = Json::array();
  for (int i = 0; i < l.gram.rows; ++i) {
    Json row = Json::array();
    for (int k = 0; k < l.gram.cols; ++k) row.push_back(format_rational(l.gram.at(i, k)));
    gram.push_back(row);
  }
  j["gram"] = gram;
  return j;
}

Lattice lattice_from_json(const Json& j) {
  Lattice l;
  l.dim = int(need_int(need(j, "dim"), "dim"));
  if (l.dim < 1) throw std::invalid_argument("'dim': must be at least 1");
  const Json& gram = need_array(need(j, "gram"), "gram");
  if (int(gram.size()) != l.dim)
    throw std::invalid_argument("'gram': expected dim rows");
  l.gram = QMat(l.dim, l.dim);
  for (int i = 0; i < l.dim; ++i) {
    QVec row = read_qvec(gram[i], "gram");
    if (int(row.size()) != l.dim)
      throw std::invalid_argument("'gram': expected dim entries per row");
    for (int k = 0; k < l.dim; ++k) l.gram.at(i, k) = row[k];
  }
  for (int i = 0; i < l.dim; ++i)
    for (int k = i + 1; k < l.dim; ++k)
      if (l.gram.at(i, k) != l.gram.at(k, i))
        throw std::invalid_argument("'gram': not symmetric");
  if (j.contains("name")) {
    l.name = need_str(j.at("name"), "name");
    // Recover the family tag from names of the form "E6star" or "Dstar_6".
    if (auto f = family_from_name(*l.name)) {
      l.family = f;
    } else if (auto us = l.name->rfind('_'); us != std::string::npos) {
      auto f2 = family_from_name(l.name->substr(0, us));
      if (f2 && l.name->substr(us + 1) == std::to_string(l.dim)) l.family = f2;
    }
  }
  return l;
}

Json star_to_json(const DeloneStar& s) {
  Json j = Json::object();
  j["lattice"] = lattice_to_json(s.lattice);
  j["provenance"] = provenance_name(s.provenance);
  Json cells = Json::array();
  for (const DeloneCell& c : s.cells) {
    Json jc = Json::object();
    Json verts = Json::array();
    for (const PointVec& v : c.vertices) verts.push_back(point_json(v));
    jc["vertices"] = verts;
    jc["center"] = qvec_json(c.center);
    jc["sq_radius"] = format_rational(c.sq_radius);
    cells.push_back(jc);
  }
  j["cells"] = cells;
  return j;
}

DeloneStar star_from_json(const Json& j) {
  DeloneStar s;
  s.lattice = lattice_from_json(need(j, "lattice"));
  std::string pn = need_str(need(j, "provenance"), "provenance");
  auto p = provenance_from_name(pn);
  if (!p) throw std::invalid_argument("'provenance': unknown value '" + pn + "'");
  s.provenance = *p;
  for (const Json& jc : need_array(need(j, "cells"), "cells")) {
    DeloneCell cell;
    for (const Json& jv : need_array(need(jc, "vertices"), "vertices")) {
      cell.vertices.push_back(read_point(jv, "vertices"));
      if (int(cell.vertices.back().size()) != s.lattice.dim)
        throw std::invalid_argument("'vertices': wrong dimension");
    }
    if (cell.vertices.empty()) throw std::invalid_argument("'vertices': empty cell");
    std::sort(cell.vertices.begin(), cell.vertices.end());
    cell.vertices.erase(std::unique(cell.vertices.begin(), cell.vertices.end()),
                        cell.vertices.end());
    cell.center = read_qvec(need(jc, "center"), "center");
    if (int(cell.center.size()) != s.lattice.dim)
      throw std::invalid_argument("'center': wrong dimension");
    cell.sq_radius = need_q(need(jc, "sq_radius"), "sq_radius");
    cell.dim = affine_dim_points(cell.vertices);
    // Every vertex must sit at the stated squared distance from the center.
    for (const PointVec& v : cell.vertices) {
      QVec d(s.lattice.dim);
      for (int i = 0; i < s.lattice.dim; ++i) d[i] = Rational(v[i]) - cell.center[i];
      Rational q = 0;
      for (int i = 0; i < s.lattice.dim; ++i)
        for (int k = 0; k < s.lattice.dim; ++k) q += d[i] * s.lattice.gram.at(i, k) * d[k];
      if (q != cell.sq_radius)
        throw std::invalid_argument("'cells': vertex not at sq_radius from the center");
    }
    s.cells.push_back(std::move(cell));
  }
  return s;
}

Json graph_to_json(const VenkovGraph& g) {
  Json j = Json::object();
  Json verts = Json::array();
  for (const PointVec& v : g.vertices) verts.push_back(point_json(v));
  j["vertices"] = verts;
  Json edges = Json::array(), wits = Json::array();
  for (const GraphEdge& e : g.edges) {
    edges.push_back(Json::array({e.a, e.b}));
    Json w = Json::object();
    w["cell"] = e.witness_cell;
    w["triangle"] =
        Json::array({e.witness_triangle[0], e.witness_triangle[1], e.witness_triangle[2]});
    wits.push_back(w);
  }
  j["edges"] = edges;
  j["witnesses"] = wits;
  return j;
}

VenkovGraph graph_from_json(const Json& j) {
  VenkovGraph g;
  for (const Json& jv : need_array(need(j, "vertices"), "vertices"))
    g.vertices.push_back(read_point(jv, "vertices"));
  // Index lookups binary search, so the stored order must already be sorted.
  if (!std::is_sorted(g.vertices.begin(), g.vertices.end()) ||
      std::adjacent_find(g.vertices.begin(), g.vertices.end()) != g.vertices.end())
    throw std::invalid_argument("'vertices': not sorted and distinct");
  const Json& edges = need_array(need(j, "edges"), "edges");
  const Json& wits = need_array(need(j, "witnesses"), "witnesses");
  if (edges.size() != wits.size())
    throw std::invalid_argument("'witnesses': must match 'edges' in length");
  int n = int(g.vertices.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Json& je = edges[i];
    if (!je.is_array() || je.size() != 2)
      throw std::invalid_argument("'edges': expected [a, b] pairs");
    GraphEdge e;
    e.a = int(need_int(je[0], "edges"));
    e.b = int(need_int(je[1], "edges"));
    if (e.a < 0 || e.b <= e.a || e.b >= n)
      throw std::invalid_argument("'edges': need 0 <= a < b < vertex count");
    const Json& jw = wits[i];
    e.witness_cell = int(need_int(need(jw, "cell"), "cell"));
    const Json& tri = need_array(need(jw, "triangle"), "triangle");
    if (tri.size() != 3) throw std::invalid_argument("'triangle': expected 3 indices");
    for (int t = 0; t < 3; ++t) e.witness_triangle[t] = int(need_int(tri[t], "triangle"));
    g.edges.push_back(e);
  }
  for (std::size_t i = 1; i < g.edges.size(); ++i)
    if (std::pair(g.edges[i - 1].a, g.edges[i - 1].b) >= std::pair(g.edges[i].a, g.edges[i].b))
      throw std::invalid_argument("'edges': not sorted and distinct");
  g.adj.assign(n, {});
  for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
    g.adj[g.edges[ei].a].push_back({g.edges[ei].b, int(ei)});
    g.adj[g.edges[ei].b].push_back({g.edges[ei].a, int(ei)});
  }
  for (auto& lst : g.adj) std::sort(lst.begin(), lst.end());
  return g;
}

Json cycle_to_json(const CycleVector& x) {
  Json j = Json::object();
  for (const auto& [e, c] : x.coeffs) j[std::to_string(e)] = format_rational(c);
  return j;
}

CycleVector cycle_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("cycle: expected an object");
  CycleVector x;
  for (const auto& [key, val] : j.items()) {
    Rational c = need_q(val, "cycle coefficient");
    if (c != 0) x.coeffs[parse_index_key(key)] = c;
  }
  return x;
}

Json certificate_to_json(const Certificate& c) {
  Json j = Json::object();
  j["target"] = cycle_to_json(c.target);
  j["terms"] = terms_json(c.terms);
  return j;
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.target = cycle_from_json(need(j, "target"));
  c.terms = read_terms(need(j, "terms"));
  return c;
}

Json report_to_json(const CriteriaReport& r) {
  Json bg = Json::object();
  bg["holds"] = r.basic_generation.holds;
  bg["rank"] = r.basic_generation.rank;
  bg["dim"] = r.basic_generation.dim;
  bg["vacuous"] = r.basic_generation.vacuous;
  Json cr = Json::object();
  cr["primitive"] = r.primitive;
  cr["zhitomirski"] = r.zhitomirski;
  cr["ordine"] = r.ordine;
  cr["basic_generation"] = bg;
  cr["no_triangles"] = r.no_triangles;
  Json j = Json::object();
  j["criteria"] = cr;
  j["conclusion"] = r.conclusion;
  return j;
}

Json reduce_result_to_json(const ReduceResult& r) {
  Json j = certificate_to_json(r.certificate);
  Json tr = Json::array();
  for (const ReduceStep& s : r.trace) {
    Json js = Json::object();
    js["stage"] = reduce_stage_name(s.stage);
    js["target"] = s.target;
    js["coefficient"] = format_rational(s.coefficient);
    js["local_terms"] = terms_json(s.local_terms);
    tr.push_back(js);
  }
  j["trace"] = tr;
  j["s_only"] = cycle_to_json(r.s_only);
  return j;
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
  return buf;
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  if (!f.good() && !f.eof()) throw std::runtime_error("read failed for '" + path + "'");
  return ss.str();
}

void write_text_file_atomic(const std::string& path, const std::string& text) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write '" + tmp + "'");
    f << text;
    f.flush();
    if (!f.good()) {
      std::remove(tmp.c_str());
      throw std::runtime_error("write failed for '" + tmp + "'");
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename '" + tmp + "' over '" + path + "'");
  }
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad JSON: ") + e.what());
  }
}

}  // namespace delstar
