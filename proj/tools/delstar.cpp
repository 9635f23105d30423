#include <CLI11.hpp>

#include <iostream>
#include <random>

#include "delstar/json_io.hpp"
#include "delstar/star_analytic.hpp"
#include "delstar/star_lifted.hpp"
#include "delstar/subdivide.hpp"

using namespace delstar;

namespace {

struct Common {
  std::string input;  // lattice or star JSON file
  std::string family;
  int dim = 0;
  std::string backend = "analytic";
  int window = 2;
  std::string out;
  int jobs = 1;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("input", c.input, "lattice or star JSON file");
  sub->add_option("--family", c.family, "lattice family (Zd, A, Astar, D, Dstar, E6, ...)");
  sub->add_option("--dim", c.dim, "lattice dimension");
  sub->add_option("--backend", c.backend, "star construction backend")
      ->check(CLI::IsMember({"analytic", "lifted"}));
  sub->add_option("--window", c.window, "coordinate window for the lifted backend");
  sub->add_option("--out", c.out, "output JSON file (written atomically)");
  sub->add_option("--jobs", c.jobs, "worker count (reserved; commands run single-threaded)");
}

DeloneStar star_from_lattice(const Lattice& l, const Common& c) {
  if (c.backend == "lifted") return delone_star_lifted(l, c.window);
  if (!l.family)
    throw std::invalid_argument("the analytic backend needs a named family (use --family or a "
                                "lattice file whose name carries one)");
  return delone_star_analytic(*l.family, l.dim);
}

/* Builds the star a command operates on, from a star file, a lattice file, or
 * --family/--dim. Records FNV hashes of whatever inputs were consumed. */
DeloneStar acquire_star(const Common& c, std::map<std::string, std::string>& hashes) {
  if (!c.input.empty()) {
    std::string text = read_text_file(c.input);
    Json j = parse_json_text(text);
    if (j.is_object() && j.contains("cells")) {
      hashes["star"] = fnv1a64_hex(text);
      return star_from_json(j);
    }
    hashes["lattice"] = fnv1a64_hex(text);
    return star_from_lattice(lattice_from_json(j), c);
  }
  if (c.family.empty() || c.dim <= 0)
    throw std::invalid_argument("need an input file, or --family together with --dim");
  auto f = family_from_name(c.family);
  if (!f) throw std::invalid_argument("unknown family '" + c.family + "'");
  DeloneStar star = star_from_lattice(named_lattice(*f, c.dim), c);
  hashes["star"] = fnv1a64_hex(star_to_json(star).dump(2) + "\n");
  return star;
}

void emit(const std::string& out, const Json& j) {
  if (!out.empty()) write_text_file_atomic(out, j.dump(2) + "\n");
}

int run_star(const Common& c) {
  std::map<std::string, std::string> hashes;
  DeloneStar star = acquire_star(c, hashes);
  std::cout << "classes: " << star.cells.size() << "\n";
  std::cout << "vertex counts:";
  for (const DeloneCell& cell : star.cells) std::cout << ' ' << cell.vertices.size();
  std::cout << "\n";
  emit(c.out, star_to_json(star));
  return 0;
}

int run_perturb(const Common& c, std::uint64_t seed, int budget, long long den,
                const std::string& gp_path) {
  std::map<std::string, std::string> hashes;
  DeloneStar star = acquire_star(c, hashes);
  int d = star.lattice.dim;
  QMat gp(d, d);
  if (!gp_path.empty()) {
    std::string text = read_text_file(gp_path);
    Lattice lp = lattice_from_json(parse_json_text(text));
    if (lp.dim != d) throw std::invalid_argument("perturbation dimension mismatch");
    gp = lp.gram;
  } else {
    if (den < 1) throw std::invalid_argument("--denominator must be at least 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> u(-den, den);
    for (int i = 0; i < d; ++i)
      for (int k = i; k < d; ++k) {
        Rational e(Int(u(rng)), Int(den));
        gp.at(i, k) = e;
        gp.at(k, i) = e;
      }
  }
  Rational eps = find_refining_epsilon(star.lattice.gram, gp, star, budget);
  DeloneStar sub = subdivide_star(star, blend_gram(star.lattice.gram, gp, eps));
  std::cout << "epsilon: " << format_rational(eps) << "\n";
  std::cout << "classes: " << sub.cells.size() << "\n";
  Json j = star_to_json(sub);
  j["epsilon"] = format_rational(eps);
  emit(c.out, j);
  return 0;
}

int run_graph(const Common& c) {
  std::map<std::string, std::string> hashes;
  DeloneStar star = acquire_star(c, hashes);
  VenkovGraph g = build_venkov_graph(star);
  std::cout << "vertices: " << g.vertices.size() << "\n";
  std::cout << "edges: " << g.edges.size() << "\n";
  std::cout << "cycle dim: " << cycle_space_dim(g) << "\n";
  emit(c.out, graph_to_json(g));
  return 0;
}

int run_check(const Common& c) {
  std::map<std::string, std::string> hashes;
  DeloneStar star = acquire_star(c, hashes);
  CriteriaReport rep = criteria_report(star);
  Json j = report_to_json(rep);
  j["version"] = kToolVersion;
  Json jh = Json::object();
  for (const auto& [k, v] : hashes) jh[k] = v;
  j["input_hashes"] = jh;
  std::cout << j.dump(2) << "\n";
  emit(c.out, j);
  return rep.conclusion == "yes" ? 0 : 1;
}

int run_certify(const Common& c, int cycle_index, const std::string& cycle_path, bool d2m) {
  std::map<std::string, std::string> hashes;
  DeloneStar star = acquire_star(c, hashes);
  VenkovGraph g = build_venkov_graph(star);
  BasicCycleSet basics = enumerate_basic_cycles(star, g);
  CycleVector x;
  if (!cycle_path.empty()) {
    x = cycle_from_json(parse_json_text(read_text_file(cycle_path)));
    for (const auto& [e, coef] : x.coeffs)
      if (e >= int(g.edges.size()))
        throw std::invalid_argument("cycle file names edge " + std::to_string(e) +
                                    " but the graph has " + std::to_string(g.edges.size()) +
                                    " edges");
  } else {
    std::vector<CycleVector> fc = fundamental_cycles(g);
    if (cycle_index < 0 || cycle_index >= int(fc.size()))
      throw std::invalid_argument("--cycle-index out of range (have " +
                                  std::to_string(fc.size()) + " fundamental cycles)");
    x = fc[cycle_index];
  }
  Json j;
  if (d2m) {
    int d = star.lattice.dim;
    DStarTaxonomy tax = classify_dstar_elements(g, d / 2, d % 2 == 1);
    ReduceResult res = reduce_cycle_d2m(star, g, basics, tax, x);
    std::cout << "trace steps: " << res.trace.size() << "\n";
    std::cout << "terms: " << res.certificate.terms.size() << "\n";
    j = reduce_result_to_json(res);
  } else {
    Certificate cert = decompose_cycle(g, basics, x);
    std::cout << "terms: " << cert.terms.size() << "\n";
    j = certificate_to_json(cert);
  }
  emit(c.out, j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Delone stars, Venkov graphs, and basic-cycle certificates"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  Common c;
  std::uint64_t seed = 0;
  int budget = 40;
  long long den = 64;
  std::string gp_path;
  int cycle_index = 0;
  std::string cycle_path;
  bool d2m = false;

  CLI::App* s_star = app.add_subcommand("star", "build a Delone star and write it as JSON");
  add_common(s_star, c);

  CLI::App* s_pert =
      app.add_subcommand("perturb", "sample a perturbation, find a refining epsilon, subdivide");
  add_common(s_pert, c);
  s_pert->add_option("--seed", seed, "perturbation sampling seed");
  s_pert->add_option("--epsilon-budget", budget, "halvings tried before giving up");
  s_pert->add_option("--denominator", den, "denominator of sampled entries p/q, p in [-q, q]");
  s_pert->add_option("--perturbation", gp_path, "read the perturbation matrix from a lattice file");

  CLI::App* s_graph = app.add_subcommand("graph", "build the triangle-witnessed class graph");
  add_common(s_graph, c);

  CLI::App* s_check = app.add_subcommand("check", "evaluate the tiling criteria and report");
  add_common(s_check, c);

  CLI::App* s_cert = app.add_subcommand("certify", "express a cycle over the basic cycles");
  add_common(s_cert, c);
  s_cert->add_option("--cycle-index", cycle_index, "fundamental-cycle index to certify");
  s_cert->add_option("--cycle", cycle_path, "cycle JSON file (edge index -> coefficient)");
  s_cert->add_flag("--d2m", d2m, "staged reduction for Dstar subdivision graphs, with trace");

  CLI11_PARSE(app, argc, argv);

  try {
    if (s_star->parsed()) return run_star(c);
    if (s_pert->parsed()) return run_perturb(c, seed, budget, den, gp_path);
    if (s_graph->parsed()) return run_graph(c);
    if (s_check->parsed()) return run_check(c);
    if (s_cert->parsed()) return run_certify(c, cycle_index, cycle_path, d2m);
  } catch (const NotInSpanError& e) {
    Json f = Json::object();
    for (const auto& [edge, val] : e.functional) f[std::to_string(edge)] = format_rational(val);
    std::cerr << "error: not in span; separating functional: " << f.dump() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
