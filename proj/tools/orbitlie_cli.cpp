// Command line front end: analyze | check-go | decompose | simulate | catalog list/emit.
// Exit codes: 0 success, 1 error, 2 NotGO on a space that claims G.O.

#include "orbitlie/catalog.hpp"
#include "orbitlie/float_linalg.hpp"
#include "orbitlie/geodesic_sim.hpp"
#include "orbitlie/spec_file.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace orbitlie;

namespace {

CatalogEntry load(const std::string& what) {
  if (is_catalog_name(what) && !std::filesystem::exists(what)) return build(what);
  return parse_file(what);
}

int go_exit(const CatalogEntry& e, const Report& r) {
  return (e.flags.claims_go && r.get("go.verdict") == "NotGO") ? 2 : 0;
}

bool has_errors(const Report& r) {
  for (const auto& s : r.sections())
    for (const auto& kv : s.second)
      if (kv.first == "error") return true;
  return false;
}

std::vector<Eigen::MatrixXd> to_eigen_all(const std::vector<RatMatrix>& ms) {
  std::vector<Eigen::MatrixXd> out;
  for (const auto& m : ms) out.push_back(to_eigen(m));
  return out;
}

int simulate(const CatalogEntry& e, const std::string& xtext, const std::string& ttext, std::size_t steps, const std::string& out) {
  const auto& spec = e.spec;
  const auto tq = parse_rational(ttext);
  if (!tq || *tq <= 0) throw std::invalid_argument("--t must be a positive rational");
  RatVector xm;
  std::istringstream is(xtext);
  std::string tok;
  while (is >> tok) {
    for (auto& c : tok)
      if (c == ',') c = ' ';
    std::istringstream inner(tok);
    std::string piece;
    while (inner >> piece) {
      const auto q = parse_rational(piece);
      if (!q) throw std::invalid_argument("malformed rational in --X: " + piece);
      xm.push_back(*q);
    }
  }
  if (xm.size() != spec.dim_m())
    throw std::invalid_argument("--X needs " + std::to_string(spec.dim_m()) + " coordinates on the basis of m");
  const RatVector x = spec.from_m(xm);
  const auto gv = geodesic_vector(spec, x);
  if (!gv.feasible()) {
    std::cout << "[simulate]\nx = " << format_vector(spec.g(), x) << "\ngeodesic_vector = none\n";
    return e.flags.claims_go ? 2 : 1;
  }
  const RatVector z = gv.certificate->z;
  GroupModel model;
  if (e.matrix_model) {
    model = matrix_model(to_eigen_all(e.matrix_model->matrices), e.matrix_model->s, e.matrix_model->rq);
  } else {
    model = two_step_model(spec);
  }
  const double t = to_double(*tq);
  const auto orbit = orbit_curve(spec, model, x, z, t, steps);
  const auto ma = metric_algebra(spec, model.s);
  RatVector v0;
  for (Eigen::Index i = 0; i < orbit.velocities[0].size(); ++i) v0.push_back(approximate_rational(orbit.velocities[0](i), 1 << 20));
  const auto rep = model_rep(model);
  const auto geo = integrate(ma, v0, t, steps, rep.empty() ? nullptr : &rep);
  const auto dev = compare(orbit, geo);
  if (out.empty() || out == "-") {
    write_trajectory(std::cout, orbit);
  } else {
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot write " + out);
    write_trajectory(os, orbit);
    char buf[64];
    std::cout << "[simulate]\nx = " << format_vector(spec.g(), x) << "\nz = " << format_vector(spec.g(), z) << "\nt = " << ttext
              << "\nsteps = " << steps << "\n";
    std::snprintf(buf, sizeof buf, "%.3e", dev.max());
    std::cout << "deviation_from_integrator = " << buf << "\n";
    std::snprintf(buf, sizeof buf, "%.3e", speed_drift(orbit, ma.ip));
    std::cout << "speed_drift = " << buf << "\ntrajectory = " << out << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geodesic orbit spaces: G.O. criterion, structure decompositions, geodesic simulation"};
  app.require_subcommand(1);

  std::string space;
  auto* analyze = app.add_subcommand("analyze", "Run every applicable checker and compare with the expected flags");
  analyze->add_option("space", space, "Space file or catalog name")->required();

  std::size_t samples = 100;
  std::uint64_t seed = 1;
  auto* check = app.add_subcommand("check-go", "Decide the G.O. criterion");
  check->add_option("space", space, "Space file or catalog name")->required();
  check->add_option("--samples", samples, "Number of sampled directions")->capture_default_str();
  check->add_option("--seed", seed, "Sampling seed")->capture_default_str();

  auto* decompose = app.add_subcommand("decompose", "Radical, Levi, Iwasawa, S x N and submersion data");
  decompose->add_option("space", space, "Space file or catalog name")->required();

  std::string xtext, ttext = "1", out;
  std::size_t steps = 1000;
  auto* sim = app.add_subcommand("simulate", "Orbit of exp(t(X+Z)) with its geodesic cross-check");
  sim->add_option("space", space, "Space file or catalog name")->required();
  sim->add_option("--X", xtext, "Direction in coordinates of the m basis, e.g. \"1 0 1\"")->required();
  sim->add_option("--t", ttext, "End time (rational)")->capture_default_str();
  sim->add_option("--steps", steps, "Grid steps")->capture_default_str()->check(CLI::PositiveNumber);
  sim->add_option("--out", out, "Trajectory file (default: stdout)");

  auto* cat = app.add_subcommand("catalog", "Built-in example spaces");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "List catalog entries");
  std::string name;
  auto* emitc = cat->add_subcommand("emit", "Write an entry in the space-file grammar");
  emitc->add_option("name", name, "Entry name, e.g. sl2cover_nr(1,2)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      const auto e = load(space);
      const auto r = run_all(e);
      std::cout << r.str();
      if (go_exit(e, r)) return 2;
      return (mismatches(r) || has_errors(r)) ? 1 : 0;
    }
    if (check->parsed()) {
      const auto e = load(space);
      const auto r = go_report(e, samples, seed);
      std::cout << r.str();
      return go_exit(e, r);
    }
    if (decompose->parsed()) {
      const auto e = load(space);
      const auto r = decomposition_report(e);
      std::cout << r.str();
      return has_errors(r) ? 1 : 0;
    }
    if (sim->parsed()) return simulate(load(space), xtext, ttext, steps, out);
    if (cat->got_subcommand("list")) {
      for (const auto& n : catalog_names()) std::cout << n << "\n";
      return 0;
    }
    if (cat->got_subcommand("emit")) {
      std::cout << emit(build(name));
      return 0;
    }
  } catch (const ParseError& ex) {
    for (const auto& d : ex.diagnostics()) std::cerr << format_diagnostic(ex.source(), d) << "\n";
    return 1;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 1;
}
