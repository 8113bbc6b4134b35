#include "orbitlie/catalog.hpp"

#include "orbitlie/nilmanifold.hpp"

#include <map>
#include <sstream>

namespace orbitlie {

namespace {

RatVector uv(std::size_t n, std::size_t i) { return unit_vector(n, i); }

RatVector vec(std::initializer_list<Rational> xs) { return RatVector(xs); }

Subspace basis_of(std::size_t n, std::vector<RatVector> vs) { return Subspace::from_basis(n, std::move(vs)); }

RatMatrix diag(const RatVector& d) {
  RatMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

LieAlgebra sl2() {
  return LieAlgebra::from_brackets({"H", "E", "F"}, {{0, 1, 2, 1}, {0, 2, -2, 2}, {1, 2, 1, 0}});
}

LieAlgebra h3(std::vector<std::string> labels = {"e1", "e2", "e3"}) {
  return LieAlgebra::from_brackets(std::move(labels), {{0, 1, 1, 2}});
}

// x -> -x^T on an sl2 block at offset, identity elsewhere.
RatMatrix sl2_theta(std::size_t n, std::size_t off = 0) {
  RatMatrix t = RatMatrix::identity(n);
  t(off, off) = -1;
  t(off + 1, off + 1) = 0;
  t(off + 2, off + 2) = 0;
  t(off + 2, off + 1) = -1;
  t(off + 1, off + 2) = -1;
  return t;
}

RatMatrix mat2(int a, int b, int c, int d) {
  RatMatrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

struct Parsed {
  std::string base;
  std::vector<Rational> params;
};

Parsed parse_name(const std::string& name) {
  Parsed p;
  const auto open = name.find('(');
  if (open == std::string::npos) {
    p.base = name;
    return p;
  }
  if (name.back() != ')') throw CatalogError("malformed catalog name: " + name);
  p.base = name.substr(0, open);
  std::stringstream ss(name.substr(open + 1, name.size() - open - 2));
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto start = item.find_first_not_of(' ');
    const auto end = item.find_last_not_of(' ');
    const auto q = start == std::string::npos ? std::nullopt : parse_rational(item.substr(start, end - start + 1));
    if (!q) throw CatalogError("malformed catalog parameter in " + name);
    p.params.push_back(*q);
  }
  return p;
}

std::string with_params(const std::string& base, const std::vector<Rational>& ps) {
  std::string out = base + "(";
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? "," : "") + to_string(ps[i]);
  return out + ")";
}

std::size_t as_size(const Rational& q, const std::string& what, std::size_t lo, std::size_t hi) {
  if (denominator(q) != 1 || q < static_cast<long>(lo) || q > static_cast<long>(hi))
    throw CatalogError(what + " must be an integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return numerator(q).convert_to<std::size_t>();
}

CatalogEntry euclidean(const std::vector<Rational>& ps) {
  const std::size_t n = as_size(ps.at(0), "euclidean: n", 1, 12);
  CatalogEntry e;
  e.name = with_params("euclidean", ps);
  e.spec = HomogeneousSpaceSpec(LieAlgebra::abelian(n), Subspace::zero(n), Subspace::full(n), RatMatrix::identity(n));
  e.flags = {true, true, true, false};
  e.expected = {{"go.verdict", "ProvedGO"},        {"go.certificate", "symmetric"},  {"go.naturally_reductive_on_m", "yes"},
                {"submersion.case", "2"},          {"submersion.fiber_dim", std::to_string(n)},
                {"submersion.base_dim", "0"},      {"nilmanifold.step", "1"},        {"thm_nil.step", "1"}};
  return e;
}

CatalogEntry heisenberg3() {
  CatalogEntry e;
  e.name = "heisenberg3";
  e.spec = to_homogeneous_spec(make_nilmanifold(h3(), RatMatrix::identity(3)), {"J"});
  e.flags = {true, true, true, false};
  e.blocks = {basis_of(4, {uv(4, 0), uv(4, 1)})};
  e.invariant_subalgebras = {basis_of(4, {uv(4, 2)})};
  e.expected = {{"go.verdict", "ProbablyGO"},   {"go.feasible", "100"},         {"submersion.case", "2"},
                {"submersion.base_dim", "0"},   {"submersion.fiber_dim", "3"},  {"nilmanifold.step", "2"},
                {"nilmanifold.skew_derivations", "1"}, {"thm_nil.step", "2"},   {"lemma_skew.result", "pass"}};
  return e;
}

CatalogEntry heisenberg3_anisotropic() {
  CatalogEntry e;
  e.name = "heisenberg3_anisotropic";
  const RatMatrix ip = diag(vec({1, 2, 1}));
  e.spec = to_homogeneous_spec(make_nilmanifold(h3(), ip));
  e.flags = {true, true, true, false};
  e.blocks = {basis_of(4, {uv(4, 0), uv(4, 1)})};
  e.invariant_subalgebras = {basis_of(4, {uv(4, 2)})};
  // verdict recorded from the solver
  e.expected = {{"go.verdict", "ProbablyGO"}, {"nilmanifold.skew_derivations", "1"}, {"nilmanifold.step", "2"},
                {"submersion.case", "2"}};
  return e;
}

CatalogEntry h3_product() {
  CatalogEntry e;
  e.name = "h3_product";
  const auto n = direct_sum(h3(), h3({"f1", "f2", "f3"}));
  e.spec = to_homogeneous_spec(make_nilmanifold(n, RatMatrix::identity(6)), {"J1", "J2"});
  const std::size_t d = e.spec.g().dim();
  e.flags = {true, true, true, false};
  e.blocks = {basis_of(d, {uv(d, 0), uv(d, 1)}), basis_of(d, {uv(d, 3), uv(d, 4)})};
  e.invariant_subalgebras = {basis_of(d, {uv(d, 0), uv(d, 1), uv(d, 2)}), basis_of(d, {uv(d, 3), uv(d, 4), uv(d, 5)})};
  e.expected = {{"go.verdict", "ProbablyGO"}, {"nilmanifold.skew_derivations", "2"}, {"nilmanifold.step", "2"},
                {"submersion.case", "2"},     {"submersion.fiber_dim", "6"}};
  return e;
}

CatalogEntry e11_sol() {
  CatalogEntry e;
  e.name = "e11_sol";
  const auto g = LieAlgebra::from_brackets({"e1", "e2", "e3"}, {{0, 1, 1, 1}, {0, 2, -1, 2}});
  e.spec = HomogeneousSpaceSpec(g, Subspace::zero(3), Subspace::full(3), RatMatrix::identity(3));
  e.witnesses = {uv(3, 1)};
  RatMatrix a(3, 3), b(3, 3), c(3, 3);
  a(0, 0) = 1;
  a(1, 1) = -1;
  b(0, 2) = 1;
  c(1, 2) = 1;
  e.matrix_model = MatrixModelData{{a, b, c}, Subspace::full(3), false};
  e.expected = {{"go.verdict", "NotGO"},           {"go.witness_certificate_verified", "yes"},
                {"go.stored_witness_1", "e2: no geodesic vector, certificate verified"},
                {"lemma_skew.result", "fail: Y = e1"}, {"thm_nil.applicable", "no"}};
  return e;
}

CatalogEntry hyperbolic_plane() {
  CatalogEntry e;
  e.name = "hyperbolic_plane";
  const auto g = sl2();
  const auto h = basis_of(3, {vec({0, 1, -1})});
  e.spec = HomogeneousSpaceSpec(g, h, killing_complement(g, h), RatMatrix::identity(2));
  e.flags = {true, false, true, false};
  e.theta = sl2_theta(3);
  e.matrix_model = MatrixModelData{{mat2(1, 0, 0, -1), mat2(0, 1, 0, 0), mat2(0, 0, 1, 0)}, basis_of(3, {uv(3, 0), uv(3, 1)}), true};
  e.expected = {{"go.verdict", "ProvedGO"},       {"go.certificate", "symmetric"}, {"submersion.case", "1"},
                {"submersion.base_dim", "2"},     {"submersion.fiber_dim", "0"},   {"iwasawa.dim_k", "1"},
                {"iwasawa.dim_a", "1"},           {"iwasawa.dim_n", "1"}};
  return e;
}

CatalogEntry slnr_symmetric(const std::vector<Rational>& ps) {
  const std::size_t n = as_size(ps.at(0), "slnR_symmetric: n", 2, 6);
  CatalogEntry e;
  e.name = with_params("slnR_symmetric", ps);
  std::vector<RatMatrix> mats;
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> offdiag;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    RatMatrix m(n, n);
    m(i, i) = 1;
    m(i + 1, i + 1) = -1;
    mats.push_back(m);
    labels.push_back("H" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) {
        RatMatrix m(n, n);
        m(i, j) = 1;
        mats.push_back(m);
        labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
        offdiag.emplace_back(i, j);
      }
  const auto g = LieAlgebra::from_matrix_basis(labels, mats);
  const std::size_t d = g.dim();
  auto idx = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < offdiag.size(); ++k)
      if (offdiag[k] == std::make_pair(i, j)) return n - 1 + k;
    return d;
  };
  std::vector<RatVector> hb, sb;
  for (std::size_t i = 0; i + 1 < n; ++i) sb.push_back(uv(d, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      hb.push_back(uv(d, idx(i, j)) - uv(d, idx(j, i)));
      sb.push_back(uv(d, idx(i, j)));
    }
  const auto h = basis_of(d, hb);
  const auto m = killing_complement(g, h);
  auto as_matrix = [&](const RatVector& x) {
    RatMatrix out(n, n);
    for (std::size_t k = 0; k < d; ++k)
      if (x[k] != 0) out = out + x[k] * mats[k];
    return out;
  };
  RatMatrix ip(m.dim(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) ip(i, j) = (as_matrix(m.basis_vector(i)) * as_matrix(m.basis_vector(j))).trace();
  e.spec = HomogeneousSpaceSpec(g, h, m, ip);
  RatMatrix theta(d, d);
  for (std::size_t i = 0; i + 1 < n; ++i) theta(i, i) = -1;
  for (const auto& [i, j] : offdiag) theta(idx(j, i), idx(i, j)) = -1;
  e.theta = theta;
  e.flags = {true, false, true, false};
  e.matrix_model = MatrixModelData{mats, basis_of(d, sb), true};
  const std::size_t half = n * (n - 1) / 2;
  e.expected = {{"go.verdict", "ProvedGO"},
                {"go.certificate", "symmetric"},
                {"submersion.case", "1"},
                {"submersion.base_dim", std::to_string(m.dim())},
                {"iwasawa.dim_k", std::to_string(half)},
                {"iwasawa.dim_a", std::to_string(n - 1)},
                {"iwasawa.dim_n", std::to_string(half)}};
  return e;
}

CatalogEntry sl2cover_nr(const std::vector<Rational>& ps) {
  const Rational a = ps.at(0), b = ps.at(1);
  if (a <= 0 || b <= 0) throw CatalogError("sl2cover_nr: parameters must be positive");
  CatalogEntry e;
  e.name = with_params("sl2cover_nr", ps);
  const auto g = direct_sum(sl2(), LieAlgebra::abelian(1, {"f0"}));
  const auto h = basis_of(4, {vec({0, 1, -1, 1})});
  const auto m = killing_complement(g, h);  // H, E + F, f0
  e.spec = HomogeneousSpaceSpec(g, h, m, diag({8 * a, 8 * a, b}));
  e.theta = sl2_theta(4);
  // ad(h)-invariant complement on which the metric is naturally reductive
  const Rational t = b / (8 * a);
  e.nr_complement = basis_of(4, {uv(4, 0), vec({0, 1, 1, 0}), vec({0, t, -t, 1 + t})});
  e.flags = {true, false, true, true};
  e.expected = {{"go.verdict", "ProvedGO"},      {"go.certificate", "naturally-reductive"},
                {"submersion.case", "3"},        {"submersion.base_dim", "2"},
                {"submersion.fiber_dim", "1"},   {"gnc.result", "pass"},
                {"s_not_orthogonal.nonzero", "yes"}};
  return e;
}

CatalogEntry hyperbolic_x_h3() {
  CatalogEntry e;
  e.name = "hyperbolic_x_h3";
  const auto h3j = LieAlgebra::from_brackets({"e1", "e2", "e3", "J"}, {{0, 1, 1, 2}, {3, 0, 1, 1}, {3, 1, -1, 0}});
  const auto g = direct_sum(sl2(), h3j);
  const std::size_t d = 7;
  const auto h = basis_of(d, {vec({0, 1, -1, 0, 0, 0, 0}), uv(d, 6)});
  const auto m = basis_of(d, {uv(d, 0), vec({0, 1, 1, 0, 0, 0, 0}), uv(d, 3), uv(d, 4), uv(d, 5)});
  e.spec = HomogeneousSpaceSpec(g, h, m, RatMatrix::identity(5));
  e.theta = sl2_theta(d);
  e.flags = {true, false, true, false};
  e.expected = {{"go.verdict", "ProbablyGO"},    {"submersion.case", "3"},   {"submersion.base_dim", "2"},
                {"submersion.fiber_dim", "3"},   {"submersion.p_perp_nil", "pass"}, {"gnc.result", "pass"},
                {"submersion.fiber_step", "2"}};
  return e;
}

CatalogEntry free_nilpotent_step3() {
  CatalogEntry e;
  e.name = "free_nilpotent_step3";
  const auto n = LieAlgebra::from_brackets({"x1", "x2", "x3", "x4", "x5"}, {{0, 1, 1, 2}, {0, 2, 1, 3}, {1, 2, 1, 4}});
  e.spec = to_homogeneous_spec(make_nilmanifold(n, RatMatrix::identity(5)), {"J"});
  e.flags = {false, true, false, false};
  e.samples = 500;
  e.expected = {{"go.verdict", "NotGO"}, {"nilmanifold.step", "3"}, {"go.witness_certificate_verified", "yes"}};
  return e;
}

const std::map<std::string, std::vector<Rational>>& defaults() {
  static const std::map<std::string, std::vector<Rational>> d = {
      {"euclidean", {Rational(3)}}, {"slnR_symmetric", {Rational(3)}}, {"sl2cover_nr", {Rational(1), Rational(1)}}};
  return d;
}

std::string subspace_text(const LieAlgebra& g, const Subspace& s) { return format_subspace(g, s.canonical()); }

void structure_section(const CatalogEntry& e, Report& r, std::optional<LeviData>& ld) {
  const auto& g = e.spec.g();
  try {
    ld = levi(g, e.levi_candidate);
  } catch (const std::exception& ex) {
    r.set("structure", "error", ex.what());
    return;
  }
  r.set("structure", "radical", subspace_text(g, ld->radical));
  r.set("structure", "nilradical", subspace_text(g, ld->nilradical));
  r.set("structure", "levi", subspace_text(g, ld->levi));
  r.set("structure", "levi_nc", subspace_text(g, ld->levi_nc));
  r.set("structure", "levi_cp", subspace_text(g, ld->levi_cp));
  r.set("structure", "dim_radical", std::to_string(ld->radical.dim()));
  r.set("structure", "dim_nilradical", std::to_string(ld->nilradical.dim()));
  r.set("structure", "dim_levi_nc", std::to_string(ld->levi_nc.dim()));
  r.set("structure", "dim_levi_cp", std::to_string(ld->levi_cp.dim()));
  r.set("structure", "center", subspace_text(g, center(g)));
  const auto gn = gnc_check(e.spec, *ld);
  r.set("gnc", "result", check_value(gn));
}

std::string gram_text(const RatMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? " " : "") + to_string(m(i, j));
  }
  return out.empty() ? "-" : out;
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"euclidean(3)",      "heisenberg3",        "heisenberg3_anisotropic", "h3_product",
          "e11_sol",           "hyperbolic_plane",   "slnR_symmetric(3)",       "sl2cover_nr(1,1)",
          "hyperbolic_x_h3",   "free_nilpotent_step3"};
}

bool is_catalog_name(const std::string& name) {
  const auto open = name.find('(');
  const auto base = name.substr(0, open);
  for (const auto& n : catalog_names())
    if (n.substr(0, n.find('(')) == base) return true;
  return false;
}

CatalogEntry build(const std::string& name) {
  auto p = parse_name(name);
  const auto d = defaults().find(p.base);
  if (d != defaults().end()) {
    if (p.params.empty()) p.params = d->second;
    if (p.params.size() != d->second.size())
      throw CatalogError(p.base + " takes " + std::to_string(d->second.size()) + " parameter(s)");
  } else if (!p.params.empty()) {
    throw CatalogError(p.base + " takes no parameters");
  }
  if (p.base == "euclidean") return euclidean(p.params);
  if (p.base == "heisenberg3") return heisenberg3();
  if (p.base == "heisenberg3_anisotropic") return heisenberg3_anisotropic();
  if (p.base == "h3_product") return h3_product();
  if (p.base == "e11_sol") return e11_sol();
  if (p.base == "hyperbolic_plane") return hyperbolic_plane();
  if (p.base == "slnR_symmetric") return slnr_symmetric(p.params);
  if (p.base == "sl2cover_nr") return sl2cover_nr(p.params);
  if (p.base == "hyperbolic_x_h3") return hyperbolic_x_h3();
  if (p.base == "free_nilpotent_step3") return free_nilpotent_step3();
  throw CatalogError("unknown catalog entry: " + p.base);
}

NilmanifoldSpec entry_nilmanifold(const CatalogEntry& e) {
  if (!e.flags.nilmanifold) throw CatalogError(e.name + " is not flagged as a nilmanifold");
  return make_nilmanifold(restrict_to(e.spec.g(), e.spec.m()), e.spec.ip());
}

Report go_report(const CatalogEntry& e, std::size_t samples, std::uint64_t seed) {
  Report r;
  const auto& g = e.spec.g();
  GoOptions opts;
  opts.samples = samples;
  opts.seed = seed;
  opts.nr_complement = e.nr_complement;
  const auto v = check_go(e.spec, opts);
  r.set("go", "verdict", verdict_name(v.kind));
  r.set("go", "certificate", v.certificate.empty() ? "-" : v.certificate);
  r.set("go", "seed", std::to_string(v.seed));
  r.set("go", "samples", std::to_string(v.samples));
  r.set("go", "feasible", std::to_string(v.feasible));
  if (v.witness) {
    r.set("go", "witness_x", format_vector(g, v.witness->x));
    r.set("go", "witness_sample", std::to_string(v.witness_sample));
    r.set("go", "witness_rank_a", std::to_string(v.witness->rank_a));
    r.set("go", "witness_rank_augmented", std::to_string(v.witness->rank_augmented));
    r.set("go", "witness_certificate_verified", verify_infeasibility(e.spec, *v.witness) ? "yes" : "no");
  }
  r.set("go", "naturally_reductive_on_m", natural_reductivity(e.spec).holds ? "yes" : "no");
  r.set("go", "claims_go", e.flags.claims_go ? "yes" : "no");
  r.set("go", "consistent_with_claim", (e.flags.claims_go && v.kind == VerdictKind::NotGO) ? "no" : "yes");
  return r;
}

Report decomposition_report(const CatalogEntry& e) {
  Report r;
  const auto& spec = e.spec;
  const auto& g = spec.g();
  std::optional<LeviData> ld;
  structure_section(e, r, ld);
  if (!e.flags.rn_type || !ld) return r;

  StructureInput in;
  in.levi_candidate = e.levi_candidate;
  in.theta = e.theta;
  std::optional<RnDecomposition> rn;
  try {
    rn = rn_decompose(spec, in);
  } catch (const std::exception& ex) {
    r.set("rn", "error", ex.what());
    return r;
  }
  r.set("rn", "l", subspace_text(g, rn->l));
  r.set("rn", "f", subspace_text(g, rn->f));
  r.set("rn", "s", subspace_text(g, rn->s));
  r.set("rn", "u", subspace_text(g, rn->u));
  r.set("rn", "dim_s", std::to_string(rn->s.dim()));
  r.set("rn", "dim_u", std::to_string(rn->u.dim()));
  r.set("rn", "dim_f", std::to_string(rn->f.dim()));
  r.set("rn", "n_step", std::to_string(rn->n_step));
  r.set("rn", "s_commutes_nil", rn->s_commutes_nil ? "yes" : "no");
  r.set("rn", "pullback_ip", gram_text(rn->pullback_ip));
  r.add_checks("rn", rn->checks);
  if (rn->iwasawa) {
    const auto& iw = *rn->iwasawa;
    r.set("iwasawa", "k", subspace_text(g, iw.k));
    r.set("iwasawa", "a", subspace_text(g, iw.a));
    r.set("iwasawa", "n", subspace_text(g, iw.n_plus));
    r.set("iwasawa", "dim_k", std::to_string(iw.k.dim()));
    r.set("iwasawa", "dim_a", std::to_string(iw.a.dim()));
    r.set("iwasawa", "dim_n", std::to_string(iw.n_plus.dim()));
    r.set("iwasawa", "regular", format_vector(g, iw.regular));
    std::string roots;
    for (const auto& root : iw.roots) {
      if (!roots.empty()) roots += ", ";
      roots += to_string(root.value) + " x" + std::to_string(root.multiplicity);
    }
    r.set("iwasawa", "root_values", roots);
    r.add_checks("iwasawa", iw.checks);
  }
  if (rn->cartan) r.add_checks("cartan", rn->cartan->checks);

  try {
    const auto sd = submersion_decompose(spec, *rn);
    r.set("submersion", "case", std::to_string(sd.case_number));
    r.set("submersion", "q", subspace_text(g, sd.q));
    r.set("submersion", "k", subspace_text(g, sd.k));
    r.set("submersion", "p", subspace_text(g, sd.p));
    r.set("submersion", "base_dim", std::to_string(sd.p.dim()));
    r.set("submersion", "fiber_dim", std::to_string(sd.fiber ? sd.fiber->n.dim() : 0));
    r.set("submersion", "base_ip", gram_text(sd.base_ip));
    r.add_checks("submersion", sd.checks);
    if (sd.fiber) {
      const auto st = series(sd.fiber->n);
      r.set("submersion", "fiber_step", std::to_string(st.step));
      if (sd.fiber->n.dim() > 0) {
        const auto fs = to_homogeneous_spec(*sd.fiber);
        GoOptions opts;
        opts.samples = 25;
        opts.seed = e.seed;
        r.set("submersion", "fiber_go", verdict_name(check_go(fs, opts).kind));
      }
    }
  } catch (const std::exception& ex) {
    r.set("submersion", "error", ex.what());
  }

  if (e.flags.s_not_orthogonal) {
    try {
      const auto sn = s_not_orthogonal_check(spec, *rn);
      r.set("s_not_orthogonal", "nonzero", sn.nonzero ? "yes" : "no");
      r.set("s_not_orthogonal", "max_pairing", to_string(sn.max_pairing));
      r.set("s_not_orthogonal", "witness", sn.witness.empty() ? "-" : sn.witness);
      for (const auto& part : sn.parts)
        r.set("s_not_orthogonal", format_vector(g, part.x),
              format_vector(g, part.x_h) + " | " + format_vector(g, part.x_p) + " | " + format_vector(g, part.x_rest));
    } catch (const std::exception& ex) {
      r.set("s_not_orthogonal", "error", ex.what());
    }
  }
  return r;
}

Report run_all(const CatalogEntry& e) {
  Report r;
  const auto& spec = e.spec;
  const auto& g = spec.g();
  r.set("entry", "name", e.name);
  std::string labels;
  for (const auto& l : g.labels()) labels += (labels.empty() ? "" : " ") + l;
  r.set("entry", "basis", labels);
  r.set("entry", "dim_g", std::to_string(g.dim()));
  r.set("entry", "dim_h", std::to_string(spec.dim_h()));
  r.set("entry", "dim_m", std::to_string(spec.dim_m()));
  r.set("entry", "h", subspace_text(g, spec.h()));
  r.set("entry", "m", format_subspace(g, spec.m()));
  r.add_checks("validate", validate(spec));

  r.merge(go_report(e, e.samples, e.seed));
  for (std::size_t i = 0; i < e.witnesses.size(); ++i) {
    const auto res = geodesic_vector(spec, e.witnesses[i]);
    std::string val = format_vector(g, e.witnesses[i]) + ": ";
    if (res.feasible())
      val += "geodesic vector exists";
    else
      val += std::string("no geodesic vector, certificate ") + (verify_infeasibility(spec, *res.infeasible) ? "verified" : "rejected");
    r.set("go", "stored_witness_" + std::to_string(i + 1), val);
  }

  r.set("lemma_skew", "result", check_value(skew_consequence(spec)));
  const auto nd = normalizer_data(spec);
  r.set("normalizer", "c_m_h", subspace_text(g, nd.c_m_h));
  r.set("normalizer", "f", subspace_text(g, nd.f));
  r.add_checks("normalizer", nd.checks);

  r.merge(decomposition_report(e));

  try {
    const auto ld = levi(g, e.levi_candidate);
    const auto tn = thm_nil_check(spec, ld);
    r.set("thm_nil", "applicable", tn.applicable ? "yes" : "no");
    r.set("thm_nil", "step", std::to_string(tn.step));
    r.add_checks("thm_nil", tn.checks);
  } catch (const std::exception& ex) {
    r.set("thm_nil", "error", ex.what());
  }
  try {
    const auto oa = o_algebra(spec);
    r.set("o_algebra", "o", subspace_text(g, oa.o));
    r.add_checks("o_algebra", oa.checks);
  } catch (const StructureError& ex) {
    r.set("o_algebra", "skipped", ex.what());
  }

  if (e.flags.nilmanifold) {
    try {
      const auto ns = entry_nilmanifold(e);
      const auto sb = step_bound_check(ns, e.flags.claims_go);
      r.set("nilmanifold", "step", std::to_string(sb.step));
      r.set("nilmanifold", "step_consistent_with_claim", sb.consistent ? "yes" : "no");
      r.set("nilmanifold", "skew_derivations", std::to_string(skew_derivations(ns).size()));
      r.set("nilmanifold", "z", format_subspace(ns.n, ns.z));
      r.set("nilmanifold", "v", format_subspace(ns.n, ns.v));
      auto to_n = [&](const Subspace& s) {
        std::vector<RatVector> vs;
        for (const auto& x : s.basis()) vs.push_back(*spec.m().coordinates(x));
        return Subspace::span(ns.n.dim(), vs);
      };
      if (!e.blocks.empty()) {
        std::vector<Subspace> bs;
        for (const auto& b : e.blocks) bs.push_back(to_n(b));
        try {
          r.add_checks("nilmanifold", [&] {
            CheckList c;
            c.append(commuting_blocks_check(ns, bs), "blocks.");
            return c;
          }());
        } catch (const SpecError& ex) {
          r.set("nilmanifold", "blocks.precondition", std::string("fail: ") + ex.what());
        }
      }
      for (std::size_t i = 0; i < e.invariant_subalgebras.size(); ++i) {
        const std::string key = "subalgebra_" + std::to_string(i + 1);
        try {
          r.set("nilmanifold", key, check_value(invariant_subalgebra_ideal_check(ns, to_n(e.invariant_subalgebras[i]))));
        } catch (const SpecError& ex) {
          r.set("nilmanifold", key, std::string("precondition fail: ") + ex.what());
        }
      }
    } catch (const std::exception& ex) {
      r.set("nilmanifold", "error", ex.what());
    }
  }

  std::size_t bad = 0;
  for (const auto& [key, want] : e.expected) {
    const auto got = r.get(key);
    if (got && *got == want) {
      r.set("expected", key, "match");
    } else {
      ++bad;
      r.set("expected", key, "MISMATCH (want " + want + ", got " + (got ? *got : std::string("nothing")) + ")");
    }
  }
  r.set("expected", "mismatches", std::to_string(bad));
  return r;
}

std::size_t mismatches(const Report& r) {
  const auto m = r.get("expected.mismatches");
  return m ? std::stoul(*m) : 0;
}

}  // namespace orbitlie
