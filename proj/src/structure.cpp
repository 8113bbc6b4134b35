#include "orbitlie/structure.hpp"

#include "orbitlie/float_linalg.hpp"

#include <algorithm>
#include <cmath>

namespace orbitlie {

namespace {

// Coordinates of g-vectors in the basis of a subspace, as a matrix acting on those coordinates.
RatMatrix restricted_action(const RatMatrix& a, const Subspace& s) {
  RatMatrix out(s.dim(), s.dim());
  for (std::size_t j = 0; j < s.dim(); ++j) {
    const auto c = s.coordinates(a.apply(s.basis_vector(j)));
    if (!c) throw StructureError("restricted_action: subspace is not invariant");
    for (std::size_t i = 0; i < s.dim(); ++i) out(i, j) = (*c)[i];
  }
  return out;
}

Subspace lift(const Subspace& coords, const Subspace& s) {
  std::vector<RatVector> vs;
  for (const auto& c : coords.basis()) vs.push_back(s.combine(c));
  return Subspace::span(s.ambient_dim(), vs).canonical();
}

}  // namespace

CartanData cartan_data(const LieAlgebra& g, const Subspace& levi_nc, const RatMatrix& theta) {
  const std::size_t n = g.dim();
  if (theta.rows() != n || theta.cols() != n) throw StructureError("cartan_data: theta has wrong size");
  CartanData cd;
  cd.theta = theta;
  bool invariant = true;
  for (const auto& x : levi_nc.basis()) invariant = invariant && levi_nc.contains(theta.apply(x));
  cd.checks.add("theta_preserves_levi_nc", invariant);
  if (!invariant) return cd;
  bool involution = true, automorphism = true;
  for (const auto& x : levi_nc.basis()) involution = involution && theta.apply(theta.apply(x)) == x;
  for (std::size_t i = 0; i < levi_nc.dim(); ++i)
    for (std::size_t j = i + 1; j < levi_nc.dim(); ++j) {
      const auto& x = levi_nc.basis_vector(i);
      const auto& y = levi_nc.basis_vector(j);
      automorphism = automorphism && theta.apply(g.bracket(x, y)) == g.bracket(theta.apply(x), theta.apply(y));
    }
  cd.checks.add("theta_involution", involution);
  cd.checks.add("theta_automorphism", automorphism);
  const auto l = restrict_to(g, levi_nc);
  const RatMatrix tl = restricted_action(theta, levi_nc);
  const RatMatrix gram = Rational(-1) * (killing(l) * tl);
  cd.checks.add("minus_b_theta_positive_definite", is_positive_definite(gram));
  cd.k = restricted_kernel(theta - RatMatrix::identity(n), levi_nc);
  cd.p = restricted_kernel(theta + RatMatrix::identity(n), levi_nc);
  cd.checks.add("k_plus_p", cd.k.dim() + cd.p.dim() == levi_nc.dim());
  cd.checks.add("k_k_in_k", cd.k.contains(bracket_span(g, cd.k, cd.k)));
  cd.checks.add("k_p_in_p", cd.p.contains(bracket_span(g, cd.k, cd.p)));
  cd.checks.add("p_p_in_k", cd.k.contains(bracket_span(g, cd.p, cd.p)));
  return cd;
}

namespace {

struct RootAttempt {
  bool ok = false;
  std::string reason;
  std::vector<RestrictedRoot> roots;
  Subspace zero_space;
};

RootAttempt restricted_roots(const LieAlgebra& g, const Subspace& levi_nc, const CartanData& cd, const Subspace& a,
                             const RatVector& h, const IwasawaOptions& opts) {
  RootAttempt out;
  const std::size_t d = levi_nc.dim();
  const auto l = restrict_to(g, levi_nc);
  const RatMatrix ah = restricted_action(g.ad(h), levi_nc);
  const RatMatrix gram = Rational(-1) * (killing(l) * restricted_action(cd.theta, levi_nc));

  // ad(H) is self-adjoint for gram; symmetrize with its Cholesky factor.
  const Eigen::MatrixXd ge = to_eigen(gram);
  Eigen::LLT<Eigen::MatrixXd> llt(ge);
  if (llt.info() != Eigen::Success) throw StructureError("iwasawa: -B(x, theta y) is not positive definite");
  const Eigen::MatrixXd lm = llt.matrixL();
  const Eigen::MatrixXd ltA = lm.transpose() * to_eigen(ah);
  // S = L^T A L^{-T}  <=>  S L^T = L^T A
  const Eigen::MatrixXd st = lm.triangularView<Eigen::Lower>().solve(ltA.transpose());
  Eigen::MatrixXd sym = st;
  sym = 0.5 * (sym + sym.transpose()).eval();
  const auto eig = sym_eigen(sym, 1e-13);

  std::vector<Rational> values;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    const double lam = eig.values(i);
    const Rational r = approximate_rational(lam, opts.max_denominator);
    if (std::abs(to_double(r) - lam) > opts.tol) throw StructureError("iwasawa: non-rational restricted root value");
    if (std::find(values.begin(), values.end(), r) == values.end()) values.push_back(r);
  }
  std::sort(values.begin(), values.end());

  std::size_t total = 0;
  const RatMatrix id = RatMatrix::identity(d);
  for (const auto& lam : values) {
    const RatMatrix shifted = ah - lam * id;
    const auto sp = lift(kernel(shifted * shifted), levi_nc);
    total += sp.dim();
    if (lam == 0) {
      out.zero_space = sp;
      continue;
    }
    RestrictedRoot root;
    root.value = lam;
    root.multiplicity = sp.dim();
    root.space = sp;
    const auto& v0 = sp.basis_vector(0);
    for (const auto& ai : a.basis()) {
      const auto img = g.bracket(ai, v0);
      // img = alpha * v0
      std::size_t p = 0;
      while (v0[p] == 0) ++p;
      const Rational alpha = img[p] / v0[p];
      for (const auto& w : sp.basis())
        if (g.bracket(ai, w) != alpha * w) {
          out.reason = "non-generic regular element: root space is not a joint eigenspace";
          return out;
        }
      root.functional.push_back(alpha);
    }
    out.roots.push_back(std::move(root));
  }
  if (total != d) {
    out.reason = "restricted root spaces do not span levi_nc";
    return out;
  }
  const auto m0a = centralizer(g, a, levi_nc);
  if (!(out.zero_space == m0a)) {
    out.reason = "regular element annihilated by a root";
    return out;
  }
  out.ok = true;
  return out;
}

}  // namespace

IwasawaData iwasawa(const LieAlgebra& g, const Subspace& levi_nc, const CartanData& cd, const IwasawaOptions& opts) {
  if (!cd.checks.all_pass()) throw StructureError("iwasawa: Cartan data failed verification");
  if (cd.p.is_zero()) throw StructureError("iwasawa: levi_nc is not of noncompact type (p = 0)");
  const std::size_t n = g.dim();
  IwasawaData out;
  out.k = cd.k;

  // Maximal abelian subspace of p by centralizer chains.
  Subspace a = Subspace::zero(n);
  while (true) {
    const auto c = a.is_zero() ? cd.p : centralizer(g, a, cd.p);
    if (c == a.canonical()) break;
    for (const auto& x : c.basis())
      if (!a.contains(x)) {
        auto b = a.basis();
        b.push_back(x);
        a = Subspace::from_basis(n, b);
        break;
      }
  }
  out.a = a;

  std::vector<std::vector<double>> candidates;
  if (!opts.regular.empty()) {
    if (opts.regular.size() != a.dim()) throw StructureError("iwasawa: regular vector has wrong length");
    candidates.push_back(opts.regular);
  } else {
    for (double base : {2.0, 3.0, 5.0, 7.0}) {
      std::vector<double> c;
      for (std::size_t i = 0; i < a.dim(); ++i) c.push_back(std::pow(base, -static_cast<double>(i)));
      candidates.push_back(c);
    }
  }
  std::string last_reason;
  for (const auto& c : candidates) {
    RatVector coeffs;
    for (double x : c) coeffs.push_back(approximate_rational(x, std::int64_t{1} << 20));
    const RatVector h = a.combine(coeffs);
    auto attempt = restricted_roots(g, cd.p.is_zero() ? a : sum(cd.k, cd.p), cd, a, h, opts);
    if (!attempt.ok) {
      last_reason = attempt.reason;
      continue;
    }
    out.regular = h;
    out.roots = std::move(attempt.roots);
    std::vector<RatVector> np;
    for (const auto& r : out.roots)
      if (r.value > 0) np.insert(np.end(), r.space.basis().begin(), r.space.basis().end());
    out.n_plus = Subspace::span(n, np).canonical();
    std::vector<RatVector> sb = a.basis();
    sb.insert(sb.end(), out.n_plus.basis().begin(), out.n_plus.basis().end());
    out.s = Subspace::span(n, sb);
    out.checks.add("dims_add_up", out.k.dim() + a.dim() + out.n_plus.dim() == levi_nc.dim());
    out.checks.add("k_a_n_direct", is_direct_sum({out.k, a, out.n_plus}) && sum({out.k, a, out.n_plus}) == levi_nc.canonical());
    out.checks.add("a_abelian", brackets_vanish(g, a, a));
    out.checks.add("a_n_in_n", out.n_plus.contains(bracket_span(g, a, out.n_plus)));
    out.checks.add("n_nilpotent", is_subalgebra(g, out.n_plus) && series(g, out.n_plus).nilpotent);
    out.checks.add("s_solvable", is_subalgebra(g, out.s) && series(g, out.s).solvable);
    if (!out.checks.all_pass()) throw StructureError("iwasawa: decomposition failed verification");
    return out;
  }
  throw StructureError("iwasawa: " + last_reason);
}

OAlgebra o_algebra(const HomogeneousSpaceSpec& spec) {
  const auto& g = spec.g();
  const std::size_t n = g.dim();
  OAlgebra out;
  out.nil = nilradical(g);
  if (!spec.m().contains(out.nil)) throw StructureError("o_algebra: Nil(g) is not contained in m");
  const std::size_t k = out.nil.dim();
  RatMatrix gram(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = spec.inner(out.nil.basis_vector(i), out.nil.basis_vector(j));
  std::vector<RatMatrix> acts;
  for (std::size_t c = 0; c < n; ++c) acts.push_back(restricted_action(g.ad_basis(c), out.nil));
  std::vector<RatVector> rows;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      RatVector row(n);
      for (std::size_t c = 0; c < n; ++c) row[c] = (acts[c].transpose() * gram + gram * acts[c])(i, j);
      rows.push_back(row);
    }
  out.o = rows.empty() ? whole(g).canonical() : kernel(RatMatrix::from_rows(rows, n));
  // p: ip-orthogonal complement of Nil in m, in m coordinates.
  std::vector<RatVector> nc;
  for (const auto& x : out.nil.basis()) nc.push_back(spec.m_coords(x));
  const auto pm = orthocomplement(spec.ip(), Subspace::span(spec.dim_m(), nc), Subspace::full(spec.dim_m()));
  std::vector<RatVector> pv;
  for (const auto& c : pm.basis()) pv.push_back(spec.from_m(c));
  out.p = Subspace::span(n, pv).canonical();
  out.checks.add("o_subalgebra", is_subalgebra(g, out.o));
  out.checks.add("h_in_o", out.o.contains(spec.h()));
  out.checks.add("p_in_o", out.o.contains(out.p));
  out.checks.add("g_equals_o_plus_nil", sum(out.o, out.nil).dim() == n);
  return out;
}

Check gnc_check(const HomogeneousSpaceSpec& spec, const LeviData& ld) {
  const bool ok = brackets_vanish(spec.g(), ld.levi_nc, ld.radical);
  std::string w;
  if (!ok)
    for (const auto& x : ld.levi_nc.basis())
      for (const auto& y : ld.radical.basis())
        if (w.empty() && !is_zero(spec.g().bracket(x, y)))
          w = "[" + format_vector(spec.g(), x) + ", " + format_vector(spec.g(), y) + "]";
  return {"levi_nc_commutes_with_radical", ok, w};
}

ThmNilReport thm_nil_check(const HomogeneousSpaceSpec& spec, const LeviData& ld) {
  ThmNilReport out;
  const auto& g = spec.g();
  const auto nr = nilrad_transitivity(spec);
  out.checks.append(nr);
  out.applicable = nr.passed("hypothesis_skew_on_c_m_h");
  const auto nd = normalizer_data(spec);
  const auto cf = centralizer(g, nd.f, nd.f);
  const auto nilalg = direct_sum(restrict_to(g, ld.nilradical), LieAlgebra::abelian(cf.dim(), default_labels(cf.dim(), "c")));
  out.step = series(nilalg).step;
  out.checks.add("nil_plus_cf_step_le_2", out.step <= 2, "step " + std::to_string(out.step));
  return out;
}

RnDecomposition rn_decompose(const HomogeneousSpaceSpec& spec, const StructureInput& in) {
  const auto& g = spec.g();
  const std::size_t n = g.dim();
  RnDecomposition out;
  const auto nd = normalizer_data(spec);
  out.l = sum(spec.h(), nd.c_m_h).canonical();
  if (!spec.h().contains(bracket_span(g, out.l, out.l)))
    throw StructureError("rn_decompose: [l,l] is not in h for l = h + C_m(h); space is not of R^n type");
  out.f = nd.f;
  out.levi = levi(g, in.levi_candidate);
  const auto compat = compatible_triple_check(spec, out.l, out.levi.levi);
  if (!compat.all_pass()) throw StructureError("rn_decompose: Levi factor is not compatible with l");
  out.checks.append(compat, "compatible.");
  out.checks.add("f_abelian", brackets_vanish(g, out.f, out.f));

  if (!out.levi.levi_nc.is_zero()) {
    if (!in.theta) throw StructureError("rn_decompose: Cartan involution required for a noncompact Levi factor");
    out.cartan = cartan_data(g, out.levi.levi_nc, *in.theta);
    if (!out.cartan->checks.all_pass()) throw StructureError("rn_decompose: Cartan data failed verification");
    out.iwasawa = iwasawa(g, out.levi.levi_nc, *out.cartan, in.iwasawa);
    out.s = out.iwasawa->s;
  } else {
    out.s = Subspace::zero(n);
  }
  const auto& nil = out.levi.nilradical;
  std::vector<RatVector> ub = out.s.basis();
  ub.insert(ub.end(), nil.basis().begin(), nil.basis().end());
  out.u = Subspace::span(n, ub);

  const auto hf = sum(spec.h(), out.f);
  out.claim_ok = sum({spec.h(), out.u, out.f}).dim() == n;
  out.checks.add("claim_g_equals_h_u_f", out.claim_ok);
  out.checks.add("h_f_u_direct", is_direct_sum({spec.h(), out.f}) && intersect(hf, out.u).is_zero());
  out.checks.add("l_cap_u_equals_center", intersect(out.l, out.u) == center(g));
  out.checks.add("u_subalgebra", is_subalgebra(g, out.u));
  out.checks.add("s_solvable", is_subalgebra(g, out.s) && series(g, out.s).solvable);
  out.s_commutes_nil = brackets_vanish(g, out.s, nil);

  out.n_data = direct_sum(restrict_to(g, nil), LieAlgebra::abelian(out.f.dim(), default_labels(out.f.dim(), "f")));
  out.n_step = series(out.n_data).step;
  out.checks.add("n_step_le_2", out.n_step <= 2, "step " + std::to_string(out.n_step));

  std::vector<RatVector> ev = out.u.basis();
  ev.insert(ev.end(), out.f.basis().begin(), out.f.basis().end());
  out.pullback_ip = RatMatrix(ev.size(), ev.size());
  for (std::size_t i = 0; i < ev.size(); ++i)
    for (std::size_t j = 0; j < ev.size(); ++j) out.pullback_ip(i, j) = spec.inner(ev[i], ev[j]);
  out.checks.add("pullback_ip_positive_definite", ev.size() == spec.dim_m() && is_positive_definite(out.pullback_ip));
  return out;
}

SubmersionData submersion_decompose(const HomogeneousSpaceSpec& spec, const RnDecomposition& rn) {
  if (!rn.f.is_zero())
    throw StructureError("submersion_decompose: f is nonzero; pass the enlarged isometry-algebra spec");
  const auto& g = spec.g();
  const std::size_t n = g.dim();
  SubmersionData out;
  const auto& ld = rn.levi;
  out.levi_nc = ld.levi_nc;
  out.k = rn.cartan ? rn.cartan->k : Subspace::zero(n);
  out.p = rn.cartan ? rn.cartan->p : Subspace::zero(n);
  out.q = sum({out.k, ld.levi_cp, ld.radical}).canonical();
  if (ld.radical.is_zero())
    out.case_number = 1;
  else if (ld.levi_nc.is_zero())
    out.case_number = 2;
  else
    out.case_number = 3;
  const auto& nil = ld.nilradical;
  out.checks.add("q_subalgebra", is_subalgebra(g, out.q));
  out.checks.add("h_in_q", out.q.contains(spec.h()));
  out.checks.add("q_cap_m_equals_nil", intersect(out.q, spec.m()) == nil.canonical());
  out.checks.add("m_equals_p_plus_nil", is_direct_sum({out.p, nil}) && sum(out.p, nil) == spec.m().canonical());
  bool perp = true;
  for (const auto& x : out.p.basis())
    for (const auto& y : nil.basis()) perp = perp && spec.inner(x, y) == 0;
  out.checks.add("p_perp_nil", perp);
  out.checks.add("k_commutes_nil", brackets_vanish(g, out.k, nil));
  out.checks.add("base_symmetric_pair", out.k.contains(bracket_span(g, out.p, out.p)));
  out.base_ip = RatMatrix(out.p.dim(), out.p.dim());
  for (std::size_t i = 0; i < out.p.dim(); ++i)
    for (std::size_t j = 0; j < out.p.dim(); ++j) out.base_ip(i, j) = spec.inner(out.p.basis_vector(i), out.p.basis_vector(j));
  RatMatrix fip(nil.dim(), nil.dim());
  for (std::size_t i = 0; i < nil.dim(); ++i)
    for (std::size_t j = 0; j < nil.dim(); ++j) fip(i, j) = spec.inner(nil.basis_vector(i), nil.basis_vector(j));
  out.fiber = make_nilmanifold(restrict_to(g, nil), fip);
  return out;
}

SNotOrthogonal s_not_orthogonal_check(const HomogeneousSpaceSpec& spec, const RnDecomposition& rn) {
  const auto& g = spec.g();
  const std::size_t n = g.dim();
  SNotOrthogonal out;
  const Subspace p = rn.cartan ? rn.cartan->p : Subspace::zero(n);
  const auto nf = sum(rn.levi.nilradical, rn.f);
  const auto rest = intersect(spec.m(), nf);
  std::vector<RatVector> mb = p.basis();
  mb.insert(mb.end(), rest.basis().begin(), rest.basis().end());
  if (mb.size() != spec.dim_m() || !is_direct_sum({p, rest}))
    throw StructureError("s_not_orthogonal_check: m is not p + (m cap (Nil + f))");
  const auto msplit = Subspace::from_basis(n, mb);
  for (const auto& x : rn.s.basis()) {
    SNotOrthogonal::Part part;
    part.x = x;
    part.x_h = spec.h_part(x);
    const auto c = *msplit.coordinates(spec.m_part(x));
    part.x_p = zero_vector(n);
    part.x_rest = zero_vector(n);
    for (std::size_t i = 0; i < mb.size(); ++i) (i < p.dim() ? part.x_p : part.x_rest) += c[i] * mb[i];
    out.parts.push_back(part);
  }
  out.max_pairing = 0;
  for (const auto& x : rn.s.basis())
    for (const auto& t : nf.basis()) {
      const Rational v = spec.inner(x, t);
      const Rational av = v < 0 ? Rational(-v) : v;
      if (av > out.max_pairing) {
        out.max_pairing = av;
        out.witness = "<ev(" + format_vector(g, x) + "), ev(" + format_vector(g, t) + ")> = " + to_string(v);
      }
    }
  out.nonzero = out.max_pairing != 0;
  return out;
}

}  // namespace orbitlie
