#include "orbitlie/metric_space.hpp"

namespace orbitlie {

HomogeneousSpaceSpec::HomogeneousSpaceSpec(LieAlgebra g, Subspace h, Subspace m, RatMatrix ip)
    : g_(std::move(g)), h_(std::move(h)), m_(std::move(m)), ip_(std::move(ip)) {
  const std::size_t n = g_.dim();
  if (h_.ambient_dim() != n || m_.ambient_dim() != n) throw SpecError("spec: h or m has wrong ambient dimension");
  if (ip_.rows() != m_.dim() || ip_.cols() != m_.dim()) throw SpecError("spec: metric size differs from dim m");
  if (h_.dim() + m_.dim() != n || !is_direct_sum({h_, m_})) throw SpecError("spec: g is not the direct sum of h and m");
  std::vector<RatVector> basis = h_.basis();
  basis.insert(basis.end(), m_.basis().begin(), m_.basis().end());
  split_ = Subspace::from_basis(n, basis);
}

RatVector HomogeneousSpaceSpec::h_coords(const RatVector& x) const {
  const auto c = *split_.coordinates(x);
  return RatVector(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(h_.dim()));
}

RatVector HomogeneousSpaceSpec::m_coords(const RatVector& x) const {
  const auto c = *split_.coordinates(x);
  return RatVector(c.begin() + static_cast<std::ptrdiff_t>(h_.dim()), c.end());
}

RatVector HomogeneousSpaceSpec::h_part(const RatVector& x) const { return h_.combine(h_coords(x)); }
RatVector HomogeneousSpaceSpec::m_part(const RatVector& x) const { return m_.combine(m_coords(x)); }

Rational HomogeneousSpaceSpec::inner(const RatVector& x, const RatVector& y) const {
  return bilinear(ip_, m_coords(x), m_coords(y));
}

RatMatrix HomogeneousSpaceSpec::ad_m(const RatVector& y) const {
  const std::size_t d = m_.dim();
  RatMatrix a(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const auto c = m_coords(g_.bracket(y, m_.basis_vector(j)));
    for (std::size_t i = 0; i < d; ++i) a(i, j) = c[i];
  }
  return a;
}

Subspace killing_complement(const LieAlgebra& g, const Subspace& h) {
  if (!is_subalgebra(g, h)) throw SpecError("killing_complement: h is not a subalgebra");
  const auto b = killing(g);
  if (!is_negative_definite(restrict_form(b, h)))
    throw SpecError("killing_complement: Killing form is not negative definite on h");
  auto m = orthocomplement(b, h, whole(g));
  if (h.dim() + m.dim() != g.dim() || !is_direct_sum({h, m}))
    throw SpecError("killing_complement: complement is not direct");
  if (!m.contains(bracket_span(g, h, m))) throw SpecError("killing_complement: [h,m] not in m");
  return m;
}

bool ad_skew_on_m(const HomogeneousSpaceSpec& spec, const RatVector& y) {
  for (const auto& x : spec.m().basis())
    if (!spec.m().contains(spec.g().bracket(y, x))) return false;
  const auto a = spec.ad_m(y);
  return (a.transpose() * spec.ip() + spec.ip() * a).is_zero();
}

CheckList validate(const HomogeneousSpaceSpec& spec) {
  CheckList out;
  const auto& g = spec.g();
  const auto& h = spec.h();
  const auto& m = spec.m();

  std::string w;
  for (std::size_t i = 0; i < h.dim() && w.empty(); ++i)
    for (std::size_t j = i + 1; j < h.dim() && w.empty(); ++j)
      if (!h.contains(g.bracket(h.basis_vector(i), h.basis_vector(j))))
        w = "[" + format_vector(g, h.basis_vector(i)) + ", " + format_vector(g, h.basis_vector(j)) + "]";
  out.add("h_subalgebra", w.empty(), w);

  out.add("killing_negative_definite_on_h", is_negative_definite(restrict_form(killing(g), h)));
  out.add("direct_sum", h.dim() + m.dim() == g.dim() && is_direct_sum({h, m}));

  w.clear();
  for (const auto& a : h.basis())
    for (const auto& x : m.basis())
      if (w.empty() && !m.contains(g.bracket(a, x))) w = "[" + format_vector(g, a) + ", " + format_vector(g, x) + "]";
  out.add("h_m_invariant", w.empty(), w);

  out.add("ip_symmetric", spec.ip().is_symmetric());
  out.add("ip_positive_definite", is_positive_definite(spec.ip()));

  w.clear();
  for (const auto& a : h.basis()) {
    if (!w.empty()) break;
    for (std::size_t i = 0; i < m.dim() && w.empty(); ++i)
      for (std::size_t j = i; j < m.dim() && w.empty(); ++j) {
        const auto& x = m.basis_vector(i);
        const auto& y = m.basis_vector(j);
        const Rational val = spec.inner(g.bracket(a, x), y) + spec.inner(x, g.bracket(a, y));
        if (val != 0)
          w = "(" + format_vector(g, a) + ", " + format_vector(g, x) + ", " + format_vector(g, y) + ") = " + to_string(val);
      }
  }
  out.add("ip_ad_h_invariant", w.empty(), w);
  return out;
}

NormalizerData normalizer_data(const HomogeneousSpaceSpec& spec, const std::optional<Subspace>& f_override) {
  NormalizerData out;
  const auto& g = spec.g();
  const auto& m = spec.m();
  const std::size_t n = g.dim(), d = m.dim();
  out.c_m_h = centralizer(g, spec.h(), m);
  out.n_g_h = normalizer(g, spec.h());
  out.center_g = center(g);

  // Y = sum a_l c_l; [Y,m] in m and ad(Y)|m skew, both linear in a.
  const std::size_t k = out.c_m_h.dim();
  std::vector<RatVector> rows;
  std::vector<RatMatrix> ads;
  std::vector<std::vector<RatVector>> hparts;
  for (std::size_t l = 0; l < k; ++l) {
    const auto& y = out.c_m_h.basis_vector(l);
    ads.push_back(spec.ad_m(y));
    std::vector<RatVector> hp;
    for (const auto& x : m.basis()) hp.push_back(spec.h_part(g.bracket(y, x)));
    hparts.push_back(hp);
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      RatVector row(k);
      for (std::size_t l = 0; l < k; ++l) {
        const RatMatrix s = ads[l].transpose() * spec.ip() + spec.ip() * ads[l];
        row[l] = s(i, j);
      }
      rows.push_back(row);
    }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t c = 0; c < n; ++c) {
      RatVector row(k);
      for (std::size_t l = 0; l < k; ++l) row[l] = hparts[l][i][c];
      rows.push_back(row);
    }
  if (k == 0) {
    out.w_m = Subspace::zero(n);
  } else {
    const auto coeffs = kernel(RatMatrix::from_rows(rows, k));
    std::vector<RatVector> vs;
    for (const auto& a : coeffs.basis()) vs.push_back(out.c_m_h.combine(a));
    out.w_m = Subspace::span(n, vs).canonical();
  }

  const bool center_in_w = out.w_m.contains(out.center_g);
  if (f_override) {
    out.f = f_override->canonical();
  } else if (center_in_w) {
    // ip-orthogonal complement of C(g) in w_m, in m coordinates.
    std::vector<RatVector> wc, cc;
    for (const auto& x : out.w_m.basis()) wc.push_back(spec.m_coords(x));
    for (const auto& x : out.center_g.basis()) cc.push_back(spec.m_coords(x));
    const auto fm = orthocomplement(spec.ip(), Subspace::span(d, cc), Subspace::span(d, wc));
    std::vector<RatVector> vs;
    for (const auto& c : fm.basis()) vs.push_back(spec.from_m(c));
    out.f = Subspace::span(n, vs).canonical();
  } else {
    out.f = Subspace::zero(n);
  }

  out.checks.add("normalizer_equals_h_plus_c_m_h", out.n_g_h == sum(spec.h(), out.c_m_h).canonical());
  out.checks.add("c_m_h_bracket_m_in_m", m.contains(bracket_span(g, out.c_m_h, m)));
  out.checks.add("c_m_h_subalgebra", is_subalgebra(g, out.c_m_h));
  bool skew = true;
  for (const auto& y : out.w_m.basis()) skew = skew && ad_skew_on_m(spec, y);
  out.checks.add("w_m_skew", skew);
  out.checks.add("w_m_subalgebra", is_subalgebra(g, out.w_m));
  out.checks.add("center_in_w_m", center_in_w);
  out.checks.add("f_complement",
                 out.w_m.contains(out.f) && is_direct_sum({out.center_g, out.f}) &&
                     out.center_g.dim() + out.f.dim() == out.w_m.dim());
  out.checks.add("f_subalgebra", is_subalgebra(g, out.f));
  return out;
}

TransitivityResult transitivity_check(const HomogeneousSpaceSpec& spec, const Subspace& u, const Subspace& v) {
  if (!v.is_zero()) {
    const auto nd = normalizer_data(spec);
    if (!nd.f.contains(v)) throw SpecError("transitivity_check: v is not inside f");
  }
  TransitivityResult out;
  const auto s = sum({spec.h(), u, v});
  out.transitive = s.dim() == spec.g().dim();
  out.missing = out.transitive ? Subspace::zero(spec.g().dim()) : coordinate_complement(s);
  return out;
}

CheckList nilrad_transitivity(const HomogeneousSpaceSpec& spec) {
  CheckList out;
  const auto& g = spec.g();
  const auto nd = normalizer_data(spec);
  std::string w;
  for (const auto& y : nd.c_m_h.basis())
    if (w.empty() && !ad_skew_on_m(spec, y)) w = "Y = " + format_vector(g, y);
  out.add("hypothesis_skew_on_c_m_h", w.empty(), w);
  if (!w.empty()) return out;
  const auto ld = levi(g);
  const auto cf = centralizer(g, nd.f, nd.f);
  const auto s = sum({spec.h(), ld.levi, ld.nilradical, cf});
  out.add("span_h_lev_nil_cf", s.dim() == g.dim(), s.dim() == g.dim() ? "" : "missing " + format_subspace(g, coordinate_complement(s)));
  return out;
}

CheckList compatible_triple_check(const HomogeneousSpaceSpec& spec, const Subspace& l, const Subspace& levi_factor) {
  const auto& g = spec.g();
  if (!is_subalgebra(g, l) || !l.contains(spec.h()))
    throw SpecError("compatible_triple_check: l is not a subalgebra containing h");
  CheckList out;
  const auto rad = radical(g);
  const auto l_rad = intersect(l, rad);
  const auto l_lev = intersect(l, levi_factor);
  out.add("l_splits", sum(l_rad, l_lev) == l.canonical());
  out.add("l_rad_abelian", brackets_vanish(g, l_rad, l_rad));
  out.add("l_rad_commutes_with_levi", brackets_vanish(g, l_rad, levi_factor));
  out.add("bracket_l_l_in_levi", levi_factor.contains(bracket_span(g, l, l)));
  return out;
}

}  // namespace orbitlie
