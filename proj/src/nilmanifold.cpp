#include "orbitlie/nilmanifold.hpp"

namespace orbitlie {

NilmanifoldSpec make_nilmanifold(LieAlgebra n, RatMatrix ip) {
  if (ip.rows() != n.dim() || ip.cols() != n.dim()) throw SpecError("nilmanifold: metric size differs from dim n");
  if (!is_positive_definite(ip)) throw SpecError("nilmanifold: metric is not positive definite");
  if (!series(n).nilpotent) throw SpecError("nilmanifold: algebra is not nilpotent");
  NilmanifoldSpec ns{std::move(n), std::move(ip), {}, {}};
  ns.z = center(ns.n);
  ns.v = orthocomplement(ns.ip, ns.z, whole(ns.n));
  return ns;
}

std::vector<RatMatrix> skew_derivations(const NilmanifoldSpec& ns) {
  const auto& n = ns.n;
  const std::size_t d = n.dim();
  const std::size_t u = d * d;
  auto idx = [d](std::size_t i, std::size_t j) { return j * d + i; };  // D(i,j), column-major
  std::vector<RatVector> rows;
  // D[e_i,e_j] - [D e_i, e_j] - [e_i, D e_j] = 0
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const RatVector& cij = n.structure(i, j);
      for (std::size_t k = 0; k < d; ++k) {
        RatVector row(u, Rational(0));
        for (std::size_t p = 0; p < d; ++p)
          if (cij[p] != 0) row[idx(k, p)] += cij[p];
        for (std::size_t p = 0; p < d; ++p) {
          // D e_i = sum_p D(p,i) e_p; [e_p, e_j] has k-component c[p][j][k]
          const Rational& a = n.structure(p, j)[k];
          if (a != 0) row[idx(p, i)] -= a;
          const Rational& b = n.structure(i, p)[k];
          if (b != 0) row[idx(p, j)] -= b;
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
    }
  // (G D)^T + G D = 0
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      RatVector row(u, Rational(0));
      for (std::size_t p = 0; p < d; ++p) {
        if (ns.ip(i, p) != 0) row[idx(p, j)] += ns.ip(i, p);
        if (ns.ip(j, p) != 0) row[idx(p, i)] += ns.ip(j, p);
      }
      if (!is_zero(row)) rows.push_back(std::move(row));
    }
  const auto k = rows.empty() ? Subspace::full(u) : kernel(RatMatrix::from_rows(rows, u));
  std::vector<RatMatrix> out;
  for (const auto& vec : k.basis()) {
    RatMatrix dm(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) dm(i, j) = vec[idx(i, j)];
    out.push_back(std::move(dm));
  }
  return out;
}

HomogeneousSpaceSpec to_homogeneous_spec(const NilmanifoldSpec& ns, std::vector<std::string> labels) {
  const auto ders = skew_derivations(ns);
  const std::size_t d = ns.n.dim(), k = ders.size(), t = d + k;
  if (labels.empty()) labels = default_labels(k, "D");
  if (labels.size() != k) throw SpecError("to_homogeneous_spec: derivation label count mismatch");
  std::vector<RatVector> flat;
  for (const auto& m : ders) flat.push_back(flatten(m));
  const auto dspan = Subspace::from_basis(d * d, flat);
  std::vector<std::vector<RatVector>> c(t, std::vector<RatVector>(t, zero_vector(t)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t p = 0; p < d; ++p) c[i][j][p] = ns.n.structure(i, j)[p];
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t p = 0; p < d; ++p) {
        c[d + a][j][p] = ders[a](p, j);
        c[j][d + a][p] = -ders[a](p, j);
      }
    for (std::size_t b = 0; b < k; ++b) {
      const auto coords = dspan.coordinates(flatten(commutator(ders[a], ders[b])));
      if (!coords) throw std::logic_error("to_homogeneous_spec: derivations not closed under commutator");
      for (std::size_t e = 0; e < k; ++e) c[d + a][d + b][d + e] = (*coords)[e];
    }
  }
  auto all = ns.n.labels();
  all.insert(all.end(), labels.begin(), labels.end());
  LieAlgebra g(std::move(all), std::move(c));
  std::vector<RatVector> hb, mb;
  for (std::size_t i = 0; i < d; ++i) mb.push_back(unit_vector(t, i));
  for (std::size_t a = 0; a < k; ++a) hb.push_back(unit_vector(t, d + a));
  HomogeneousSpaceSpec spec(std::move(g), Subspace::from_basis(t, hb), Subspace::from_basis(t, mb), ns.ip);
  if (!validate(spec).all_pass()) throw std::logic_error("to_homogeneous_spec: isometry algebra spec failed validation");
  return spec;
}

std::optional<RatMatrix> go_nil_solve(const NilmanifoldSpec& ns, const RatVector& x, const RatVector& w) {
  if (!ns.v.contains(x) || !ns.z.contains(w)) throw SpecError("go_nil_solve: X must lie in v and W in z");
  if (series(ns.n).step > 2) throw SpecError("go_nil_solve: algebra is not 2-step");
  const auto ders = skew_derivations(ns);
  const auto& n = ns.n;
  const auto xw = x + w;
  const std::size_t d = n.dim();
  RatMatrix a(d, ders.size());
  RatVector b(d);
  for (std::size_t j = 0; j < d; ++j) {
    const auto y = n.basis_vector(j);
    for (std::size_t l = 0; l < ders.size(); ++l) a(j, l) = bilinear(ns.ip, ders[l].apply(y), xw);
    b[j] = -bilinear(ns.ip, n.bracket(xw, y), xw);
  }
  if (ders.empty()) {
    if (is_zero(b)) return RatMatrix(d, d);
    return std::nullopt;
  }
  const auto sol = solve(a, b);
  if (!sol) return std::nullopt;
  RatMatrix out(d, d);
  for (std::size_t l = 0; l < ders.size(); ++l) out = out + (*sol)[l] * ders[l];
  return out;
}

namespace {

bool invariant_under(const std::vector<RatMatrix>& ders, const Subspace& s) {
  for (const auto& dm : ders)
    for (const auto& x : s.basis())
      if (!s.contains(dm.apply(x))) return false;
  return true;
}

}  // namespace

CheckList commuting_blocks_check(const NilmanifoldSpec& ns, const std::vector<Subspace>& blocks) {
  const auto& n = ns.n;
  const auto ders = skew_derivations(ns);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (!ns.v.contains(blocks[i])) throw SpecError("commuting_blocks_check: block is not inside v");
    if (!invariant_under(ders, blocks[i])) throw SpecError("commuting_blocks_check: block is not invariant under the skew derivations");
  }
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      for (const auto& x : blocks[i].basis())
        for (const auto& y : blocks[j].basis())
          if (bilinear(ns.ip, x, y) != 0) throw SpecError("commuting_blocks_check: blocks are not orthogonal");
  if (blocks.empty() ? !ns.v.is_zero() : !(is_direct_sum(blocks) && sum(blocks) == ns.v.canonical()))
    throw SpecError("commuting_blocks_check: blocks do not sum to v");

  CheckList out;
  std::string w;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      for (const auto& x : blocks[i].basis())
        for (const auto& y : blocks[j].basis())
          if (w.empty() && !is_zero(n.bracket(x, y)))
            w = "[" + format_vector(n, x) + ", " + format_vector(n, y) + "] = " + format_vector(n, n.bracket(x, y));
  out.add("blocks_commute", w.empty(), w);
  w.clear();
  for (const auto& b : blocks) {
    const auto ideal = sum(b, bracket_span(n, b, b));
    if (w.empty() && !is_ideal(n, ideal)) w = format_subspace(n, ideal);
  }
  out.add("block_ideals", w.empty(), w);
  return out;
}

Check invariant_subalgebra_ideal_check(const NilmanifoldSpec& ns, const Subspace& o) {
  if (!is_subalgebra(ns.n, o)) throw SpecError("invariant_subalgebra_ideal_check: o is not a subalgebra");
  if (!invariant_under(skew_derivations(ns), o))
    throw SpecError("invariant_subalgebra_ideal_check: o is not invariant under the skew derivations");
  const bool ideal = is_ideal(ns.n, o);
  return {"invariant_subalgebra_is_ideal", ideal, ideal ? "" : format_subspace(ns.n, o)};
}

StepBound step_bound_check(const NilmanifoldSpec& ns, bool claimed_go) {
  StepBound out;
  out.step = series(ns.n).step;
  out.consistent = !claimed_go || out.step <= 2;
  return out;
}

TwoStepGroup::TwoStepGroup(LieAlgebra n) : n_(std::move(n)) {
  const auto s = series(n_);
  if (!s.nilpotent || s.step > 2) throw SpecError("two-step group: algebra is not nilpotent of step <= 2");
}

RatMatrix TwoStepGroup::exp2(const RatVector& x) const {
  const std::size_t d = n_.dim();
  RatMatrix out = RatMatrix::identity(d + 1);
  const RatMatrix a = n_.ad(x);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) out(i, j) += a(i, j) / 2;
    out(i, d) = x[i];
  }
  return out;
}

RatVector TwoStepGroup::log2(const RatMatrix& a) const {
  const std::size_t d = n_.dim();
  if (a.rows() != d + 1 || a.cols() != d + 1) throw SpecError("log2: wrong matrix size");
  RatVector x(d);
  for (std::size_t i = 0; i < d; ++i) x[i] = a(i, d);
  if (exp2(x) != a) throw SpecError("log2: matrix is not in the group");
  return x;
}

RatVector TwoStepGroup::bch2(const RatVector& x, const RatVector& y) const { return log2(exp2(x) * exp2(y)); }

}  // namespace orbitlie
