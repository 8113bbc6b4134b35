#include "orbitlie/levi.hpp"

namespace orbitlie {

namespace {

Subspace ideal_generated(const LieAlgebra& g, const Subspace& seed, const Subspace& within) {
  // Smallest ideal of the subalgebra `within` containing seed.
  Subspace cur = seed.canonical();
  while (true) {
    auto next = sum(cur, bracket_span(g, within, cur)).canonical();
    if (next == cur) return cur;
    cur = next;
  }
}

}  // namespace

Subspace radical(const LieAlgebra& g) {
  const auto b = killing(g);
  const auto dg = bracket_span(g, whole(g), whole(g));
  const auto r = orthocomplement(b, dg, whole(g));
  if (!is_ideal(g, r) || !series(g, r).solvable) throw LeviError("radical: verification failed");
  return r;
}

Subspace nilradical(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const auto r = radical(g);
  if (r.is_zero()) return r;
  std::vector<RatMatrix> gens;
  for (const auto& x : r.basis()) gens.push_back(g.ad(x));
  // Associative closure of the generators, as flattened matrices.
  std::vector<RatVector> flat;
  for (const auto& m : gens) flat.push_back(flatten(m));
  Subspace a = Subspace::span(n * n, flat);
  std::size_t processed = 0;
  while (processed < a.dim()) {
    std::vector<RatVector> grown = a.basis();
    const std::size_t upto = a.dim();
    for (std::size_t i = processed; i < upto; ++i) {
      const RatMatrix m = unflatten(a.basis_vector(i), n, n);
      for (const auto& gen : gens) grown.push_back(flatten(gen * m));
    }
    processed = upto;
    a = Subspace::span(n * n, grown);
  }
  // Conditions tr(ad(x) b) = 0, linear in x.
  RatMatrix cond(a.dim(), n);
  std::vector<RatMatrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(g.ad_basis(i));
  for (std::size_t row = 0; row < a.dim(); ++row) {
    const RatMatrix bm = unflatten(a.basis_vector(row), n, n);
    for (std::size_t i = 0; i < n; ++i) cond(row, i) = (ads[i] * bm).trace();
  }
  const auto nil = restricted_kernel(cond, r);
  if (!is_ideal(g, nil) || !series(g, nil).nilpotent || !nil.contains(bracket_span(g, whole(g), r)))
    throw LeviError("nilradical: verification failed");
  return nil;
}

namespace {

// Lifts a coordinate complement of r to a subalgebra, one derived-series layer of r at a time.
Subspace lift_levi(const LieAlgebra& g, const Subspace& r) {
  const std::size_t n = g.dim();
  const auto comp = coordinate_complement(r);
  const std::size_t m = comp.dim();
  if (m == 0) return comp;
  std::vector<RatVector> xs = comp.basis();
  // Structure constants of g/r in the complement basis.
  std::vector<RatVector> full_basis = xs;
  full_basis.insert(full_basis.end(), r.basis().begin(), r.basis().end());
  const auto full = Subspace::from_basis(n, full_basis);
  std::vector<std::vector<RatVector>> cq(m, std::vector<RatVector>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      auto coords = *full.coordinates(g.bracket(xs[a], xs[b]));
      cq[a][b] = RatVector(coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(m));
    }
  auto defect = [&](std::size_t a, std::size_t b) {
    RatVector d = g.bracket(xs[a], xs[b]);
    for (std::size_t c = 0; c < m; ++c)
      if (cq[a][b][c] != 0) d = d - cq[a][b][c] * xs[c];
    return d;
  };

  const auto layers = series(g, r).derived;
  for (std::size_t li = 0; li < layers.size(); ++li) {
    const Subspace& ri = layers[li];
    if (ri.is_zero()) break;
    const Subspace next = li + 1 < layers.size() ? layers[li + 1] : Subspace::zero(n);
    const auto phis = annihilator(next);
    const std::size_t d = ri.dim();
    // Unknown y_a = sum_p u[a*d+p] r_p.
    std::vector<RatVector> rows;
    RatVector rhs;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b) {
        const RatVector rho = defect(a, b);
        // [x_a, y_b] + [y_a, x_b] - sum_c cq^c y_c = -rho  (mod next)
        std::vector<RatVector> contrib(m * d, zero_vector(n));
        for (std::size_t p = 0; p < d; ++p) {
          const auto& rp = ri.basis_vector(p);
          contrib[b * d + p] = contrib[b * d + p] + g.bracket(xs[a], rp);
          contrib[a * d + p] = contrib[a * d + p] + g.bracket(rp, xs[b]);
          for (std::size_t c = 0; c < m; ++c)
            if (cq[a][b][c] != 0) contrib[c * d + p] = contrib[c * d + p] - cq[a][b][c] * rp;
        }
        for (const auto& phi : phis) {
          RatVector row(m * d);
          for (std::size_t u = 0; u < m * d; ++u) row[u] = dot(phi, contrib[u]);
          rows.push_back(std::move(row));
          rhs.push_back(-dot(phi, rho));
        }
      }
    if (rows.empty()) continue;
    const auto sol = solve(RatMatrix::from_rows(rows, m * d), rhs);
    if (!sol) throw LeviError("levi: lifting step is inconsistent");
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t p = 0; p < d; ++p)
        if ((*sol)[a * d + p] != 0) xs[a] += (*sol)[a * d + p] * ri.basis_vector(p);
  }
  return Subspace::from_basis(n, xs);
}

}  // namespace

CompactSplit compact_split(const LieAlgebra& g, const Subspace& s) {
  CompactSplit out;
  const std::size_t n = g.dim();
  if (s.is_zero()) {
    out.nc = out.cp = s;
    return out;
  }
  if (!is_subalgebra(g, s)) throw LeviError("compact_split: not a subalgebra");
  const auto ls = restrict_to(g, s);
  const auto bs = killing(ls);
  if (inertia(bs).zero != 0) throw LeviError("compact_split: Killing form degenerate, not semisimple");
  // Refine {s} by ideals generated by basis vectors and their Killing complements.
  const auto sl = whole(ls);
  std::vector<Subspace> parts{sl};
  for (std::size_t v = 0; v < ls.dim(); ++v) {
    const auto iv = ideal_generated(ls, Subspace::from_basis(ls.dim(), {ls.basis_vector(v)}), sl);
    const auto iv_perp = orthocomplement(bs, iv, sl);
    std::vector<Subspace> refined;
    for (const auto& p : parts) {
      for (const auto& piece : {intersect(p, iv), intersect(p, iv_perp)})
        if (!piece.is_zero()) refined.push_back(piece);
    }
    parts = refined;
  }
  if (!is_direct_sum(parts) || sum(parts).dim() != ls.dim())
    throw LeviError("compact_split: could not separate simple ideals");
  std::vector<RatVector> nc, cp;
  for (const auto& p : parts) {
    if (!is_ideal(ls, p)) throw LeviError("compact_split: piece is not an ideal");
    std::vector<RatVector> lifted;
    for (const auto& v : p.basis()) lifted.push_back(s.combine(v));
    const bool compact = is_negative_definite(restrict_form(bs, p));
    out.simple_ideals.push_back(Subspace::from_basis(n, lifted).canonical());
    out.compact.push_back(compact);
    (compact ? cp : nc).insert((compact ? cp : nc).end(), lifted.begin(), lifted.end());
  }
  out.nc = Subspace::span(n, nc).canonical();
  out.cp = Subspace::span(n, cp).canonical();
  return out;
}

LeviData levi(const LieAlgebra& g, const std::optional<Subspace>& candidate) {
  LeviData out;
  out.radical = radical(g);
  out.nilradical = nilradical(g);
  if (candidate) {
    if (!is_subalgebra(g, *candidate)) throw LeviError("levi: candidate is not a subalgebra");
    if (!is_direct_sum({*candidate, out.radical}) || candidate->dim() + out.radical.dim() != g.dim())
      throw LeviError("levi: candidate is not a complement of the radical");
    out.levi = *candidate;
  } else {
    out.levi = lift_levi(g, out.radical);
  }
  if (!is_subalgebra(g, out.levi)) throw LeviError("levi: lifted complement is not a subalgebra");
  if (!is_direct_sum({out.levi, out.radical}) || out.levi.dim() + out.radical.dim() != g.dim())
    throw LeviError("levi: not a complement of the radical");
  const auto split = compact_split(g, out.levi);
  out.levi_nc = split.nc;
  out.levi_cp = split.cp;
  if (!brackets_vanish(g, out.levi_nc, out.levi_cp)) throw LeviError("levi: nc and cp parts do not commute");
  return out;
}

}  // namespace orbitlie
