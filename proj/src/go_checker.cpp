#include "orbitlie/go_checker.hpp"

#include <limits>

namespace orbitlie {

namespace {

struct System {
  RatMatrix a;  // rows j = m basis, cols k = h basis
  RatVector b;
};

System build_system(const HomogeneousSpaceSpec& spec, const RatVector& x) {
  const auto& g = spec.g();
  const std::size_t dm = spec.dim_m(), dh = spec.dim_h();
  System s{RatMatrix(dm, dh), RatVector(dm)};
  for (std::size_t j = 0; j < dm; ++j) {
    const auto& yj = spec.m().basis_vector(j);
    for (std::size_t k = 0; k < dh; ++k) s.a(j, k) = spec.inner(g.bracket(spec.h().basis_vector(k), yj), x);
    s.b[j] = -spec.inner(g.bracket(x, yj), x);
  }
  return s;
}

}  // namespace

RatVector geodesic_residuals(const HomogeneousSpaceSpec& spec, const RatVector& x, const RatVector& z) {
  const auto xz = x + z;
  RatVector r(spec.dim_m());
  for (std::size_t j = 0; j < spec.dim_m(); ++j) r[j] = spec.inner(spec.g().bracket(xz, spec.m().basis_vector(j)), x);
  return r;
}

GeodesicVectorResult geodesic_vector(const HomogeneousSpaceSpec& spec, const RatVector& x) {
  if (!spec.m().contains(x)) throw SpecError("geodesic_vector: X is not in m");
  const auto sys = build_system(spec, x);
  GeodesicVectorResult out;
  std::optional<RatVector> zc;
  if (spec.dim_h() == 0) {
    if (is_zero(sys.b)) zc = RatVector{};
  } else {
    zc = solve(sys.a, sys.b);
  }
  if (zc) {
    GeodesicVectorCertificate c;
    c.x = x;
    c.z = spec.dim_h() == 0 ? zero_vector(spec.g().dim()) : spec.from_h(*zc);
    c.residuals = geodesic_residuals(spec, x, c.z);
    if (!is_zero(c.residuals)) throw std::logic_error("geodesic_vector: nonzero residual after exact solve");
    out.certificate = std::move(c);
    return out;
  }
  Infeasibility w;
  w.x = x;
  w.rank_a = rank(sys.a);
  RatMatrix aug(sys.a.rows(), sys.a.cols() + 1);
  for (std::size_t i = 0; i < sys.a.rows(); ++i) {
    for (std::size_t j = 0; j < sys.a.cols(); ++j) aug(i, j) = sys.a(i, j);
    aug(i, sys.a.cols()) = sys.b[i];
  }
  w.rank_augmented = rank(aug);
  const auto left = sys.a.cols() == 0 ? Subspace::full(sys.a.rows()) : kernel(sys.a.transpose());
  for (const auto& y : left.basis()) {
    const Rational val = dot(y, sys.b);
    if (val != 0) {
      w.y = y;
      w.value = val;
      break;
    }
  }
  out.infeasible = std::move(w);
  return out;
}

bool verify_infeasibility(const HomogeneousSpaceSpec& spec, const Infeasibility& w) {
  if (!spec.m().contains(w.x) || w.y.size() != spec.dim_m()) return false;
  const auto sys = build_system(spec, w.x);
  for (std::size_t k = 0; k < spec.dim_h(); ++k) {
    Rational s = 0;
    for (std::size_t j = 0; j < spec.dim_m(); ++j) s += w.y[j] * sys.a(j, k);
    if (s != 0) return false;
  }
  const Rational v = dot(w.y, sys.b);
  return v != 0 && v == w.value;
}

std::string verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::NotGO: return "NotGO";
    case VerdictKind::ProbablyGO: return "ProbablyGO";
    case VerdictKind::ProvedGO: return "ProvedGO";
  }
  return "?";
}

NaturalReductivity natural_reductivity(const HomogeneousSpaceSpec& spec) {
  const auto& g = spec.g();
  const auto& m = spec.m();
  const std::size_t d = m.dim();
  // T(i,j,k) = <[X_i,X_j]_m, X_k>
  std::vector<Rational> t(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto br = g.bracket(m.basis_vector(i), m.basis_vector(j));
      for (std::size_t k = 0; k < d; ++k) t[(i * d + j) * d + k] = spec.inner(br, m.basis_vector(k));
    }
  NaturalReductivity out{true, ""};
  for (std::size_t i = 0; i < d && out.holds; ++i)
    for (std::size_t j = 0; j < d && out.holds; ++j)
      for (std::size_t k = j; k < d && out.holds; ++k) {
        const Rational v = t[(i * d + j) * d + k] + t[(i * d + k) * d + j];
        if (v != 0) {
          out.holds = false;
          out.witness = "(" + format_vector(g, m.basis_vector(i)) + ", " + format_vector(g, m.basis_vector(j)) + ", " +
                        format_vector(g, m.basis_vector(k)) + ") = " + to_string(v);
        }
      }
  return out;
}

bool is_symmetric_pair(const HomogeneousSpaceSpec& spec) {
  return spec.h().contains(bracket_span(spec.g(), spec.m(), spec.m()));
}

HomogeneousSpaceSpec with_complement(const HomogeneousSpaceSpec& spec, const Subspace& m2) {
  RatMatrix ip(m2.dim(), m2.dim());
  for (std::size_t i = 0; i < m2.dim(); ++i)
    for (std::size_t j = 0; j < m2.dim(); ++j) ip(i, j) = spec.inner(m2.basis_vector(i), m2.basis_vector(j));
  return HomogeneousSpaceSpec(spec.g(), spec.h(), m2, ip);
}

std::uint64_t SampleStream::uniform(std::uint64_t lo, std::uint64_t hi) {
  // Rejection sampling keeps the stream identical across standard libraries.
  const std::uint64_t span = hi - lo + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t r;
  do r = rng_();
  while (r >= limit);
  return lo + r % span;
}

Rational SampleStream::next() {
  const auto p = static_cast<std::int64_t>(uniform(0, 14)) - 7;
  const auto q = static_cast<std::int64_t>(uniform(1, 7));
  return Rational(p, q);
}

RatVector SampleStream::next_vector(std::size_t n) {
  RatVector v(n);
  for (auto& c : v) c = next();
  return v;
}

Verdict check_go(const HomogeneousSpaceSpec& spec, const GoOptions& opts) {
  Verdict v;
  v.seed = opts.seed;
  if (opts.try_certificates) {
    if (is_symmetric_pair(spec)) {
      v.kind = VerdictKind::ProvedGO;
      v.certificate = "symmetric";
      return v;
    }
    if (natural_reductivity(spec).holds) {
      v.kind = VerdictKind::ProvedGO;
      v.certificate = "naturally-reductive";
      return v;
    }
    if (opts.nr_complement) {
      const auto alt = with_complement(spec, *opts.nr_complement);
      if (validate(alt).all_pass() && natural_reductivity(alt).holds) {
        v.kind = VerdictKind::ProvedGO;
        v.certificate = "naturally-reductive";
        return v;
      }
    }
  }
  SampleStream stream(opts.seed);
  v.kind = VerdictKind::ProbablyGO;
  const std::size_t d = spec.dim_m();
  if (d == 0) return v;
  while (v.samples < opts.samples) {
    const auto coords = stream.next_vector(d);
    if (is_zero(coords)) continue;
    ++v.samples;
    const auto r = geodesic_vector(spec, spec.from_m(coords));
    if (r.feasible()) {
      ++v.feasible;
    } else {
      v.kind = VerdictKind::NotGO;
      v.witness = r.infeasible;
      v.witness_sample = v.samples;
      return v;
    }
  }
  return v;
}

Check skew_consequence(const HomogeneousSpaceSpec& spec) {
  const auto c = centralizer(spec.g(), spec.h(), spec.m());
  for (const auto& y : c.basis())
    if (!ad_skew_on_m(spec, y)) return {"skew_consequence", false, "Y = " + format_vector(spec.g(), y)};
  return {"skew_consequence", true, ""};
}

SubSpace totally_geodesic_sub(const HomogeneousSpaceSpec& spec, const Subspace& q) {
  const auto& g = spec.g();
  const auto& h = spec.h();
  if (!is_subalgebra(g, q)) throw SpecError("totally_geodesic_sub: q is not a subalgebra");
  if (!q.contains(bracket_span(g, h, q))) throw SpecError("totally_geodesic_sub: [h,q] not in q");
  const auto qh = sum(q, h);
  const auto qm = intersect(qh, spec.m());
  if (qm.dim() + h.dim() != qh.dim()) throw SpecError("totally_geodesic_sub: q + h does not split along h and m");
  std::vector<RatVector> basis = h.basis();
  basis.insert(basis.end(), qm.basis().begin(), qm.basis().end());
  const auto qb = Subspace::from_basis(g.dim(), basis);
  const auto l = restrict_to(g, qb);
  const std::size_t dh = h.dim(), dl = l.dim();

  // Largest ideal of l inside h.
  std::vector<RatVector> hb;
  for (std::size_t i = 0; i < dh; ++i) hb.push_back(unit_vector(dl, i));
  Subspace k = Subspace::from_basis(dl, hb);
  while (true) {
    std::vector<RatMatrix> blocks;
    const auto ann = annihilator(k);
    if (ann.empty()) break;
    const RatMatrix phi = RatMatrix::from_rows(ann, dl);
    for (std::size_t i = 0; i < dl; ++i) blocks.push_back(phi * l.ad_basis(i));
    // x in k with phi([e_i, x]) = 0 for all i
    const auto next = restricted_kernel(vstack(blocks), k);
    if (next == k.canonical()) break;
    k = next;
  }

  SubSpace out;
  out.q = qh.canonical();
  std::vector<RatVector> kg;
  for (const auto& v : k.basis()) kg.push_back(qb.combine(v));
  out.kernel = Subspace::span(g.dim(), kg).canonical();

  const auto quo = k.is_zero() ? Quotient{l, Subspace::full(dl), RatMatrix::identity(dl)} : quotient(l, k);
  const std::size_t dq = quo.algebra.dim();
  const std::size_t dh2 = dh - k.dim();
  std::vector<RatVector> h2, m2;
  for (std::size_t i = 0; i < dq; ++i) (i < dh2 ? h2 : m2).push_back(unit_vector(dq, i));
  RatMatrix ip(qm.dim(), qm.dim());
  for (std::size_t i = 0; i < qm.dim(); ++i)
    for (std::size_t j = 0; j < qm.dim(); ++j) ip(i, j) = spec.inner(qm.basis_vector(i), qm.basis_vector(j));
  // The m vectors sit after h in the basis of l and are never pivots of k, so they
  // project onto the last unit vectors of the quotient.
  out.spec = HomogeneousSpaceSpec(quo.algebra, Subspace::from_basis(dq, h2), Subspace::from_basis(dq, m2), ip);
  return out;
}

}  // namespace orbitlie
