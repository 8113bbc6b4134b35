#include "orbitlie/lie_algebra.hpp"

#include <sstream>

namespace orbitlie {

std::string axiom_name(AxiomViolation::Axiom a) {
  switch (a) {
    case AxiomViolation::Axiom::Antisymmetry: return "antisymmetry";
    case AxiomViolation::Axiom::Jacobi: return "jacobi";
    case AxiomViolation::Axiom::Shape: return "shape";
  }
  return "unknown";
}

std::vector<std::string> default_labels(std::size_t n, const std::string& prefix) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

void validate_axioms(const std::vector<std::vector<RatVector>>& c) {
  using A = AxiomViolation::Axiom;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i].size() != n) throw AxiomViolation(A::Shape, {i}, "structure constants: row has wrong length");
    for (const auto& v : c[i])
      if (v.size() != n) throw AxiomViolation(A::Shape, {i}, "structure constants: vector has wrong length");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (c[i][j][k] != -c[j][i][k]) {
          std::ostringstream os;
          os << "antisymmetry violated: c[" << i + 1 << "][" << j + 1 << "][" << k + 1 << "] = " << c[i][j][k]
             << " but c[" << j + 1 << "][" << i + 1 << "][" << k + 1 << "] = " << c[j][i][k];
          throw AxiomViolation(A::Antisymmetry, {i, j, k}, os.str());
        }
  // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0
  auto br = [&](const RatVector& x, std::size_t b) {
    RatVector out = zero_vector(n);
    for (std::size_t a = 0; a < n; ++a)
      if (x[a] != 0)
        for (std::size_t m = 0; m < n; ++m)
          if (c[a][b][m] != 0) out[m] += x[a] * c[a][b][m];
    return out;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        RatVector s = br(c[i][j], k) + br(c[j][k], i) + br(c[k][i], j);
        if (!is_zero(s)) {
          std::ostringstream os;
          os << "jacobi identity violated on (" << i + 1 << "," << j + 1 << "," << k + 1 << "): " << to_string(s);
          throw AxiomViolation(A::Jacobi, {i, j, k}, os.str());
        }
      }
}

LieAlgebra::LieAlgebra(std::vector<std::string> labels, std::vector<std::vector<RatVector>> constants)
    : labels_(std::move(labels)) {
  if (labels_.size() != constants.size())
    throw AxiomViolation(AxiomViolation::Axiom::Shape, {}, "label count differs from dimension");
  validate_axioms(constants);
  const std::size_t n = labels_.size();
  c_.reserve(n * n);
  for (auto& row : constants)
    for (auto& v : row) c_.push_back(std::move(v));
}

LieAlgebra LieAlgebra::abelian(std::size_t n, std::vector<std::string> labels) {
  if (labels.empty()) labels = default_labels(n);
  return LieAlgebra(std::move(labels), std::vector<std::vector<RatVector>>(n, std::vector<RatVector>(n, zero_vector(n))));
}

LieAlgebra LieAlgebra::from_brackets(std::vector<std::string> labels, const std::vector<BracketTerm>& terms) {
  const std::size_t n = labels.size();
  std::vector<std::vector<RatVector>> c(n, std::vector<RatVector>(n, zero_vector(n)));
  for (const auto& t : terms) {
    if (t.i >= n || t.j >= n || t.k >= n)
      throw AxiomViolation(AxiomViolation::Axiom::Shape, {t.i, t.j, t.k}, "bracket index out of range");
    c[t.i][t.j][t.k] += t.coeff;
    c[t.j][t.i][t.k] -= t.coeff;
  }
  return LieAlgebra(std::move(labels), std::move(c));
}

LieAlgebra LieAlgebra::from_matrix_basis(std::vector<std::string> labels, const std::vector<RatMatrix>& mats) {
  const std::size_t n = mats.size();
  if (labels.size() != n) throw std::invalid_argument("from_matrix_basis: label count mismatch");
  if (n == 0) return abelian(0);
  const std::size_t r = mats[0].rows(), cl = mats[0].cols();
  std::vector<RatVector> flat;
  for (const auto& m : mats) flat.push_back(flatten(m));
  const auto span = Subspace::from_basis(r * cl, flat);
  std::vector<std::vector<RatVector>> c(n, std::vector<RatVector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto coords = span.coordinates(flatten(commutator(mats[i], mats[j])));
      if (!coords) throw std::invalid_argument("from_matrix_basis: span not closed under commutator");
      c[i][j] = *coords;
    }
  return LieAlgebra(std::move(labels), std::move(c));
}

RatVector LieAlgebra::bracket(const RatVector& x, const RatVector& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("bracket: dimension mismatch");
  RatVector out = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0 || i == j) continue;
      const Rational f = x[i] * y[j];
      const RatVector& s = structure(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (s[k] != 0) out[k] += f * s[k];
    }
  }
  return out;
}

RatMatrix LieAlgebra::ad(const RatVector& x) const {
  const std::size_t n = dim();
  if (x.size() != n) throw std::invalid_argument("ad: dimension mismatch");
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const RatVector& s = structure(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (s[k] != 0) m(k, j) += x[i] * s[k];
    }
  }
  return m;
}

RatMatrix LieAlgebra::ad_basis(std::size_t i) const { return ad(basis_vector(i)); }

Subspace whole(const LieAlgebra& g) { return Subspace::full(g.dim()); }

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  std::vector<RatVector> vs;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) vs.push_back(g.bracket(x, y));
  return Subspace::span(g.dim(), vs).canonical();
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) {
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j)
      if (!s.contains(g.bracket(s.basis_vector(i), s.basis_vector(j)))) return false;
  return true;
}

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (const auto& y : s.basis())
      if (!s.contains(g.bracket(g.basis_vector(i), y))) return false;
  return true;
}

bool brackets_vanish(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  for (const auto& x : a.basis())
    for (const auto& y : b.basis())
      if (!is_zero(g.bracket(x, y))) return false;
  return true;
}

RatMatrix killing(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<RatMatrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(g.ad_basis(i));
  RatMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational t = 0;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
          if (ads[i](p, q) != 0 && ads[j](q, p) != 0) t += ads[i](p, q) * ads[j](q, p);
      b(i, j) = t;
      b(j, i) = t;
    }
  return b;
}

Subspace restricted_kernel(const RatMatrix& m, const Subspace& within) {
  if (within.is_zero()) return within;
  const auto coeffs = kernel(m * within.basis_matrix().transpose());
  std::vector<RatVector> vs;
  for (const auto& c : coeffs.basis()) vs.push_back(within.combine(c));
  return Subspace::span(within.ambient_dim(), vs).canonical();
}

Subspace center(const LieAlgebra& g) { return centralizer(g, whole(g), whole(g)); }

Subspace centralizer(const LieAlgebra& g, const Subspace& s, const Subspace& within) {
  // [x, s_i] = -ad(s_i) x
  std::vector<RatMatrix> blocks;
  for (const auto& y : s.basis()) blocks.push_back(g.ad(y));
  if (blocks.empty()) return within.canonical();
  return restricted_kernel(vstack(blocks), within);
}

Subspace normalizer(const LieAlgebra& g, const Subspace& s) {
  const auto ann = annihilator(s);
  if (ann.empty()) return whole(g).canonical();
  const RatMatrix phi = RatMatrix::from_rows(ann, g.dim());
  std::vector<RatMatrix> blocks;
  for (const auto& y : s.basis()) blocks.push_back(phi * g.ad(y));
  if (blocks.empty()) return whole(g).canonical();
  return restricted_kernel(vstack(blocks), whole(g));
}

SeriesData series(const LieAlgebra& g, const Subspace& s) {
  SeriesData out;
  out.derived.push_back(s.canonical());
  while (true) {
    auto next = bracket_span(g, out.derived.back(), out.derived.back());
    if (next == out.derived.back()) break;
    out.derived.push_back(next);
  }
  out.lower_central.push_back(s.canonical());
  while (true) {
    auto next = bracket_span(g, s, out.lower_central.back());
    if (next == out.lower_central.back()) break;
    out.lower_central.push_back(next);
  }
  out.solvable = out.derived.back().is_zero();
  out.nilpotent = out.lower_central.back().is_zero();
  if (out.nilpotent) out.step = out.lower_central.size() - 1;
  return out;
}

SeriesData series(const LieAlgebra& g) { return series(g, whole(g)); }

LieAlgebra restrict_to(const LieAlgebra& g, const Subspace& s, std::vector<std::string> labels) {
  const std::size_t d = s.dim();
  std::vector<std::vector<RatVector>> c(d, std::vector<RatVector>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto coords = s.coordinates(g.bracket(s.basis_vector(i), s.basis_vector(j)));
      if (!coords) throw std::invalid_argument("restrict_to: subspace is not a subalgebra");
      c[i][j] = *coords;
    }
  if (labels.empty())
    for (const auto& b : s.basis()) labels.push_back(format_vector(g, b));
  return LieAlgebra(std::move(labels), std::move(c));
}

Quotient quotient(const LieAlgebra& g, const Subspace& ideal) {
  if (!is_ideal(g, ideal)) throw std::invalid_argument("quotient: subspace is not an ideal");
  const std::size_t n = g.dim();
  Quotient q;
  q.complement = coordinate_complement(ideal);
  const std::size_t d = q.complement.dim();
  std::vector<RatVector> basis = q.complement.basis();
  basis.insert(basis.end(), ideal.basis().begin(), ideal.basis().end());
  const auto full = Subspace::from_basis(n, basis);
  q.projection = RatMatrix(d, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto coords = *full.coordinates(g.basis_vector(j));
    for (std::size_t i = 0; i < d; ++i) q.projection(i, j) = coords[i];
  }
  std::vector<std::vector<RatVector>> c(d, std::vector<RatVector>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      c[i][j] = q.projection.apply(g.bracket(q.complement.basis_vector(i), q.complement.basis_vector(j)));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t idx = 0;
    while (q.complement.basis_vector(i)[idx] == 0) ++idx;
    labels.push_back(g.labels()[idx]);
  }
  q.algebra = LieAlgebra(std::move(labels), std::move(c));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto lhs = q.projection.apply(g.bracket(g.basis_vector(i), g.basis_vector(j)));
      const auto rhs = q.algebra.bracket(q.projection.col(i), q.projection.col(j));
      if (lhs != rhs) throw std::logic_error("quotient: projection is not a homomorphism");
    }
  return q;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
  std::vector<std::vector<RatVector>> c(n, std::vector<RatVector>(n, zero_vector(n)));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k) c[i][j][k] = a.structure(i, j)[k];
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < nb; ++k) c[na + i][na + j][na + k] = b.structure(i, j)[k];
  auto labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  return LieAlgebra(std::move(labels), std::move(c));
}

}  // namespace orbitlie

namespace orbitlie {

std::string format_vector(const LieAlgebra& g, const RatVector& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Rational c = x[i];
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (c < 0) c = -c;
    if (c != 1) out += to_string(c) + "*";
    out += g.labels()[i];
  }
  return out.empty() ? "0" : out;
}

std::string format_subspace(const LieAlgebra& g, const Subspace& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (i) out += ", ";
    out += format_vector(g, s.basis_vector(i));
  }
  return out + "}";
}

}  // namespace orbitlie
