#include "orbitlie/subspace.hpp"

#include <stdexcept>
#include <utility>

namespace orbitlie {

namespace {

void check_ambient(std::size_t ambient, const std::vector<RatVector>& vs) {
  for (const auto& v : vs)
    if (v.size() != ambient) throw std::invalid_argument("subspace: vector of wrong ambient dimension");
}

}  // namespace

Subspace Subspace::zero(std::size_t ambient) { return from_basis(ambient, {}); }

Subspace Subspace::full(std::size_t ambient) {
  std::vector<RatVector> basis;
  for (std::size_t i = 0; i < ambient; ++i) basis.push_back(unit_vector(ambient, i));
  return from_basis(ambient, basis);
}

Subspace Subspace::span(std::size_t ambient, const std::vector<RatVector>& vectors) {
  check_ambient(ambient, vectors);
  std::vector<RatVector> kept;
  Subspace current = from_basis(ambient, {});
  for (const auto& v : vectors) {
    if (orbitlie::is_zero(v) || current.contains(v)) continue;
    kept.push_back(v);
    current = from_basis(ambient, kept);
  }
  return current;
}

Subspace Subspace::from_basis(std::size_t ambient, const std::vector<RatVector>& basis) {
  check_ambient(ambient, basis);
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = basis;
  const std::size_t k = basis.size();
  RatMatrix aug(k, ambient + k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < ambient; ++j) aug(i, j) = basis[i][j];
    aug(i, ambient + i) = 1;
  }
  auto e = row_reduce(aug);
  std::size_t r = 0;
  while (r < e.pivots.size() && e.pivots[r] < ambient) ++r;
  if (r != k) throw std::invalid_argument("subspace: basis vectors are linearly dependent");
  s.echelon_ = RatMatrix(k, ambient);
  s.to_basis_ = RatMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < ambient; ++j) s.echelon_(i, j) = e.reduced(i, j);
    for (std::size_t j = 0; j < k; ++j) s.to_basis_(i, j) = e.reduced(i, ambient + j);
  }
  s.pivots_.assign(e.pivots.begin(), e.pivots.begin() + static_cast<std::ptrdiff_t>(k));
  return s;
}

Subspace Subspace::canonical() const { return from_basis(ambient_, echelon_.row_vectors()); }

bool Subspace::contains(const RatVector& x) const {
  if (x.size() != ambient_) throw std::invalid_argument("contains: ambient mismatch");
  RatVector r = x;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Rational c = r[pivots_[i]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (echelon_(i, j) != 0) r[j] -= c * echelon_(i, j);
  }
  return orbitlie::is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("contains: ambient mismatch");
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

std::optional<RatVector> Subspace::coordinates(const RatVector& x) const {
  if (!contains(x)) return std::nullopt;
  // x = sum_i x[pivot_i] * echelon_i and echelon = T * basis.
  RatVector coords(basis_.size(), Rational(0));
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Rational& c = x[pivots_[i]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < basis_.size(); ++j)
      if (to_basis_(i, j) != 0) coords[j] += c * to_basis_(i, j);
  }
  return coords;
}

RatVector Subspace::combine(const RatVector& coords) const {
  if (coords.size() != basis_.size()) throw std::invalid_argument("combine: coordinate count mismatch");
  RatVector x = zero_vector(ambient_);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) x += coords[i] * basis_[i];
  return x;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("sum: ambient mismatch");
  std::vector<RatVector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), all);
}

Subspace sum(const std::vector<Subspace>& parts) {
  if (parts.empty()) throw std::invalid_argument("sum: no parts");
  std::vector<RatVector> all;
  for (const auto& p : parts) {
    if (p.ambient_dim() != parts.front().ambient_dim()) throw std::invalid_argument("sum: ambient mismatch");
    all.insert(all.end(), p.basis().begin(), p.basis().end());
  }
  return Subspace::span(parts.front().ambient_dim(), all);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("intersect: ambient mismatch");
  const std::size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return Subspace::zero(n);
  // Columns a_i and -b_j; kernel vectors (alpha, beta) give sum alpha_i a_i in both.
  std::vector<RatVector> cols = a.basis();
  for (const auto& v : b.basis()) cols.push_back(-v);
  const auto k = kernel(RatMatrix::from_columns(cols, n));
  std::vector<RatVector> vs;
  for (const auto& coeff : k.basis()) {
    RatVector x = zero_vector(n);
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (coeff[i] != 0) x += coeff[i] * a.basis_vector(i);
    vs.push_back(std::move(x));
  }
  return Subspace::span(n, vs).canonical();
}

bool is_direct_sum(const std::vector<Subspace>& parts) {
  if (parts.empty()) return true;
  std::size_t total = 0;
  for (const auto& p : parts) total += p.dim();
  return sum(parts).dim() == total;
}

Subspace kernel(const RatMatrix& a) {
  const auto e = row_reduce(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVector v = zero_vector(n);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return Subspace::from_basis(n, basis).canonical();
}

Subspace image(const RatMatrix& a) { return Subspace::span(a.rows(), a.transpose().row_vectors()).canonical(); }

std::vector<RatVector> annihilator(const Subspace& s) {
  if (s.is_zero()) return Subspace::full(s.ambient_dim()).basis();
  return kernel(s.basis_matrix()).basis();
}

Subspace orthocomplement(const RatMatrix& form, const Subspace& s, const Subspace& within) {
  if (s.ambient_dim() != within.ambient_dim() || form.rows() != s.ambient_dim() || form.cols() != form.rows())
    throw std::invalid_argument("orthocomplement: dimension mismatch");
  const std::size_t n = s.ambient_dim();
  if (within.is_zero()) return Subspace::zero(n);
  // Conditions on coefficients c of x = sum c_k w_k: (s_i^T F w_k) c = 0.
  RatMatrix cond(s.dim(), within.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const RatVector fs = form.transpose().apply(s.basis_vector(i));
    for (std::size_t k = 0; k < within.dim(); ++k) cond(i, k) = dot(fs, within.basis_vector(k));
  }
  const auto coeffs = kernel(cond);
  std::vector<RatVector> vs;
  for (const auto& c : coeffs.basis()) vs.push_back(within.combine(c));
  return Subspace::span(n, vs).canonical();
}

RatMatrix restrict_form(const RatMatrix& form, const Subspace& s) {
  RatMatrix g(s.dim(), s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) g(i, j) = bilinear(form, s.basis_vector(i), s.basis_vector(j));
  return g;
}

Inertia inertia(const RatMatrix& sym) {
  if (!sym.is_symmetric()) throw std::invalid_argument("inertia: matrix not symmetric");
  RatMatrix m = sym;
  const std::size_t n = m.rows();
  Inertia in;
  // Congruence elimination on the trailing block m[k.., k..].
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, p) == 0) ++p;
    if (p == n) {
      // All remaining diagonal entries vanish; make one nonzero via x_k += x_j.
      std::size_t j = n;
      std::size_t i0 = n;
      for (std::size_t i = k; i < n && j == n; ++i)
        for (std::size_t jj = i + 1; jj < n; ++jj)
          if (m(i, jj) != 0) { i0 = i; j = jj; break; }
      if (j == n) {
        in.zero += n - k;
        return in;
      }
      for (std::size_t c = 0; c < n; ++c) m(i0, c) += m(j, c);
      for (std::size_t r = 0; r < n; ++r) m(r, i0) += m(r, j);
      p = i0;
    }
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(p, c), m(k, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(m(r, p), m(r, k));
    }
    const Rational piv = m(k, k);
    if (piv > 0) ++in.positive; else ++in.negative;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const Rational f = m(i, k) / piv;
      for (std::size_t c = k; c < n; ++c) m(i, c) -= f * m(k, c);
      for (std::size_t r = k; r < n; ++r) m(r, i) = (r == i) ? m(i, i) : m(i, r);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      m(i, k) = 0;
      m(k, i) = 0;
    }
  }
  return in;
}

bool is_positive_definite(const RatMatrix& sym) {
  if (!sym.is_symmetric()) return false;
  // Leading pivots of plain elimination are ratios of leading principal minors.
  RatMatrix m = sym;
  const std::size_t n = m.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const Rational f = m(i, k) / m(k, k);
      for (std::size_t c = k; c < n; ++c) m(i, c) -= f * m(k, c);
    }
  }
  return true;
}

bool is_negative_definite(const RatMatrix& sym) { return is_positive_definite(Rational(-1) * sym); }

Subspace coordinate_complement(const Subspace& s) {
  const std::size_t n = s.ambient_dim();
  std::vector<bool> pivot(n, false);
  const auto& e = s.echelon();
  for (std::size_t i = 0; i < e.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (e(i, j) != 0) { pivot[j] = true; break; }
  std::vector<RatVector> basis;
  for (std::size_t j = 0; j < n; ++j)
    if (!pivot[j]) basis.push_back(unit_vector(n, j));
  return Subspace::from_basis(n, basis);
}

Subspace complement_within(const Subspace& part, const Subspace& whole) {
  if (!whole.contains(part)) throw std::invalid_argument("complement_within: part not contained in whole");
  std::vector<RatVector> kept;
  Subspace acc = part;
  for (const auto& v : whole.basis()) {
    if (acc.contains(v)) continue;
    kept.push_back(v);
    acc = sum(acc, Subspace::from_basis(part.ambient_dim(), {v}));
  }
  return Subspace::from_basis(part.ambient_dim(), kept);
}

}  // namespace orbitlie
