#include "orbitlie/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace orbitlie {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& cols, std::size_t rows) {
  RatMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("from_columns: ragged columns");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

RatVector RatMatrix::row(std::size_t i) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RatVector RatMatrix::col(std::size_t j) const {
  RatVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<RatVector> RatMatrix::row_vectors() const {
  std::vector<RatVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatVector RatMatrix::apply(const RatVector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
  RatVector y(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& a = (*this)(i, j);
      if (a != 0 && x[j] != 0) y[i] += a * x[j];
    }
  return y;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool RatMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Rational RatMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace: non-square");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum: shape mismatch");
  RatMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix difference: shape mismatch");
  RatMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
  RatMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

Rational bilinear(const RatMatrix& m, const RatVector& x, const RatVector& y) { return dot(x, m.apply(y)); }

RatMatrix vstack(const std::vector<RatMatrix>& blocks) {
  if (blocks.empty()) return {};
  std::size_t rows = 0;
  const std::size_t cols = blocks.front().cols();
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw std::invalid_argument("vstack: column mismatch");
    rows += b.rows();
  }
  RatMatrix out(rows, cols);
  std::size_t r = 0;
  for (const auto& b : blocks)
    for (std::size_t i = 0; i < b.rows(); ++i, ++r)
      for (std::size_t j = 0; j < cols; ++j) out(r, j) = b(i, j);
  return out;
}

RatVector flatten(const RatMatrix& m) {
  RatVector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

RatMatrix unflatten(const RatVector& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw std::invalid_argument("unflatten: size mismatch");
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  return m;
}

Echelon row_reduce(const RatMatrix& a) {
  RatMatrix m = a;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  RatMatrix reduced(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) reduced(i, j) = m(i, j);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const RatMatrix& a) { return row_reduce(a).pivots.size(); }

std::optional<RatMatrix> inverse(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: non-square");
  const std::size_t n = a.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const auto e = row_reduce(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: shape mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  RatVector x(a.cols(), Rational(0));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, a.cols());
  return x;
}

std::string to_string(const RatMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += " ";
      out += m(i, j).str();
    }
  }
  return out + "]";
}

}  // namespace orbitlie
