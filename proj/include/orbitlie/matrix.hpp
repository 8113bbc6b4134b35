#pragma once

#include "orbitlie/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace orbitlie {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static RatMatrix identity(std::size_t n);
  /// Rows must share one length; an empty list gives a 0 x cols matrix.
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);
  static RatMatrix from_columns(const std::vector<RatVector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatVector row(std::size_t i) const;
  RatVector col(std::size_t j) const;
  std::vector<RatVector> row_vectors() const;

  RatMatrix transpose() const;
  RatVector apply(const RatVector& x) const;  // this * x
  bool is_zero() const;
  bool is_symmetric() const;
  Rational trace() const;

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rational& s, const RatMatrix& a);
RatMatrix commutator(const RatMatrix& a, const RatMatrix& b);
/// x^T M y
Rational bilinear(const RatMatrix& m, const RatVector& x, const RatVector& y);
/// Stacks blocks vertically; all blocks need the same column count.
RatMatrix vstack(const std::vector<RatMatrix>& blocks);
/// Flattens row-major into a vector of length rows*cols.
RatVector flatten(const RatMatrix& m);
RatMatrix unflatten(const RatVector& v, std::size_t rows, std::size_t cols);

struct Echelon {
  RatMatrix reduced;                 // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row
};

Echelon row_reduce(const RatMatrix& a);
std::size_t rank(const RatMatrix& a);
std::optional<RatMatrix> inverse(const RatMatrix& a);

/// One exact solution of A x = b, or nullopt when the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

std::string to_string(const RatMatrix& m);

}  // namespace orbitlie
