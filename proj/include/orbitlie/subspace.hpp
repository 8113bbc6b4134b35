#pragma once

#include "orbitlie/matrix.hpp"

#include <optional>
#include <vector>

namespace orbitlie {

/// A linear subspace of Q^n.
///
/// Keeps the basis it was built from (other modules attach coordinates and
/// inner products to that basis) together with the canonical reduced row
/// echelon basis, which is what equality compares.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  /// Span of arbitrary vectors; dependent vectors are dropped, first occurrences kept in order.
  static Subspace span(std::size_t ambient, const std::vector<RatVector>& vectors);
  /// Throws std::invalid_argument if the vectors are dependent.
  static Subspace from_basis(std::size_t ambient, const std::vector<RatVector>& basis);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return basis_.size() == ambient_; }

  const std::vector<RatVector>& basis() const { return basis_; }
  const RatVector& basis_vector(std::size_t i) const { return basis_.at(i); }
  RatMatrix basis_matrix() const { return RatMatrix::from_rows(basis_, ambient_); }
  const RatMatrix& echelon() const { return echelon_; }
  /// Same subspace, basis replaced by the echelon rows.
  Subspace canonical() const;

  bool contains(const RatVector& x) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of x in basis(); nullopt when x is not in the subspace.
  std::optional<RatVector> coordinates(const RatVector& x) const;
  RatVector combine(const RatVector& coords) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.echelon_ == b.echelon_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<RatVector> basis_;
  RatMatrix echelon_;
  std::vector<std::size_t> pivots_;
  RatMatrix to_basis_;  // echelon_ = to_basis_ * basis_matrix()
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace sum(const std::vector<Subspace>& parts);
Subspace intersect(const Subspace& a, const Subspace& b);
/// dim(sum) == sum of dims.
bool is_direct_sum(const std::vector<Subspace>& parts);

/// Exact nullspace {x : A x = 0}, echelon basis.
Subspace kernel(const RatMatrix& a);
/// Column space of A.
Subspace image(const RatMatrix& a);
/// Linear functionals (as vectors) vanishing on s; their common kernel is s.
std::vector<RatVector> annihilator(const Subspace& s);

/// {x in within : form(x, y) = 0 for every y in s}.
Subspace orthocomplement(const RatMatrix& form, const Subspace& s, const Subspace& within);

/// Gram matrix of a symmetric form on the basis of s.
RatMatrix restrict_form(const RatMatrix& form, const Subspace& s);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

/// Sylvester inertia of a symmetric rational matrix by exact congruence.
Inertia inertia(const RatMatrix& sym);
bool is_positive_definite(const RatMatrix& sym);
bool is_negative_definite(const RatMatrix& sym);

/// Unit-vector complement of s: e_j for the non-pivot columns of the echelon basis.
Subspace coordinate_complement(const Subspace& s);
/// Complement of `part` inside `whole` spanned by vectors of `whole`'s basis.
Subspace complement_within(const Subspace& part, const Subspace& whole);

}  // namespace orbitlie
