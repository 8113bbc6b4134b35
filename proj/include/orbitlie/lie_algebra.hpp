#pragma once

#include "orbitlie/subspace.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace orbitlie {

/// Thrown when structure constants break antisymmetry or Jacobi.
class AxiomViolation : public std::runtime_error {
 public:
  enum class Axiom { Antisymmetry, Jacobi, Shape };
  AxiomViolation(Axiom axiom, std::vector<std::size_t> indices, const std::string& what)
      : std::runtime_error(what), axiom_(axiom), indices_(std::move(indices)) {}
  Axiom axiom() const { return axiom_; }
  /// Offending basis indices (0-based): (i,j) or (i,j,k).
  const std::vector<std::size_t>& indices() const { return indices_; }

 private:
  Axiom axiom_;
  std::vector<std::size_t> indices_;
};

std::string axiom_name(AxiomViolation::Axiom a);

struct BracketTerm {
  std::size_t i, j;  // 0-based
  Rational coeff;
  std::size_t k;
};

class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// constants[i][j] is the coordinate vector of [e_i, e_j]. Validates both axioms.
  LieAlgebra(std::vector<std::string> labels, std::vector<std::vector<RatVector>> constants);

  static LieAlgebra abelian(std::size_t n, std::vector<std::string> labels = {});
  /// [e_i,e_j] += coeff e_k and [e_j,e_i] -= coeff e_k for each term.
  static LieAlgebra from_brackets(std::vector<std::string> labels, const std::vector<BracketTerm>& terms);
  /// Span of matrices closed under commutator; matrices must be independent.
  static LieAlgebra from_matrix_basis(std::vector<std::string> labels, const std::vector<RatMatrix>& mats);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const RatVector& structure(std::size_t i, std::size_t j) const { return c_[i * dim() + j]; }

  RatVector bracket(const RatVector& x, const RatVector& y) const;
  /// Column j holds [x, e_j].
  RatMatrix ad(const RatVector& x) const;
  RatMatrix ad_basis(std::size_t i) const;
  RatVector basis_vector(std::size_t i) const { return unit_vector(dim(), i); }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.labels_ == b.labels_ && a.c_ == b.c_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<RatVector> c_;
};

/// Throws AxiomViolation on the first broken axiom.
void validate_axioms(const std::vector<std::vector<RatVector>>& constants);

std::vector<std::string> default_labels(std::size_t n, const std::string& prefix = "e");

Subspace whole(const LieAlgebra& g);
Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b);
bool is_subalgebra(const LieAlgebra& g, const Subspace& s);
bool is_ideal(const LieAlgebra& g, const Subspace& s);
bool brackets_vanish(const LieAlgebra& g, const Subspace& a, const Subspace& b);

RatMatrix killing(const LieAlgebra& g);

/// {x in within : M x = 0}.
Subspace restricted_kernel(const RatMatrix& m, const Subspace& within);

Subspace center(const LieAlgebra& g);
Subspace centralizer(const LieAlgebra& g, const Subspace& s, const Subspace& within);
/// {x in g : [x, s] in s}.
Subspace normalizer(const LieAlgebra& g, const Subspace& s);

struct SeriesData {
  std::vector<Subspace> derived;        // s, [s,s], ... until stable
  std::vector<Subspace> lower_central;  // s, [s,s], [s,[s,s]], ... until stable
  bool solvable = false;
  bool nilpotent = false;
  std::size_t step = 0;  // number of nonzero lower central terms when nilpotent
};

SeriesData series(const LieAlgebra& g, const Subspace& s);
SeriesData series(const LieAlgebra& g);

/// Structure constants of the subalgebra s in s.basis(). Labels default to
/// the formatted basis vectors.
LieAlgebra restrict_to(const LieAlgebra& g, const Subspace& s, std::vector<std::string> labels = {});

struct Quotient {
  LieAlgebra algebra;
  Subspace complement;   // lifts of the quotient basis
  RatMatrix projection;  // dim(q) x dim(g)
};

Quotient quotient(const LieAlgebra& g, const Subspace& ideal);

/// Direct sum g1 + g2, basis g1 then g2.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

}  // namespace orbitlie

namespace orbitlie {

/// Linear combination of basis labels, e.g. "E - F" or "2*H + 1/2*e3"; "0" for the zero vector.
std::string format_vector(const LieAlgebra& g, const RatVector& x);
std::string format_subspace(const LieAlgebra& g, const Subspace& s);

}  // namespace orbitlie
