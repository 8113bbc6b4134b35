#pragma once

#include "orbitlie/checks.hpp"
#include "orbitlie/levi.hpp"

namespace orbitlie {

/// (g, h, m, <,>) with g = h + m direct; ip is given on m.basis() coordinates.
/// Construction only checks shapes and the direct sum; validate() checks the rest.
class HomogeneousSpaceSpec {
 public:
  HomogeneousSpaceSpec() = default;
  HomogeneousSpaceSpec(LieAlgebra g, Subspace h, Subspace m, RatMatrix ip);

  const LieAlgebra& g() const { return g_; }
  const Subspace& h() const { return h_; }
  const Subspace& m() const { return m_; }
  const RatMatrix& ip() const { return ip_; }
  std::size_t dim_m() const { return m_.dim(); }
  std::size_t dim_h() const { return h_.dim(); }

  RatVector h_part(const RatVector& x) const;
  RatVector m_part(const RatVector& x) const;
  RatVector h_coords(const RatVector& x) const;
  RatVector m_coords(const RatVector& x) const;  // coordinates of m_part(x)
  RatVector from_m(const RatVector& coords) const { return m_.combine(coords); }
  RatVector from_h(const RatVector& coords) const { return h_.combine(coords); }
  /// <x_m, y_m> for x, y in g.
  Rational inner(const RatVector& x, const RatVector& y) const;
  /// Matrix of X -> [y, X]_m on m coordinates.
  RatMatrix ad_m(const RatVector& y) const;

 private:
  LieAlgebra g_;
  Subspace h_;
  Subspace m_;
  RatMatrix ip_;
  Subspace split_;  // h basis followed by m basis
};

class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Killing-orthogonal complement of h; throws SpecError when B is not negative definite on h.
Subspace killing_complement(const LieAlgebra& g, const Subspace& h);

CheckList validate(const HomogeneousSpaceSpec& spec);

struct NormalizerData {
  Subspace c_m_h;
  Subspace n_g_h;
  Subspace w_m;
  Subspace center_g;
  Subspace f;
  CheckList checks;
};

/// f defaults to the ip-orthogonal complement of C(g) inside w_m; a supplied f is verified instead.
NormalizerData normalizer_data(const HomogeneousSpaceSpec& spec, const std::optional<Subspace>& f_override = std::nullopt);

struct TransitivityResult {
  bool transitive = false;
  Subspace missing;  // coordinate directions not reached by h + u + v
};

/// Throws SpecError when v is not inside f.
TransitivityResult transitivity_check(const HomogeneousSpaceSpec& spec, const Subspace& u, const Subspace& v);

/// Skewness of ad on all of C_m(h), then g = h + Lev + Nil + C(f).
CheckList nilrad_transitivity(const HomogeneousSpaceSpec& spec);

/// l = (l cap Rad) + (l cap Lev), l cap Rad abelian and commuting with Lev, [l,l] in Lev.
/// Throws SpecError when l is not a subalgebra containing h.
CheckList compatible_triple_check(const HomogeneousSpaceSpec& spec, const Subspace& l, const Subspace& levi_factor);

/// Skewness of ad(y)|m for y in g, as a list of defects <[y,X_i]_m,X_j> + <X_i,[y,X_j]_m>.
bool ad_skew_on_m(const HomogeneousSpaceSpec& spec, const RatVector& y);

}  // namespace orbitlie
