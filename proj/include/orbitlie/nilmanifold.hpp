#pragma once

#include "orbitlie/go_checker.hpp"

namespace orbitlie {

/// Nilpotent n with an inner product on its basis; z = C(n), v = z-perp.
struct NilmanifoldSpec {
  LieAlgebra n;
  RatMatrix ip;
  Subspace z;
  Subspace v;
};

/// Throws SpecError when n is not nilpotent or ip is not positive definite.
NilmanifoldSpec make_nilmanifold(LieAlgebra n, RatMatrix ip);

/// Basis of the skew-symmetric derivations, echelon-normalized in column-major order.
std::vector<RatMatrix> skew_derivations(const NilmanifoldSpec& ns);

/// g = n x| (skew derivations), isotropy the derivations, m = n. Derivation labels
/// default to D1, D2, ...
HomogeneousSpaceSpec to_homogeneous_spec(const NilmanifoldSpec& ns, std::vector<std::string> derivation_labels = {});

/// A in the skew derivations with <[X+W+A, Y], X+W> = 0 for all basis Y, X in v, W in z.
std::optional<RatMatrix> go_nil_solve(const NilmanifoldSpec& ns, const RatVector& x, const RatVector& w);

/// Throws SpecError when the blocks are not pairwise orthogonal, invariant, and summing to v.
CheckList commuting_blocks_check(const NilmanifoldSpec& ns, const std::vector<Subspace>& blocks);

/// Throws SpecError when o is not a derivation-invariant subalgebra.
Check invariant_subalgebra_ideal_check(const NilmanifoldSpec& ns, const Subspace& o);

/// Step of n and whether a G.O. claim is consistent with it (step <= 2).
struct StepBound {
  std::size_t step = 0;
  bool consistent = true;
};
StepBound step_bound_check(const NilmanifoldSpec& ns, bool claimed_go);

/// Exact group model of a 2-step nilpotent algebra:
/// rho(x) = [[ad x / 2, x], [0, 0]], exp(x) = I + rho(x).
class TwoStepGroup {
 public:
  /// Throws SpecError when the step exceeds 2.
  explicit TwoStepGroup(LieAlgebra n);
  const LieAlgebra& algebra() const { return n_; }
  RatMatrix exp2(const RatVector& x) const;
  /// Throws SpecError for matrices outside the image of exp2.
  RatVector log2(const RatMatrix& a) const;
  RatVector bch2(const RatVector& x, const RatVector& y) const;

 private:
  LieAlgebra n_;
};

}  // namespace orbitlie
