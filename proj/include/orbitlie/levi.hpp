#pragma once

#include "orbitlie/lie_algebra.hpp"

#include <optional>

namespace orbitlie {

/// {x : B(x, [g,g]) = 0}, verified to be a solvable ideal.
Subspace radical(const LieAlgebra& g);

/// Elements of the radical whose ad lies in the trace radical of the
/// associative algebra generated by ad(radical).
Subspace nilradical(const LieAlgebra& g);

struct LeviData {
  Subspace radical;
  Subspace nilradical;
  Subspace levi;
  Subspace levi_nc;
  Subspace levi_cp;
};

class LeviError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// With a candidate the candidate is verified; otherwise a Levi subalgebra is
/// lifted from a coordinate complement of the radical.
LeviData levi(const LieAlgebra& g, const std::optional<Subspace>& candidate = std::nullopt);

struct CompactSplit {
  Subspace nc;
  Subspace cp;
  std::vector<Subspace> simple_ideals;
  std::vector<bool> compact;  // per simple ideal
};

/// s must be a semisimple subalgebra of g. Throws LeviError when it is not, or
/// when the ideal lattice of its basis vectors does not separate the simple ideals.
CompactSplit compact_split(const LieAlgebra& g, const Subspace& s);

}  // namespace orbitlie
