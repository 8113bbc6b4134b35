#pragma once

#include "orbitlie/nilmanifold.hpp"

namespace orbitlie {

class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CartanData {
  RatMatrix theta;  // on g; only its action on levi_nc matters
  Subspace k;
  Subspace p;
  CheckList checks;
};

/// Verifies a supplied involution on levi_nc and returns its eigenspaces.
CartanData cartan_data(const LieAlgebra& g, const Subspace& levi_nc, const RatMatrix& theta);

struct RestrictedRoot {
  RatVector functional;  // values on the basis of a
  Rational value;        // on the regular element
  std::size_t multiplicity = 0;
  Subspace space;
};

struct IwasawaData {
  Subspace k;
  Subspace a;
  RatVector regular;  // regular element of a, in g coordinates
  std::vector<RestrictedRoot> roots;
  Subspace n_plus;
  Subspace s;
  CheckList checks;
};

struct IwasawaOptions {
  std::vector<double> regular;  // coefficients on the basis of a; empty tries 2^-i, 3^-i, 5^-i, 7^-i
  double tol = 1e-9;
  std::int64_t max_denominator = 64;
};

IwasawaData iwasawa(const LieAlgebra& g, const Subspace& levi_nc, const CartanData& cd, const IwasawaOptions& opts = {});

/// {Y : ad(Y)|Nil skew for the metric on Nil}; Nil must lie in m.
struct OAlgebra {
  Subspace o;
  Subspace nil;
  Subspace p;  // ip-orthogonal complement of Nil in m
  CheckList checks;
};
OAlgebra o_algebra(const HomogeneousSpaceSpec& spec);

/// [levi_nc, radical] = 0.
Check gnc_check(const HomogeneousSpaceSpec& spec, const LeviData& ld);

/// Skewness hypothesis, span identity g = h + Lev + Nil + C(f), and step of Nil + C(f).
struct ThmNilReport {
  bool applicable = false;
  std::size_t step = 0;
  CheckList checks;
};
ThmNilReport thm_nil_check(const HomogeneousSpaceSpec& spec, const LeviData& ld);

struct StructureInput {
  std::optional<Subspace> levi_candidate;
  std::optional<RatMatrix> theta;
  IwasawaOptions iwasawa;
};

struct RnDecomposition {
  Subspace l;
  Subspace f;
  LeviData levi;
  std::optional<CartanData> cartan;
  std::optional<IwasawaData> iwasawa;
  Subspace s;
  Subspace u;
  LieAlgebra n_data;  // Nil(g) + abelian f
  std::size_t n_step = 0;
  RatMatrix pullback_ip;  // on u.basis() followed by f.basis()
  bool claim_ok = false;
  bool s_commutes_nil = false;
  CheckList checks;
};

/// Throws StructureError when [l,l] is not in h for l = h + C_m(h), or when the
/// Levi factor is incompatible with l.
RnDecomposition rn_decompose(const HomogeneousSpaceSpec& spec, const StructureInput& in = {});

struct SubmersionData {
  int case_number = 0;
  Subspace q;
  Subspace k;
  Subspace p;
  Subspace levi_nc;
  RatMatrix base_ip;  // ip restricted to p
  std::optional<NilmanifoldSpec> fiber;
  CheckList checks;
};

/// Requires rn.f = 0.
SubmersionData submersion_decompose(const HomogeneousSpaceSpec& spec, const RnDecomposition& rn);

struct SNotOrthogonal {
  struct Part {
    RatVector x, x_h, x_p, x_rest;
  };
  std::vector<Part> parts;
  Rational max_pairing;  // largest |<ev(s_i), ev(t_j)>| over t in Nil + f
  std::string witness;
  bool nonzero = false;
};

/// Decomposes each X in s as X_h + X_p + X_rest and pairs ev(s) against ev(Nil + f).
SNotOrthogonal s_not_orthogonal_check(const HomogeneousSpaceSpec& spec, const RnDecomposition& rn);

}  // namespace orbitlie
