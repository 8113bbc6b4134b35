#pragma once

#include "orbitlie/metric_space.hpp"

#include <cstdint>
#include <random>

namespace orbitlie {

struct GeodesicVectorCertificate {
  RatVector x;          // in g coordinates, lies in m
  RatVector z;          // in g coordinates, lies in h
  RatVector residuals;  // <[X+Z, Y_j]_m, X> over the m basis
};

/// Left-null vector y of the system A z = b with y.b != 0.
struct Infeasibility {
  RatVector x;
  std::size_t rank_a = 0;
  std::size_t rank_augmented = 0;
  RatVector y;
  Rational value;  // y.b
};

struct GeodesicVectorResult {
  std::optional<GeodesicVectorCertificate> certificate;
  std::optional<Infeasibility> infeasible;
  bool feasible() const { return certificate.has_value(); }
};

/// Solves <[Z,Y_j]_m, X> = -<[X,Y_j]_m, X> for Z in h. X is given in g coordinates.
GeodesicVectorResult geodesic_vector(const HomogeneousSpaceSpec& spec, const RatVector& x);
/// Recomputes the residuals of a candidate Z exactly.
RatVector geodesic_residuals(const HomogeneousSpaceSpec& spec, const RatVector& x, const RatVector& z);
/// Re-checks an infeasibility certificate against the system rebuilt from scratch.
bool verify_infeasibility(const HomogeneousSpaceSpec& spec, const Infeasibility& w);

enum class VerdictKind { NotGO, ProbablyGO, ProvedGO };
std::string verdict_name(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::ProbablyGO;
  std::string certificate;  // ProvedGO: "symmetric" | "naturally-reductive"
  std::size_t samples = 0;  // samples drawn
  std::size_t feasible = 0;
  std::uint64_t seed = 0;
  std::optional<Infeasibility> witness;
  std::size_t witness_sample = 0;  // 1-based index of the sample that failed
};

struct NaturalReductivity {
  bool holds = false;
  std::string witness;  // first failing triple with its value
};

/// <[X,Y]_m, W> + <Y, [X,W]_m> = 0 on all m basis triples.
NaturalReductivity natural_reductivity(const HomogeneousSpaceSpec& spec);
/// [m,m] in h.
bool is_symmetric_pair(const HomogeneousSpaceSpec& spec);

/// Same space with m replaced by another ad(h)-invariant complement; the
/// metric moves along the projection to the original m.
HomogeneousSpaceSpec with_complement(const HomogeneousSpaceSpec& spec, const Subspace& m2);

/// Rational sample coordinates p/q, p in [-7,7], q in [1,7], from a 64-bit Mersenne twister.
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed) : rng_(seed) {}
  Rational next();
  RatVector next_vector(std::size_t n);

 private:
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  std::mt19937_64 rng_;
};

struct GoOptions {
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  /// Optional complement on which natural reductivity is tried as well.
  std::optional<Subspace> nr_complement;
  bool try_certificates = true;
};

Verdict check_go(const HomogeneousSpaceSpec& spec, const GoOptions& opts);

/// For every basis Y of C_m(h): [Y,m] in m and ad(Y)|m skew.
Check skew_consequence(const HomogeneousSpaceSpec& spec);

struct SubSpace {
  HomogeneousSpaceSpec spec;
  Subspace q;               // q + h inside g
  Subspace kernel;          // ideal of q + h inside h that was divided out
};

/// The restriction of the space to the subalgebra q + h, made effective.
/// Throws SpecError when q is not a subalgebra normalized by h.
SubSpace totally_geodesic_sub(const HomogeneousSpaceSpec& spec, const Subspace& q);

}  // namespace orbitlie
