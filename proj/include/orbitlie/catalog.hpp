#pragma once

#include "orbitlie/report.hpp"
#include "orbitlie/structure.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orbitlie {

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact matrix model of g; s spans the simply transitive subgroup.
struct MatrixModelData {
  std::vector<RatMatrix> matrices;  // one per basis vector of g
  Subspace s;
  bool rq = false;                  // G = S K with S upper triangular
};

struct EntryFlags {
  bool claims_go = false;
  bool nilmanifold = false;       // m is a nilpotent ideal with isotropy acting by skew derivations
  bool rn_type = false;           // run the S x N and submersion decompositions
  bool s_not_orthogonal = false;  // sl2-cover family
};

struct CatalogEntry {
  std::string name;  // with parameters, e.g. "sl2cover_nr(1,2)"
  HomogeneousSpaceSpec spec;
  EntryFlags flags;
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  std::optional<RatMatrix> theta;
  std::optional<Subspace> levi_candidate;
  std::optional<Subspace> nr_complement;
  std::vector<Subspace> blocks;                 // g coordinates, inside m
  std::vector<Subspace> invariant_subalgebras;  // g coordinates, inside m
  std::vector<RatVector> witnesses;             // directions expected to have no geodesic vector
  std::optional<MatrixModelData> matrix_model;
  std::vector<std::pair<std::string, std::string>> expected;  // report key -> value
};

/// Names accepted by build, with default parameters filled in.
std::vector<std::string> catalog_names();

/// name is "euclidean(3)", "sl2cover_nr(1,2)", ... or a bare name with default parameters.
CatalogEntry build(const std::string& name);
bool is_catalog_name(const std::string& name);

/// The nilmanifold carried by m; requires flags.nilmanifold.
NilmanifoldSpec entry_nilmanifold(const CatalogEntry& e);

/// Structure sections only: radical, Levi, Iwasawa, S x N, submersion.
Report decomposition_report(const CatalogEntry& e);
/// G.O. verdict section for the given sampling parameters.
Report go_report(const CatalogEntry& e, std::size_t samples, std::uint64_t seed);
/// Every applicable checker plus the comparison against the expected flags.
Report run_all(const CatalogEntry& e);
std::size_t mismatches(const Report& r);

}  // namespace orbitlie
