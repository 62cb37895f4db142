#pragma once

// Brute-force exact convex hull of a finite integer point set: facets by
// enumeration of hyperplanes through n-subsets, the full face lattice by
// closing facet incidence sets under intersection, and the 1-skeleton.
//
// cross_validate compares every closed-form result of the library against it.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "rootpoly/enumeration.hpp"
#include "rootpoly/exact.hpp"
#include "rootpoly/root_system.hpp"

namespace rootpoly {

using PointSet = boost::dynamic_bitset<>;

/// functional · p <= bound for every input point p, with equality exactly on
/// `incident`. The functional is a primitive integer vector.
struct FacetCertificate {
  IntVector functional;
  long long bound = 0;
  PointSet incident;
};

inline constexpr int kDefaultMaxDim = 5;
inline constexpr const char* kWorkersEnv = "ROOTPOLY_WORKERS";

struct HullOptions {
  int max_dim = kDefaultMaxDim;
  /// 0 reads ROOTPOLY_WORKERS (default 1).
  int workers = 0;
};

/// Worker count from ROOTPOLY_WORKERS; 1 when unset or invalid.
int workers_from_env();

/// Facets sorted by functional. Throws ResourceLimitError when the dimension
/// exceeds options.max_dim and std::invalid_argument when the points do not
/// span the ambient space affinely.
std::vector<FacetCertificate> hull_facets(const std::vector<IntVector>& points,
                                          const HullOptions& options = {});

struct FaceLattice {
  std::vector<IntVector> points;
  int ambient_dim = 0;
  /// Every face as its set of input points, including the empty face (dim -1)
  /// and the whole polytope (dim n). Sorted by dimension, then point set.
  std::vector<PointSet> faces;
  std::vector<int> dims;
  /// Index pairs (i, j): faces[i] ⊂ faces[j] with dims differing by one.
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  /// Counts of faces of dimension 0..n-1.
  std::vector<BigInt> f_vector;

  std::optional<std::size_t> find(const PointSet& s) const;
  std::vector<std::size_t> faces_of_dim(int k) const;
};

FaceLattice face_lattice(const std::vector<IntVector>& points,
                         const std::vector<FacetCertificate>& facets);

struct Edge {
  std::size_t face;                   // index into FaceLattice::faces
  std::vector<std::size_t> points;    // every root on the edge, endpoints first
  SkeletonClass kind = SkeletonClass::long_edges;
};

/// Every 1-face of the lattice of a root set, checked to be a 2-string
/// (difference of endpoints a root) or a 3-string with a short midpoint
/// (difference twice a root). Throws std::logic_error on anything else.
std::vector<Edge> one_skeleton(const RootSystem& rs, const FaceLattice& lattice);

struct Check {
  std::string id;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  Family family;
  std::vector<BigInt> oracle_f_vector;
  std::vector<BigInt> formula_f_vector;
  std::size_t oracle_facets = 0;
  std::optional<Family> partner;
  std::vector<Check> checks;

  bool ok() const;
};

/// Polytope families whose root polytopes coincide with that of another type:
/// B3 ~ A3, B_n ~ D_n (n >= 4), F4 ~ D4, G2 ~ A2.
std::optional<Family> coincident_partner(const Family& family);

/// Memoizes oracle f-vectors per family across cross_validate calls.
class OracleCache {
 public:
  const FaceLattice& lattice(const RootSystem& rs, const HullOptions& options);
  const std::vector<FacetCertificate>& facets(const RootSystem& rs, const HullOptions& options);

 private:
  std::map<Family, std::vector<FacetCertificate>> facets_;
  std::map<Family, FaceLattice> lattices_;
};

std::vector<IntVector> root_points(const RootSystem& rs);

/// Runs the oracle on the roots of `rs` (and of its coincident partner, if
/// any) and records one named check per formula comparison.
ValidationReport cross_validate(const RootSystem& rs, const HullOptions& options = {},
                                OracleCache* cache = nullptr);

}  // namespace rootpoly
