#pragma once

// Finite-type classification of subdiagrams, Weyl group orders and coset
// indices, and orbits under parabolic subgroups.
//
// Group elements are never enumerated inside formulas; orders come from the
// classification of the generating subdiagram.

#include <cstddef>
#include <vector>

#include "rootpoly/affine.hpp"
#include "rootpoly/exact.hpp"
#include "rootpoly/root_system.hpp"

namespace rootpoly {

struct TypeComponent {
  Family family;
  std::vector<int> nodes;  // increasing
};

struct TypeDecomposition {
  std::vector<TypeComponent> components;  // ordered by smallest node
};

/// Classifies the subdiagram induced by `nodes` of a generalized Cartan
/// matrix indexed by node number. Throws std::logic_error when some component
/// is not of finite type (e.g. the full affine diagram).
TypeDecomposition classify(const IntMatrix& cartan, NodeSet nodes);
TypeDecomposition classify(const ExtendedDiagram& d, NodeSet nodes);
/// Subdiagram of the finite Dynkin diagram spanned by the simple roots in `indices`.
TypeDecomposition classify(const RootSystem& rs, IndexSet indices);

BigInt group_order(const Family& family);
/// Product over components; 1 for the empty decomposition.
BigInt group_order(const TypeDecomposition& decomposition);

std::size_t root_count(const Family& family);
std::size_t root_count(const TypeDecomposition& decomposition);

/// [W<sup_gens> : W<sub_gens>] for standard parabolic subgroups of W.
BigInt coset_index(const RootSystem& rs, IndexSet sub_gens, IndexSet super_gens);
/// Same, for parabolic subgroups generated by nodes of the extended diagram
/// (both node sets must induce finite-type subdiagrams).
BigInt coset_index(const ExtendedDiagram& d, NodeSet sub_gens, NodeSet super_gens);

inline constexpr std::size_t kDefaultOrbitLimit = 1'000'000;

/// Closure of {seed} under the simple reflections with indices in `generators`.
/// Throws ResourceLimitError once more than `limit` vectors have been found.
std::vector<RationalVector> reflection_orbit(const RootSystem& rs, const RationalVector& seed,
                                             IndexSet generators,
                                             std::size_t limit = kDefaultOrbitLimit);

}  // namespace rootpoly
