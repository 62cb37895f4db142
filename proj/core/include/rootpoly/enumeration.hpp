#pragma once

// Whole-polytope structure: the census of standard parabolic faces, the
// f-polynomial, W-orbits of faces, the minimal H-representation, and the
// low-dimensional classifications (short-root faces, edges).

#include <cstddef>
#include <string>
#include <vector>

#include "rootpoly/exact.hpp"
#include "rootpoly/faces.hpp"
#include "rootpoly/root_system.hpp"

namespace rootpoly {

/// coeffs[k] is the coefficient of t^k, k = 0..n. coeffs[n] == 1 counts the
/// polytope itself.
struct FPolynomial {
  std::vector<BigInt> coeffs;

  /// Face counts by dimension 0..n-1 (the improper term dropped).
  std::vector<BigInt> f_vector() const { return {coeffs.begin(), coeffs.end() - 1}; }
  friend bool operator==(const FPolynomial&, const FPolynomial&) = default;
};

/// One face per connected subdiagram S of the extended diagram with 0 in S and
/// S proper, keyed by closure [n] \ S. Sorted by dimension, then closure.
std::vector<Face> all_standard_parabolic_faces(const RootSystem& rs);

/// Sum over Gamma ⊆ Pi with Gamma ∪ {alpha_0} connected of [W : W<Gamma*>] t^|Gamma|.
/// Cross-checked against the orbit decomposition; a mismatch throws std::logic_error.
FPolynomial f_polynomial(const RootSystem& rs);

struct FaceOrbit {
  Face face;
  BigInt orbit_size;  // [W : W<Pi \ Pi_border>]
};
std::vector<FaceOrbit> orbit_decomposition(const RootSystem& rs);

/// Indices i with the extended diagram minus node i connected.
IndexSet facet_indices(const RootSystem& rs);

struct FacetClass {
  int index = 0;
  int mark = 0;
  BigInt count;  // [W : W<Pi \ {alpha_i}>]
};

/// functional(x) <= bound, with the functional in coweight coordinates:
/// functional(x) = sum_k normal[k] * c_k(x).
struct Inequality {
  IntVector normal;
  int bound = 0;
  int facet_class = 0;

  friend bool operator==(const Inequality&, const Inequality&) = default;
  friend auto operator<=>(const Inequality&, const Inequality&) = default;
};

struct HRepresentation {
  std::vector<FacetClass> classes;
  BigInt total;
  bool is_explicit = false;
  std::vector<Inequality> inequalities;  // empty unless is_explicit; sorted
};

inline constexpr std::size_t kDefaultInequalityLimit = 100'000;

/// Symbolic form always; the explicit inequalities (W-orbits of the facet
/// coweights) only when the total does not exceed `limit`.
HRepresentation h_representation(const RootSystem& rs, std::size_t limit = kDefaultInequalityLimit);

struct ShortRootFace {
  IndexSet index_set;  // {i : c_i(theta_s) = m_i}
  int dim = 0;         // n when the set is empty (interior)
};
/// Throws std::invalid_argument for simply-laced systems.
ShortRootFace short_root_face(const RootSystem& rs);

enum class SkeletonClass { long_edges, doubled_short_edges };
std::string to_string(SkeletonClass c);

/// Uniform edge type read off the one-dimensional standard parabolic faces.
/// Throws std::invalid_argument in rank 1 (no proper edges) and
/// std::logic_error if the edges are of mixed type.
SkeletonClass skeleton_classification(const RootSystem& rs);

}  // namespace rootpoly
