#pragma once

// Standard parabolic faces F_I = {x in P : (coweight_i, x) = m_i for i in I}
// of the root polytope P, and the coordinate faces F_i = F_{i}.
//
// A face is identified by its closure (the largest index set defining it).
// The whole polytope (I empty) is not a Face; see enumeration.hpp.

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "rootpoly/affine.hpp"
#include "rootpoly/exact.hpp"
#include "rootpoly/root_system.hpp"

namespace rootpoly {

struct Face {
  IndexSet closure;
  IndexSet border;
  std::vector<Root> roots;     // V_I, in root-system order
  Root min_root;               // eta_I
  int dim = 0;                 // n - |closure|
  std::vector<Root> vertices;  // long members of V_I
};

/// {beta in Phi : c_i(beta) = m_i for all i in I}; all of Phi for I empty.
std::vector<Root> face_roots(const RootSystem& rs, IndexSet indices);

/// Unique minimum of V_I in the root poset. Throws for I empty.
Root minimal_root(const RootSystem& rs, IndexSet indices);

/// Full descriptor of F_I, cross-checked against the affine root count
/// |V_I| = (|Phi^(Pi^ \ Pi_I)| - |Phi(Pi \ Pi_I)|) / 2. Throws for I empty.
Face face_descriptor(const RootSystem& rs, IndexSet indices);

/// The root count predicted by the affine subsystem sizes.
std::size_t root_count_formula(const RootSystem& rs, IndexSet indices);

/// [W<Pi \ Pi_cl(I)> : W<(Pi \ Pi_cl(I)) ∩ theta^perp>]; for I empty this is
/// [W : W<Pi ∩ theta^perp>]. Cross-checked against the number of long roots
/// in V_I; a mismatch throws std::logic_error.
BigInt vertex_count_formula(const RootSystem& rs, IndexSet indices);

struct StabilizerSplit {
  IndexSet generators;  // [n] \ border: Stab_W F_I = W<generators>
  IndexSet pointwise;   // closure \ border: fixes F_I pointwise
  IndexSet faithful;    // [n] \ closure: acts faithfully on F_I
};
StabilizerSplit stabilizer_generators(const RootSystem& rs, IndexSet indices);

/// Sum of the roots of V_I (unnormalized barycenter), in simple-root coordinates.
RationalVector barycenter(const RootSystem& rs, IndexSet indices);

/// (b, alpha_j) = 0 for j outside the border and >= 0 on it.
bool barycenter_in_border_cone(const RootSystem& rs, IndexSet indices);

/// For a facet-type coordinate face: the root sum equals
/// m_i |V_i| / (coweight_i, coweight_i) times coweight_i, exactly.
bool coordinate_barycenter_identity(const RootSystem& rs, int i);

struct IdealReport {
  bool is_dual_order_ideal = false;
  bool is_abelian = false;
  bool has_minimum = false;

  friend bool operator==(const IdealReport&, const IdealReport&) = default;
};
/// Independent tests of upward closure in Phi^+, (V + V) ∩ Phi = ∅, and
/// existence of a minimum. Requires V ⊆ Phi^+.
IdealReport ideal_report(const RootSystem& rs, std::span<const Root> roots);

struct RootMinimum {
  IndexSet index_set;  // I(eta) = {i : c_i(eta) = m_i}
  bool is_face_minimum = false;  // eta long and (eta, alpha_i) <= 0 off I(eta)
};
RootMinimum classify_root_minimum(const RootSystem& rs, const Root& eta);

/// The seven equivalent facet criteria for F_i, in order: facet dimension;
/// Pi^ \ {alpha_i} connected; eta_i misses every other mark; closure {i} = {i};
/// per-j witness roots; nontrivial alpha_j-strings in V_i; maximality among
/// coordinate faces.
std::array<bool, 7> coordinate_facet_conditions(const RootSystem& rs, int i);

/// Common value of the seven criteria; throws std::logic_error if they disagree.
bool coordinate_facet_test(const RootSystem& rs, int i);

struct CoordinateFaceOrder {
  int rank = 0;
  /// contained[i][j] == true iff F_i ⊆ F_j (1-based, row/column 0 unused).
  std::vector<std::vector<bool>> contained;
  /// Covering pairs (i, j): F_i ⊂ F_j with nothing strictly between.
  std::vector<std::pair<int, int>> hasse;
};
/// Inclusion order on the coordinate faces computed three ways (root sets,
/// closure containment, chordless paths to the affine node), which must agree.
CoordinateFaceOrder coordinate_face_order(const RootSystem& rs);

}  // namespace rootpoly
