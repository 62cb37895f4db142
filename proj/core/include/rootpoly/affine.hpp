#pragma once

// Extended Dynkin diagram {alpha_0} ∪ Pi with alpha_0 = -theta + delta, and
// the closure / border operators on index sets.
//
// The null root delta is never materialized: only level-1 affine roots
// -beta + delta occur, and they are handled through their finite part.

#include <string>

#include "rootpoly/index_set.hpp"
#include "rootpoly/root_system.hpp"

namespace rootpoly {

class ExtendedDiagram {
 public:
  ExtendedDiagram() = default;
  /// `matrix` is (n+1)x(n+1), indexed by node number, with
  /// matrix[i][j] = <alpha_i, alpha_j^vee>.
  ExtendedDiagram(Family family, IntMatrix matrix);

  const Family& family() const { return family_; }
  int rank() const { return static_cast<int>(matrix_.size()) - 1; }
  /// Cartan integer <alpha_i, alpha_j^vee> between nodes i and j.
  int bond(int i, int j) const { return matrix_[i][j]; }
  bool adjacent(int i, int j) const { return i != j && matrix_[i][j] != 0; }
  NodeSet neighbors(int i) const;
  NodeSet nodes() const { return NodeSet::range(0, rank()); }
  const IntMatrix& matrix() const { return matrix_; }

  /// Connected component of `start` in the subdiagram induced by `within`.
  NodeSet component(NodeSet within, int start) const;
  bool connected(NodeSet s) const;

 private:
  Family family_;
  IntMatrix matrix_;
};

ExtendedDiagram extend(const RootSystem& rs);

/// Component of node 0 in the subdiagram induced by {0} ∪ ([n] \ I).
NodeSet component_of_affine(const ExtendedDiagram& d, IndexSet indices);

/// Indices outside the affine component.
IndexSet closure(const ExtendedDiagram& d, IndexSet indices);

/// Indices of the closure adjacent to the affine component.
IndexSet border(const ExtendedDiagram& d, IndexSet indices);

/// True iff the subdiagram induced by `nodes` is nonempty and connected.
bool is_irreducible_subsystem(const ExtendedDiagram& d, NodeSet nodes);

/// ASCII drawing of the extended diagram. The affine node is drawn as `@0`,
/// nodes in `marked` as `xk`, all others as `ok`.
std::string render_diagram(const ExtendedDiagram& d, IndexSet marked = {});

}  // namespace rootpoly
