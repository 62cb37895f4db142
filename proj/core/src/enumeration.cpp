#include "rootpoly/enumeration.hpp"

#include <algorithm>
#include <stdexcept>

#include "rootpoly/affine.hpp"
#include "rootpoly/weyl.hpp"

namespace rootpoly {

namespace {

IndexSet all_indices(const RootSystem& rs) { return IndexSet::range(1, rs.rank()); }

// Every subset of [n], as masks over bits 1..n.
std::vector<IndexSet> all_subsets(int n) {
  if (n > 30) throw std::invalid_argument("subset enumeration limited to rank 30");
  std::vector<IndexSet> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.push_back(IndexSet::from_mask(m << 1));
  return out;
}

}  // namespace

std::vector<Face> all_standard_parabolic_faces(const RootSystem& rs) {
  const ExtendedDiagram d = extend(rs);
  const IndexSet all = all_indices(rs);
  std::vector<Face> faces;
  for (IndexSet gamma : all_subsets(rs.rank())) {
    if (gamma == all || !d.connected(to_nodes(gamma) | NodeSet{0})) continue;
    const IndexSet cl = all - gamma;
    if (closure(d, cl) != cl) throw std::logic_error("complement of a connected subdiagram is not closed");
    faces.push_back(face_descriptor(rs, cl));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.closure < b.closure;
  });
  return faces;
}

std::vector<FaceOrbit> orbit_decomposition(const RootSystem& rs) {
  const IndexSet all = all_indices(rs);
  std::vector<FaceOrbit> out;
  for (Face& f : all_standard_parabolic_faces(rs)) {
    BigInt size = coset_index(rs, all - f.border, all);
    out.push_back({std::move(f), std::move(size)});
  }
  return out;
}

FPolynomial f_polynomial(const RootSystem& rs) {
  const int n = rs.rank();
  const ExtendedDiagram d = extend(rs);
  const IndexSet all = all_indices(rs);

  FPolynomial p;
  p.coeffs.assign(n + 1, 0);
  for (IndexSet gamma : all_subsets(n)) {
    const NodeSet hat = to_nodes(gamma) | NodeSet{0};
    if (!d.connected(hat)) continue;
    // Gamma* adds the simple roots orthogonal to all of Gamma^.
    IndexSet star = gamma;
    for (int j : (all - gamma).elements())
      if ((d.neighbors(j) & hat).empty()) star.insert(j);
    p.coeffs[gamma.size()] += coset_index(rs, star, all);
  }

  std::vector<BigInt> by_orbits(n + 1, 0);
  by_orbits[n] = 1;
  for (const FaceOrbit& o : orbit_decomposition(rs)) by_orbits[o.face.dim] += o.orbit_size;
  if (by_orbits != p.coeffs)
    throw std::logic_error("f-polynomial of " + rs.family().name() + " disagrees with the orbit sizes");
  return p;
}

IndexSet facet_indices(const RootSystem& rs) {
  const ExtendedDiagram d = extend(rs);
  IndexSet out;
  for (int i = 1; i <= rs.rank(); ++i)
    if (is_irreducible_subsystem(d, d.nodes() - NodeSet{i})) out.insert(i);
  return out;
}

HRepresentation h_representation(const RootSystem& rs, std::size_t limit) {
  const int n = rs.rank();
  const IndexSet all = all_indices(rs);
  HRepresentation h;
  h.total = 0;
  for (int i : facet_indices(rs).elements()) {
    FacetClass c{i, rs.mark(i), coset_index(rs, all - IndexSet{i}, all)};
    h.total += c.count;
    h.classes.push_back(std::move(c));
  }
  h.is_explicit = h.total <= limit;
  if (!h.is_explicit) return h;

  for (const FacetClass& c : h.classes) {
    for (const RationalVector& v : reflection_orbit(rs, rs.coweight(c.index), all, limit)) {
      // (alpha_k, w coweight_i) is an integer.
      Inequality q{IntVector(n), c.mark, c.index};
      for (int k = 0; k < n; ++k) {
        Rational s = 0;
        for (int j = 0; j < n; ++j) s += rs.gram()[k][j] * v[j];
        if (denominator(s) != 1) throw std::logic_error("non-integral facet functional");
        q.normal[k] = static_cast<int>(numerator(s));
      }
      h.inequalities.push_back(std::move(q));
    }
  }
  std::sort(h.inequalities.begin(), h.inequalities.end());
  if (h.inequalities.size() != h.total)
    throw std::logic_error("explicit inequality count disagrees with the coset indices");
  return h;
}

ShortRootFace short_root_face(const RootSystem& rs) {
  if (rs.simply_laced())
    throw std::invalid_argument(rs.family().name() + " is simply laced and has no short roots");
  ShortRootFace out;
  const Root& ts = rs.theta_short();
  for (int i = 1; i <= rs.rank(); ++i)
    if (ts.c(i) == rs.mark(i)) out.index_set.insert(i);
  if (closure(extend(rs), out.index_set) != out.index_set)
    throw std::logic_error("index set of the highest short root is not closed");
  out.dim = rs.rank() - out.index_set.size();
  return out;
}

std::string to_string(SkeletonClass c) {
  return c == SkeletonClass::long_edges ? "long_edges" : "doubled_short_edges";
}

SkeletonClass skeleton_classification(const RootSystem& rs) {
  if (rs.rank() < 2) throw std::invalid_argument("rank 1 has no proper edges");
  const int n = rs.rank();
  std::optional<SkeletonClass> seen;
  for (const Face& f : all_standard_parabolic_faces(rs)) {
    if (f.dim != 1) continue;
    if (f.vertices.size() != 2) throw std::logic_error("edge without two vertices");
    IntVector diff(n);
    for (int k = 0; k < n; ++k) diff[k] = f.vertices[1].coords[k] - f.vertices[0].coords[k];
    SkeletonClass c;
    if (f.roots.size() == 2 && rs.contains(diff)) {
      c = SkeletonClass::long_edges;
    } else if (f.roots.size() == 3) {
      IntVector half(n);
      for (int k = 0; k < n; ++k) {
        if (diff[k] % 2 != 0) throw std::logic_error("three-root edge with odd difference");
        half[k] = diff[k] / 2;
      }
      const auto mid = std::find_if(f.roots.begin(), f.roots.end(), [](const Root& r) { return !r.is_long(); });
      if (!rs.contains(half) || mid == f.roots.end())
        throw std::logic_error("three-root edge is not a string with short midpoint");
      c = SkeletonClass::doubled_short_edges;
    } else {
      throw std::logic_error("edge with " + std::to_string(f.roots.size()) + " roots");
    }
    if (seen && *seen != c) throw std::logic_error("edges of mixed type in " + rs.family().name());
    seen = c;
  }
  if (!seen) throw std::logic_error("no one-dimensional standard parabolic face");
  return *seen;
}

}  // namespace rootpoly
