#include "rootpoly/faces.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "rootpoly/weyl.hpp"

namespace rootpoly {

namespace {

void require_nonempty(IndexSet indices, const char* what) {
  if (indices.empty()) throw std::invalid_argument(std::string(what) + ": index set must be nonempty");
}

void require_in_range(const RootSystem& rs, IndexSet indices) {
  if (!indices.subset_of(IndexSet::range(1, rs.rank())))
    throw std::invalid_argument("index set " + indices.to_string() + " not contained in [1," +
                                std::to_string(rs.rank()) + "]");
}

IndexSet all_indices(const RootSystem& rs) { return IndexSet::range(1, rs.rank()); }

bool on_face(const RootSystem& rs, const Root& beta, IndexSet indices) {
  for (int i : indices.elements())
    if (beta.c(i) != rs.mark(i)) return false;
  return true;
}

// Every chordless simple path from `source` to `target` in the extended
// diagram, as node sets.
void chordless_paths(const ExtendedDiagram& d, std::vector<int>& path, int target,
                     std::vector<NodeSet>& out) {
  const int u = path.back();
  if (u == target) {
    out.push_back(NodeSet::from_mask(0));
    for (int p : path) out.back().insert(p);
    return;
  }
  for (int v : d.neighbors(u).elements()) {
    bool ok = true;
    for (std::size_t k = 0; k + 1 < path.size() && ok; ++k) ok = path[k] != v && !d.adjacent(path[k], v);
    if (!ok) continue;
    path.push_back(v);
    chordless_paths(d, path, target, out);
    path.pop_back();
  }
}

std::vector<NodeSet> chordless_paths(const ExtendedDiagram& d, int source, int target) {
  std::vector<int> path{source};
  std::vector<NodeSet> out;
  chordless_paths(d, path, target, out);
  return out;
}

}  // namespace

std::vector<Root> face_roots(const RootSystem& rs, IndexSet indices) {
  require_in_range(rs, indices);
  std::vector<Root> out;
  for (const Root& beta : rs.roots())
    if (on_face(rs, beta, indices)) out.push_back(beta);
  return out;
}

Root minimal_root(const RootSystem& rs, IndexSet indices) {
  require_nonempty(indices, "minimal_root");
  const std::vector<Root> v = face_roots(rs, indices);
  // Roots are height-sorted, so the first element has minimal height.
  const Root& candidate = v.front();
  if (v.size() > 1 && v[1].height() == candidate.height())
    throw std::logic_error("face " + indices.to_string() + " has several roots of minimal height");
  for (const Root& beta : v)
    if (!root_poset_leq(rs, candidate, beta))
      throw std::logic_error("face " + indices.to_string() + " has no minimum");
  return candidate;
}

std::size_t root_count_formula(const RootSystem& rs, IndexSet indices) {
  require_nonempty(indices, "root_count_formula");
  require_in_range(rs, indices);
  const ExtendedDiagram d = extend(rs);
  const NodeSet finite_part = to_nodes(all_indices(rs) - indices);
  const std::size_t affine = root_count(classify(d, finite_part | NodeSet{0}));
  const std::size_t finite = root_count(classify(d, finite_part));
  if (affine < finite || (affine - finite) % 2 != 0)
    throw std::logic_error("affine root count formula is not a nonnegative even difference");
  return (affine - finite) / 2;
}

Face face_descriptor(const RootSystem& rs, IndexSet indices) {
  require_nonempty(indices, "face_descriptor");
  require_in_range(rs, indices);
  const ExtendedDiagram d = extend(rs);
  Face f;
  f.closure = closure(d, indices);
  f.border = border(d, indices);
  f.roots = face_roots(rs, indices);
  f.min_root = minimal_root(rs, indices);
  f.dim = rs.rank() - f.closure.size();
  for (const Root& beta : f.roots)
    if (beta.is_long()) f.vertices.push_back(beta);
  if (f.roots.size() != root_count_formula(rs, indices))
    throw std::logic_error("root count of face " + indices.to_string() +
                           " disagrees with the affine subsystem count");
  return f;
}

BigInt vertex_count_formula(const RootSystem& rs, IndexSet indices) {
  require_in_range(rs, indices);
  const ExtendedDiagram d = extend(rs);
  const IndexSet gens = all_indices(rs) - closure(d, indices);
  const IndexSet perp = gens - to_indices(d.neighbors(0));
  const BigInt predicted = coset_index(rs, perp, gens);

  std::size_t observed = 0;
  for (const Root& beta : face_roots(rs, indices)) observed += beta.is_long() ? 1 : 0;
  if (predicted != observed)
    throw std::logic_error("vertex count of face " + indices.to_string() + ": formula gives " +
                           predicted.str() + ", long roots " + std::to_string(observed));
  return predicted;
}

StabilizerSplit stabilizer_generators(const RootSystem& rs, IndexSet indices) {
  require_nonempty(indices, "stabilizer_generators");
  require_in_range(rs, indices);
  const ExtendedDiagram d = extend(rs);
  const IndexSet cl = closure(d, indices);
  const IndexSet bd = border(d, indices);
  const IndexSet all = all_indices(rs);
  return {all - bd, cl - bd, all - cl};
}

RationalVector barycenter(const RootSystem& rs, IndexSet indices) {
  require_nonempty(indices, "barycenter");
  IntVector sum(rs.rank(), 0);
  for (const Root& beta : face_roots(rs, indices))
    for (int k = 0; k < rs.rank(); ++k) sum[k] += beta.coords[k];
  return to_rational(sum);
}

bool barycenter_in_border_cone(const RootSystem& rs, IndexSet indices) {
  const RationalVector b = barycenter(rs, indices);
  const IndexSet bd = border(extend(rs), indices);
  for (int j = 1; j <= rs.rank(); ++j) {
    RationalVector e(rs.rank(), 0);
    e[j - 1] = 1;
    const Rational pairing = inner_product(rs, b, e);
    if (bd.contains(j) ? pairing < 0 : pairing != 0) return false;
  }
  return true;
}

bool coordinate_barycenter_identity(const RootSystem& rs, int i) {
  const IndexSet single{i};
  require_in_range(rs, single);
  const RationalVector b = barycenter(rs, single);
  const RationalVector& w = rs.coweight(i);
  const Rational count = static_cast<long>(face_roots(rs, single).size());
  const Rational factor = Rational(rs.mark(i)) * count / inner_product(rs, w, w);
  return b == scale(factor, w);
}

IdealReport ideal_report(const RootSystem& rs, std::span<const Root> roots) {
  std::unordered_set<std::size_t> members;
  for (const Root& beta : roots) {
    if (!beta.is_positive()) throw std::invalid_argument("ideal_report: root " + beta.to_string() + " is not positive");
    auto k = rs.find(beta.coords);
    if (!k) throw std::invalid_argument("ideal_report: " + beta.to_string() + " is not a root");
    members.insert(*k);
  }

  IdealReport report;
  report.is_dual_order_ideal = true;
  for (const Root& alpha : roots) {
    for (const Root& beta : rs.positive_roots()) {
      if (root_poset_leq(rs, alpha, beta) && !members.count(*rs.find(beta.coords))) {
        report.is_dual_order_ideal = false;
        break;
      }
    }
    if (!report.is_dual_order_ideal) break;
  }

  report.is_abelian = true;
  IntVector sum(rs.rank());
  for (std::size_t a = 0; a < roots.size() && report.is_abelian; ++a) {
    for (std::size_t b = a; b < roots.size(); ++b) {
      for (int k = 0; k < rs.rank(); ++k) sum[k] = roots[a].coords[k] + roots[b].coords[k];
      if (rs.contains(sum)) {
        report.is_abelian = false;
        break;
      }
    }
  }

  for (const Root& alpha : roots) {
    if (std::all_of(roots.begin(), roots.end(),
                    [&](const Root& beta) { return root_poset_leq(rs, alpha, beta); })) {
      report.has_minimum = true;
      break;
    }
  }
  return report;
}

RootMinimum classify_root_minimum(const RootSystem& rs, const Root& eta) {
  if (!eta.is_positive() || !rs.contains(eta.coords))
    throw std::invalid_argument("classify_root_minimum: expected a positive root");
  RootMinimum out;
  for (int i = 1; i <= rs.rank(); ++i)
    if (eta.c(i) == rs.mark(i)) out.index_set.insert(i);
  out.is_face_minimum = eta.is_long();
  for (int i = 1; i <= rs.rank() && out.is_face_minimum; ++i) {
    if (out.index_set.contains(i)) continue;
    IntVector e(rs.rank(), 0);
    e[i - 1] = 1;
    if (rs.scaled_inner(eta.coords, e) > 0) out.is_face_minimum = false;
  }
  return out;
}

std::array<bool, 7> coordinate_facet_conditions(const RootSystem& rs, int i) {
  const IndexSet single{i};
  require_in_range(rs, single);
  const int n = rs.rank();
  const ExtendedDiagram d = extend(rs);
  const std::vector<Root> v = face_roots(rs, single);
  auto in_v = [&](const IntVector& coords) {
    return std::any_of(v.begin(), v.end(), [&](const Root& r) { return r.coords == coords; });
  };
  std::array<bool, 7> c{};

  // (1) affine dimension of V_i is n - 1
  std::vector<IntVector> diffs;
  for (const Root& beta : v) {
    IntVector diff(n);
    for (int k = 0; k < n; ++k) diff[k] = beta.coords[k] - v.front().coords[k];
    diffs.push_back(std::move(diff));
  }
  c[0] = static_cast<int>(rank(diffs)) == n - 1;

  // (2) removing alpha_i leaves the extended diagram connected
  c[1] = is_irreducible_subsystem(d, d.nodes() - NodeSet{i});

  // (3) the minimal root hits no other mark
  const Root eta = minimal_root(rs, single);
  c[2] = true;
  for (int j = 1; j <= n; ++j)
    if (j != i && eta.c(j) == rs.mark(j)) c[2] = false;

  // (4) {i} is closed
  c[3] = closure(d, single) == single;

  // (5) every other coordinate functional is non-constant on V_i
  c[4] = true;
  for (int j = 1; j <= n; ++j) {
    if (j == i) continue;
    c[4] = c[4] && std::any_of(v.begin(), v.end(), [&](const Root& r) { return r.c(j) != rs.mark(j); });
  }

  // (6) V_i contains a nontrivial alpha_j-string for every j != i
  c[5] = true;
  for (int j = 1; j <= n && c[5]; ++j) {
    if (j == i) continue;
    Root alpha_j = rs.root(*rs.find([&] {
      IntVector e(n, 0);
      e[j - 1] = 1;
      return e;
    }()));
    bool found = false;
    for (const Root& beta : v) {
      const auto s = root_string(rs, alpha_j, beta);
      if (s.size() > 1 && std::all_of(s.begin(), s.end(), [&](const Root& r) { return in_v(r.coords); })) {
        found = true;
        break;
      }
    }
    c[5] = found;
  }

  // (7) F_i is not strictly contained in another coordinate face
  c[6] = true;
  for (int j = 1; j <= n; ++j) {
    if (j == i) continue;
    const std::vector<Root> w = face_roots(rs, IndexSet{j});
    const bool contained = std::all_of(v.begin(), v.end(), [&](const Root& r) {
      return std::find(w.begin(), w.end(), r) != w.end();
    });
    if (contained && w.size() > v.size()) c[6] = false;
  }
  return c;
}

bool coordinate_facet_test(const RootSystem& rs, int i) {
  const auto c = coordinate_facet_conditions(rs, i);
  for (bool value : c)
    if (value != c[0])
      throw std::logic_error("facet criteria disagree for coordinate face " + std::to_string(i) +
                             " of " + rs.family().name());
  return c[0];
}

CoordinateFaceOrder coordinate_face_order(const RootSystem& rs) {
  const int n = rs.rank();
  const ExtendedDiagram d = extend(rs);
  std::vector<std::vector<Root>> v(n + 1);
  std::vector<IndexSet> cl(n + 1);
  for (int i = 1; i <= n; ++i) {
    v[i] = face_roots(rs, IndexSet{i});
    cl[i] = closure(d, IndexSet{i});
  }

  CoordinateFaceOrder order;
  order.rank = n;
  order.contained.assign(n + 1, std::vector<bool>(n + 1, false));
  for (int j = 1; j <= n; ++j) {
    const std::vector<NodeSet> paths = chordless_paths(d, j, 0);
    for (int i = 1; i <= n; ++i) {
      const bool by_roots = std::all_of(v[i].begin(), v[i].end(), [&](const Root& r) {
        return std::find(v[j].begin(), v[j].end(), r) != v[j].end();
      });
      const bool by_closure = cl[j].subset_of(cl[i]);
      const bool by_paths =
          std::all_of(paths.begin(), paths.end(), [&](NodeSet p) { return p.contains(i); });
      if (by_roots != by_closure || by_roots != by_paths)
        throw std::logic_error("coordinate face order criteria disagree for (" + std::to_string(i) +
                               "," + std::to_string(j) + ") in " + rs.family().name());
      order.contained[i][j] = by_roots;
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j || !order.contained[i][j]) continue;
      bool cover = true;
      for (int k = 1; k <= n && cover; ++k)
        if (k != i && k != j && order.contained[i][k] && order.contained[k][j]) cover = false;
      if (cover) order.hasse.emplace_back(i, j);
    }
  }
  return order;
}

}  // namespace rootpoly
