#include "rootpoly/hull_oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "rootpoly/errors.hpp"

namespace rootpoly {

namespace {

using Row = std::vector<long long>;

// Fraction-free Gaussian elimination; exact for integer input.
long long bareiss_det(std::vector<Row> m) {
  const std::size_t k = m.size();
  if (k == 0) return 1;
  long long sign = 1;
  long long prev = 1;
  for (std::size_t p = 0; p + 1 < k; ++p) {
    if (m[p][p] == 0) {
      std::size_t r = p + 1;
      while (r < k && m[r][p] == 0) ++r;
      if (r == k) return 0;
      std::swap(m[p], m[r]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < k; ++i)
      for (std::size_t j = p + 1; j < k; ++j)
        m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / prev;
    prev = m[p][p];
  }
  return sign * m[k - 1][k - 1];
}

// Normal of the hyperplane through the rows of `diffs` (n-1 rows of length n):
// a_k = (-1)^k det(diffs without column k).
IntVector cross_product(const std::vector<Row>& diffs, int n) {
  IntVector a(n);
  std::vector<Row> minor(diffs.size(), Row(n - 1));
  for (int k = 0; k < n; ++k) {
    for (std::size_t r = 0; r < diffs.size(); ++r)
      for (int c = 0, out = 0; c < n; ++c)
        if (c != k) minor[r][out++] = diffs[r][c];
    const long long det = bareiss_det(minor);
    a[k] = static_cast<int>(k % 2 == 0 ? det : -det);
  }
  return a;
}

long long dot(const IntVector& a, const IntVector& p) {
  long long s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += static_cast<long long>(a[k]) * p[k];
  return s;
}

IntVector negated(IntVector a) {
  for (int& x : a) x = -x;
  return a;
}

int affine_rank(const std::vector<IntVector>& points, const PointSet& members) {
  const auto first = members.find_first();
  if (first == PointSet::npos) return -1;
  std::vector<IntVector> diffs;
  for (auto i = members.find_next(first); i != PointSet::npos; i = members.find_next(i)) {
    IntVector d(points[i].size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = points[i][k] - points[first][k];
    diffs.push_back(std::move(d));
  }
  return static_cast<int>(rank(diffs));
}

using FacetMap = std::map<IntVector, FacetCertificate>;

void scan_worker(const std::vector<IntVector>& points, int n, int worker, int workers, FacetMap& found) {
  const std::size_t count = points.size();
  std::vector<std::size_t> pick(n);
  std::vector<Row> diffs(n - 1, Row(n));

  auto consider = [&] {
    const IntVector& p0 = points[pick[0]];
    for (int r = 1; r < n; ++r)
      for (int k = 0; k < n; ++k) diffs[r - 1][k] = points[pick[r]][k] - p0[k];
    IntVector a = cross_product(diffs, n);
    int g = 0;
    for (int x : a) g = std::gcd(g, x);
    if (g == 0) return;
    for (int& x : a) x /= g;
    long long b = dot(a, p0);
    // Parallel facets share a normal up to sign, so match the bound too.
    if (auto it = found.find(a); it != found.end() && it->second.bound == b) return;
    if (auto it = found.find(negated(a)); it != found.end() && it->second.bound == -b) return;

    bool above = false;
    bool below = false;
    for (const IntVector& p : points) {
      const long long s = dot(a, p) - b;
      above = above || s > 0;
      below = below || s < 0;
      if (above && below) return;
    }
    if (above) {
      a = negated(a);
      b = -b;
    }
    FacetCertificate f{a, b, PointSet(count)};
    for (std::size_t i = 0; i < count; ++i)
      if (dot(a, points[i]) == b) f.incident.set(i);
    found.emplace(std::move(a), std::move(f));
  };

  auto choose = [&](auto&& self, int slot, std::size_t from) -> void {
    if (slot == n) {
      consider();
      return;
    }
    for (std::size_t i = from; i + (n - slot) <= count; ++i) {
      pick[slot] = i;
      self(self, slot + 1, i + 1);
    }
  };
  for (std::size_t first = worker; first + n <= count; first += workers) {
    pick[0] = first;
    choose(choose, 1, first + 1);
  }
}

}  // namespace

int workers_from_env() {
  const char* value = std::getenv(kWorkersEnv);
  if (!value) return 1;
  char* end = nullptr;
  const long w = std::strtol(value, &end, 10);
  if (end == value || *end != '\0' || w < 1 || w > 256) return 1;
  return static_cast<int>(w);
}

std::vector<FacetCertificate> hull_facets(const std::vector<IntVector>& points, const HullOptions& options) {
  if (points.empty()) throw std::invalid_argument("hull_facets: empty point set");
  const int n = static_cast<int>(points.front().size());
  for (const IntVector& p : points)
    if (static_cast<int>(p.size()) != n) throw std::invalid_argument("hull_facets: mixed dimensions");
  if (n > options.max_dim)
    throw ResourceLimitError("hull oracle refuses dimension " + std::to_string(n) +
                             " (bound " + std::to_string(options.max_dim) + ")");
  PointSet all(points.size());
  all.set();
  if (affine_rank(points, all) != n)
    throw std::invalid_argument("hull_facets: points do not span dimension " + std::to_string(n));

  const int workers = options.workers > 0 ? options.workers : workers_from_env();
  std::vector<FacetMap> partial(workers);
  if (workers == 1) {
    scan_worker(points, n, 0, 1, partial[0]);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w)
      threads.emplace_back(scan_worker, std::cref(points), n, w, workers, std::ref(partial[w]));
    for (auto& t : threads) t.join();
  }

  FacetMap merged;
  for (FacetMap& m : partial)
    for (auto& [key, f] : m) merged.emplace(key, std::move(f));
  std::vector<FacetCertificate> out;
  out.reserve(merged.size());
  for (auto& [key, f] : merged) out.push_back(std::move(f));
  return out;
}

std::optional<std::size_t> FaceLattice::find(const PointSet& s) const {
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (faces[i] == s) return i;
  return std::nullopt;
}

std::vector<std::size_t> FaceLattice::faces_of_dim(int k) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (dims[i] == k) out.push_back(i);
  return out;
}

FaceLattice face_lattice(const std::vector<IntVector>& points, const std::vector<FacetCertificate>& facets) {
  if (points.empty()) throw std::invalid_argument("face_lattice: empty point set");
  FaceLattice lat;
  lat.points = points;
  lat.ambient_dim = static_cast<int>(points.front().size());

  std::set<PointSet> seen;
  std::deque<PointSet> queue;
  for (const FacetCertificate& f : facets)
    if (seen.insert(f.incident).second) queue.push_back(f.incident);
  while (!queue.empty()) {
    const PointSet face = queue.front();
    queue.pop_front();
    for (const FacetCertificate& f : facets) {
      PointSet meet = face & f.incident;
      if (seen.insert(meet).second) queue.push_back(std::move(meet));
    }
  }
  seen.insert(PointSet(points.size()));
  PointSet all(points.size());
  all.set();
  seen.insert(all);

  std::vector<std::pair<int, PointSet>> graded;
  for (const PointSet& s : seen) graded.emplace_back(affine_rank(points, s), s);
  std::sort(graded.begin(), graded.end());
  for (auto& [d, s] : graded) {
    lat.dims.push_back(d);
    lat.faces.push_back(std::move(s));
  }

  for (std::size_t i = 0; i < lat.faces.size(); ++i)
    for (std::size_t j = i + 1; j < lat.faces.size(); ++j)
      if (lat.dims[j] == lat.dims[i] + 1 && lat.faces[i].is_subset_of(lat.faces[j]))
        lat.covers.emplace_back(i, j);

  lat.f_vector.assign(lat.ambient_dim, 0);
  for (int d : lat.dims)
    if (d >= 0 && d < lat.ambient_dim) lat.f_vector[d] += 1;
  return lat;
}

std::vector<Edge> one_skeleton(const RootSystem& rs, const FaceLattice& lattice) {
  const int n = lattice.ambient_dim;
  PointSet vertices(lattice.points.size());
  for (std::size_t i : lattice.faces_of_dim(0)) vertices |= lattice.faces[i];

  std::vector<Edge> out;
  for (std::size_t fi : lattice.faces_of_dim(1)) {
    if (n == 1) break;  // the segment itself is not a proper face
    const PointSet& s = lattice.faces[fi];
    Edge e{fi, {}, SkeletonClass::long_edges};
    for (auto i = s.find_first(); i != PointSet::npos; i = s.find_next(i))
      if (vertices.test(i)) e.points.push_back(i);
    if (e.points.size() != 2) throw std::logic_error("oracle edge without two endpoints");
    for (auto i = s.find_first(); i != PointSet::npos; i = s.find_next(i))
      if (!vertices.test(i)) e.points.push_back(i);

    const IntVector& p = lattice.points[e.points[0]];
    const IntVector& q = lattice.points[e.points[1]];
    IntVector diff(n);
    for (int k = 0; k < n; ++k) diff[k] = q[k] - p[k];
    if (e.points.size() == 2) {
      if (!rs.contains(diff)) throw std::logic_error("two-root edge whose difference is not a root");
    } else if (e.points.size() == 3) {
      IntVector half(n);
      for (int k = 0; k < n; ++k) half[k] = diff[k] / 2;
      const IntVector& mid = lattice.points[e.points[2]];
      auto mid_index = rs.find(mid);
      bool centered = true;
      for (int k = 0; k < n; ++k) centered = centered && 2 * mid[k] == p[k] + q[k] && diff[k] % 2 == 0;
      if (!centered || !rs.contains(half) || !mid_index || rs.root(*mid_index).is_long())
        throw std::logic_error("three-root edge is not a string with a short midpoint");
      e.kind = SkeletonClass::doubled_short_edges;
    } else {
      throw std::logic_error("oracle edge with " + std::to_string(e.points.size()) + " roots");
    }
    out.push_back(std::move(e));
  }
  return out;
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::optional<Family> coincident_partner(const Family& family) {
  family.validate();
  if (family.letter == 'B' && family.rank == 3) return Family{'A', 3};
  if (family.letter == 'B' && family.rank >= 4) return Family{'D', family.rank};
  if (family.letter == 'F') return Family{'D', 4};
  if (family.letter == 'G') return Family{'A', 2};
  return std::nullopt;
}

std::vector<IntVector> root_points(const RootSystem& rs) {
  std::vector<IntVector> out;
  out.reserve(rs.size());
  for (const Root& r : rs.roots()) out.push_back(r.coords);
  return out;
}

const std::vector<FacetCertificate>& OracleCache::facets(const RootSystem& rs, const HullOptions& options) {
  if (rs.rank() > options.max_dim)
    throw ResourceLimitError("hull oracle refuses rank " + std::to_string(rs.rank()) + " (bound " +
                             std::to_string(options.max_dim) + ")");
  auto it = facets_.find(rs.family());
  if (it == facets_.end()) it = facets_.emplace(rs.family(), hull_facets(root_points(rs), options)).first;
  return it->second;
}

const FaceLattice& OracleCache::lattice(const RootSystem& rs, const HullOptions& options) {
  const auto& f = facets(rs, options);
  auto it = lattices_.find(rs.family());
  if (it == lattices_.end()) it = lattices_.emplace(rs.family(), face_lattice(root_points(rs), f)).first;
  return it->second;
}

namespace {

std::string join(const std::vector<BigInt>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].str();
  return s + ")";
}

std::pair<IntVector, long long> primitive(IntVector a, long long b) {
  long long g = std::abs(b);
  for (int x : a) g = std::gcd(g, static_cast<long long>(std::abs(x)));
  if (g > 1) {
    for (int& x : a) x = static_cast<int>(x / g);
    b /= g;
  }
  return {std::move(a), b};
}

template <class F>
void run_check(ValidationReport& report, const std::string& id, F&& body) {
  Check c{id, false, ""};
  try {
    body(c);
  } catch (const std::logic_error& e) {
    c.passed = false;
    c.detail = e.what();
  }
  report.checks.push_back(std::move(c));
}

}  // namespace

ValidationReport cross_validate(const RootSystem& rs, const HullOptions& options, OracleCache* cache) {
  OracleCache local;
  OracleCache& oc = cache ? *cache : local;
  const int n = rs.rank();
  const std::vector<FacetCertificate>& facets = oc.facets(rs, options);
  const FaceLattice& lat = oc.lattice(rs, options);

  ValidationReport report;
  report.family = rs.family();
  report.oracle_f_vector = lat.f_vector;
  report.oracle_facets = facets.size();

  run_check(report, "vertices_are_long_roots", [&](Check& c) {
    std::set<IntVector> oracle;
    for (std::size_t i : lat.faces_of_dim(0)) oracle.insert(lat.points[lat.faces[i].find_first()]);
    std::set<IntVector> lng;
    for (const Root& r : rs.roots())
      if (r.is_long()) lng.insert(r.coords);
    c.passed = oracle == lng;
    c.detail = std::to_string(oracle.size()) + " oracle vertices, " + std::to_string(lng.size()) + " long roots";
  });

  run_check(report, "f_vector_matches_f_polynomial", [&](Check& c) {
    report.formula_f_vector = f_polynomial(rs).f_vector();
    c.passed = report.formula_f_vector == lat.f_vector;
    c.detail = "oracle " + join(lat.f_vector) + ", formula " + join(report.formula_f_vector);
  });

  run_check(report, "facet_count_matches_h_representation", [&](Check& c) {
    const HRepresentation h = h_representation(rs);
    c.passed = h.total == facets.size();
    c.detail = std::to_string(facets.size()) + " oracle facets, " + h.total.str() + " from coset indices";
    if (c.passed && h.is_explicit) {
      std::set<std::pair<IntVector, long long>> oracle;
      std::set<std::pair<IntVector, long long>> formula;
      for (const FacetCertificate& f : facets) oracle.insert(primitive(f.functional, f.bound));
      for (const Inequality& q : h.inequalities) formula.insert(primitive(q.normal, q.bound));
      c.passed = oracle == formula;
      if (!c.passed) c.detail += "; inequality sets differ";
    }
  });

  run_check(report, "standard_faces_are_oracle_faces", [&](Check& c) {
    const auto faces = all_standard_parabolic_faces(rs);
    std::size_t matched = 0;
    for (const Face& f : faces) {
      PointSet s(lat.points.size());
      for (const Root& r : f.roots) s.set(*rs.find(r.coords));
      auto at = lat.find(s);
      if (at && lat.dims[*at] == f.dim) ++matched;
      else if (c.detail.empty()) c.detail = "face with closure " + f.closure.to_string() + " not found; ";
    }
    c.passed = matched == faces.size();
    c.detail += std::to_string(matched) + "/" + std::to_string(faces.size()) + " standard faces matched";
  });

  run_check(report, "short_root_minimal_dimension", [&](Check& c) {
    if (rs.simply_laced()) {
      c.passed = true;
      c.detail = "no short roots";
      return;
    }
    PointSet shorts(lat.points.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
      if (!rs.root(i).is_long()) shorts.set(i);
    int lowest = n;
    for (std::size_t i = 0; i < lat.faces.size(); ++i)
      if (lat.faces[i].intersects(shorts)) lowest = std::min(lowest, lat.dims[i]);
    const ShortRootFace srf = short_root_face(rs);
    c.passed = lowest == srf.dim;
    c.detail = "oracle minimum " + std::to_string(lowest) + ", predicted " + std::to_string(srf.dim);
  });

  run_check(report, "edge_dichotomy", [&](Check& c) {
    if (n < 2) {
      c.passed = true;
      c.detail = "rank 1 has no proper edges";
      return;
    }
    const SkeletonClass predicted = skeleton_classification(rs);
    const std::vector<Edge> edges = one_skeleton(rs, lat);
    c.passed = !edges.empty() &&
               std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return e.kind == predicted; });
    c.detail = std::to_string(edges.size()) + " edges, predicted " + to_string(predicted);
  });

  run_check(report, "facets_centrally_symmetric", [&](Check& c) {
    std::set<std::pair<IntVector, long long>> all;
    for (const FacetCertificate& f : facets) all.emplace(f.functional, f.bound);
    c.passed = std::all_of(facets.begin(), facets.end(), [&](const FacetCertificate& f) {
      return all.count({negated(f.functional), f.bound}) > 0;
    });
  });

  run_check(report, "euler_relation", [&](Check& c) {
    BigInt sum = 0;
    for (int k = 0; k < n; ++k) sum += (k % 2 == 0 ? 1 : -1) * lat.f_vector[k];
    const int expected = n % 2 == 0 ? 0 : 2;
    c.passed = sum == expected;
    c.detail = "alternating sum " + sum.str();
  });

  run_check(report, "lattice_closed_under_intersection", [&](Check& c) {
    std::set<PointSet> all(lat.faces.begin(), lat.faces.end());
    c.passed = true;
    for (std::size_t i = 0; i < lat.faces.size() && c.passed; ++i)
      for (std::size_t j = i + 1; j < lat.faces.size() && c.passed; ++j)
        c.passed = all.count(lat.faces[i] & lat.faces[j]) > 0;
  });

  report.partner = coincident_partner(rs.family());
  if (report.partner) {
    run_check(report, "coincident_partner_f_vector", [&](Check& c) {
      const RootSystem other = RootSystem::build(*report.partner);
      const FaceLattice& lp = oc.lattice(other, options);
      c.passed = lp.f_vector == lat.f_vector;
      c.detail = report.partner->name() + " " + join(lp.f_vector);
    });
  }
  return report;
}

}  // namespace rootpoly
