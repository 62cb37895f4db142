#include "rootpoly/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

#include "rootpoly/errors.hpp"

namespace rootpoly {

namespace {

[[noreturn]] void not_finite(const std::vector<int>& nodes, const std::string& why) {
  std::string s = "subdiagram on nodes {";
  for (std::size_t k = 0; k < nodes.size(); ++k) s += (k ? "," : "") + std::to_string(nodes[k]);
  throw std::logic_error(s + "} is not of finite type: " + why);
}

Family classify_component(const IntMatrix& a, const std::vector<int>& nodes) {
  const int k = static_cast<int>(nodes.size());
  if (k == 1) return {'A', 1};

  auto adjacent = [&](int u, int v) { return u != v && a[u][v] != 0; };
  std::vector<int> degree(k, 0);
  int edges = 0;
  int doubles = 0;
  int triples = 0;
  std::pair<int, int> multiple{-1, -1};
  for (int x = 0; x < k; ++x) {
    for (int y = x + 1; y < k; ++y) {
      const int u = nodes[x];
      const int v = nodes[y];
      if (!adjacent(u, v)) continue;
      ++edges;
      ++degree[x];
      ++degree[y];
      const int product = a[u][v] * a[v][u];
      if (product == 2) {
        ++doubles;
        multiple = {u, v};
      } else if (product == 3) {
        ++triples;
      } else if (product != 1) {
        not_finite(nodes, "bond product " + std::to_string(product));
      }
    }
  }
  if (edges != k - 1) not_finite(nodes, "contains a cycle");
  const int max_degree = *std::max_element(degree.begin(), degree.end());

  if (triples > 0) {
    if (k != 2) not_finite(nodes, "triple bond in rank > 2");
    return {'G', 2};
  }
  if (doubles > 1) not_finite(nodes, "several multiple bonds");
  if (doubles == 1) {
    if (max_degree > 2) not_finite(nodes, "branched diagram with a double bond");
    if (k == 2) return {'B', 2};
    auto deg = [&](int node) {
      return degree[std::find(nodes.begin(), nodes.end(), node) - nodes.begin()];
    };
    const auto [u, v] = multiple;
    int leaf = -1;
    int other = -1;
    if (deg(u) == 1) leaf = u, other = v;
    else if (deg(v) == 1) leaf = v, other = u;
    if (leaf < 0) {
      if (k != 4) not_finite(nodes, "interior double bond in rank != 4");
      return {'F', 4};
    }
    // <alpha_other, alpha_leaf^vee> = -2 means the leaf is the short root.
    const bool leaf_short = a[other][leaf] == -2;
    return {leaf_short ? 'B' : 'C', k};
  }

  if (max_degree <= 2) return {'A', k};
  if (max_degree > 3 || std::count(degree.begin(), degree.end(), 3) != 1)
    not_finite(nodes, "unsupported branching");
  const int branch = nodes[std::find(degree.begin(), degree.end(), 3) - degree.begin()];
  std::vector<int> arms;
  for (int start : nodes) {
    if (!adjacent(branch, start)) continue;
    int prev = branch;
    int cur = start;
    int length = 1;
    while (true) {
      int next = -1;
      for (int w : nodes)
        if (w != prev && adjacent(cur, w)) next = w;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++length;
    }
    arms.push_back(length);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {'D', k};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return {'E', k};
  not_finite(nodes, "branch arms do not match D or E");
}

}  // namespace

TypeDecomposition classify(const IntMatrix& cartan, NodeSet nodes) {
  const int size = static_cast<int>(cartan.size());
  for (int v : nodes.elements())
    if (v >= size) throw std::invalid_argument("classify: node outside the matrix");
  TypeDecomposition out;
  NodeSet left = nodes;
  while (!left.empty()) {
    // Component of the smallest remaining node.
    NodeSet comp{left.min()};
    std::vector<int> stack{left.min()};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : (left - comp).elements()) {
        if (cartan[u][v] != 0) {
          comp.insert(v);
          stack.push_back(v);
        }
      }
    }
    const std::vector<int> members = comp.elements();
    out.components.push_back({classify_component(cartan, members), members});
    left = left - comp;
  }
  return out;
}

TypeDecomposition classify(const ExtendedDiagram& d, NodeSet nodes) {
  return classify(d.matrix(), nodes);
}

TypeDecomposition classify(const RootSystem& rs, IndexSet indices) {
  return classify(extend(rs), to_nodes(indices));
}

BigInt group_order(const Family& family) {
  family.validate();
  const int n = family.rank;
  BigInt factorial = 1;
  for (int k = 2; k <= n; ++k) factorial *= k;
  switch (family.letter) {
    case 'A': return factorial * (n + 1);
    case 'B':
    case 'C': return (BigInt(1) << n) * factorial;
    case 'D': return (BigInt(1) << (n - 1)) * factorial;
    case 'E':
      if (n == 6) return 51840;
      if (n == 7) return 2903040;
      return 696729600;
    case 'F': return 1152;
    case 'G': return 12;
  }
  throw std::logic_error("unreachable family");
}

BigInt group_order(const TypeDecomposition& decomposition) {
  BigInt order = 1;
  for (const auto& c : decomposition.components) order *= group_order(c.family);
  return order;
}

std::size_t root_count(const Family& family) {
  family.validate();
  const std::size_t n = family.rank;
  switch (family.letter) {
    case 'A': return n * (n + 1);
    case 'B':
    case 'C': return 2 * n * n;
    case 'D': return 2 * n * (n - 1);
    case 'E': return n == 6 ? 72 : n == 7 ? 126 : 240;
    case 'F': return 48;
    case 'G': return 12;
  }
  throw std::logic_error("unreachable family");
}

std::size_t root_count(const TypeDecomposition& decomposition) {
  std::size_t total = 0;
  for (const auto& c : decomposition.components) total += root_count(c.family);
  return total;
}

BigInt coset_index(const ExtendedDiagram& d, NodeSet sub_gens, NodeSet super_gens) {
  if (!sub_gens.subset_of(super_gens))
    throw std::invalid_argument("coset_index: generators are not nested");
  const BigInt big = group_order(classify(d, super_gens));
  const BigInt small = group_order(classify(d, sub_gens));
  if (big % small != 0) throw std::logic_error("coset_index: subgroup order does not divide");
  return big / small;
}

BigInt coset_index(const RootSystem& rs, IndexSet sub_gens, IndexSet super_gens) {
  return coset_index(extend(rs), to_nodes(sub_gens), to_nodes(super_gens));
}

std::vector<RationalVector> reflection_orbit(const RootSystem& rs, const RationalVector& seed,
                                             IndexSet generators, std::size_t limit) {
  if (static_cast<int>(seed.size()) != rs.rank())
    throw std::invalid_argument("reflection_orbit: seed has wrong dimension");
  const std::vector<int> gens = generators.elements();
  for (int i : gens)
    if (i < 1 || i > rs.rank()) throw std::invalid_argument("reflection_orbit: bad generator");

  std::set<RationalVector> seen{seed};
  std::vector<RationalVector> orbit{seed};
  for (std::size_t at = 0; at < orbit.size(); ++at) {
    for (int i : gens) {
      // Reflection fixes vectors orthogonal to alpha_i.
      if (coroot_pairing(rs, orbit[at], i) == 0) continue;
      RationalVector image = simple_reflection(rs, i, orbit[at]);
      if (seen.insert(image).second) {
        if (orbit.size() >= limit)
          throw ResourceLimitError("orbit exceeds the configured limit of " + std::to_string(limit) +
                                   " vectors");
        orbit.push_back(std::move(image));
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

}  // namespace rootpoly
