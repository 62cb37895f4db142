#include "rootpoly/affine.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace rootpoly {

ExtendedDiagram::ExtendedDiagram(Family family, IntMatrix matrix)
    : family_(family), matrix_(std::move(matrix)) {
  for (const auto& row : matrix_)
    if (row.size() != matrix_.size()) throw std::invalid_argument("extended diagram must be square");
}

NodeSet ExtendedDiagram::neighbors(int i) const {
  NodeSet s;
  for (int j = 0; j <= rank(); ++j)
    if (adjacent(i, j)) s.insert(j);
  return s;
}

NodeSet ExtendedDiagram::component(NodeSet within, int start) const {
  NodeSet seen;
  if (!within.contains(start)) return seen;
  seen.insert(start);
  std::vector<int> stack{start};
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    for (int j : (neighbors(i) & (within - seen)).elements()) {
      seen.insert(j);
      stack.push_back(j);
    }
  }
  return seen;
}

bool ExtendedDiagram::connected(NodeSet s) const {
  if (s.empty()) return false;
  return component(s, s.min()) == s;
}

ExtendedDiagram extend(const RootSystem& rs) {
  const int n = rs.rank();
  IntMatrix m(n + 1, IntVector(n + 1, 0));
  m[0][0] = 2;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m[i][j] = rs.cartan()(i, j);

  const Root& theta = rs.theta();
  for (int j = 1; j <= n; ++j) {
    // <alpha_0, alpha_j^vee> = -<theta, alpha_j^vee>
    int pairing = 0;
    for (int k = 1; k <= n; ++k) pairing += theta.c(k) * rs.cartan()(k, j);
    m[0][j] = -pairing;
    // <alpha_j, alpha_0^vee> = -2 (alpha_j, theta) / (theta, theta) = -(alpha_j, theta)
    IntVector e(n, 0);
    e[j - 1] = 1;
    const Rational v = -Rational(rs.scaled_inner(e, theta.coords)) / rs.gram_scale();
    if (denominator(v) != 1) throw std::logic_error("non-integral affine Cartan entry");
    m[j][0] = static_cast<int>(numerator(v));
    if ((m[0][j] == 0) != (m[j][0] == 0)) throw std::logic_error("asymmetric affine bond");
  }
  ExtendedDiagram d(rs.family(), std::move(m));
  if (!d.connected(d.nodes())) throw std::logic_error("extended diagram is disconnected");
  return d;
}

NodeSet component_of_affine(const ExtendedDiagram& d, IndexSet indices) {
  const NodeSet keep = d.nodes() - to_nodes(indices);
  return d.component(keep, 0);
}

IndexSet closure(const ExtendedDiagram& d, IndexSet indices) {
  return to_indices(d.nodes() - component_of_affine(d, indices));
}

IndexSet border(const ExtendedDiagram& d, IndexSet indices) {
  const NodeSet comp = component_of_affine(d, indices);
  IndexSet out;
  for (int j : closure(d, indices).elements())
    if (!(d.neighbors(j) & comp).empty()) out.insert(j);
  return out;
}

bool is_irreducible_subsystem(const ExtendedDiagram& d, NodeSet nodes) {
  if (!nodes.subset_of(d.nodes())) throw std::invalid_argument("node outside the extended diagram");
  return d.connected(nodes);
}

namespace {

std::string node_label(int k, IndexSet marked) {
  if (k == 0) return "@0";
  return (marked.contains(k) ? "x" : "o") + std::to_string(k);
}

// Horizontal bond from u (left) to v (right); arrows point at the shorter root.
std::string horizontal_bond(const ExtendedDiagram& d, int u, int v) {
  const int a = d.bond(u, v);
  const int b = d.bond(v, u);
  if (a == -1 && b == -1) return "---";
  if (a * b == 4) return "<=>";
  if (a == -2) return "=>=";
  if (b == -2) return "=<=";
  if (a == -3) return "#>#";
  if (b == -3) return "#<#";
  throw std::logic_error("unsupported bond in diagram rendering");
}

// Every simple path starting at `start` that cannot be extended.
std::vector<std::vector<int>> maximal_paths_from(const ExtendedDiagram& d, int start) {
  std::vector<std::vector<int>> out;
  std::vector<int> path{start};
  NodeSet used{start};
  auto dfs = [&](auto&& self, int at) -> void {
    const NodeSet next = d.neighbors(at) - used;
    if (next.empty()) out.push_back(path);
    for (int v : next.elements()) {
      used.insert(v);
      path.push_back(v);
      self(self, v);
      path.pop_back();
      used.erase(v);
    }
  };
  dfs(dfs, start);
  return out;
}

std::string render_cycle(const ExtendedDiagram& d, IndexSet marked) {
  // Affine A_n, n >= 2: chain 1..n with node 0 joined to both ends.
  const int n = d.rank();
  std::string chain;
  std::vector<std::size_t> col(n + 1, 0);
  for (int k = 1; k <= n; ++k) {
    if (k > 1) chain += horizontal_bond(d, k - 1, k);
    col[k] = chain.size();
    chain += node_label(k, marked);
  }
  const std::size_t left = col[1];
  const std::size_t right = col[n];
  std::string top(chain.size(), ' ');
  std::string mid(chain.size(), ' ');
  for (std::size_t c = left; c <= right; ++c) top[c] = '-';
  top[left] = '+';
  top[right] = '+';
  mid[left] = '|';
  mid[right] = '|';
  const std::string zero = "@0";
  const std::size_t at = left + (right - left) / 2;
  top.replace(std::min(at, top.size() - zero.size()), zero.size(), zero);
  return top + "\n" + mid + "\n" + chain + "\n";
}

}  // namespace

std::string render_diagram(const ExtendedDiagram& d, IndexSet marked) {
  const int n = d.rank();
  int edges = 0;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges += d.adjacent(i, j) ? 1 : 0;
  if (edges > n) return render_cycle(d, marked);

  // Main chain: a longest path, preferring paths that avoid node 0, then the
  // lexicographically smallest; oriented so that the smallest nonzero node
  // sits nearest the left end.
  std::vector<int> chain;
  auto better = [](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    const bool a0 = std::find(a.begin(), a.end(), 0) != a.end();
    const bool b0 = std::find(b.begin(), b.end(), 0) != b.end();
    if (a0 != b0) return !a0;
    return a < b;
  };
  auto orient = [](std::vector<int> p) {
    auto pos_min = [](const std::vector<int>& q) {
      std::size_t best = q.size();
      int value = 1 << 30;
      for (std::size_t k = 0; k < q.size(); ++k)
        if (q[k] != 0 && q[k] < value) value = q[k], best = k;
      return best;
    };
    std::vector<int> r(p.rbegin(), p.rend());
    const std::size_t pp = pos_min(p);
    const std::size_t pr = pos_min(r);
    return pr < pp ? r : p;
  };
  for (int s = 0; s <= n; ++s) {
    if (d.neighbors(s).size() > 1) continue;
    for (auto& candidate : maximal_paths_from(d, s)) {
      auto p = orient(std::move(candidate));
      if (chain.empty() || better(p, chain)) chain = p;
    }
  }

  std::string line;
  std::map<int, std::size_t> col;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (k > 0) line += horizontal_bond(d, chain[k - 1], chain[k]);
    col[chain[k]] = line.size();
    line += node_label(chain[k], marked);
  }

  // Pendant paths hang above (first) or below (second) their attachment node.
  std::vector<std::string> above;
  std::vector<std::string> below;
  NodeSet on_chain(chain);
  auto put = [&](std::vector<std::string>& rows, std::size_t row, std::size_t c, const std::string& s) {
    while (rows.size() <= row) rows.emplace_back();
    std::string& r = rows[row];
    if (r.size() < c + s.size()) r.resize(c + s.size(), ' ');
    r.replace(c, s.size(), s);
  };
  for (int anchor : chain) {
    int side = 0;
    for (int start : (d.neighbors(anchor) - on_chain).elements()) {
      std::vector<int> pendant;
      int prev = anchor;
      int cur = start;
      while (true) {
        pendant.push_back(cur);
        const NodeSet next = d.neighbors(cur) - NodeSet{prev} - on_chain;
        if (next.empty()) break;
        prev = cur;
        cur = next.min();
      }
      auto& rows = side == 0 ? above : below;
      std::size_t row = 0;
      int from = anchor;
      for (int node : pendant) {
        // Arrow points at the shorter root; `above` rows are printed bottom-up.
        std::string bond = "|";
        if (d.bond(from, node) != d.bond(node, from)) {
          const bool node_shorter = d.bond(from, node) < d.bond(node, from);
          bond = node_shorter == (side == 0) ? "^" : "v";
        }
        put(rows, row++, col[anchor], bond);
        put(rows, row++, col[anchor], node_label(node, marked));
        from = node;
      }
      ++side;
    }
  }
  std::string out;
  for (auto it = above.rbegin(); it != above.rend(); ++it) out += *it + "\n";
  out += line + "\n";
  for (const auto& r : below) out += r + "\n";
  return out;
}

}  // namespace rootpoly
