#include "rootpoly/root_system.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rootpoly {

namespace {

void add_bond(IntMatrix& a, int i, int j, int aij, int aji) {
  a[i - 1][j - 1] = aij;
  a[j - 1][i - 1] = aji;
}

IntVector unit(int n, int i) {
  IntVector v(n, 0);
  v[i - 1] = 1;
  return v;
}

}  // namespace

void Family::validate() const {
  const int n = rank;
  bool ok = false;
  switch (letter) {
    case 'A': ok = n >= 1; break;
    case 'B': ok = n >= 2; break;
    case 'C': ok = n >= 2; break;
    case 'D': ok = n >= 4; break;
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default:
      throw std::invalid_argument(std::string("unknown root system family '") + letter + "'");
  }
  if (!ok) throw std::invalid_argument("invalid rank " + std::to_string(n) + " for type " + letter);
  if (n >= IndexSet::kCapacity) throw std::invalid_argument("rank too large");
}

Family Family::parse(std::string_view text) {
  if (text.size() < 2 || text[0] < 'A' || text[0] > 'Z')
    throw std::invalid_argument("malformed type '" + std::string(text) + "', expected e.g. B3");
  int n = 0;
  for (char ch : text.substr(1)) {
    if (ch < '0' || ch > '9')
      throw std::invalid_argument("malformed type '" + std::string(text) + "', expected e.g. B3");
    n = n * 10 + (ch - '0');
    if (n > 1000) throw std::invalid_argument("rank out of range in '" + std::string(text) + "'");
  }
  Family f{text[0], n};
  f.validate();
  return f;
}

std::string Family::name() const { return std::string(1, letter) + std::to_string(rank); }

CartanMatrix::CartanMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i].size() != n) throw std::invalid_argument("Cartan matrix must be square");
    if (entries_[i][i] != 2) throw std::invalid_argument("Cartan matrix diagonal must be 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const int v = entries_[i][j];
      if (v > 0 || v < -3) throw std::invalid_argument("Cartan entry out of range");
      if ((v == 0) != (entries_[j][i] == 0))
        throw std::invalid_argument("Cartan matrix zero pattern must be symmetric");
    }
  }
}

CartanMatrix CartanMatrix::of(const Family& family) {
  family.validate();
  const int n = family.rank;
  IntMatrix a(n, IntVector(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  switch (family.letter) {
    case 'A':
      for (int i = 1; i < n; ++i) add_bond(a, i, i + 1, -1, -1);
      break;
    case 'B':
      for (int i = 1; i < n - 1; ++i) add_bond(a, i, i + 1, -1, -1);
      add_bond(a, n - 1, n, -2, -1);  // alpha_n short
      break;
    case 'C':
      for (int i = 1; i < n - 1; ++i) add_bond(a, i, i + 1, -1, -1);
      add_bond(a, n - 1, n, -1, -2);  // alpha_n long
      break;
    case 'D':
      for (int i = 1; i < n - 1; ++i) add_bond(a, i, i + 1, -1, -1);
      add_bond(a, n - 2, n, -1, -1);
      break;
    case 'E':
      add_bond(a, 1, 3, -1, -1);
      add_bond(a, 2, 4, -1, -1);
      for (int i = 3; i < n; ++i) add_bond(a, i, i + 1, -1, -1);
      break;
    case 'F':
      add_bond(a, 1, 2, -1, -1);
      add_bond(a, 2, 3, -2, -1);  // alpha_1, alpha_2 long
      add_bond(a, 3, 4, -1, -1);
      break;
    case 'G':
      add_bond(a, 1, 2, -1, -3);  // alpha_1 short, alpha_2 long
      break;
  }
  return CartanMatrix(std::move(a));
}

int Root::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

bool Root::is_positive() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; }) && height() > 0;
}

IndexSet Root::support() const {
  IndexSet s;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) s.insert(static_cast<int>(i) + 1);
  return s;
}

std::string Root::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
  os << ")";
  return os.str();
}

std::size_t IntVectorHash::operator()(const IntVector& v) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int x : v) h = (h ^ static_cast<std::size_t>(x + 1024)) * 1099511628211ull;
  return h;
}

RootSystem RootSystem::build(const Family& family) {
  RootSystem rs;
  rs.family_ = family;
  rs.cartan_ = CartanMatrix::of(family);
  const int n = family.rank;
  const CartanMatrix& a = rs.cartan_;

  // Squared lengths d_i from d_i / d_j = a(i,j) / a(j,i) along the (connected) diagram.
  std::vector<Rational> d(n, 0);
  d[0] = 1;
  std::deque<int> queue{1};
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    for (int j = 1; j <= n; ++j) {
      if (j == i || a(i, j) == 0 || d[j - 1] != 0) continue;
      d[j - 1] = d[i - 1] * Rational(a(j, i)) / a(i, j);
      queue.push_back(j);
    }
  }
  const Rational longest = *std::max_element(d.begin(), d.end());
  for (auto& x : d) x = x * 2 / longest;

  rs.gram_.assign(n, RationalVector(n, 0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) rs.gram_[i - 1][j - 1] = Rational(a(i, j)) * d[j - 1] / 2;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rs.gram_[i][j] != rs.gram_[j][i]) throw std::logic_error("Gram matrix not symmetric");

  int scale = 1;
  for (const auto& row : rs.gram_)
    for (const auto& v : row) scale = std::lcm(scale, static_cast<int>(denominator(v)));
  rs.gram_scale_ = scale;
  rs.scaled_gram_.assign(n, IntVector(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rs.scaled_gram_[i][j] = static_cast<int>(numerator(Rational(rs.gram_[i][j] * scale)));

  // Closure of the simple roots under the simple reflections.
  std::vector<IntVector> found;
  std::unordered_map<IntVector, std::size_t, IntVectorHash> seen;
  std::deque<IntVector> frontier;
  for (int i = 1; i <= n; ++i) {
    IntVector e = unit(n, i);
    seen.emplace(e, found.size());
    found.push_back(e);
    frontier.push_back(std::move(e));
  }
  while (!frontier.empty()) {
    IntVector x = std::move(frontier.front());
    frontier.pop_front();
    for (int i = 1; i <= n; ++i) {
      IntVector y = simple_reflection(rs, i, x);
      if (seen.count(y)) continue;
      seen.emplace(y, found.size());
      found.push_back(y);
      frontier.push_back(std::move(y));
    }
  }

  std::sort(found.begin(), found.end(), [](const IntVector& x, const IntVector& y) {
    const int hx = std::accumulate(x.begin(), x.end(), 0);
    const int hy = std::accumulate(y.begin(), y.end(), 0);
    return hx != hy ? hx < hy : x < y;
  });

  const long long long_length = 2LL * scale;
  for (auto& coords : found) {
    Root r;
    r.coords = std::move(coords);
    r.length = rs.scaled_inner(r.coords, r.coords) == long_length ? LengthClass::long_root
                                                                 : LengthClass::short_root;
    if (!r.is_long()) rs.simply_laced_ = false;
    rs.roots_.push_back(std::move(r));
  }
  for (std::size_t k = 0; k < rs.roots_.size(); ++k) {
    const Root& r = rs.roots_[k];
    const bool pos = std::all_of(r.coords.begin(), r.coords.end(), [](int c) { return c >= 0; });
    const bool neg = std::all_of(r.coords.begin(), r.coords.end(), [](int c) { return c <= 0; });
    if (!pos && !neg) throw std::logic_error("root with mixed-sign coordinates: " + r.to_string());
    rs.index_.emplace(r.coords, k);
  }
  rs.first_positive_ = rs.roots_.size() / 2;
  if (!rs.roots_[rs.first_positive_].is_positive() || rs.roots_[rs.first_positive_ - 1].is_positive())
    throw std::logic_error("positive and negative roots unbalanced");

  // theta: highest root; theta_s: highest short root.
  rs.theta_index_ = rs.roots_.size() - 1;
  rs.theta_short_index_ = rs.theta_index_;
  for (std::size_t k = rs.roots_.size(); k-- > rs.first_positive_;) {
    if (!rs.roots_[k].is_long()) {
      rs.theta_short_index_ = k;
      break;
    }
  }
  for (const Root& r : rs.positive_roots())
    if (!root_poset_leq(rs, r, rs.theta())) throw std::logic_error("highest root is not a maximum");
  if (!rs.theta().is_long()) throw std::logic_error("highest root is short");

  for (int i = 1; i <= n; ++i) {
    RationalVector e(n, 0);
    e[i - 1] = 1;
    auto w = solve(rs.gram_, e);
    if (!w) throw std::logic_error("Gram matrix is singular");
    rs.coweights_.push_back(std::move(*w));
  }
  return rs;
}

std::span<const Root> RootSystem::positive_roots() const {
  return std::span<const Root>(roots_).subspan(first_positive_);
}

std::optional<std::size_t> RootSystem::find(const IntVector& coords) const {
  auto it = index_.find(coords);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t RootSystem::count(LengthClass length) const {
  return static_cast<std::size_t>(
      std::count_if(roots_.begin(), roots_.end(), [&](const Root& r) { return r.length == length; }));
}

long long RootSystem::scaled_inner(std::span<const int> x, std::span<const int> y) const {
  const std::size_t n = scaled_gram_.size();
  long long sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    long long row = 0;
    for (std::size_t j = 0; j < n; ++j) row += static_cast<long long>(scaled_gram_[i][j]) * y[j];
    sum += x[i] * row;
  }
  return sum;
}

Rational inner_product(const RootSystem& rs, const RationalVector& x, const RationalVector& y) {
  const int n = rs.rank();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw std::invalid_argument("inner_product: dimension mismatch");
  Rational sum = 0;
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    Rational row = 0;
    for (int j = 0; j < n; ++j) row += rs.gram()[i][j] * y[j];
    sum += x[i] * row;
  }
  return sum;
}

Rational inner_product(const RootSystem& rs, const Root& x, const Root& y) {
  return Rational(rs.scaled_inner(x.coords, y.coords)) / rs.gram_scale();
}

int coweight_pairing(const RootSystem& rs, const Root& beta, int i) {
  if (i < 1 || i > rs.rank()) throw std::invalid_argument("coweight index out of range");
  return beta.c(i);
}

Rational coroot_pairing(const RootSystem& rs, const RationalVector& x, int i) {
  Rational s = 0;
  for (int k = 1; k <= rs.rank(); ++k) s += x[k - 1] * rs.cartan()(k, i);
  return s;
}

std::vector<Root> root_string(const RootSystem& rs, const Root& alpha, const Root& beta) {
  const int n = rs.rank();
  // Proportional roots: alpha = ±beta or ±2beta never occurs in reduced systems.
  std::vector<IntVector> pair{alpha.coords, beta.coords};
  if (rank(pair) < 2) throw std::invalid_argument("root_string: proportional roots");
  auto shifted = [&](int j) {
    IntVector v(n);
    for (int k = 0; k < n; ++k) v[k] = beta.coords[k] + j * alpha.coords[k];
    return v;
  };
  int q = 0;
  while (rs.contains(shifted(-(q + 1)))) ++q;
  int p = 0;
  while (rs.contains(shifted(p + 1))) ++p;
  std::vector<Root> out;
  for (int j = -q; j <= p; ++j) out.push_back(rs.root(*rs.find(shifted(j))));
  return out;
}

RationalVector simple_reflection(const RootSystem& rs, int i, const RationalVector& x) {
  RationalVector y = x;
  y[i - 1] -= coroot_pairing(rs, x, i);
  return y;
}

IntVector simple_reflection(const RootSystem& rs, int i, const IntVector& x) {
  int pairing = 0;
  for (int k = 1; k <= rs.rank(); ++k) pairing += x[k - 1] * rs.cartan()(k, i);
  IntVector y = x;
  y[i - 1] -= pairing;
  return y;
}

bool root_poset_leq(const RootSystem& rs, const Root& alpha, const Root& beta) {
  (void)rs;
  for (std::size_t k = 0; k < alpha.coords.size(); ++k)
    if (beta.coords[k] < alpha.coords[k]) return false;
  return true;
}

}  // namespace rootpoly
