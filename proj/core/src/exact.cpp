#include "rootpoly/exact.hpp"

#include <stdexcept>
#include <utility>

namespace rootpoly {

RationalVector to_rational(std::span<const int> v) {
  RationalVector out;
  out.reserve(v.size());
  for (int x : v) out.emplace_back(x);
  return out;
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_string(const BigInt& v) { return v.str(); }

std::size_t rank(RationalMatrix rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

std::size_t rank(const std::vector<IntVector>& rows) {
  RationalMatrix m;
  m.reserve(rows.size());
  for (const auto& row : rows) m.push_back(to_rational(row));
  return rank(std::move(m));
}

std::optional<RationalVector> solve(RationalMatrix a, RationalVector b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("solve: dimension mismatch");
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[c], a[pivot]);
    std::swap(b[c], b[pivot]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[i][k] -= f * a[c][k];
      b[i] -= f * b[c];
    }
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

RationalVector add(const RationalVector& x, const RationalVector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("add: dimension mismatch");
  RationalVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return out;
}

RationalVector scale(const Rational& c, const RationalVector& x) {
  RationalVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = c * x[i];
  return out;
}

bool is_zero(const RationalVector& x) {
  for (const auto& v : x)
    if (v != 0) return false;
  return true;
}

}  // namespace rootpoly
