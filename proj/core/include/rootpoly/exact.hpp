#pragma once

// Exact integer and rational arithmetic shared by every module.
// No floating point is used anywhere in the library.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rootpoly {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Integer coordinates in the simple-root basis.
using IntVector = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

RationalVector to_rational(std::span<const int> v);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& v);

/// Rank of the row space, by exact Gaussian elimination.
std::size_t rank(RationalMatrix rows);
std::size_t rank(const std::vector<IntVector>& rows);

/// Unique solution of a·x = b for square nonsingular a; nullopt when singular.
std::optional<RationalVector> solve(RationalMatrix a, RationalVector b);

RationalVector add(const RationalVector& x, const RationalVector& y);
RationalVector scale(const Rational& c, const RationalVector& x);
bool is_zero(const RationalVector& x);

}  // namespace rootpoly
