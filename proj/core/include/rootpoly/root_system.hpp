#pragma once

// Finite crystallographic irreducible root systems in simple-root coordinates.
//
// Simple roots are numbered as in Bourbaki. Geometry enters only through the
// Gram matrix of the simple roots, normalized so that long roots have squared
// length 2. Indices of simple roots are 1-based throughout the public API.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rootpoly/exact.hpp"
#include "rootpoly/index_set.hpp"

namespace rootpoly {

struct Family {
  char letter = 'A';
  int rank = 1;

  /// Throws std::invalid_argument unless the rank is admissible for the letter
  /// (A n>=1, B n>=2, C n>=2, D n>=4, E n in 6..8, F n=4, G n=2).
  void validate() const;
  /// Parses "B3", "E8", ... (uppercase letter followed by a decimal rank).
  static Family parse(std::string_view text);
  std::string name() const;

  friend bool operator==(const Family&, const Family&) = default;
  friend auto operator<=>(const Family&, const Family&) = default;
};

/// a(i, j) = <alpha_i, alpha_j^vee>, 1-based.
class CartanMatrix {
 public:
  CartanMatrix() = default;
  explicit CartanMatrix(IntMatrix entries);
  static CartanMatrix of(const Family& family);

  int rank() const { return static_cast<int>(entries_.size()); }
  int operator()(int i, int j) const { return entries_[i - 1][j - 1]; }
  const IntMatrix& entries() const { return entries_; }

 private:
  IntMatrix entries_;
};

enum class LengthClass { long_root, short_root };

struct Root {
  IntVector coords;  // c_1(beta), ..., c_n(beta)
  LengthClass length = LengthClass::long_root;

  int c(int i) const { return coords[i - 1]; }
  int height() const;
  bool is_positive() const;
  bool is_long() const { return length == LengthClass::long_root; }
  /// Indices i with c_i != 0.
  IndexSet support() const;
  std::string to_string() const;

  friend bool operator==(const Root& a, const Root& b) { return a.coords == b.coords; }
};

struct IntVectorHash {
  std::size_t operator()(const IntVector& v) const noexcept;
};

class RootSystem {
 public:
  /// Breadth-first closure of the simple roots under the simple reflections.
  static RootSystem build(const Family& family);

  const Family& family() const { return family_; }
  int rank() const { return family_.rank; }
  const CartanMatrix& cartan() const { return cartan_; }

  /// All roots ordered by (height, coordinates); negatives come first.
  std::span<const Root> roots() const { return roots_; }
  std::span<const Root> positive_roots() const;
  std::size_t size() const { return roots_.size(); }
  const Root& root(std::size_t index) const { return roots_[index]; }
  std::optional<std::size_t> find(const IntVector& coords) const;
  bool contains(const IntVector& coords) const { return find(coords).has_value(); }
  std::size_t count(LengthClass length) const;

  const Root& theta() const { return roots_[theta_index_]; }
  /// Highest short root; equals theta in simply-laced types.
  const Root& theta_short() const { return roots_[theta_short_index_]; }
  const IntVector& marks() const { return theta().coords; }
  int mark(int i) const { return theta().c(i); }
  bool simply_laced() const { return simply_laced_; }

  /// B(j, k) = (alpha_j, alpha_k), 0-based storage.
  const RationalMatrix& gram() const { return gram_; }
  /// Squared length of alpha_i.
  const Rational& simple_length(int i) const { return gram_[i - 1][i - 1]; }

  /// Fundamental coweight in simple-root coordinates: gram * x = e_i.
  const RationalVector& coweight(int i) const { return coweights_[i - 1]; }

  /// (x, y) multiplied by gram_scale(); integral for integer inputs.
  long long scaled_inner(std::span<const int> x, std::span<const int> y) const;
  int gram_scale() const { return gram_scale_; }

 private:
  Family family_;
  CartanMatrix cartan_;
  std::vector<Root> roots_;
  std::size_t first_positive_ = 0;
  std::unordered_map<IntVector, std::size_t, IntVectorHash> index_;
  std::size_t theta_index_ = 0;
  std::size_t theta_short_index_ = 0;
  bool simply_laced_ = true;
  RationalMatrix gram_;
  IntMatrix scaled_gram_;
  int gram_scale_ = 1;
  std::vector<RationalVector> coweights_;
};

Rational inner_product(const RootSystem& rs, const RationalVector& x, const RationalVector& y);
Rational inner_product(const RootSystem& rs, const Root& x, const Root& y);

/// (beta, coweight_i) = c_i(beta).
int coweight_pairing(const RootSystem& rs, const Root& beta, int i);

/// <x, alpha_i^vee> = 2 (x, alpha_i) / (alpha_i, alpha_i).
Rational coroot_pairing(const RootSystem& rs, const RationalVector& x, int i);

/// The alpha-string through beta, (beta + Z alpha) ∩ Phi, ordered from its
/// origin upward. Throws std::invalid_argument for proportional inputs.
std::vector<Root> root_string(const RootSystem& rs, const Root& alpha, const Root& beta);

/// s_i(x) = x - <x, alpha_i^vee> alpha_i.
RationalVector simple_reflection(const RootSystem& rs, int i, const RationalVector& x);
IntVector simple_reflection(const RootSystem& rs, int i, const IntVector& x);

/// alpha <= beta in the root poset: beta - alpha has nonnegative coordinates.
bool root_poset_leq(const RootSystem& rs, const Root& alpha, const Root& beta);

}  // namespace rootpoly
