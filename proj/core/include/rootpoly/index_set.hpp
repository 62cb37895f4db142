#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace rootpoly {

/// Finite subset of {0, ..., 63} stored as a bit mask. The tag keeps
/// simple-root index sets (1..n) apart from diagram node sets (0..n).
template <class Tag>
class SmallSet {
 public:
  static constexpr int kCapacity = 64;

  constexpr SmallSet() = default;
  SmallSet(std::initializer_list<int> elements) {
    for (int e : elements) insert(e);
  }
  explicit SmallSet(const std::vector<int>& elements) {
    for (int e : elements) insert(e);
  }

  static constexpr SmallSet from_mask(std::uint64_t mask) {
    SmallSet s;
    s.mask_ = mask;
    return s;
  }
  /// {first, ..., last}; empty when last < first.
  static SmallSet range(int first, int last) {
    SmallSet s;
    for (int i = first; i <= last; ++i) s.insert(i);
    return s;
  }

  void insert(int e) {
    check(e);
    mask_ |= bit(e);
  }
  void erase(int e) {
    check(e);
    mask_ &= ~bit(e);
  }
  bool contains(int e) const {
    return e >= 0 && e < kCapacity && (mask_ & bit(e)) != 0;
  }

  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  std::uint64_t mask() const { return mask_; }

  /// Elements in increasing order.
  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }
  int min() const {
    if (empty()) throw std::logic_error("min of empty set");
    return std::countr_zero(mask_);
  }

  bool subset_of(const SmallSet& other) const { return (mask_ & ~other.mask_) == 0; }

  friend SmallSet operator|(SmallSet a, SmallSet b) { return from_mask(a.mask_ | b.mask_); }
  friend SmallSet operator&(SmallSet a, SmallSet b) { return from_mask(a.mask_ & b.mask_); }
  /// Set difference.
  friend SmallSet operator-(SmallSet a, SmallSet b) { return from_mask(a.mask_ & ~b.mask_); }
  friend bool operator==(SmallSet a, SmallSet b) = default;
  friend auto operator<=>(SmallSet a, SmallSet b) { return a.mask_ <=> b.mask_; }

  /// "{5,7}"
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

 private:
  static constexpr std::uint64_t bit(int e) { return std::uint64_t{1} << e; }
  static void check(int e) {
    if (e < 0 || e >= kCapacity) throw std::out_of_range("set element out of range");
  }

  std::uint64_t mask_ = 0;
};

struct IndexTag;
struct NodeTag;

/// Subset of the simple-root indices [n] = {1, ..., n}.
using IndexSet = SmallSet<IndexTag>;
/// Subset of the extended diagram nodes {0, 1, ..., n}; node 0 is the affine node.
using NodeSet = SmallSet<NodeTag>;

inline NodeSet to_nodes(IndexSet s) { return NodeSet::from_mask(s.mask()); }
/// Drops node 0.
inline IndexSet to_indices(NodeSet s) {
  return IndexSet::from_mask(s.mask() & ~std::uint64_t{1});
}

}  // namespace rootpoly
