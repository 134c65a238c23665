#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dav {

struct GapId {
  int order = 0;
  int index = 0;
  friend bool operator==(const GapId&, const GapId&) = default;
  friend bool operator<(const GapId& a, const GapId& b) {
    return a.order != b.order ? a.order < b.order : a.index < b.index;
  }
  std::string str() const { return "(" + std::to_string(order) + "," + std::to_string(index) + ")"; }
};

// A finite group as a dense multiplication table over element indices.
// Element 0 is always the identity; the table is validated at construction
// (identity law, inverses, Latin square, full associativity).
class Group {
public:
  static constexpr int kMaxOrder = 64;

  Group(std::string name, int n, std::vector<std::uint8_t> table);

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int pow(int a, int e) const;

  int element_order(int a) const;
  std::vector<int> element_orders() const;  // sorted multiset over all elements
  bool is_abelian() const;
  int exponent() const;

  std::uint64_t center() const;
  std::uint64_t derived_subgroup() const;
  // Closure of a set of elements (bitmask over indices) under multiplication.
  std::uint64_t closure(std::uint64_t seed) const;

  const std::vector<std::uint8_t>& table() const { return table_; }
  // FNV-1a digest over order and table bytes, as fixed-width hex.
  std::string fingerprint() const;

  std::string name;
  std::optional<GapId> gap_id;

private:
  void validate() const;

  int n_ = 0;
  std::vector<std::uint8_t> table_;
  std::vector<std::uint8_t> inverse_;
};

// The subgroup on the elements of `mask`, reindexed with identity first and
// the remaining elements in ascending parent order.
Group subgroup_group(const Group& g, std::uint64_t mask, std::string name = "");

// Invariant factor decomposition m1 | m2 | ... of an abelian group
// (ascending; empty for the trivial group). Throws NotAbelian otherwise.
std::vector<int> invariant_factors(const Group& g);

}  // namespace dav
