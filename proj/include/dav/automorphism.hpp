#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dav/group.hpp"
#include "dav/sequence.hpp"

namespace dav {

// A bijection on element indices with perm[0] = 0 that preserves the table.
struct Automorphism {
  std::vector<std::uint8_t> perm;

  int operator()(int g) const { return perm[static_cast<std::size_t>(g)]; }
  Sequence apply(const Sequence& s) const;
  std::uint64_t apply_mask(std::uint64_t bits) const;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;
  friend bool operator<(const Automorphism& a, const Automorphism& b) { return a.perm < b.perm; }
};

// The full automorphism group, sorted with the identity map first.
struct AutomorphismGroup {
  std::vector<Automorphism> elements;
  std::size_t size() const { return elements.size(); }
};

AutomorphismGroup automorphisms(const Group& g);

// Checks the defining property on all pairs.
bool is_automorphism(const Group& g, const std::vector<std::uint8_t>& perm);

// An isomorphism g -> h as an index map, when one exists. Prunes by order
// multiset, center size and derived-subgroup size before searching
// generator images.
std::optional<std::vector<std::uint8_t>> identify_iso(const Group& g, const Group& h);

}  // namespace dav
