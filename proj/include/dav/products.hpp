#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dav/automorphism.hpp"
#include "dav/group.hpp"
#include "dav/sequence.hpp"

namespace dav {

using SequenceSet = std::unordered_set<Sequence, SequenceHash>;

// The set pi(S) of all ordered products, as a bitmask over element indices.
struct ProductSet {
  std::uint64_t bits = 0;

  bool contains(int g) const { return bits >> g & 1; }
  bool contains_one() const { return bits & 1; }
  int size() const;
};

// Memoized pi computation by the last-factor recursion
//   pi(empty) = {1},  pi(S) = union over g in supp(S) of pi(S - g) * g.
class PiMemo {
public:
  explicit PiMemo(const Group& g) : g_(g) {}

  std::uint64_t pi(const Sequence& s);
  void clear() { memo_.clear(); }

private:
  const Group& g_;
  std::unordered_map<Sequence, std::uint64_t, SequenceHash> memo_;
};

std::uint64_t right_mul_mask(const Group& g, std::uint64_t bits, int h);

ProductSet product_set(const Group& g, const Sequence& s, int cap = 16);

// True iff some non-empty subsequence of s is product-one.
bool big_pi_contains_one(const Group& g, const Sequence& s, int cap = 16);

// Brute-force atom test: s is product-one and no non-empty proper
// subsequence T has both T and s*T^-1 product-one. Oracle use; |s| <= cap.
bool is_atom_bruteforce(const Group& g, const Sequence& s, int cap = 10);

// All sequences S * g^-1 * x * (x^-1 g) for g in supp(S), x in G minus
// {1, g}; deduplicated, sorted.
std::vector<Sequence> splittings(const Group& g, const Sequence& s);

std::vector<Sequence> orbit(const AutomorphismGroup& aut, const Sequence& s);

// Product-one-free test against the previous level: true iff 1 is not in
// pi(r) and every single-element removal of r lies in prev_level.
bool is_product_one_free_incremental(const Group& g, const Sequence& r, const SequenceSet& prev_level,
                                     std::uint64_t pi_r);

// Enumerates the sub-multisets of s with the given size in lexicographic
// order (odometer over multiplicities). The callback returns true to stop;
// the function returns true when stopped early.
bool for_each_submultiset(const Sequence& s, int size, const std::function<bool(const Sequence&)>& f);

}  // namespace dav
