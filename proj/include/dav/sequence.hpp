#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace dav {

// A sequence over a group: a finite multiset of element indices, kept in
// ascending order (the canonical form). Stored inline; covers groups of
// order <= 64 and lengths up to kMaxLen.
class Sequence {
public:
  static constexpr int kMaxLen = 64;

  Sequence() = default;
  Sequence(std::initializer_list<int> elems);
  explicit Sequence(std::span<const std::uint8_t> elems);
  explicit Sequence(const std::vector<int>& elems);

  static Sequence single(int g);

  int length() const { return len_; }
  bool empty() const { return len_ == 0; }
  std::uint8_t operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  std::span<const std::uint8_t> elems() const { return {e_.data(), static_cast<std::size_t>(len_)}; }

  bool contains(int g) const;
  int multiplicity(int g) const;

  // Insert one element, keeping ascending order.
  Sequence& push(int g);
  // Remove one occurrence of g (which must be present).
  Sequence without(int g) const;
  // Remove one occurrence of g, insert x and y: the splitting step.
  Sequence replace_split(int g, int x, int y) const;

  std::string str() const;  // "[i1,i2,...]"

  friend bool operator==(const Sequence& a, const Sequence& b) {
    if (a.len_ != b.len_) return false;
    for (int i = 0; i < a.len_; ++i)
      if (a.e_[static_cast<std::size_t>(i)] != b.e_[static_cast<std::size_t>(i)]) return false;
    return true;
  }
  friend bool operator!=(const Sequence& a, const Sequence& b) { return !(a == b); }
  // Lexicographic on elements, ties broken by length.
  friend bool operator<(const Sequence& a, const Sequence& b);

private:
  std::uint8_t len_ = 0;
  std::array<std::uint8_t, kMaxLen> e_{};
};

struct SequenceHash {
  std::size_t operator()(const Sequence& s) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint8_t v : s.elems()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    h ^= static_cast<std::uint64_t>(s.length());
    h *= 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

// Multiset union in canonical form.
Sequence concat(const Sequence& a, const Sequence& b);

// True when every element of t occurs in s with at least the same multiplicity.
bool divides(const Sequence& t, const Sequence& s);

// Multiset difference s - t; throws NotASubsequence when t does not divide s.
Sequence remove(const Sequence& s, const Sequence& t);

}  // namespace dav
