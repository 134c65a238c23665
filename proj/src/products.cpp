#include "dav/products.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

#include "dav/errors.hpp"

namespace dav {

int ProductSet::size() const { return std::popcount(bits); }

std::uint64_t right_mul_mask(const Group& g, std::uint64_t bits, int h) {
  std::uint64_t out = 0;
  while (bits) {
    int p = std::countr_zero(bits);
    bits &= bits - 1;
    out |= 1ull << g.mul(p, h);
  }
  return out;
}

std::uint64_t PiMemo::pi(const Sequence& s) {
  if (s.empty()) return 1;  // bit 0 is the identity
  if (auto it = memo_.find(s); it != memo_.end()) return it->second;
  std::uint64_t acc = 0;
  auto elems = s.elems();
  for (std::size_t i = 0; i < elems.size();) {
    int h = elems[i];
    acc |= right_mul_mask(g_, pi(s.without(h)), h);
    while (i < elems.size() && elems[i] == h) ++i;
  }
  memo_.emplace(s, acc);
  return acc;
}

ProductSet product_set(const Group& g, const Sequence& s, int cap) {
  if (s.length() > cap) fail(Err::LengthCap, "product_set: sequence longer than cap");
  PiMemo memo(g);
  return ProductSet{memo.pi(s)};
}

namespace {

// Odometer over multiplicities of the distinct values, emitting sub-multisets
// of exactly `size` elements in lexicographic order of their canonical form.
bool submultisets_rec(const std::vector<std::pair<int, int>>& support, std::size_t pos, int remaining,
                      Sequence& prefix, const std::function<bool(const Sequence&)>& f) {
  if (remaining == 0) return f(prefix);
  if (pos == support.size()) return false;
  int avail = 0;
  for (std::size_t i = pos; i < support.size(); ++i) avail += support[i].second;
  if (avail < remaining) return false;
  int take_max = std::min(support[pos].second, remaining);
  for (int take = take_max; take >= 0; --take) {
    Sequence next = prefix;
    for (int t = 0; t < take; ++t) next.push(support[pos].first);
    if (submultisets_rec(support, pos + 1, remaining - take, next, f)) return true;
  }
  return false;
}

std::vector<std::pair<int, int>> support_of(const Sequence& s) {
  std::vector<std::pair<int, int>> out;
  auto elems = s.elems();
  for (std::size_t i = 0; i < elems.size();) {
    int h = elems[i];
    int c = 0;
    while (i < elems.size() && elems[i] == h) {
      ++i;
      ++c;
    }
    out.emplace_back(h, c);
  }
  return out;
}

}  // namespace

bool for_each_submultiset(const Sequence& s, int size, const std::function<bool(const Sequence&)>& f) {
  if (size < 0 || size > s.length()) return false;
  Sequence prefix;
  auto support = support_of(s);
  return submultisets_rec(support, 0, size, prefix, f);
}

bool big_pi_contains_one(const Group& g, const Sequence& s, int cap) {
  if (s.length() > cap) fail(Err::LengthCap, "big_pi_contains_one: sequence longer than cap");
  PiMemo memo(g);
  for (int size = 1; size <= s.length(); ++size) {
    bool hit = for_each_submultiset(s, size, [&](const Sequence& t) { return (memo.pi(t) & 1) != 0; });
    if (hit) return true;
  }
  return false;
}

bool is_atom_bruteforce(const Group& g, const Sequence& s, int cap) {
  if (s.length() > cap) fail(Err::LengthCap, "is_atom_bruteforce: sequence longer than cap");
  PiMemo memo(g);
  if (!(memo.pi(s) & 1)) return false;
  for (int size = 1; size < s.length(); ++size) {
    bool split = for_each_submultiset(s, size, [&](const Sequence& t) {
      return (memo.pi(t) & 1) && (memo.pi(remove(s, t)) & 1);
    });
    if (split) return false;
  }
  return true;
}

std::vector<Sequence> splittings(const Group& g, const Sequence& s) {
  if (s.empty()) fail(Err::EmptySequence, "splittings: sequence is empty");
  std::set<Sequence> out;
  auto elems = s.elems();
  for (std::size_t i = 0; i < elems.size();) {
    int e = elems[i];
    while (i < elems.size() && elems[i] == e) ++i;
    for (int x = 1; x < g.order(); ++x) {
      if (x == e) continue;
      out.insert(s.replace_split(e, x, g.mul(g.inv(x), e)));
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Sequence> orbit(const AutomorphismGroup& aut, const Sequence& s) {
  std::set<Sequence> out;
  for (const auto& a : aut.elements) out.insert(a.apply(s));
  return {out.begin(), out.end()};
}

bool is_product_one_free_incremental(const Group&, const Sequence& r, const SequenceSet& prev_level,
                                     std::uint64_t pi_r) {
  if (pi_r & 1) return false;
  auto elems = r.elems();
  for (std::size_t i = 0; i < elems.size();) {
    int h = elems[i];
    if (!prev_level.count(r.without(h))) return false;
    while (i < elems.size() && elems[i] == h) ++i;
  }
  return true;
}

}  // namespace dav
