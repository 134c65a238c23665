#include "dav/group.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "dav/errors.hpp"

namespace dav {

Group::Group(std::string display_name, int n, std::vector<std::uint8_t> table)
    : name(std::move(display_name)), n_(n), table_(std::move(table)) {
  if (n < 1) fail(Err::InvalidParameter, "group order must be positive");
  if (n > kMaxOrder) fail(Err::OrderTooLarge, "group order " + std::to_string(n) + " exceeds cap 64");
  if (table_.size() != static_cast<std::size_t>(n) * n)
    fail(Err::InvalidParameter, "multiplication table has wrong size");
  inverse_.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    bool found = false;
    for (int j = 0; j < n; ++j) {
      if (mul(i, j) == 0 && mul(j, i) == 0) {
        inverse_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(j);
        found = true;
        break;
      }
    }
    if (!found) fail(Err::InvalidParameter, "element without two-sided inverse");
  }
  validate();
}

void Group::validate() const {
  for (int j = 0; j < n_; ++j)
    if (mul(0, j) != j || mul(j, 0) != j)
      fail(Err::InvalidParameter, "identity law violated at index " + std::to_string(j));
  // Latin square: each row and column is a permutation.
  for (int i = 0; i < n_; ++i) {
    std::uint64_t row = 0, col = 0;
    for (int j = 0; j < n_; ++j) {
      row |= 1ull << mul(i, j);
      col |= 1ull << mul(j, i);
    }
    std::uint64_t all = n_ == 64 ? ~0ull : (1ull << n_) - 1;
    if (row != all || col != all) fail(Err::InvalidParameter, "table is not a Latin square");
  }
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          fail(Err::InvalidParameter, "associativity fails");
}

int Group::pow(int a, int e) const {
  int r = 0;
  while (e < 0) e += element_order(a);  // small exponents only
  for (int i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

int Group::element_order(int a) const {
  int x = a, k = 1;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

std::vector<int> Group::element_orders() const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] = element_order(i);
  std::sort(out.begin(), out.end());
  return out;
}

bool Group::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int Group::exponent() const {
  long long l = 1;
  for (int i = 0; i < n_; ++i) l = std::lcm(l, static_cast<long long>(element_order(i)));
  return static_cast<int>(l);
}

std::uint64_t Group::center() const {
  std::uint64_t z = 0;
  for (int a = 0; a < n_; ++a) {
    bool central = true;
    for (int b = 0; b < n_ && central; ++b) central = mul(a, b) == mul(b, a);
    if (central) z |= 1ull << a;
  }
  return z;
}

std::uint64_t Group::closure(std::uint64_t seed) const {
  std::uint64_t s = seed | 1;  // identity
  for (;;) {
    std::uint64_t next = s;
    for (std::uint64_t x = s; x;) {
      int a = std::countr_zero(x);
      x &= x - 1;
      for (std::uint64_t y = s; y;) {
        int b = std::countr_zero(y);
        y &= y - 1;
        next |= 1ull << mul(a, b);
      }
    }
    if (next == s) return s;
    s = next;
  }
}

std::uint64_t Group::derived_subgroup() const {
  std::uint64_t comms = 0;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      comms |= 1ull << mul(mul(inv(a), inv(b)), mul(a, b));
  return closure(comms);
}

std::string Group::fingerprint() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint8_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint8_t>(n_));
  for (std::uint8_t v : table_) mix(v);
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

Group subgroup_group(const Group& g, std::uint64_t mask, std::string name) {
  if (!(mask & 1)) fail(Err::InvalidParameter, "subgroup must contain the identity");
  std::vector<int> elems;
  for (std::uint64_t x = mask; x;) {
    elems.push_back(std::countr_zero(x));
    x &= x - 1;
  }
  int m = static_cast<int>(elems.size());
  std::vector<int> to_sub(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < m; ++i) to_sub[static_cast<std::size_t>(elems[static_cast<std::size_t>(i)])] = i;
  std::vector<std::uint8_t> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = g.mul(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)]);
      int q = to_sub[static_cast<std::size_t>(p)];
      if (q < 0) fail(Err::InvalidParameter, "element set is not closed");
      table[static_cast<std::size_t>(i) * m + j] = static_cast<std::uint8_t>(q);
    }
  if (name.empty()) name = "subgroup<" + std::to_string(m) + ">";
  return Group(std::move(name), m, std::move(table));
}

std::vector<int> invariant_factors(const Group& g) {
  if (!g.is_abelian()) fail(Err::NotAbelian, "invariant factors need an abelian group");
  int n = g.order();
  if (n == 1) return {};
  std::vector<int> ord(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ord[static_cast<std::size_t>(i)] = g.element_order(i);
  // Per prime p, recover the partition (l1 >= l2 >= ...) of the p-component
  // from the counts N_k = #{x : ord(x) | p^k} = p^{sum_i min(l_i, k)}.
  std::map<int, std::vector<int>> lambda;  // prime -> descending exponents
  int rest = n;
  for (int p = 2; p <= rest; ++p) {
    if (rest % p) continue;
    while (rest % p == 0) rest /= p;
    std::vector<int> e;  // e[k-1] = #{i : l_i >= k}
    int prev_log = 0;
    for (int k = 1;; ++k) {
      long long pk = 1;
      for (int t = 0; t < k; ++t) pk *= p;
      int cnt = 0;
      for (int x = 0; x < n; ++x) {
        int o = ord[static_cast<std::size_t>(x)], oo = o;
        while (oo % p == 0) oo /= p;
        if (oo == 1 && o <= pk) ++cnt;
      }
      int log_cnt = 0;
      while (cnt > 1) {
        cnt /= p;
        ++log_cnt;
      }
      int ek = log_cnt - prev_log;
      if (ek == 0) break;
      e.push_back(ek);
      prev_log = log_cnt;
    }
    std::vector<int> l;  // conjugate partition, descending by construction
    for (int i = 1; i <= (e.empty() ? 0 : e[0]); ++i) {
      int li = 0;
      for (int ek : e)
        if (ek >= i) ++li;
      l.push_back(li);
    }
    lambda[p] = l;
  }
  std::size_t rank = 0;
  for (auto& [p, l] : lambda) rank = std::max(rank, l.size());
  std::vector<int> factors;
  for (std::size_t j = 0; j < rank; ++j) {
    long long d = 1;
    for (auto& [p, l] : lambda)
      if (j < l.size())
        for (int t = 0; t < l[j]; ++t) d *= p;
    factors.push_back(static_cast<int>(d));
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

}  // namespace dav
