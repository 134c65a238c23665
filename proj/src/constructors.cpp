#include "dav/constructors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "dav/errors.hpp"

namespace dav {

namespace {

Group from_mul(std::string name, int n, auto&& mul) {
  std::vector<std::uint8_t> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint8_t>(mul(i, j));
  return Group(std::move(name), n, std::move(table));
}

void check_order(long long n) {
  if (n > Group::kMaxOrder) fail(Err::OrderTooLarge, "order " + std::to_string(n) + " exceeds cap 64");
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Group cyclic(int n) {
  if (n < 1) fail(Err::InvalidParameter, "cyclic: n must be positive");
  check_order(n);
  return from_mul("C" + std::to_string(n), n, [n](int i, int j) { return (i + j) % n; });
}

Group direct_product(const Group& g, const Group& h) {
  long long n = static_cast<long long>(g.order()) * h.order();
  check_order(n);
  int hn = h.order();
  return from_mul(g.name + "x" + h.name, static_cast<int>(n), [&](int i, int j) {
    int g1 = i / hn, h1 = i % hn, g2 = j / hn, h2 = j % hn;
    return g.mul(g1, g2) * hn + h.mul(h1, h2);
  });
}

Group semidirect_cyclic(int m, int n, int d) {
  if (m < 1 || n < 1) fail(Err::InvalidParameter, "semidirect_cyclic: orders must be positive");
  check_order(static_cast<long long>(m) * n);
  int dm = ((d % m) + m) % m;
  if (m > 1 && std::gcd(dm, m) != 1)
    fail(Err::InvalidAction, "semidirect_cyclic: d must be coprime to m");
  // powers of d mod m, one per exponent of b
  std::vector<int> dpow(static_cast<std::size_t>(n) + 1, 1 % std::max(m, 1));
  for (int j = 1; j <= n; ++j) dpow[static_cast<std::size_t>(j)] = m == 1 ? 0 : (dpow[static_cast<std::size_t>(j - 1)] * dm) % m;
  if (m > 1 && dpow[static_cast<std::size_t>(n)] != 1)
    fail(Err::InvalidAction, "semidirect_cyclic: d^n != 1 (mod m)");
  std::string name = "C" + std::to_string(m) + ":C" + std::to_string(n) + "(d=" + std::to_string(dm) + ")";
  return from_mul(std::move(name), m * n, [&, m, n](int a, int b) {
    int i1 = a / n, j1 = a % n, i2 = b / n, j2 = b % n;
    int i = m == 1 ? 0 : (i1 + i2 * dpow[static_cast<std::size_t>(j1)]) % m;
    return i * n + (j1 + j2) % n;
  });
}

Group dihedral(int two_m) {
  if (two_m < 2 || two_m % 2) fail(Err::InvalidParameter, "dihedral: order must be even and >= 2");
  check_order(two_m);
  int m = two_m / 2;
  Group g = m == 1 ? cyclic(2) : semidirect_cyclic(m, 2, m - 1);
  g.name = "Dih" + std::to_string(two_m);
  return g;
}

Group dicyclic(int four_m) {
  if (four_m < 8 || four_m % 4) fail(Err::InvalidParameter, "dicyclic: order must be 4m with m >= 2");
  check_order(four_m);
  int m = four_m / 4, a = 2 * m;
  // pairs (i mod 2m, j mod 2); b^2 = a^m, b a b^-1 = a^-1
  return from_mul("Dic" + std::to_string(four_m), four_m, [m, a](int u, int v) {
    int i1 = u / 2, j1 = u % 2, i2 = v / 2, j2 = v % 2;
    int i = i1 + (j1 ? a - i2 : i2) + (j1 & j2 ? m : 0);
    return (i % a) * 2 + (j1 ^ j2);
  });
}

Group semidihedral(int two_k) {
  int k = 0, t = two_k;
  while (t > 1 && t % 2 == 0) {
    t /= 2;
    ++k;
  }
  if (t != 1 || k < 4) fail(Err::InvalidParameter, "semidihedral: order must be 2^k, k >= 4");
  check_order(two_k);
  Group g = semidirect_cyclic(two_k / 2, 2, two_k / 4 - 1);
  g.name = "SD" + std::to_string(two_k);
  return g;
}

Group modular(int p, int k) {
  if (!is_prime(p) || k < 3) fail(Err::InvalidParameter, "modular: need p prime and k >= 3");
  long long n = 1;
  for (int i = 0; i < k; ++i) n *= p;
  check_order(n);
  long long half = n / p, d = half / p + 1;  // p^{k-2} + 1
  Group g = semidirect_cyclic(static_cast<int>(half), p, static_cast<int>(d));
  g.name = "M" + std::to_string(n);
  return g;
}

Group heisenberg(int p) {
  if (!is_prime(p)) fail(Err::InvalidParameter, "heisenberg: p must be prime");
  long long n = static_cast<long long>(p) * p * p;
  check_order(n);
  // triples (x,y,z): (1 x z; 0 1 y; 0 0 1); index = x*p^2 + y*p + z
  return from_mul("H" + std::to_string(n), static_cast<int>(n), [p](int u, int v) {
    int x1 = u / (p * p), y1 = u / p % p, z1 = u % p;
    int x2 = v / (p * p), y2 = v / p % p, z2 = v % p;
    int x = (x1 + x2) % p, y = (y1 + y2) % p, z = (z1 + z2 + x1 * y2) % p;
    return x * p * p + y * p + z;
  });
}

Group generalized_dihedral(const Group& a) {
  if (!a.is_abelian()) fail(Err::NotAbelian, "generalized_dihedral: base must be abelian");
  check_order(2ll * a.order());
  return from_mul("Dih(" + a.name + ")", 2 * a.order(), [&a](int u, int v) {
    int a1 = u / 2, e1 = u % 2, a2 = v / 2, e2 = v % 2;
    return a.mul(a1, e1 ? a.inv(a2) : a2) * 2 + (e1 ^ e2);
  });
}

Group perm_group(int degree, const std::vector<std::vector<int>>& generators) {
  if (degree < 1 || degree > 8) fail(Err::InvalidParameter, "perm_group: degree must be 1..8");
  for (const auto& p : generators) {
    if (static_cast<int>(p.size()) != degree) fail(Err::InvalidParameter, "perm_group: bad generator size");
    std::vector<bool> seen(static_cast<std::size_t>(degree));
    for (int v : p) {
      if (v < 0 || v >= degree || seen[static_cast<std::size_t>(v)])
        fail(Err::InvalidParameter, "perm_group: generator is not a permutation");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  std::vector<int> identity(static_cast<std::size_t>(degree));
  std::iota(identity.begin(), identity.end(), 0);
  auto compose = [degree](const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<int> out(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) out[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(g[static_cast<std::size_t>(i)])];
    return out;
  };
  std::set<std::vector<int>> seen{identity};
  std::vector<std::vector<int>> queue{identity};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& gen : generators) {
      auto next = compose(queue[head], gen);
      if (seen.insert(next).second) {
        if (seen.size() > Group::kMaxOrder) fail(Err::OrderTooLarge, "perm_group: closure exceeds 64");
        queue.push_back(next);
      }
    }
  }
  std::vector<std::vector<int>> elems(seen.begin(), seen.end());
  // identity first, the rest stay in lexicographic order
  auto it = std::find(elems.begin(), elems.end(), identity);
  std::rotate(elems.begin(), it, it + 1);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  int n = static_cast<int>(elems.size());
  return from_mul("perm<" + std::to_string(degree) + ">", n, [&](int i, int j) {
    return index.at(compose(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)]));
  });
}

Group sl2_f3() {
  // 2x2 matrices (a b; c d) over F_3 with det 1, identity first
  struct M {
    int a, b, c, d;
  };
  std::vector<M> elems{{1, 0, 0, 1}};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          if (((a * d - b * c) % 3 + 3) % 3 != 1) continue;
          if (a == 1 && b == 0 && c == 0 && d == 1) continue;
          elems.push_back({a, b, c, d});
        }
  int n = static_cast<int>(elems.size());
  auto index_of = [&](const M& m) {
    for (int i = 0; i < n; ++i) {
      const M& e = elems[static_cast<std::size_t>(i)];
      if (e.a == m.a && e.b == m.b && e.c == m.c && e.d == m.d) return i;
    }
    fail(Err::InvalidParameter, "sl2_f3: product not found");
  };
  return from_mul("SL(2,3)", n, [&](int i, int j) {
    const M& x = elems[static_cast<std::size_t>(i)];
    const M& y = elems[static_cast<std::size_t>(j)];
    M p{(x.a * y.a + x.b * y.c) % 3, (x.a * y.b + x.b * y.d) % 3,
        (x.c * y.a + x.d * y.c) % 3, (x.c * y.b + x.d * y.d) % 3};
    return index_of(p);
  });
}

Group semidirect_general(const Group& n, const Group& h, const std::vector<Automorphism>& action) {
  check_order(static_cast<long long>(n.order()) * h.order());
  if (static_cast<int>(action.size()) != h.order())
    fail(Err::NotAHomomorphism, "semidirect_general: one automorphism per H-element required");
  for (const auto& a : action)
    if (!is_automorphism(n, a.perm)) fail(Err::NotAHomomorphism, "semidirect_general: action value is not an automorphism");
  for (int i = 0; i < n.order(); ++i)
    if (action[0](i) != i) fail(Err::NotAHomomorphism, "semidirect_general: identity must act trivially");
  for (int h1 = 0; h1 < h.order(); ++h1)
    for (int h2 = 0; h2 < h.order(); ++h2)
      for (int x = 0; x < n.order(); ++x)
        if (action[static_cast<std::size_t>(h.mul(h1, h2))](x) !=
            action[static_cast<std::size_t>(h1)](action[static_cast<std::size_t>(h2)](x)))
          fail(Err::NotAHomomorphism, "semidirect_general: action is not a homomorphism");
  int hn = h.order();
  return from_mul(n.name + ":" + h.name, n.order() * hn, [&](int u, int v) {
    int n1 = u / hn, h1 = u % hn, n2 = v / hn, h2 = v % hn;
    return n.mul(n1, action[static_cast<std::size_t>(h1)](n2)) * hn + h.mul(h1, h2);
  });
}

Group abelian_group(const std::vector<int>& cyclic_orders) {
  if (cyclic_orders.empty()) return cyclic(1);
  std::vector<int> orders = cyclic_orders;
  std::sort(orders.begin(), orders.end());
  Group g = cyclic(orders[0]);
  std::string name = "C" + std::to_string(orders[0]);
  for (std::size_t i = 1; i < orders.size(); ++i) {
    g = direct_product(g, cyclic(orders[i]));
    name += "xC" + std::to_string(orders[i]);
  }
  g.name = name;
  return g;
}

}  // namespace dav
