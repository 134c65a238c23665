#include "dav/automorphism.hpp"

#include <algorithm>
#include <bit>

#include "dav/errors.hpp"
#include "dav/group_ops.hpp"

namespace dav {

Sequence Automorphism::apply(const Sequence& s) const {
  Sequence out;
  for (std::uint8_t v : s.elems()) out.push(perm[v]);
  return out;
}

std::uint64_t Automorphism::apply_mask(std::uint64_t bits) const {
  std::uint64_t out = 0;
  while (bits) {
    int g = std::countr_zero(bits);
    bits &= bits - 1;
    out |= 1ull << perm[static_cast<std::size_t>(g)];
  }
  return out;
}

bool is_automorphism(const Group& g, const std::vector<std::uint8_t>& perm) {
  int n = g.order();
  if (static_cast<int>(perm.size()) != n || perm[0] != 0) return false;
  std::uint64_t used = 0;
  for (int i = 0; i < n; ++i) {
    if (used & (1ull << perm[static_cast<std::size_t>(i)])) return false;
    used |= 1ull << perm[static_cast<std::size_t>(i)];
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (perm[static_cast<std::size_t>(g.mul(a, b))] !=
          g.mul(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]))
        return false;
  return true;
}

namespace {

// BFS word table for a generating set: every element as parent * gens[via].
struct WordTable {
  std::vector<int> order;        // visit order, starting at the identity
  std::vector<int> parent, via;  // -1 for the identity
};

WordTable word_table(const Group& g, const std::vector<int>& gens) {
  int n = g.order();
  WordTable w;
  w.parent.assign(static_cast<std::size_t>(n), -2);
  w.via.assign(static_cast<std::size_t>(n), -1);
  w.parent[0] = -1;
  w.order.push_back(0);
  for (std::size_t head = 0; head < w.order.size(); ++head) {
    int u = w.order[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      int v = g.mul(u, gens[i]);
      if (w.parent[static_cast<std::size_t>(v)] != -2) continue;
      w.parent[static_cast<std::size_t>(v)] = u;
      w.via[static_cast<std::size_t>(v)] = static_cast<int>(i);
      w.order.push_back(v);
    }
  }
  return w;
}

// Extends generator images to a full map along the word table; checks the
// homomorphism property on all pairs and bijectivity.
bool extend_images(const Group& a, const Group& b, const WordTable& w,
                   const std::vector<int>& images, std::vector<std::uint8_t>& out) {
  int n = a.order();
  out.assign(static_cast<std::size_t>(n), 0);
  std::uint64_t used = 1;
  for (std::size_t i = 1; i < w.order.size(); ++i) {
    int v = w.order[i];
    int img = b.mul(out[static_cast<std::size_t>(w.parent[static_cast<std::size_t>(v)])],
                    images[static_cast<std::size_t>(w.via[static_cast<std::size_t>(v)])]);
    if (used & (1ull << img)) return false;
    out[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(img);
    used |= 1ull << img;
  }
  if (std::popcount(used) != n) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (out[static_cast<std::size_t>(a.mul(x, y))] !=
          b.mul(out[static_cast<std::size_t>(x)], out[static_cast<std::size_t>(y)]))
        return false;
  return true;
}

// Enumerates all homomorphic generator-image assignments a -> b; calls sink
// with each full bijective homomorphism. Returns false if the search space
// is unreasonably large.
template <class Sink>
bool generator_image_search(const Group& a, const Group& b, Sink&& sink) {
  std::vector<int> gens = greedy_generating_set(a);
  WordTable words = word_table(a, gens);
  std::vector<std::vector<int>> candidates;
  double space = 1;
  for (int g : gens) {
    std::vector<int> c;
    int o = a.element_order(g);
    for (int x = 0; x < b.order(); ++x)
      if (b.element_order(x) == o) c.push_back(x);
    if (c.empty()) return true;  // no image at all
    space *= static_cast<double>(c.size());
    candidates.push_back(std::move(c));
  }
  if (space > 1e8) fail(Err::ResourceCap, "generator-image search space too large");
  std::vector<int> images(gens.size());
  std::vector<std::uint8_t> map;
  auto rec = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == gens.size()) {
      if (!extend_images(a, b, words, images, map)) return false;
      return sink(map);
    }
    for (int img : candidates[pos]) {
      images[pos] = img;
      if (self(self, pos + 1)) return true;
    }
    return false;
  };
  if (gens.empty()) {  // trivial group
    map.assign(1, 0);
    if (b.order() == 1) sink(map);
    return true;
  }
  rec(rec, 0);
  return true;
}

}  // namespace

AutomorphismGroup automorphisms(const Group& g) {
  AutomorphismGroup out;
  generator_image_search(g, g, [&](const std::vector<std::uint8_t>& map) {
    out.elements.push_back(Automorphism{map});
    return false;  // keep searching
  });
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

std::optional<std::vector<std::uint8_t>> identify_iso(const Group& g, const Group& h) {
  if (g.order() != h.order()) return std::nullopt;
  if (g.element_orders() != h.element_orders()) return std::nullopt;
  if (std::popcount(g.center()) != std::popcount(h.center())) return std::nullopt;
  if (std::popcount(g.derived_subgroup()) != std::popcount(h.derived_subgroup())) return std::nullopt;
  std::optional<std::vector<std::uint8_t>> found;
  generator_image_search(g, h, [&](const std::vector<std::uint8_t>& map) {
    found = map;
    return true;  // stop at the first isomorphism
  });
  return found;
}

}  // namespace dav
