#include "dav/group_ops.hpp"

#include <bit>
#include <deque>
#include <unordered_set>

#include "dav/errors.hpp"

namespace dav {

std::vector<int> greedy_generating_set(const Group& g) {
  std::vector<int> gens;
  std::uint64_t closed = 1, seed = 0;
  std::uint64_t all = g.order() == 64 ? ~0ull : (1ull << g.order()) - 1;
  while (closed != all) {
    int best = -1, best_order = 0;
    for (int x = 0; x < g.order(); ++x) {
      if (closed & (1ull << x)) continue;
      int o = g.element_order(x);
      if (o > best_order) {
        best = x;
        best_order = o;
      }
    }
    gens.push_back(best);
    seed |= 1ull << best;
    closed = g.closure(seed);
  }
  return gens;
}

std::vector<std::uint64_t> subgroups(const Group& g) {
  if (g.order() > 32) fail(Err::OrderTooLarge, "subgroups: |G| must be <= 32");
  std::unordered_set<std::uint64_t> known;
  std::deque<std::uint64_t> queue;
  for (int x = 0; x < g.order(); ++x) {
    std::uint64_t c = g.closure(1ull << x);
    if (known.insert(c).second) queue.push_back(c);
  }
  while (!queue.empty()) {
    std::uint64_t s = queue.front();
    queue.pop_front();
    for (int x = 0; x < g.order(); ++x) {
      if (s & (1ull << x)) continue;
      std::uint64_t c = g.closure(s | (1ull << x));
      if (known.insert(c).second) queue.push_back(c);
    }
  }
  std::vector<std::uint64_t> out(known.begin(), known.end());
  std::sort(out.begin(), out.end());
  return out;
}

int cayley_diameter(const Group& g, const std::vector<int>& gens) {
  for (int x : gens)
    if (x < 0 || x >= g.order()) fail(Err::NotGenerating, "generator index out of range");
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::deque<int> queue{0};
  dist[0] = 0;
  int reached = 1, diameter = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int x : gens) {
      int v = g.mul(u, x);
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        diameter = std::max(diameter, dist[static_cast<std::size_t>(v)]);
        queue.push_back(v);
        ++reached;
      }
    }
  }
  if (reached != g.order()) fail(Err::NotGenerating, "set does not generate the group");
  return diameter;
}

}  // namespace dav
