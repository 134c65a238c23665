#pragma once

#include <cstdint>
#include <vector>

#include "dav/group.hpp"

namespace dav {

// Deterministic generating set: repeatedly add the element of maximal order
// (smallest index on ties) outside the closure of what was picked so far.
std::vector<int> greedy_generating_set(const Group& g);

// All subgroups as element bitmasks, by closure-extension fixpoint starting
// from the cyclic subgroups. Requires |G| <= 32. Sorted ascending as masks.
std::vector<std::uint64_t> subgroups(const Group& g);

// Diameter of the Cayley digraph with edges g -> gx for x in gens; gens must
// generate the group. BFS from the identity suffices by vertex-transitivity.
int cayley_diameter(const Group& g, const std::vector<int>& gens);

}  // namespace dav
