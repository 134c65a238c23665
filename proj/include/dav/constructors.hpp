#pragma once

#include <vector>

#include "dav/automorphism.hpp"
#include "dav/group.hpp"

namespace dav {

Group cyclic(int n);
Group direct_product(const Group& g, const Group& h);

// C_m x|_d C_n = <a,b | a^m = 1, b^n = 1, b a b^-1 = a^d>.
// Requires gcd(d, m) = 1 and d^n = 1 (mod m).
Group semidirect_cyclic(int m, int n, int d);

Group dihedral(int two_m);       // order 2m
Group dicyclic(int four_m);      // order 4m, m >= 2; built from its own presentation
Group semidihedral(int two_k);   // order 2^k, k >= 4
Group modular(int p, int k);     // M_{p^k}, k >= 3
Group heisenberg(int p);         // unitriangular 3x3 over F_p, order p^3
Group generalized_dihedral(const Group& a);  // Dih(A) = A x|_{-1} C_2

// Permutations are images on 0..degree-1.
Group perm_group(int degree, const std::vector<std::vector<int>>& generators);

Group sl2_f3();

// N x| H with action[h] an automorphism of N; action must be a homomorphism
// H -> Aut(N).
Group semidirect_general(const Group& n, const Group& h, const std::vector<Automorphism>& action);

// Direct product of cyclic groups of the given orders (ascending display name).
Group abelian_group(const std::vector<int>& cyclic_orders);

}  // namespace dav
