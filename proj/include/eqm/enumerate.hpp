#pragma once

#include <cstdint>
#include <vector>

#include "eqm/rational.hpp"
#include "eqm/subset.hpp"

namespace eqm {

// Eulerian number A(n, j): permutations of [n] with j descents.
Int eulerian(unsigned n, unsigned j);
Int catalan(unsigned n);

// All maximal families of pairwise-sorted k-subsets of [n]. Every maximal
// family has exactly n members; their number is A(n-1, k-1). Intended range
// n <= 9 (the count explodes afterwards).
std::vector<std::vector<sub_t>> enumerate_maximal_sorted(int n, int k);

// Triangulations of the convex n-gon as edge sets (all sides included),
// edges encoded as 2-subsets. Count: Catalan(n-2).
std::vector<std::vector<sub_t>> enumerate_triangulations(int n);

// Maximal thrackles on [n] (pairwise crossing-or-sharing 2-subsets):
// generated from their odd-spine structure; count 2^(n-1) - n.
std::vector<std::vector<sub_t>> enumerate_maximal_thrackles(int n);

// True if the 2-subsets x, y cross or share an endpoint (thrackle relation).
bool edges_cross_or_share(sub_t x, sub_t y);

// Oracle used by tests: maximal cliques in an explicit compatibility graph.
std::vector<std::vector<sub_t>> maximal_cliques(
    const std::vector<sub_t>& verts,
    const std::vector<std::vector<bool>>& adj);

}  // namespace eqm
