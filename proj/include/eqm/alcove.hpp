#pragma once

#include <vector>

#include "eqm/rational.hpp"
#include "eqm/subset.hpp"

namespace eqm {

// Number of hyperplanes x_i + ... + x_j = const separating the vertex e_J
// strictly from the simplex spanned by {e_I : I in S} (touching allowed on
// the simplex side). Zero iff J is in the convex closure lattice sense; in
// particular 0 iff J in S when S is sort-closed and maximal-dimensional.
long separation_distance(const std::vector<sub_t>& S, sub_t J, int n);

// S is sort-closed: sorting any pair of members lands in S.
bool is_sort_closed(const std::vector<sub_t>& S, int n);

// Affine dimension of {e_I : I in S} over Q.
int affine_dim(const std::vector<sub_t>& S, int n);

// Maximal pairwise-sorted subfamilies of S; for sort-closed S these all have
// affine_dim(S) + 1 members and triangulate the polytope into unimodular
// simplices, so their number is the normalized volume.
std::vector<std::vector<sub_t>> maximal_sorted_subsets(const std::vector<sub_t>& S, int n);

long count_alcoves(const std::vector<sub_t>& S, int n);

// Oracle: checks that each family spans a simplex of normalized volume 1 in
// the affine lattice generated by S (Smith/HNF based).
bool simplices_unimodular(const std::vector<sub_t>& S,
                          const std::vector<std::vector<sub_t>>& families, int n);

}  // namespace eqm
