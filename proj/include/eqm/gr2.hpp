#pragma once

#include "eqm/rational.hpp"

namespace eqm {

// Maximum size of the largest arrangement class over the nonnegative (not
// necessarily positive) part of the rank-2 Grassmannian with n columns:
// closed form by residue of n mod 3.
Int nonneg_gr2_max(int n);

// Brute force over column-direction multiplicities: maximize
// sum over edges n_a * n_b for E ranging over triangulations (or maximal
// thrackles, or a single edge) on r distinct directions, compositions
// n_1 + ... + n_r = n. Returns {triangulation max, thrackle max}.
std::pair<Int, Int> nonneg_gr2_bruteforce(int n);

}  // namespace eqm
