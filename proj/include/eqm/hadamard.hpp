#pragma once

#include "eqm/matrix.hpp"

namespace eqm {

// Entrywise (Hadamard) integer power of a rational matrix.
Mat<Quad> hadamard_power(const Mat<Quad>& m, int e);

// The flipped reciprocal of a k x m matrix: b_{ij} = 1 / a_{j, m+1-i}
// (an m x k matrix), pairing a matrix with largest entries on a path to one
// with smallest entries on the flipped path.
Mat<Quad> flip_reciprocal(const Mat<Quad>& m);

// Smallest exponent e in [1, cap] with hadamard_power(m, e) totally
// positive; throws cap_exceeded when none is.
int find_tp_hadamard_exponent(const Mat<Quad>& m, int cap = 20);

}  // namespace eqm
