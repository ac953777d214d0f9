#pragma once

#include <map>
#include <vector>

#include "eqm/matrix.hpp"
#include "eqm/subset.hpp"

namespace eqm {

// Positive target values on the edges of a triangulation (sides + chords).
using EdgeValues = std::map<sub_t, Rat>;

// 2 x n totally positive matrix whose 2x2 column minor on every edge of the
// triangulation T equals the prescribed x value, and whose minors on
// non-edges are strictly larger when x is constant. T must contain all n
// sides and n-3 pairwise noncrossing chords; throws not_a_triangulation.
//
// Built by ear induction: the base keeps the extreme labels {min, max}, and
// each step re-inserts the smallest removable interior ear v as the column
//   (x_{v,next}/x_{prev,next}) col_prev + (x_{prev,v}/x_{prev,next}) col_next.
// The result does not depend on the ear order (asserted by tests).
Mat<Quad> triangulation_matrix(int n, const std::vector<sub_t>& T, const EdgeValues& x);
Mat<Quad> triangulation_matrix_ones(int n, const std::vector<sub_t>& T);

// Same induction but with a caller-chosen ear order (testing hook); `order`
// lists the interior ears in removal order.
Mat<Quad> triangulation_matrix_order(int n, const std::vector<sub_t>& T,
                                     const EdgeValues& x, const std::vector<int>& order);

// All valid interior-ear removal orders (n small; testing hook).
std::vector<std::vector<int>> all_ear_orders(int n, const std::vector<sub_t>& T);

// 2 x n point whose smallest arrangement class is exactly the noncrossing
// edge set S: completes S to a triangulation, assigns 1 on S and 1+eps off
// S (0 < eps <= 1/100). Throws bad_input if S crosses.
Mat<Quad> smallest_arrangement_2xn(int n, const std::vector<sub_t>& S, const Rat& eps);

// True if the 2-subset edge set is a triangulation of the n-gon.
bool is_triangulation(int n, const std::vector<sub_t>& T);

}  // namespace eqm
