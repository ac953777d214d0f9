#pragma once

#include <vector>

#include "eqm/minor_table.hpp"
#include "eqm/subset.hpp"

namespace eqm {

// Decomposition of a maximal thrackle into its odd spine (cyclically drawn
// star polygon) and leaves, as produced by enumerate_maximal_thrackles.
struct ThrackleShape {
  int n = 0;
  std::vector<int> spine;                  // odd size 2r+1, increasing
  std::vector<std::pair<int, int>> leaves; // (leaf vertex, spine partner)
  int r = 0;
};

// Recognize an arbitrary edge set as a thrackle and, when maximal, recover
// the spine/leaf structure; throws bad_input otherwise.
ThrackleShape thrackle_shape(int n, const std::vector<sub_t>& edges);

// Rank-2 interval point whose largest arrangement class is exactly the given
// maximal thrackle, all of its minors equal to sin(pi r / (2r+1)): vertices
// of the regular 2(2r+1)-gon plus equally spaced chord subdivision points.
IvalMatrix thrackle_matrix(int n, const std::vector<sub_t>& edges, mpfr_prec_t prec);

// Certified check used by tests/acceptance: the largest class of the table
// equals `edges` with common value sin(pi r/(2r+1)) (within 2^-128 relative),
// everything else certainly below it.
bool certify_thrackle_largest(const IvalMatrix& m, int n,
                              const std::vector<sub_t>& edges, int r);

// The n equally spaced directions point (regular polygon): minors
// sin((j-i) pi / n). The classic smallest/largest alcove example.
IvalMatrix regular_polygon_point(int n, mpfr_prec_t prec);

// Golden-ratio multiset classification of the 11 alcove scalings of the
// regular pentagon: returns, per maximal sorted family, the multiset pattern
// of normalized factors as exponents of phi (0, 1, 2).
std::vector<std::vector<int>> pentagon_lambda_patterns(mpfr_prec_t prec);

}  // namespace eqm
