#pragma once

#include <vector>

#include "eqm/minor_table.hpp"
#include "eqm/subset.hpp"

namespace eqm {

// Ordered set partition of the index set by increasing minor value. Zero
// minors (boundary points) are split off into `zeros`.
struct Arrangement {
  std::vector<sub_t> zeros;
  std::vector<std::vector<sub_t>> classes;  // strictly increasing values

  const std::vector<sub_t>& smallest() const { return classes.front(); }
  const std::vector<sub_t>& largest() const { return classes.back(); }
};

enum class ArrMode { smallest, largest, full };

// Exact extraction (total order on quadratic-extension values).
Arrangement extract_arrangement(const MinorTable& t, ArrMode mode);

// Certified extraction over intervals: two minors land in one class if they
// agree within 2^-eq_bits relative, in different classes if their intervals
// are disjoint; otherwise throws undecided_comparison listing the pairs.
// For smallest/largest only the extremal class is computed (and the rest is
// returned as one unsorted remainder class).
Arrangement extract_arrangement(const IvalTable& t, ArrMode mode, int eq_bits = 128);

// r(I, J; [a,b]) = | |(I\J) cap [a,b]| - |(J\I) cap [a,b]| |.
int r_function(sub_t I, sub_t J, int a, int b);

// True if max over all intervals of r(I,J;.) is at most 1.
bool is_sorted_pair(sub_t I, sub_t J, int n);

// Product domination test: multiset unions agree and r(I,J;.) <= r(K,L;.)
// on every interval [a,b] of [n].
bool skandera_dominates(sub_t I, sub_t J, sub_t K, sub_t L, int n);

// Sorting of a pair: odd/even positions of the sorted multiset union.
std::pair<sub_t, sub_t> sort_pair(sub_t I, sub_t J);

}  // namespace eqm
