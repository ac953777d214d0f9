#pragma once

#include <cstdint>
#include <vector>

#include "eqm/matrix.hpp"

namespace eqm {

// Monotone staircase path in the k x m entry grid, from (1,1) to (k,m),
// moving +1 in row or column; it visits k+m-1 cells.
using GridPath = std::vector<std::pair<int, int>>;

std::vector<GridPath> grid_paths(int k, int m);      // count C(k+m-2, k-1)
GridPath transposed_path(const GridPath& p);          // (i,j) -> (j,i) pattern

// The column subset of the embedding whose Plucker coordinate is the entry
// (i, j): ([k] minus {k+1-i}) plus {j+k}.
sub_t entry_index(int k, int i, int j);

// Entry-level arrangement classes of a rectangular TP matrix (exact ties).
std::vector<std::vector<std::pair<int, int>>> entry_classes(const PosMatrix& m);

// Rescale rows/columns of a TP matrix so the entries on `path` all equal 1;
// returns the rescaled matrix. The row/column factors exist and are unique
// up to one global scale because the path is a spanning tree of the
// row-column incidence graph.
PosMatrix rescale_on_path(const PosMatrix& m, const GridPath& path);

// TP matrix whose largest (resp. smallest) entries are exactly the path.
PosMatrix largest_entries_on_path(int k, int m, const GridPath& path, std::uint64_t seed);
PosMatrix smallest_entries_on_path(int k, int m, const GridPath& path, std::uint64_t seed);

}  // namespace eqm
