#pragma once

#include <string>
#include <vector>

#include "eqm/subset.hpp"

namespace eqm {

// Weak separation: no a < b < c < d with a,c in I\J and b,d in J\I or the
// other way around.
bool is_weakly_separated(sub_t I, sub_t J);

// The up/down walk over the sorted symmetric difference of (I, J):
// an up-step for elements of I\J, a down-step for J\I.
struct LatticePath {
  std::vector<int> ground;   // elements of the symmetric difference, sorted
  std::string steps;         // 'U'/'D' per ground element
  bool dyck = false;         // nonnegative partial sums, ends at 0
  int interlacing = 0;       // p: number of maximal U-runs of the Dyck rotation
  int rotation = 0;          // left-rotation turning steps into the Dyck form
  std::vector<int> alphas;   // U-run lengths of the Dyck rotation
  std::vector<int> betas;    // D-run lengths of the Dyck rotation
  std::vector<int> picks;    // ground positions (1-based in rotated word) of peaks
};

LatticePath lattice_path(sub_t I, sub_t J);

// Full pair classification: weak separation, sortedness, and the Dyck data
// of the path. The canonical rotation is the smallest left-rotation that is
// a Dyck word; ties cannot occur (rotations of a balanced word that are Dyck
// and start at distinct positions differ).
struct PairClass {
  bool weakly_separated = false;
  bool sorted = false;
  LatticePath path;
};

PairClass classify_pair(sub_t I, sub_t J, int n);

}  // namespace eqm
