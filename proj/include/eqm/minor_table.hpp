#pragma once

#include <vector>

#include "eqm/interval.hpp"
#include "eqm/matrix.hpp"

namespace eqm {

// All Plucker coordinates of a k x n point, indexed by k-subsets of [n] in
// colex order. For a rectangular_tp input the table is computed on its
// embedding, so entries/minors of every size appear under minor_index_map.
struct MinorTable {
  int n = 0, k = 0;
  std::vector<Quad> v;  // size C(n,k), colex order

  const Quad& at(sub_t s) const { return v[colex_rank(s)]; }
  Quad& at(sub_t s) { return v[colex_rank(s)]; }
};

MinorTable minor_table(const PosMatrix& m);

// Interval-valued table (used by certified constructions).
struct IvalTable {
  int n = 0, k = 0;
  std::vector<Ival> v;

  const Ival& at(sub_t s) const { return v[colex_rank(s)]; }
  Ival& at(sub_t s) { return v[colex_rank(s)]; }
};

// Interval 2 x n point (columns as plane vectors) and its minor table.
struct IvalMatrix {
  int k = 0, n = 0;
  std::vector<std::vector<Ival>> cols;  // n columns of height k
};

IvalTable minor_table_2xn(const IvalMatrix& m);

// Convert an exact table to intervals at the given precision.
IvalTable to_intervals(const MinorTable& t, mpfr_prec_t prec);

}  // namespace eqm
