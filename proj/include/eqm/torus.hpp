#pragma once

#include <optional>
#include <vector>

#include "eqm/arrangement.hpp"
#include "eqm/minor_table.hpp"

namespace eqm {

// Result of solving the log-space torus system: column scalings t_i whose
// application makes all minors on S equal, certified by intervals.
struct TorusScaling {
  std::vector<Ival> t;        // n column factors
  IvalTable rescaled;         // t-rescaled minor table
  mpfr_prec_t prec = 0;       // working precision that certified the claim
};

enum class ExtremeMode { largest, smallest };

// Rescale columns so the minors indexed by S become equal (value 1) and the
// rescaled table's extremal class is exactly S, certified:
//   * on-S minors equal 1 within 2^-128 relative error,
//   * off-S minors strictly below / above 1 (disjoint intervals).
// S must be affinely independent as 0/1 rows; when |S| < n the remaining
// torus directions are pinned to t_i = 1. Precision ladder 256..4096; throws
// precision_exhausted or undecided_comparison (with pairs) as appropriate.
TorusScaling torus_rescale(const MinorTable& table, const std::vector<sub_t>& S,
                           ExtremeMode mode);

// Interval-table variant (for points only known by intervals, e.g. polygon
// constructions). `extra_bits` headroom keeps the certification honest.
TorusScaling torus_rescale(const IvalTable& table, const std::vector<sub_t>& S,
                           ExtremeMode mode, mpfr_prec_t prec);

// Perturbed rescaling: targets 1 on `keep` and 1 - eps on the rest of S
// (largest mode), so the extremal class shrinks to exactly `keep`. eps starts
// at 1/64 and halves on failure, at most 20 times.
TorusScaling epsilon_perturb_largest(const MinorTable& table,
                                     const std::vector<sub_t>& S,
                                     const std::vector<sub_t>& keep);

// Solve for the scaling factors only (no class certification): the multiset
// of normalized factors is the lambda data of the alcove.
std::vector<Ival> torus_factors(const IvalTable& table, const std::vector<sub_t>& S,
                                mpfr_prec_t prec);

}  // namespace eqm
