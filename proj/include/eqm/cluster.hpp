#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqm/laurent.hpp"
#include "eqm/matrix.hpp"
#include "eqm/rational.hpp"
#include "eqm/subset.hpp"

namespace eqm {

// A maximal weakly separated collection of k-subsets of [n] with a value
// attached to each member (rationals or Laurent polynomials in the initial
// face values).
template <class V>
struct Seed {
  int n = 0, k = 0;
  std::vector<sub_t> faces;  // sorted ascending (as integers)
  std::vector<V> val;

  int index_of(sub_t f) const;
  bool has(sub_t f) const { return index_of(f) >= 0; }
};

using RatSeed = Seed<Rat>;
using LaurentSeed = Seed<Laurent>;

// One exchange: K = R + {a,c} in the seed is replaced by X = R + {b,d}
// (a < b < c < d) using the three-term relation
//   val(K) * val(X) = val(R+{a,b}) val(R+{c,d}) + val(R+{a,d}) val(R+{b,c}).
struct Exchange {
  sub_t out = 0, in = 0;
  int a = 0, b = 0, c = 0, d = 0;
  sub_t R = 0;
};

// All exchanges applicable at face K (with every partner present and the
// result again weakly separated with the rest).
template <class V>
std::vector<Exchange> exchanges_at(const Seed<V>& s, sub_t K);

// Apply one exchange in place. Throws inexact_division (Laurent values) when
// the seed is not an honest cluster, not_applicable -> pattern handled by
// exchanges_at returning empty.
void apply_exchange(RatSeed& s, const Exchange& e);
void apply_exchange(LaurentSeed& s, const Exchange& e);

// Validity: pairwise weak separation, size k(n-k)+1, distinct members.
template <class V>
void validate_seed(const Seed<V>& s);

// Evaluate one Plucker coordinate by guided mutation (best-first on the
// symmetric-difference distance to J, deterministic seeded tie-breaking and
// restarts). Throws search_budget_exceeded past `budget` expansions.
Rat evaluate_plucker(const RatSeed& s, sub_t J, std::uint64_t budget = 200000,
                     std::uint64_t rng_seed = 0);
Laurent evaluate_plucker(const LaurentSeed& s, sub_t J, std::uint64_t budget = 200000,
                         std::uint64_t rng_seed = 0);

// Minimum number of exchanges from some maximal collection containing I to
// one containing J: a multi-source A* over canonically encoded collections
// with an admissible pattern bound (a move inserting J needs its whole
// quadrilateral present, and each move adds one face). Returns the exact
// distance when it is <= cap, else distance = cap+1 ("at least cap+1").
// `geodesic_label_sequences` counts shortest move sequences modulo
// interchange of adjacent commuting moves, over all source collections.
struct DistanceResult {
  int distance = 0;
  bool exceeded_cap = false;
  std::uint64_t geodesic_label_sequences = 0;
};
DistanceResult mutation_distance(int n, int k, sub_t I, sub_t J, int cap = 12,
                                 bool count_geodesics = false);

// Same search restricted to one prescribed starting collection (must be
// maximal weakly separated); distances are then "from this collection".
DistanceResult mutation_distance_from(int n, int k, const std::vector<sub_t>& source,
                                      sub_t J, int cap = 12, bool count_geodesics = false);

// All maximal weakly separated collections containing `I` (reachable closure
// under I-preserving exchanges; cross-checked exhaustively in tests).
std::vector<std::vector<sub_t>> collections_containing(int n, int k, sub_t I);

// Deterministic maximal weakly separated collection containing the cyclic
// intervals and (optionally) the seeds; greedy colex completion.
std::vector<sub_t> greedy_maximal_ws(int n, int k, const std::vector<sub_t>& seeds);

// Build the rank-k point with the prescribed positive values on a maximal
// collection; the returned matrix reproduces every seed value exactly
// (replayed minor by minor).
PosMatrix ws_point(const RatSeed& s);

// ---- honeycomb conjecture -------------------------------------------------

// Seed of the (b1, b2) honeycomb: face labels of the patch completed to a
// maximal collection ((2,2): the documented five extra sets; otherwise greedy),
// value T on hexagonal cells, 1 elsewhere.
LaurentSeed honeycomb_seed(int b1, int b2);

// For every k-subset K evaluates the Laurent polynomial in T and checks:
// K != J must have a term of nonnegative T-degree; J itself must have all
// T-degrees <= -1. Returns the list of violating subsets (empty = conjecture
// holds on this instance).
struct ConjectureReport {
  sub_t J = 0;
  bool holds = false;
  std::vector<sub_t> violations;
  Laurent delta_J{1};
};
ConjectureReport check_honeycomb_conjecture(int b1, int b2);

// The k=4 honeycomb point at a numeric T > 0: 4 x 8 rational matrix whose
// minor table equals the seed evaluation (replayed exactly).
PosMatrix honeycomb_matrix_2x2(const Rat& T);

// Randomized positivity check for the rank-5 pair on n = 10 (the default
// mode): `trials` random rational seed assignments in [1, 10] on a maximal
// collection containing I; asserts the J coordinate exceeds 1 each time.
struct RandomCheckReport {
  int trials = 0;
  int failures = 0;
  Rat min_value{0};  // smallest observed J coordinate
};
RandomCheckReport random_case3_check(int trials, std::uint64_t seed);

// Extended (multivariate) mode: J's coordinate as a Laurent polynomial in
// all free face variables of the collection; reports positivity of the
// coefficients and the value at the all-ones point.
struct ExtendedCase3Report {
  int num_terms = 0;
  bool coeffs_positive = false;
  Rat value_at_ones{0};
};
ExtendedCase3Report extended_case3_check();

}  // namespace eqm
