#pragma once

#include <string>
#include <vector>

namespace eqm {

// Certified-equality tolerance used throughout the acceptance checks:
// two interval values are accepted as equal only when they agree to a
// relative error of 2^-kAcceptEqBits, and distinct values must be
// separated by disjoint intervals.  Exact checks use tolerance zero.
inline constexpr unsigned kAcceptEqBits = 128;

struct CriterionResult {
  int id = 0;               // 1..10
  std::string title;        // short human-readable name
  bool pass = false;
  std::string detail;       // observed-vs-expected summary (one line)
  double seconds = 0.0;
};

// Runs one acceptance criterion (1..10).  Never throws: failures inside
// a criterion are caught and reported as pass=false with the exception
// text in `detail`.
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_all_criteria();

// Scripted single-value reproductions exposed through the CLI.
// Known ids: honeycomb-6-over-T, distance-2x2, distance-5-10,
// thrackle-count (takes n), nonneg-gr2 (takes n), eulerian-counts,
// chain-moves (takes b1,b2), layered-chain-moves.
struct ReproResult {
  std::string claim;
  std::string observed;
  std::string expected;
  bool pass = false;
};
ReproResult reproduce_claim(const std::string& id, long n_arg);

}  // namespace eqm
