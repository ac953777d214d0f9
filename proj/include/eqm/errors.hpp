#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eqm {

// Error kinds shared across the library. The CLI maps each kind to a fixed
// exit code, so keep the taxonomy small and stable.

// Exact division requested but the divisor does not divide the dividend.
struct inexact_division : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two quadratic-extension values with different radicands were combined.
struct mixed_radicand : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A certified computation stayed undecided at the maximum working precision.
struct precision_exhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A certified comparison could not order (or equate) some value pairs.
// `pairs` lists the offending operands in display form.
struct undecided_comparison : std::runtime_error {
  std::vector<std::pair<std::string, std::string>> pairs;
  explicit undecided_comparison(const std::string& msg,
                                std::vector<std::pair<std::string, std::string>> p = {})
      : std::runtime_error(msg), pairs(std::move(p)) {}
};

// Input edge set is not a triangulation of the polygon.
struct not_a_triangulation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A graph move was requested at a location that does not match its pattern.
struct pattern_mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation that requires a reduced graph was given a non-reduced one.
struct not_reduced : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A guided search ran out of its expansion budget.
struct search_budget_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An iterated construction hit its iteration cap without succeeding.
struct cap_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed user input (parse errors, dimension mismatches, bad arguments).
struct bad_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace eqm
