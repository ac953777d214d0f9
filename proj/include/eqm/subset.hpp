#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace eqm {

// Subset of [n] = {1, ..., n} as a bitmask; bit (i-1) set means i is in the
// subset. Supports n <= 63.
using sub_t = std::uint64_t;

inline int popcount(sub_t s) { return std::popcount(s); }
inline bool contains(sub_t s, int i) { return (s >> (i - 1)) & 1u; }
inline sub_t with(sub_t s, int i) { return s | (sub_t{1} << (i - 1)); }
inline sub_t without(sub_t s, int i) { return s & ~(sub_t{1} << (i - 1)); }
inline sub_t full_set(int n) { return n == 64 ? ~sub_t{0} : (sub_t{1} << n) - 1; }
// Elements a..b of [n] (1-based, a <= b). Empty if a > b.
inline sub_t interval_set(int a, int b) {
  return a > b ? 0 : (full_set(b) & ~full_set(a - 1));
}

std::vector<int> elements(sub_t s);
sub_t subset_of(std::initializer_list<int> xs);
sub_t subset_of(const std::vector<int>& xs);

// Display and parse the canonical "{1,3,5}" form ("{}" for empty).
std::string subset_str(sub_t s);
sub_t parse_subset(const std::string& s);  // throws bad_input

// Enumerate k-subsets of [n] in colex order (= increasing as integers).
sub_t first_subset(int k);
// Gosper's hack; returns 0 when the enumeration over [n] is done.
sub_t next_subset(sub_t s, int n);

// Colex rank of a k-subset among all k-subsets (0-based).
std::uint64_t colex_rank(sub_t s);

// i -> i+1 cyclically in [n] applied elementwise.
sub_t cyclic_shift_set(sub_t s, int n);

}  // namespace eqm
