#include "eqm/subset.hpp"

#include <cstdlib>

#include "eqm/errors.hpp"
#include "eqm/rational.hpp"

namespace eqm {

std::vector<int> elements(sub_t s) {
  std::vector<int> v;
  while (s) {
    int b = std::countr_zero(s);
    v.push_back(b + 1);
    s &= s - 1;
  }
  return v;
}

sub_t subset_of(std::initializer_list<int> xs) {
  sub_t s = 0;
  for (int x : xs) s = with(s, x);
  return s;
}

sub_t subset_of(const std::vector<int>& xs) {
  sub_t s = 0;
  for (int x : xs) s = with(s, x);
  return s;
}

std::string subset_str(sub_t s) {
  std::string out = "{";
  bool first = true;
  for (int e : elements(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

sub_t parse_subset(const std::string& s) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  };
  skip_ws();
  if (i >= s.size() || s[i] != '{') throw bad_input("subset must start with '{': " + s);
  ++i;
  sub_t out = 0;
  skip_ws();
  if (i < s.size() && s[i] == '}') {
    ++i;
    skip_ws();
    if (i != s.size()) throw bad_input("trailing characters after subset: " + s);
    return 0;
  }
  while (true) {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == start) throw bad_input("expected element in subset: " + s);
    long v = std::strtol(s.substr(start, i - start).c_str(), nullptr, 10);
    if (v < 1 || v > 63) throw bad_input("subset element out of range [1,63]: " + s);
    if (contains(out, static_cast<int>(v))) throw bad_input("duplicate element: " + s);
    out = with(out, static_cast<int>(v));
    skip_ws();
    if (i < s.size() && s[i] == ',') {
      ++i;
      continue;
    }
    if (i < s.size() && s[i] == '}') {
      ++i;
      break;
    }
    throw bad_input("expected ',' or '}' in subset: " + s);
  }
  skip_ws();
  if (i != s.size()) throw bad_input("trailing characters after subset: " + s);
  return out;
}

sub_t first_subset(int k) { return k == 0 ? 0 : full_set(k); }

sub_t next_subset(sub_t s, int n) {
  if (s == 0) return 0;
  // Gosper's hack: next integer with the same popcount
  sub_t c = s & -s;
  sub_t r = s + c;
  sub_t next = (((r ^ s) >> 2) / c) | r;
  if (next > full_set(n)) return 0;
  return next;
}

std::uint64_t colex_rank(sub_t s) {
  std::uint64_t r = 0;
  int idx = 1;
  for (int e : elements(s)) {
    r += binomial(static_cast<unsigned>(e - 1), static_cast<unsigned>(idx)).get_ui();
    ++idx;
  }
  return r;
}

sub_t cyclic_shift_set(sub_t s, int n) {
  sub_t full = full_set(n);
  sub_t shifted = ((s << 1) | (s >> (n - 1))) & full;
  return shifted;
}

}  // namespace eqm
