#include "eqm/arrangement.hpp"

#include <algorithm>
#include <utility>

#include "eqm/errors.hpp"
#include "eqm/quadext.hpp"

namespace eqm {

Arrangement extract_arrangement(const MinorTable& t, ArrMode mode) {
  std::vector<std::pair<Quad, sub_t>> items;  // value, index set
  Arrangement out;
  sub_t s = first_subset(t.k);
  for (std::size_t r = 0; r < t.v.size(); ++r, s = next_subset(s, t.n)) {
    if (quad_sign(t.v[r]) == 0)
      out.zeros.push_back(s);
    else
      items.emplace_back(t.v[r], s);
  }
  std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
    int c = quad_cmp(x.first, y.first);
    if (c != 0) return c < 0;
    return x.second < y.second;
  });
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i == 0 || quad_cmp(items[i].first, items[i - 1].first) != 0)
      out.classes.emplace_back();
    out.classes.back().push_back(items[i].second);
  }
  if (mode == ArrMode::full || out.classes.size() <= 1) return out;
  // Collapse to the requested extremal class plus one remainder class.
  Arrangement ext;
  ext.zeros = out.zeros;
  std::vector<sub_t> rest;
  std::size_t keep = mode == ArrMode::smallest ? 0 : out.classes.size() - 1;
  for (std::size_t c = 0; c < out.classes.size(); ++c) {
    if (c == keep) continue;
    rest.insert(rest.end(), out.classes[c].begin(), out.classes[c].end());
  }
  std::sort(rest.begin(), rest.end());
  if (mode == ArrMode::smallest) {
    ext.classes.push_back(out.classes.front());
    ext.classes.push_back(std::move(rest));
  } else {
    ext.classes.push_back(std::move(rest));
    ext.classes.push_back(out.classes.back());
  }
  return ext;
}

namespace {

// Decide whether intervals a and b hold equal values (within 2^-eq_bits
// relative) or certainly different ones; throws undecided_comparison if
// neither certificate is available.
enum class Rel { equal, less, greater };

Rel relate(const Ival& a, const Ival& b, int eq_bits, sub_t sa, sub_t sb) {
  if (certainly_less(a, b)) return Rel::less;
  if (certainly_less(b, a)) return Rel::greater;
  if (within_rel(a, b, eq_bits)) return Rel::equal;
  undecided_comparison e("minor comparison undecided at current precision");
  e.pairs.emplace_back(subset_str(sa), subset_str(sb));
  throw e;
}

}  // namespace

Arrangement extract_arrangement(const IvalTable& t, ArrMode mode, int eq_bits) {
  std::vector<std::pair<const Ival*, sub_t>> items;
  Arrangement out;
  sub_t s = first_subset(t.k);
  for (std::size_t r = 0; r < t.v.size(); ++r, s = next_subset(s, t.n)) {
    if (mpfr_zero_p(t.v[r].lo()) && mpfr_zero_p(t.v[r].hi()))
      out.zeros.push_back(s);  // exactly representable zero only
    else
      items.emplace_back(&t.v[r], s);
  }
  if (items.empty()) return out;

  if (mode == ArrMode::full) {
    std::sort(items.begin(), items.end(),
              [&](const auto& x, const auto& y) {
                Rel r = relate(*x.first, *y.first, eq_bits, x.second, y.second);
                if (r == Rel::equal) return x.second < y.second;
                return r == Rel::less;
              });
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i == 0 ||
          relate(*items[i].first, *items[i - 1].first, eq_bits,
                 items[i].second, items[i - 1].second) != Rel::equal)
        out.classes.emplace_back();
      out.classes.back().push_back(items[i].second);
    }
    for (auto& c : out.classes) std::sort(c.begin(), c.end());
    return out;
  }

  // Extremal mode: one linear scan to find a witness, then classify all
  // others against it.
  std::size_t w = 0;
  for (std::size_t i = 1; i < items.size(); ++i) {
    Rel r = relate(*items[i].first, *items[w].first, eq_bits, items[i].second,
                   items[w].second);
    if ((mode == ArrMode::smallest && r == Rel::less) ||
        (mode == ArrMode::largest && r == Rel::greater))
      w = i;
  }
  std::vector<sub_t> extreme, rest;
  undecided_comparison undecided("minor comparison undecided at current precision");
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i == w) {
      extreme.push_back(items[i].second);
      continue;
    }
    bool away = mode == ArrMode::smallest
                    ? certainly_less(*items[w].first, *items[i].first)
                    : certainly_less(*items[i].first, *items[w].first);
    if (away) {
      rest.push_back(items[i].second);
    } else if (within_rel(*items[i].first, *items[w].first, eq_bits)) {
      extreme.push_back(items[i].second);
    } else {
      undecided.pairs.emplace_back(subset_str(items[w].second),
                                   subset_str(items[i].second));
    }
  }
  if (!undecided.pairs.empty()) throw undecided;
  std::sort(extreme.begin(), extreme.end());
  std::sort(rest.begin(), rest.end());
  if (mode == ArrMode::smallest) {
    out.classes.push_back(std::move(extreme));
    if (!rest.empty()) out.classes.push_back(std::move(rest));
  } else {
    if (!rest.empty()) out.classes.push_back(std::move(rest));
    out.classes.push_back(std::move(extreme));
  }
  return out;
}

int r_function(sub_t I, sub_t J, int a, int b) {
  sub_t window = interval_set(a, b);
  int x = popcount((I & ~J) & window);
  int y = popcount((J & ~I) & window);
  return x > y ? x - y : y - x;
}

bool is_sorted_pair(sub_t I, sub_t J, int n) {
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b)
      if (r_function(I, J, a, b) > 1) return false;
  return true;
}

bool skandera_dominates(sub_t I, sub_t J, sub_t K, sub_t L, int n) {
  // Multiset unions must agree: same union and same intersection.
  if ((I | J) != (K | L) || (I & J) != (K & L)) return false;
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b)
      if (r_function(I, J, a, b) > r_function(K, L, a, b)) return false;
  return true;
}

std::pair<sub_t, sub_t> sort_pair(sub_t I, sub_t J) {
  // Multiset union in increasing order; odd positions (1st, 3rd, ...) go to
  // the first output, even positions to the second.
  std::vector<int> merged;
  for (int e : elements(I | J)) {
    merged.push_back(e);
    if (contains(I & J, e)) merged.push_back(e);
  }
  sub_t odd = 0, even = 0;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    if (i % 2 == 0)
      odd = with(odd, merged[i]);
    else
      even = with(even, merged[i]);
  }
  return {odd, even};
}

}  // namespace eqm
