#include "eqm/pairs.hpp"

#include <algorithm>

#include "eqm/arrangement.hpp"
#include "eqm/errors.hpp"

namespace eqm {

bool is_weakly_separated(sub_t I, sub_t J) {
  // Sweep the symmetric difference in increasing order and count maximal
  // blocks of same-origin elements; a forbidden alternation a < b < c < d
  // exists exactly when there are four or more blocks.
  sub_t a = I & ~J, b = J & ~I;
  int blocks = 0;
  int last = 0;  // 0 none, 1 from I\J, 2 from J\I
  for (int e : elements(a | b)) {
    int cur = contains(a, e) ? 1 : 2;
    if (cur != last) {
      ++blocks;
      last = cur;
    }
  }
  return blocks <= 3;
}

LatticePath lattice_path(sub_t I, sub_t J) {
  LatticePath p;
  sub_t ionly = I & ~J, jonly = J & ~I;
  for (int e : elements(ionly | jonly)) {
    p.ground.push_back(e);
    p.steps.push_back(contains(ionly, e) ? 'U' : 'D');
  }
  const int len = static_cast<int>(p.steps.size());
  if (len == 0) {
    p.dyck = true;
    return p;
  }
  int sum = 0, minsum = 0, minpos = -1;
  bool nonneg = true;
  for (int i = 0; i < len; ++i) {
    sum += p.steps[i] == 'U' ? 1 : -1;
    if (sum < 0) nonneg = false;
    if (sum < minsum) {
      minsum = sum;
      minpos = i;
    }
  }
  if (sum != 0) {
    p.rotation = -1;  // unbalanced: no Dyck rotation exists
    return p;
  }
  p.dyck = nonneg;
  // Smallest left-rotation that is a Dyck word: start right after the first
  // position achieving the minimum prefix sum (cycle lemma); 0 if already
  // nonnegative everywhere.
  p.rotation = nonneg ? 0 : minpos + 1;
  std::string w;
  for (int i = 0; i < len; ++i) w.push_back(p.steps[(i + p.rotation) % len]);
  for (int i = 0; i < len;) {
    int j = i;
    while (j < len && w[j] == w[i]) ++j;
    if (w[i] == 'U') {
      p.alphas.push_back(j - i);
      p.picks.push_back(j);  // 1-based position of the last U of the run
    } else {
      p.betas.push_back(j - i);
    }
    i = j;
  }
  p.interlacing = static_cast<int>(p.alphas.size());
  return p;
}

PairClass classify_pair(sub_t I, sub_t J, int n) {
  if ((I | J) & ~full_set(n))
    throw bad_input("classify_pair: element out of range");
  PairClass c;
  c.weakly_separated = is_weakly_separated(I, J);
  c.sorted = is_sorted_pair(I, J, n);
  c.path = lattice_path(I, J);
  return c;
}

}  // namespace eqm
