#include "eqm/gr2.hpp"

#include <functional>
#include <vector>

#include "eqm/enumerate.hpp"
#include "eqm/errors.hpp"
#include "eqm/subset.hpp"

namespace eqm {

Int nonneg_gr2_max(int n) {
  if (n < 3) throw bad_input("nonneg_gr2_max: need n >= 3");
  long m = n / 3;
  switch (n % 3) {
    case 0:
      return Int(3) * m * m;
    case 1:
      return Int(m) * (3 * m + 2);
    default:
      return Int(m + 1) * (3 * m + 1);
  }
}

namespace {

Int edge_weight_sum(const std::vector<sub_t>& edges, const std::vector<long>& mult) {
  Int total(0);
  for (sub_t e : edges) {
    auto v = elements(e);
    total += Int(mult[v[0] - 1]) * Int(mult[v[1] - 1]);
  }
  return total;
}

// All compositions of n into r positive parts.
void for_each_composition(int n, int r, std::vector<long>& parts,
                          const std::function<void(const std::vector<long>&)>& f) {
  if (r == 1) {
    parts.push_back(n);
    f(parts);
    parts.pop_back();
    return;
  }
  for (int first = 1; first <= n - (r - 1); ++first) {
    parts.push_back(first);
    for_each_composition(n - first, r - 1, parts, f);
    parts.pop_back();
  }
}

}  // namespace

std::pair<Int, Int> nonneg_gr2_bruteforce(int n) {
  if (n < 3) throw bad_input("nonneg_gr2_bruteforce: need n >= 3");
  Int best_tri(0), best_thr(0);
  for (int r = 2; r <= n; ++r) {
    std::vector<std::vector<sub_t>> tris, thrs;
    if (r == 2) {
      // Two direction classes: the only positive minors pair them up.
      tris.push_back({with(with(0, 1), 2)});
      thrs = tris;
    } else {
      tris = enumerate_triangulations(r);
      thrs = enumerate_maximal_thrackles(r);
    }
    std::vector<long> parts;
    for_each_composition(n, r, parts, [&](const std::vector<long>& mult) {
      for (const auto& t : tris) {
        Int v = edge_weight_sum(t, mult);
        if (v > best_tri) best_tri = v;
      }
      for (const auto& t : thrs) {
        Int v = edge_weight_sum(t, mult);
        if (v > best_thr) best_thr = v;
      }
    });
  }
  return {best_tri, best_thr};
}

}  // namespace eqm
