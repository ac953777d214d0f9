#include <algorithm>
#include <vector>

#include "doctest.h"
#include "eqm/alcove.hpp"
#include "eqm/arrangement.hpp"
#include "eqm/enumerate.hpp"
#include "eqm/subset.hpp"

using namespace eqm;

namespace {

std::vector<sub_t> all_ksubsets(int n, int k) {
  std::vector<sub_t> out;
  for (sub_t s = first_subset(k); s; s = next_subset(s, n)) out.push_back(s);
  return out;
}

}  // namespace

TEST_SUITE("alcove") {
  TEST_CASE("separation distance vanishes exactly on members of a simplex") {
    const int n = 6, k = 3;
    // A maximal sorted family spans a unimodular simplex, so the only lattice
    // points it contains are its own vertices.
    const auto fams = enumerate_maximal_sorted(n, k);
    const auto& S = fams.front();
    for (sub_t J : all_ksubsets(n, k)) {
      const bool member = std::find(S.begin(), S.end(), J) != S.end();
      const long d = separation_distance(S, J, n);
      CAPTURE(subset_str(J));
      CHECK(d >= 0);
      CHECK((d == 0) == member);
    }
  }

  TEST_CASE("separation distance is zero everywhere on the full hypersimplex") {
    const int n = 5, k = 2;
    const auto S = all_ksubsets(n, k);
    for (sub_t J : S) CHECK(separation_distance(S, J, n) == 0);
  }

  TEST_CASE("sort-closedness") {
    const int n = 4;
    std::vector<sub_t> S = {subset_of({1, 2}), subset_of({3, 4})};
    // sorting {1,2},{3,4} gives {1,3},{2,4}, which is missing
    CHECK(!is_sort_closed(S, n));
    S.push_back(subset_of({1, 3}));
    S.push_back(subset_of({2, 4}));
    CHECK(is_sort_closed(S, n));
    // the full hypersimplex is trivially sort-closed
    CHECK(is_sort_closed(all_ksubsets(6, 3), 6));
    // a pairwise-sorted family is fixed by sorting
    const auto fams = enumerate_maximal_sorted(5, 2);
    for (const auto& f : fams) CHECK(is_sort_closed(f, 5));
  }

  TEST_CASE("affine dimension") {
    CHECK(affine_dim(all_ksubsets(6, 3), 6) == 5);
    CHECK(affine_dim(all_ksubsets(6, 2), 6) == 5);
    CHECK(affine_dim(all_ksubsets(5, 2), 5) == 4);
    CHECK(affine_dim({subset_of({1, 3, 4})}, 6) == 0);
    CHECK(affine_dim({subset_of({1, 2}), subset_of({1, 3})}, 4) == 1);
    // three collinear 0/1 points cannot occur; any 3 distinct vertices span 2
    CHECK(affine_dim({subset_of({1, 2}), subset_of({1, 3}), subset_of({2, 3})},
                     4) == 2);
  }

  TEST_CASE("maximal sorted subfamilies triangulate the full hypersimplex") {
    const int n = 6, k = 2;
    const auto S = all_ksubsets(n, k);
    const int dim = affine_dim(S, n);
    CHECK(dim == n - 1);
    const auto fams = maximal_sorted_subsets(S, n);
    CHECK(Int(static_cast<long>(fams.size())) == eulerian(n - 1, k - 1));
    for (const auto& f : fams) {
      CHECK(int(f.size()) == dim + 1);
      for (size_t a = 0; a < f.size(); ++a)
        for (size_t b = a + 1; b < f.size(); ++b)
          CHECK(is_sorted_pair(f[a], f[b], n));
    }
    CHECK(simplices_unimodular(S, fams, n));
    CHECK(count_alcoves(S, n) == long(fams.size()));
  }

  TEST_CASE("alcove counts match the Eulerian numbers on full hypersimplices") {
    CHECK(count_alcoves(all_ksubsets(5, 2), 5) == 11);
    CHECK(count_alcoves(all_ksubsets(6, 3), 6) == 66);
    CHECK(count_alcoves(all_ksubsets(6, 2), 6) == 26);
    CHECK(count_alcoves(all_ksubsets(7, 2), 7) == 57);
  }

  TEST_CASE("restricting to a proper sort-closed family drops the count") {
    // the four-member sort-closed family above spans a 2-face; it has a
    // unique maximal sorted subfamily of full size
    const int n = 4;
    const std::vector<sub_t> S = {subset_of({1, 2}), subset_of({3, 4}),
                                  subset_of({1, 3}), subset_of({2, 4})};
    const int dim = affine_dim(S, n);
    const auto fams = maximal_sorted_subsets(S, n);
    for (const auto& f : fams) CHECK(int(f.size()) == dim + 1);
    CHECK(simplices_unimodular(S, fams, n));
    CHECK(count_alcoves(S, n) == long(fams.size()));
  }
}
