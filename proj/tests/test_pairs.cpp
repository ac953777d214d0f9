#include "doctest.h"

#include <cstdint>
#include <numeric>
#include <vector>

#include "eqm/arrangement.hpp"
#include "eqm/pairs.hpp"
#include "eqm/rational.hpp"
#include "eqm/subset.hpp"

using namespace eqm;

namespace {

// Deterministic k-subset of [n].
sub_t random_subset(RatRng& rng, int n, int k) {
  sub_t s = 0;
  while (popcount(s) < k) s = with(s, 1 + static_cast<int>(rng.next(n)));
  return s;
}

}  // namespace

TEST_SUITE("pairs") {
  TEST_CASE("weak separation on pinned pairs") {
    CHECK(!is_weakly_separated(subset_of({1, 3}), subset_of({2, 4})));
    CHECK(is_weakly_separated(subset_of({1, 2}), subset_of({3, 4})));
    CHECK(is_weakly_separated(subset_of({1, 2}), subset_of({1, 2})));
    CHECK(is_weakly_separated(subset_of({1, 2, 3, 6}), subset_of({2, 3, 5, 6})));
    CHECK(!is_weakly_separated(subset_of({1, 2, 5, 6}), subset_of({3, 4, 7, 8})));
    CHECK(is_weakly_separated(subset_of({1, 2, 3, 6}), subset_of({1, 2, 3, 4})));
    // symmetric in its arguments
    RatRng rng(3);
    for (int t = 0; t < 300; ++t) {
      const sub_t I = random_subset(rng, 8, 4), J = random_subset(rng, 8, 4);
      CHECK(is_weakly_separated(I, J) == is_weakly_separated(J, I));
    }
  }

  TEST_CASE("interval counting function") {
    const sub_t I = subset_of({1, 3}), J = subset_of({2, 4});
    CHECK(r_function(I, J, 1, 1) == 1);
    CHECK(r_function(I, J, 1, 2) == 0);
    CHECK(r_function(I, J, 1, 3) == 1);
    CHECK(r_function(I, J, 2, 3) == 0);
    CHECK(r_function(I, J, 1, 4) == 0);
    // shared elements never count
    CHECK(r_function(subset_of({1, 2}), subset_of({1, 3}), 1, 1) == 0);
  }

  TEST_CASE("sortedness on pinned pairs") {
    CHECK(is_sorted_pair(subset_of({1, 3}), subset_of({2, 4}), 4));
    CHECK(is_sorted_pair(subset_of({2, 4}), subset_of({1, 3}), 4));  // symmetric relation
    CHECK(!is_sorted_pair(subset_of({1, 2}), subset_of({3, 4}), 4));
    CHECK(is_sorted_pair(subset_of({1, 2, 4}), subset_of({2, 3, 5}), 5));
  }

  TEST_CASE("sorting a pair always yields a sorted pair that dominates it") {
    RatRng rng(9);
    for (int t = 0; t < 300; ++t) {
      const int n = 4 + static_cast<int>(rng.next(5));
      const int k = 2 + static_cast<int>(rng.next(3));
      if (k >= n) continue;
      const sub_t I = random_subset(rng, n, k), J = random_subset(rng, n, k);
      const auto [A, B] = sort_pair(I, J);
      CHECK(is_sorted_pair(A, B, n));
      CHECK((A | B) == (I | J));
      CHECK((A & B) == (I & J));
      CHECK(skandera_dominates(A, B, I, J, n));
      // sorting twice is idempotent
      const auto [A2, B2] = sort_pair(A, B);
      CHECK(A2 == A);
      CHECK(B2 == B);
    }
    // pinned: odd positions of {1,2,3,4} go left
    const auto [A, B] = sort_pair(subset_of({1, 2}), subset_of({3, 4}));
    CHECK(A == subset_of({1, 3}));
    CHECK(B == subset_of({2, 4}));
  }

  TEST_CASE("product dominance is reflexive and respects the multiset union") {
    CHECK(skandera_dominates(subset_of({1, 3}), subset_of({2, 4}), subset_of({1, 3}),
                             subset_of({2, 4}), 4));
    CHECK(skandera_dominates(subset_of({1, 3}), subset_of({2, 4}), subset_of({1, 2}),
                             subset_of({3, 4}), 4));
    CHECK(!skandera_dominates(subset_of({1, 2}), subset_of({3, 4}), subset_of({1, 3}),
                              subset_of({2, 4}), 4));
    // different unions never dominate
    CHECK(!skandera_dominates(subset_of({1, 2}), subset_of({3, 4}), subset_of({1, 2}),
                              subset_of({3, 5}), 5));
  }

  TEST_CASE("lattice path of a pinned pair") {
    const auto pc = classify_pair(subset_of({1, 2, 5, 6}), subset_of({3, 4, 7, 8}), 8);
    CHECK(!pc.weakly_separated);
    CHECK(pc.path.ground == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(pc.path.steps == "UUDDUUDD");
    CHECK(pc.path.dyck);
    CHECK(pc.path.rotation == 0);
    CHECK(pc.path.interlacing == 2);
    CHECK(pc.path.alphas == std::vector<int>{2, 2});
    CHECK(pc.path.betas == std::vector<int>{2, 2});
  }

  TEST_CASE("path rotation produces a Dyck word and balanced runs") {
    RatRng rng(17);
    for (int t = 0; t < 300; ++t) {
      const int n = 5 + static_cast<int>(rng.next(4));
      const sub_t I = random_subset(rng, n, 3), J = random_subset(rng, n, 3);
      const auto pc = classify_pair(I, J, n);
      CHECK(pc.weakly_separated == is_weakly_separated(I, J));
      CHECK(pc.sorted == is_sorted_pair(I, J, n));
      const LatticePath& p = pc.path;
      CHECK(p.ground.size() == p.steps.size());
      CHECK((p.rotation == 0) == p.dyck);
      const int ups = popcount(I & ~J);
      CHECK(std::accumulate(p.alphas.begin(), p.alphas.end(), 0) == ups);
      CHECK(std::accumulate(p.betas.begin(), p.betas.end(), 0) == ups);
      CHECK(static_cast<int>(p.alphas.size()) == p.interlacing);
      CHECK(p.alphas.size() == p.betas.size());
      CHECK(p.picks.size() == p.alphas.size());
    }
  }
}
