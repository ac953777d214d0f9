#include "doctest.h"

#include <vector>

#include "eqm/errors.hpp"
#include "eqm/rational.hpp"
#include "eqm/subset.hpp"

using namespace eqm;

TEST_SUITE("subset") {
  TEST_CASE("bit-level helpers") {
    const sub_t s = subset_of({1, 3, 5});
    CHECK(popcount(s) == 3);
    CHECK(contains(s, 1));
    CHECK(!contains(s, 2));
    CHECK(with(s, 2) == subset_of({1, 2, 3, 5}));
    CHECK(without(s, 3) == subset_of({1, 5}));
    CHECK(full_set(6) == subset_of({1, 2, 3, 4, 5, 6}));
    CHECK(interval_set(2, 4) == subset_of({2, 3, 4}));
    CHECK(interval_set(3, 2) == 0);
    CHECK(interval_set(1, 1) == subset_of({1}));
    CHECK(elements(s) == std::vector<int>{1, 3, 5});
    CHECK(subset_of(std::vector<int>{5, 1, 3}) == s);
  }

  TEST_CASE("display and parse round trip") {
    CHECK(subset_str(subset_of({1, 3, 5})) == "{1,3,5}");
    CHECK(subset_str(0) == "{}");
    CHECK(parse_subset("{1,3,5}") == subset_of({1, 3, 5}));
    CHECK(parse_subset("{}") == 0);
    for (sub_t s = first_subset(3); s; s = next_subset(s, 7))
      CHECK(parse_subset(subset_str(s)) == s);
    CHECK_THROWS_AS(parse_subset("{1,2"), bad_input);
    CHECK_THROWS_AS(parse_subset("1,2"), bad_input);
    CHECK_THROWS_AS(parse_subset("{a}"), bad_input);
  }

  TEST_CASE("colex enumeration covers all k-subsets in order") {
    std::vector<sub_t> seen;
    for (sub_t s = first_subset(3); s; s = next_subset(s, 6)) seen.push_back(s);
    CHECK(Int(seen.size()) == binomial(6, 3));
    for (std::size_t i = 0; i < seen.size(); ++i) {
      CHECK(popcount(seen[i]) == 3);
      CHECK(colex_rank(seen[i]) == i);
      if (i) CHECK(seen[i - 1] < seen[i]);
    }
    CHECK(seen.front() == subset_of({1, 2, 3}));
    CHECK(seen.back() == subset_of({4, 5, 6}));
  }

  TEST_CASE("cyclic shift moves every element up by one") {
    CHECK(cyclic_shift_set(subset_of({1, 2, 6}), 6) == subset_of({1, 2, 3}));
    CHECK(cyclic_shift_set(subset_of({3}), 8) == subset_of({4}));
    CHECK(cyclic_shift_set(full_set(5), 5) == full_set(5));
    // n applications are the identity
    sub_t s = subset_of({2, 3, 7});
    for (int i = 0; i < 8; ++i) s = cyclic_shift_set(s, 8);
    CHECK(s == subset_of({2, 3, 7}));
  }
}
