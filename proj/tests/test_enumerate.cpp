#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "eqm/arrangement.hpp"
#include "eqm/enumerate.hpp"
#include "eqm/errors.hpp"
#include "eqm/polygon.hpp"
#include "eqm/subset.hpp"
#include "eqm/triangmat.hpp"

using namespace eqm;

namespace {

// Sorts each family and then the list of families, so two enumerations can
// be compared independently of generation order.
std::vector<std::vector<sub_t>> canon(std::vector<std::vector<sub_t>> fams) {
  for (auto& f : fams) std::sort(f.begin(), f.end());
  std::sort(fams.begin(), fams.end());
  return fams;
}

}  // namespace

TEST_SUITE("enumerate") {
  TEST_CASE("eulerian numbers: base cases, symmetry, row sums") {
    CHECK(eulerian(1, 0) == Int(1));
    CHECK(eulerian(4, 1) == Int(11));
    CHECK(eulerian(5, 2) == Int(66));
    CHECK(eulerian(5, 1) == Int(26));
    CHECK(eulerian(7, 3) == Int(2416));
    for (unsigned n = 1; n <= 8; ++n) {
      Int row_sum = 0;
      Int fact = 1;
      for (unsigned i = 2; i <= n; ++i) fact *= i;
      for (unsigned j = 0; j < n; ++j) {
        CHECK(eulerian(n, j) == eulerian(n, n - 1 - j));
        row_sum += eulerian(n, j);
      }
      CHECK(row_sum == fact);
    }
    CHECK(eulerian(3, 2) == Int(1));
    CHECK(eulerian(6, 5) == Int(1));
  }

  TEST_CASE("catalan numbers") {
    const long expect[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
    for (unsigned i = 0; i < 10; ++i) CHECK(catalan(i) == Int(expect[i]));
    // Segner recurrence as an independent cross-check.
    for (unsigned n = 1; n <= 9; ++n) {
      Int acc = 0;
      for (unsigned i = 0; i < n; ++i) acc += catalan(i) * catalan(n - 1 - i);
      CHECK(catalan(n) == acc);
    }
  }

  TEST_CASE("maximal sorted families: counts, size, pairwise sortedness") {
    struct Case {
      int n, k;
    } cases[] = {{4, 2}, {5, 2}, {5, 3}, {6, 2}, {6, 3}, {7, 3}};
    for (const auto& c : cases) {
      CAPTURE(c.n);
      CAPTURE(c.k);
      const auto fams = enumerate_maximal_sorted(c.n, c.k);
      CHECK(Int(static_cast<long>(fams.size())) ==
            eulerian(unsigned(c.n - 1), unsigned(c.k - 1)));
      std::set<std::vector<sub_t>> distinct;
      for (const auto& f : fams) {
        CHECK(int(f.size()) == c.n);
        for (size_t a = 0; a < f.size(); ++a) {
          CHECK(popcount(f[a]) == c.k);
          CHECK((f[a] & ~full_set(c.n)) == 0);
          for (size_t b = a + 1; b < f.size(); ++b)
            CHECK(is_sorted_pair(f[a], f[b], c.n));
        }
        auto key = f;
        std::sort(key.begin(), key.end());
        distinct.insert(key);
      }
      CHECK(distinct.size() == fams.size());
    }
  }

  TEST_CASE("maximal sorted families agree with the clique oracle at n=6, k=3") {
    const int n = 6, k = 3;
    std::vector<sub_t> verts;
    for (sub_t s = first_subset(k); s; s = next_subset(s, n)) verts.push_back(s);
    std::vector<std::vector<bool>> adj(verts.size(),
                                       std::vector<bool>(verts.size(), false));
    for (size_t a = 0; a < verts.size(); ++a)
      for (size_t b = 0; b < verts.size(); ++b)
        adj[a][b] = a != b && is_sorted_pair(verts[a], verts[b], n);
    const auto expect = canon(maximal_cliques(verts, adj));
    // Cliques of size < n exist in principle; the oracle returns maximal
    // cliques, and for the sorted relation all of them have n members.
    for (const auto& f : expect) CHECK(f.size() == size_t(n));
    CHECK(canon(enumerate_maximal_sorted(n, k)) == expect);
  }

  TEST_CASE("triangulations: Catalan counts and validity") {
    for (int n = 3; n <= 7; ++n) {
      CAPTURE(n);
      const auto tris = enumerate_triangulations(n);
      CHECK(Int(static_cast<long>(tris.size())) == catalan(unsigned(n - 2)));
      std::set<std::vector<sub_t>> distinct;
      for (const auto& t : tris) {
        CHECK(int(t.size()) == 2 * n - 3);
        CHECK(is_triangulation(n, t));
        // all n sides present
        for (int i = 1; i <= n; ++i) {
          const sub_t side = with(with(sub_t{0}, i), i % n + 1);
          CHECK(std::find(t.begin(), t.end(), side) != t.end());
        }
        auto key = t;
        std::sort(key.begin(), key.end());
        distinct.insert(key);
      }
      CHECK(distinct.size() == tris.size());
    }
  }

  TEST_CASE("edge crossing-or-sharing relation") {
    const sub_t e13 = subset_of({1, 3}), e24 = subset_of({2, 4});
    const sub_t e12 = subset_of({1, 2}), e34 = subset_of({3, 4});
    const sub_t e23 = subset_of({2, 3});
    CHECK(edges_cross_or_share(e13, e24));   // proper crossing
    CHECK(edges_cross_or_share(e24, e13));   // symmetric
    CHECK(edges_cross_or_share(e12, e23));   // shared endpoint
    CHECK(edges_cross_or_share(e12, e12));   // same edge
    CHECK(!edges_cross_or_share(e12, e34));  // disjoint, noncrossing
    CHECK(!edges_cross_or_share(e13, subset_of({4, 5})));
  }

  TEST_CASE("maximal thrackles: counts, pairwise relation, recognized shape") {
    for (int n = 3; n <= 8; ++n) {
      CAPTURE(n);
      const auto thrs = enumerate_maximal_thrackles(n);
      CHECK(thrs.size() == (sub_t{1} << (n - 1)) - sub_t(n));
      std::set<std::vector<sub_t>> distinct;
      for (const auto& t : thrs) {
        CHECK(int(t.size()) == n);
        for (size_t a = 0; a < t.size(); ++a)
          for (size_t b = a + 1; b < t.size(); ++b)
            CHECK(edges_cross_or_share(t[a], t[b]));
        const ThrackleShape shape = thrackle_shape(n, t);
        CHECK(shape.n == n);
        CHECK(int(shape.spine.size()) == 2 * shape.r + 1);
        CHECK(shape.spine.size() + shape.leaves.size() == size_t(n));
        CHECK(std::is_sorted(shape.spine.begin(), shape.spine.end()));
        auto key = t;
        std::sort(key.begin(), key.end());
        distinct.insert(key);
      }
      CHECK(distinct.size() == thrs.size());
    }
  }

  TEST_CASE("thrackle shape of the pentagram and a starred triangle") {
    // pure spine: the 5/2 star polygon
    const std::vector<sub_t> star = {subset_of({1, 3}), subset_of({3, 5}),
                                     subset_of({2, 5}), subset_of({2, 4}),
                                     subset_of({1, 4})};
    const ThrackleShape s = thrackle_shape(5, star);
    CHECK(s.r == 2);
    CHECK(s.spine == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(s.leaves.empty());
    // triangle spine {1,3,5} with leaves 2 and 4 hanging off opposite vertices
    const std::vector<sub_t> leafy = {subset_of({1, 3}), subset_of({3, 5}),
                                      subset_of({1, 5}), subset_of({2, 5}),
                                      subset_of({2, 4})};
    CHECK_THROWS_AS(thrackle_shape(5, leafy), bad_input);
    const auto all5 = enumerate_maximal_thrackles(5);
    CHECK(all5.size() == 11);
    int with_leaves = 0;
    for (const auto& t : all5) with_leaves += !thrackle_shape(5, t).leaves.empty();
    CHECK(with_leaves == 10);  // only the pentagram is leaf-free
  }

  TEST_CASE("clique oracle on a hand-built graph") {
    // path graph a-b-c-d: maximal cliques are the three edges
    const std::vector<sub_t> verts = {1, 2, 4, 8};
    std::vector<std::vector<bool>> adj(4, std::vector<bool>(4, false));
    auto link = [&](int a, int b) { adj[a][b] = adj[b][a] = true; };
    link(0, 1);
    link(1, 2);
    link(2, 3);
    const auto got = canon(maximal_cliques(verts, adj));
    const std::vector<std::vector<sub_t>> expect = {{1, 2}, {2, 4}, {4, 8}};
    CHECK(got == expect);
  }
}
