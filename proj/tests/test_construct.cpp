#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "doctest.h"
#include "eqm/arrangement.hpp"
#include "eqm/enumerate.hpp"
#include "eqm/errors.hpp"
#include "eqm/gr2.hpp"
#include "eqm/gridpath.hpp"
#include "eqm/matrix.hpp"
#include "eqm/minor_table.hpp"
#include "eqm/polygon.hpp"
#include "eqm/registry.hpp"
#include "eqm/subset.hpp"
#include "eqm/torus.hpp"
#include "eqm/triangmat.hpp"

using namespace eqm;

namespace {

PosMatrix as_point(int n, Mat<Quad> m) {
  PosMatrix p;
  p.k = 2;
  p.n = n;
  p.kind = PosMatrix::Kind::grassmann_point;
  p.entries = std::move(m);
  return p;
}

bool same_matrix(const Mat<Quad>& a, const Mat<Quad>& b) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  for (int r = 0; r < a.rows; ++r)
    for (int c = 0; c < a.cols; ++c)
      if (quad_cmp(a(r, c), b(r, c)) != 0) return false;
  return true;
}

std::vector<sub_t> sorted_copy(std::vector<sub_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_SUITE("construct") {
  TEST_CASE("triangulation matrices with unit targets, all shapes up to n = 6") {
    for (int n = 3; n <= 6; ++n) {
      CAPTURE(n);
      for (const auto& T : enumerate_triangulations(n)) {
        const Mat<Quad> m = triangulation_matrix_ones(n, T);
        REQUIRE(m.rows == 2);
        REQUIRE(m.cols == n);
        CHECK(is_totally_positive(m));
        const MinorTable t = minor_table(as_point(n, m));
        const Quad one(Rat(1));
        for (sub_t s = first_subset(2); s; s = next_subset(s, n)) {
          const bool edge = std::find(T.begin(), T.end(), s) != T.end();
          CAPTURE(subset_str(s));
          if (edge)
            CHECK(quad_cmp(t.at(s), one) == 0);
          else
            CHECK(quad_cmp(t.at(s), one) > 0);
        }
      }
    }
  }

  TEST_CASE("ear removal order does not change the matrix") {
    for (int n = 4; n <= 6; ++n) {
      for (const auto& T : enumerate_triangulations(n)) {
        EdgeValues x;
        for (sub_t e : T) x[e] = Rat(1);
        const Mat<Quad> ref = triangulation_matrix(n, T, x);
        const auto orders = all_ear_orders(n, T);
        CHECK(!orders.empty());
        for (const auto& ord : orders)
          CHECK(same_matrix(ref, triangulation_matrix_order(n, T, x, ord)));
      }
    }
  }

  TEST_CASE("prescribed edge targets are met exactly") {
    const int n = 5;
    const std::vector<sub_t> T = {subset_of({1, 2}), subset_of({2, 3}),
                                  subset_of({3, 4}), subset_of({4, 5}),
                                  subset_of({1, 5}), subset_of({1, 3}),
                                  subset_of({1, 4})};
    REQUIRE(is_triangulation(n, T));
    RatRng rng(404);
    EdgeValues x;
    for (sub_t e : T) x[e] = rng.positive(7);
    const Mat<Quad> m = triangulation_matrix(n, T, x);
    CHECK(is_totally_positive(m));
    const MinorTable t = minor_table(as_point(n, m));
    for (const auto& [e, val] : x) CHECK(quad_cmp(t.at(e), Quad(val)) == 0);
  }

  TEST_CASE("non-triangulations are rejected") {
    // crossing chords
    std::vector<sub_t> bad = {subset_of({1, 2}), subset_of({2, 3}),
                              subset_of({3, 4}), subset_of({4, 5}),
                              subset_of({1, 5}), subset_of({1, 3}),
                              subset_of({2, 4})};
    CHECK(!is_triangulation(5, bad));
    CHECK_THROWS_AS(triangulation_matrix_ones(5, bad), not_a_triangulation);
    // missing a side
    std::vector<sub_t> open = {subset_of({1, 2}), subset_of({2, 3}),
                               subset_of({1, 3})};
    CHECK(is_triangulation(3, open));
    open.pop_back();
    CHECK(!is_triangulation(3, open));
    CHECK_THROWS_AS(triangulation_matrix_ones(3, open), not_a_triangulation);
    // too few chords
    const std::vector<sub_t> sides4 = {subset_of({1, 2}), subset_of({2, 3}),
                                       subset_of({3, 4}), subset_of({1, 4})};
    CHECK(!is_triangulation(4, sides4));
  }

  TEST_CASE("smallest class pinned to a noncrossing target set") {
    const int n = 5;
    const std::vector<sub_t> S = {subset_of({1, 3}), subset_of({1, 4})};
    const Mat<Quad> m = smallest_arrangement_2xn(n, S, Rat(1, 100));
    CHECK(is_totally_positive(m));
    const Arrangement arr =
        extract_arrangement(minor_table(as_point(n, m)), ArrMode::smallest);
    CHECK(arr.zeros.empty());
    CHECK(sorted_copy(arr.smallest()) == sorted_copy(S));
    // crossing requests are refused
    const std::vector<sub_t> crossing = {subset_of({1, 3}), subset_of({2, 4})};
    CHECK_THROWS_AS(smallest_arrangement_2xn(n, crossing, Rat(1, 100)),
                    bad_input);
  }

  TEST_CASE("reference points verify") {
    CHECK(verify_paper_matrix(RegistryId::k4_n8) == "");
    CHECK(verify_paper_matrix(RegistryId::k5a_n10) == "");
    CHECK(verify_paper_matrix(RegistryId::k5b_n10) == "");
    const RegistryEntry e = paper_matrix(RegistryId::k4_n8);
    CHECK(e.matrix.k == 4);
    CHECK(e.matrix.n == 8);
    CHECK(popcount(e.I) == 4);
    CHECK(popcount(e.J) == 4);
    CHECK(parse_registry_id(registry_id_str(RegistryId::k5b_n10)) ==
          RegistryId::k5b_n10);
    CHECK_THROWS_AS(parse_registry_id("nope"), bad_input);
  }

  TEST_CASE("bundled triangulation examples are consistent") {
    const auto exs = triangulation_examples();
    REQUIRE(exs.size() == 6);
    const int expect_n[] = {3, 4, 5, 6, 6, 6};
    for (size_t i = 0; i < exs.size(); ++i) {
      CHECK(exs[i].n == expect_n[i]);
      CHECK(is_triangulation(exs[i].n, exs[i].edges));
      CHECK(same_matrix(exs[i].matrix,
                        triangulation_matrix_ones(exs[i].n, exs[i].edges)));
    }
  }

  TEST_CASE("torus rescaling certifies a prescribed extremal family") {
    const PosMatrix pt = random_grassmann_point(2, 5, 20240515);
    const MinorTable table = minor_table(pt);
    const auto fams = enumerate_maximal_sorted(5, 2);
    const auto& S = fams[3];
    for (ExtremeMode mode : {ExtremeMode::largest, ExtremeMode::smallest}) {
      const TorusScaling sc = torus_rescale(table, S, mode);
      CHECK(sc.prec >= 256);
      CHECK(int(sc.t.size()) == 5);
      const Arrangement arr = extract_arrangement(
          sc.rescaled,
          mode == ExtremeMode::largest ? ArrMode::largest : ArrMode::smallest);
      const auto& cls =
          mode == ExtremeMode::largest ? arr.largest() : arr.smallest();
      CHECK(sorted_copy(cls) == sorted_copy(S));
      // the family's minors are pinned to 1
      for (sub_t s : S) {
        const Ival diff =
            sc.rescaled.at(s) - Ival::from_rat(Rat(1), sc.rescaled.at(s).prec());
        CHECK(diff.contains_zero());
      }
    }
  }

  TEST_CASE("perturbed rescaling shrinks the largest class to a chosen part") {
    const PosMatrix pt = random_grassmann_point(2, 5, 998);
    const MinorTable table = minor_table(pt);
    const auto& S = enumerate_maximal_sorted(5, 2).front();
    const std::vector<sub_t> keep(S.begin(), S.begin() + 3);
    const TorusScaling sc = epsilon_perturb_largest(table, S, keep);
    const Arrangement arr = extract_arrangement(sc.rescaled, ArrMode::largest);
    CHECK(sorted_copy(arr.largest()) == sorted_copy(keep));
  }

  TEST_CASE("regular polygon points classify minors by chord length") {
    {
      const IvalTable t = minor_table_2xn(regular_polygon_point(5, 256));
      const Arrangement arr = extract_arrangement(t, ArrMode::full);
      REQUIRE(arr.classes.size() == 2);
      CHECK(arr.zeros.empty());
      std::vector<sub_t> sides, stars;
      for (int i = 1; i <= 5; ++i) {
        sides.push_back(with(with(sub_t{0}, i), i % 5 + 1));
        stars.push_back(with(with(sub_t{0}, i), (i + 1) % 5 + 1));
      }
      CHECK(sorted_copy(arr.smallest()) == sorted_copy(sides));
      CHECK(sorted_copy(arr.largest()) == sorted_copy(stars));
    }
    {
      const IvalTable t = minor_table_2xn(regular_polygon_point(6, 256));
      const Arrangement arr = extract_arrangement(t, ArrMode::full);
      REQUIRE(arr.classes.size() == 3);
      CHECK(arr.classes[0].size() == 6);  // sides
      CHECK(arr.classes[1].size() == 6);  // short chords
      CHECK(arr.classes[2].size() == 3);  // diameters
    }
  }

  TEST_CASE("golden-ratio scaling patterns of the pentagon alcoves") {
    const auto pats = pentagon_lambda_patterns(256);
    REQUIRE(pats.size() == 11);
    std::map<std::vector<int>, int> tally;
    for (auto p : pats) {
      std::sort(p.begin(), p.end());
      tally[p]++;
    }
    REQUIRE(tally.size() == 3);
    CHECK(tally[{0, 0, 0, 0, 0}] == 1);
    CHECK(tally[{0, 0, 1, 1, 1}] == 5);
    CHECK(tally[{0, 1, 1, 2, 2}] == 5);
  }

  TEST_CASE("thrackle points realize their largest class") {
    // the pentagram, pure spine with r = 2
    const std::vector<sub_t> star = {subset_of({1, 3}), subset_of({3, 5}),
                                     subset_of({2, 5}), subset_of({2, 4}),
                                     subset_of({1, 4})};
    const IvalMatrix m = thrackle_matrix(5, star, 256);
    CHECK(certify_thrackle_largest(m, 5, star, 2));
    // a leafy maximal thrackle found by the enumerator
    for (const auto& t : enumerate_maximal_thrackles(5)) {
      const ThrackleShape shape = thrackle_shape(5, t);
      if (shape.leaves.empty()) continue;
      CHECK(shape.r == 1);
      const IvalMatrix lm = thrackle_matrix(5, t, 256);
      CHECK(certify_thrackle_largest(lm, 5, t, shape.r));
      break;
    }
  }

  TEST_CASE("grid path enumeration and the entry-to-minor dictionary") {
    CHECK(grid_paths(2, 3).size() == 3);
    CHECK(grid_paths(3, 3).size() == 6);
    CHECK(grid_paths(3, 4).size() == 10);
    CHECK(grid_paths(1, 4).size() == 1);
    for (const auto& p : grid_paths(3, 4)) {
      CHECK(p.size() == 6);
      CHECK(p.front() == std::pair<int, int>(1, 1));
      CHECK(p.back() == std::pair<int, int>(3, 4));
      const GridPath q = transposed_path(transposed_path(p));
      CHECK(p == q);
    }
    // transposing maps the (3,4) grid bijectively onto the (4,3) grid
    auto t34 = grid_paths(3, 4);
    for (auto& p : t34) p = transposed_path(p);
    std::sort(t34.begin(), t34.end());
    auto t43 = grid_paths(4, 3);
    std::sort(t43.begin(), t43.end());
    CHECK(t34 == t43);
    CHECK(entry_index(3, 1, 2) == subset_of({1, 2, 5}));
    CHECK(entry_index(3, 3, 1) == subset_of({2, 3, 4}));
    CHECK(entry_index(2, 2, 4) == subset_of({2, 6}));
  }

  TEST_CASE("path rescaling pins the visited entries to 1") {
    const PosMatrix m = random_tp(3, 4, 71);
    const GridPath path = grid_paths(3, 4)[4];
    const PosMatrix r = rescale_on_path(m, path);
    CHECK(is_totally_positive(r.entries));
    const Quad one(Rat(1));
    for (const auto& [i, j] : path)
      CHECK(quad_cmp(r.entries(i - 1, j - 1), one) == 0);
  }

  TEST_CASE("paths as exact extremal entry classes") {
    const int k = 3, m = 4;
    const auto paths = grid_paths(k, m);
    const GridPath& path = paths[paths.size() / 2];
    auto cells = path;
    std::sort(cells.begin(), cells.end());
    {
      const PosMatrix big = largest_entries_on_path(k, m, path, 5);
      CHECK(is_totally_positive(big.entries));
      auto classes = entry_classes(big);
      auto top = classes.back();
      std::sort(top.begin(), top.end());
      CHECK(top == cells);
    }
    {
      const PosMatrix small = smallest_entries_on_path(k, m, path, 5);
      CHECK(is_totally_positive(small.entries));
      auto classes = entry_classes(small);
      auto bottom = classes.front();
      std::sort(bottom.begin(), bottom.end());
      CHECK(bottom == cells);
    }
  }

  TEST_CASE("largest class size over the nonnegative rank-2 points") {
    const long expect[] = {3, 5, 8, 12, 16, 21, 27};
    for (int n = 3; n <= 9; ++n) {
      CAPTURE(n);
      CHECK(nonneg_gr2_max(n) == Int(expect[n - 3]));
      // independent arithmetic oracle: floor(n^2 / 3)
      CHECK(nonneg_gr2_max(n) == Int(static_cast<long>(n) * n / 3));
      const auto [tri, thr] = nonneg_gr2_bruteforce(n);
      CHECK(tri == nonneg_gr2_max(n));
      CHECK(thr == nonneg_gr2_max(n));
    }
  }
}
