#include "doctest.h"

#include <vector>

#include "eqm/arrangement.hpp"
#include "eqm/errors.hpp"
#include "eqm/hadamard.hpp"
#include "eqm/matrix.hpp"
#include "eqm/minor_table.hpp"
#include "eqm/rational.hpp"
#include "eqm/subset.hpp"

using namespace eqm;

namespace {

Mat<Quad> random_rat_matrix(int r, int c, std::uint64_t seed) {
  RatRng rng(seed);
  Mat<Quad> m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = Quad(rng.positive(10) - Rat(5));
  return m;
}

Mat<Quad> mat2(std::vector<std::vector<long>> rows) {
  Mat<Quad> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m(i, j) = Quad(rows[i][j]);
  return m;
}

}  // namespace

TEST_SUITE("matrix") {
  TEST_CASE("bareiss determinant agrees with cofactor expansion") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
      for (int sz = 1; sz <= 4; ++sz) {
        const Mat<Quad> m = random_rat_matrix(sz, sz, seed * 100 + sz);
        CHECK(quad_cmp(det_quad(m), det_cofactor(m)) == 0);
      }
    // entries in a quadratic extension (one shared radicand)
    RatRng rng(77);
    Mat<Quad> q(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) q(i, j) = Quad(rng.positive(5), rng.positive(5) - Rat(2), 7);
    CHECK(quad_cmp(det_quad(q), det_cofactor(q)) == 0);
    // singular matrix
    Mat<Quad> s = mat2({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}});
    CHECK(quad_sign(det_quad(s)) == 0);
  }

  TEST_CASE("plucker coordinates and shape checks") {
    const PosMatrix m = random_grassmann_point(3, 6, 5);
    m.validate();
    CHECK(m.k == 3);
    CHECK(m.n == 6);
    CHECK(m.entry_cols() == 6);
    for (sub_t s = first_subset(3); s; s = next_subset(s, 6)) CHECK(quad_sign(plucker(m, s)) > 0);
    CHECK_THROWS_AS(plucker(m, subset_of({1, 2})), bad_input);       // wrong size
    CHECK_THROWS_AS(plucker(m, subset_of({1, 2, 7})), bad_input);    // out of range
  }

  TEST_CASE("cyclic shift permutes the coordinates by i -> i+1") {
    // k = 2, n = 3: the image's {1,2} coordinate is the source's {1,3} one
    PosMatrix m;
    m.k = 2;
    m.n = 3;
    m.kind = PosMatrix::Kind::grassmann_point;
    m.entries = mat2({{1, 2, 3}, {4, 5, 7}});
    const PosMatrix im = cyclic_shift_matrix(m);
    CHECK(quad_cmp(plucker(im, subset_of({1, 2})), plucker(m, subset_of({1, 3}))) == 0);
    // general law on a random point, all subsets
    const PosMatrix g = random_grassmann_point(3, 6, 11);
    const PosMatrix gi = cyclic_shift_matrix(g);
    for (sub_t s = first_subset(3); s; s = next_subset(s, 6))
      CHECK(quad_cmp(plucker(gi, cyclic_shift_set(s, 6)), plucker(g, s)) == 0);
    // six shifts come back to the same coordinates
    PosMatrix r = g;
    for (int i = 0; i < 6; ++i) r = cyclic_shift_matrix(r);
    for (sub_t s = first_subset(3); s; s = next_subset(s, 6))
      CHECK(quad_cmp(plucker(r, s), plucker(g, s)) == 0);
  }

  TEST_CASE("random TP matrices are totally positive") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
      const PosMatrix m = random_tp(3, 4, seed);
      CHECK(m.kind == PosMatrix::Kind::rectangular_tp);
      CHECK(m.k == 3);
      CHECK(m.n == 7);
      CHECK(is_totally_positive(m.entries));
    }
  }

  TEST_CASE("row-reversal embedding maps rectangular minors to pluckers") {
    const PosMatrix rect = random_tp(3, 3, 42);
    const PosMatrix emb = phi_embed(rect);
    CHECK(emb.kind == PosMatrix::Kind::grassmann_point);
    CHECK(emb.n == 6);
    for (int sz = 1; sz <= 3; ++sz)
      for (sub_t I = first_subset(sz); I; I = next_subset(I, 3))
        for (sub_t J = first_subset(sz); J; J = next_subset(J, 3)) {
          const sub_t idx = minor_index_map(3, I, J);
          CHECK(quad_cmp(minor_rect(rect, I, J), plucker(emb, idx)) == 0);
        }
    // the minor table of a rectangular matrix is the table of its embedding
    const MinorTable t = minor_table(rect);
    CHECK(t.n == 6);
    CHECK(t.k == 3);
    CHECK(quad_cmp(t.at(minor_index_map(3, subset_of({1, 2}), subset_of({2, 3}))),
                   minor_rect(rect, subset_of({1, 2}), subset_of({2, 3}))) == 0);
  }

  TEST_CASE("minor table matches direct pluckers and survives intervals") {
    const PosMatrix g = random_grassmann_point(3, 6, 9);
    const MinorTable t = minor_table(g);
    CHECK(Int(t.v.size()) == binomial(6, 3));
    for (sub_t s = first_subset(3); s; s = next_subset(s, 6))
      CHECK(quad_cmp(t.at(s), plucker(g, s)) == 0);
    const IvalTable it = to_intervals(t, 256);
    for (sub_t s = first_subset(3); s; s = next_subset(s, 6)) {
      const Ival exact = Ival::from_quad(t.at(s), 256);
      CHECK(!certainly_less(it.at(s), exact));
      CHECK(!certainly_greater(it.at(s), exact));
    }
  }
}

TEST_SUITE("hadamard") {
  TEST_CASE("entrywise powers") {
    const Mat<Quad> m = mat2({{1, 2}, {3, 4}});
    const Mat<Quad> c = hadamard_power(m, 3);
    CHECK(quad_cmp(c(0, 1), Quad(8L)) == 0);
    CHECK(quad_cmp(c(1, 0), Quad(27L)) == 0);
    CHECK(quad_cmp(hadamard_power(m, 1)(1, 1), Quad(4L)) == 0);
    CHECK_THROWS_AS(hadamard_power(m, 0), bad_input);
    CHECK_THROWS_AS(hadamard_power(m, -1), bad_input);
  }

  TEST_CASE("flip reciprocal pairs largest with smallest") {
    const Mat<Quad> m = mat2({{1, 2, 3}, {4, 5, 6}});
    const Mat<Quad> f = flip_reciprocal(m);  // b_ij = 1 / a_{j, m+1-i}
    CHECK(f.rows == 3);
    CHECK(f.cols == 2);
    CHECK(quad_cmp(f(0, 0), Quad(Rat(1, 3))) == 0);   // 1 / a_{1,3}
    CHECK(quad_cmp(f(2, 1), Quad(Rat(1, 4))) == 0);   // 1 / a_{2,1}
    CHECK(quad_cmp(f(1, 0), Quad(Rat(1, 2))) == 0);   // 1 / a_{1,2}
  }

  TEST_CASE("smallest totally positive Hadamard exponent") {
    // all 2x2 minors positive, determinant negative; the determinant
    // 175^e - 169^e - 140^e + 2*104^e - 80^e first turns positive at e = 6
    const Mat<Quad> m = mat2({{1, 2, 4}, {2, 5, 13}, {4, 13, 35}});
    CHECK(!is_totally_positive(m));
    CHECK(find_tp_hadamard_exponent(m) == 6);
    CHECK(is_totally_positive(hadamard_power(m, 6)));
    CHECK(!is_totally_positive(hadamard_power(m, 5)));
    // an already TP matrix answers 1
    CHECK(find_tp_hadamard_exponent(mat2({{2, 1}, {1, 2}})) == 1);
    // a 2x2 with negative determinant can never be fixed
    CHECK_THROWS_AS(find_tp_hadamard_exponent(mat2({{2, 3}, {3, 2}}), 8), cap_exceeded);
  }
}

TEST_SUITE("arrangement-core") {
  TEST_CASE("exact extraction orders classes strictly") {
    MinorTable t;
    t.n = 4;
    t.k = 1;
    t.v = {Quad(2L), Quad(1L), Quad(3L), Quad(1L)};  // {1},{2},{3},{4} in colex
    const Arrangement a = extract_arrangement(t, ArrMode::full);
    CHECK(a.zeros.empty());
    REQUIRE(a.classes.size() == 3);
    CHECK(a.classes[0] == std::vector<sub_t>{subset_of({2}), subset_of({4})});
    CHECK(a.classes[1] == std::vector<sub_t>{subset_of({1})});
    CHECK(a.classes[2] == std::vector<sub_t>{subset_of({3})});
    CHECK(a.smallest() == a.classes.front());
    CHECK(a.largest() == a.classes.back());
  }

  TEST_CASE("zero minors split off") {
    MinorTable t;
    t.n = 4;
    t.k = 1;
    t.v = {Quad(1L), Quad(0L), Quad(2L), Quad(1L)};
    const Arrangement a = extract_arrangement(t, ArrMode::full);
    CHECK(a.zeros == std::vector<sub_t>{subset_of({2})});
    REQUIRE(a.classes.size() == 2);
    CHECK(a.classes[0] == std::vector<sub_t>{subset_of({1}), subset_of({4})});
  }

  TEST_CASE("interval extraction certifies the extremal class") {
    MinorTable t;
    t.n = 3;
    t.k = 1;
    t.v = {Quad(1L), Quad(1L), Quad(2L)};
    const Arrangement a = extract_arrangement(to_intervals(t, 256), ArrMode::smallest);
    REQUIRE(a.classes.size() == 2);
    CHECK(a.classes[0] == std::vector<sub_t>{subset_of({1}), subset_of({2})});
    const Arrangement b = extract_arrangement(to_intervals(t, 256), ArrMode::largest);
    CHECK(b.classes.back() == std::vector<sub_t>{subset_of({3})});
  }

  TEST_CASE("straddling near-ties are refused, not guessed") {
    // 1 and 1 + 2^-60 at 48 bits of precision: neither equal within 2^-128
    // nor certifiably distinct
    IvalTable t;
    t.n = 2;
    t.k = 1;
    const Rat close = Rat(1) + Rat(Int(1), Int(1) << 60);
    t.v.push_back(Ival::from_rat(Rat(1), 48));
    t.v.push_back(Ival::from_rat(close, 48));
    CHECK_THROWS_AS(extract_arrangement(t, ArrMode::full, 128), undecided_comparison);
  }
}
