#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eqm/errors.hpp"
#include "eqm/quadext.hpp"
#include "eqm/subset.hpp"

namespace eqm {

template <class T>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  T& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const T& operator()(int r, int c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }
};

// Determinant by Bareiss-style fraction-free elimination; works over any
// exact field type with +,-,*,/ and an is-zero test.
Quad det_quad(Mat<Quad> m);
// Cofactor expansion, the independent oracle for small sizes (n <= 4 useful).
Quad det_cofactor(const Mat<Quad>& m);

// A point of the nonnegative Grassmannian or a totally positive rectangular
// matrix, with exact entries.
//
//   grassmann_point : entries is k x n, full rank k.
//   rectangular_tp  : entries is k x (n - k); n is the ambient Grassmannian
//                     size of its embedding (rows + cols), so minor tables of
//                     both kinds share the same index space.
struct PosMatrix {
  enum class Kind { grassmann_point, rectangular_tp };
  int k = 0;
  int n = 0;
  Kind kind = Kind::grassmann_point;
  Mat<Quad> entries;

  int entry_cols() const {
    return kind == Kind::grassmann_point ? n : n - k;
  }
  void validate() const;  // throws bad_input on shape violations
};

// Maximal minor on the given column set (|cols| == k) of a grassmann_point.
Quad plucker(const PosMatrix& m, sub_t cols);

// Minor of a rectangular matrix on row set I and column set J (|I| == |J|).
Quad minor_rect(const PosMatrix& m, sub_t rows, sub_t cols);

// Row-reversal-with-signs embedding of a k x m totally positive matrix as a
// k x (m+k) Grassmannian point: row i gets e_i followed by
// (-1)^(k-i) * (entry row k+1-i).
PosMatrix phi_embed(const PosMatrix& rect);

// The column set of the embedded matrix whose maximal minor equals the
// (I, J) minor of the rectangular matrix.
sub_t minor_index_map(int k, sub_t rows, sub_t cols);

// [v1, ..., vn] -> [(-1)^(k-1) vn, v1, ..., v_{n-1}]; Plucker coordinates
// permute by i -> i+1 (mod n).
PosMatrix cyclic_shift_matrix(const PosMatrix& m);

// Random totally positive k x m matrix (all minors of all sizes positive),
// built as a product of elementary bidiagonal factors with positive rational
// parameters in (0, 10]; deterministic in the seed.
PosMatrix random_tp(int k, int m, std::uint64_t seed);

// Random TP point of the Grassmannian: phi_embed(random_tp(k, n-k, seed)).
PosMatrix random_grassmann_point(int k, int n, std::uint64_t seed);

// Exhaustive total positivity check (all square minors of all sizes).
bool is_totally_positive(const Mat<Quad>& m);

}  // namespace eqm
