#include "eqm/matrix.hpp"

#include <algorithm>

#include "eqm/rational.hpp"

namespace eqm {

Quad det_quad(Mat<Quad> m) {
  if (m.rows != m.cols) throw bad_input("det: matrix not square");
  const int n = m.rows;
  if (n == 0) return Quad(Rat(1));
  Quad sign(Rat(1));
  Quad prev(Rat(1));
  for (int p = 0; p < n - 1; ++p) {
    // Find a nonzero pivot in column p at or below row p.
    int piv = -1;
    for (int r = p; r < n; ++r) {
      if (quad_sign(m(r, p)) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return Quad(Rat(0));
    if (piv != p) {
      for (int c = 0; c < n; ++c) std::swap(m(p, c), m(piv, c));
      sign = sign * Quad(Rat(-1));
    }
    for (int r = p + 1; r < n; ++r) {
      for (int c = p + 1; c < n; ++c) {
        m(r, c) = (m(p, p) * m(r, c) - m(r, p) * m(p, c)) / prev;
      }
      m(r, p) = Quad(Rat(0));
    }
    prev = m(p, p);
  }
  return sign * m(n - 1, n - 1);
}

Quad det_cofactor(const Mat<Quad>& m) {
  if (m.rows != m.cols) throw bad_input("det: matrix not square");
  const int n = m.rows;
  if (n == 0) return Quad(Rat(1));
  if (n == 1) return m(0, 0);
  Quad acc(Rat(0));
  Quad sign(Rat(1));
  for (int c = 0; c < n; ++c) {
    Mat<Quad> sub(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c2 = 0; c2 < n; ++c2) {
        if (c2 == c) continue;
        sub(r - 1, cc++) = m(r, c2);
      }
    }
    acc = acc + sign * m(0, c) * det_cofactor(sub);
    sign = sign * Quad(Rat(-1));
  }
  return acc;
}

void PosMatrix::validate() const {
  if (k < 1 || n < 1 || k > n) throw bad_input("matrix: need 1 <= k <= n");
  if (n > 63) throw bad_input("matrix: n > 63 unsupported");
  if (entries.rows != k || entries.cols != entry_cols())
    throw bad_input("matrix: entry block has wrong shape");
}

static Mat<Quad> square_submatrix(const Mat<Quad>& m, const std::vector<int>& rows,
                                  const std::vector<int>& cols) {
  Mat<Quad> s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      s(static_cast<int>(r), static_cast<int>(c)) = m(rows[r], cols[c]);
  return s;
}

Quad plucker(const PosMatrix& m, sub_t cols) {
  if (m.kind != PosMatrix::Kind::grassmann_point)
    throw bad_input("plucker: not a grassmann point (embed first)");
  if (popcount(cols) != m.k) throw bad_input("plucker: |cols| != k");
  if (cols & ~full_set(m.n)) throw bad_input("plucker: column out of range");
  std::vector<int> ridx(m.k), cidx;
  for (int i = 0; i < m.k; ++i) ridx[i] = i;
  for (int e : elements(cols)) cidx.push_back(e - 1);
  return det_quad(square_submatrix(m.entries, ridx, cidx));
}

Quad minor_rect(const PosMatrix& m, sub_t rows, sub_t cols) {
  if (m.kind != PosMatrix::Kind::rectangular_tp)
    throw bad_input("minor_rect: not a rectangular matrix");
  if (popcount(rows) != popcount(cols)) throw bad_input("minor_rect: |I| != |J|");
  if ((rows & ~full_set(m.k)) || (cols & ~full_set(m.entry_cols())))
    throw bad_input("minor_rect: index out of range");
  std::vector<int> ridx, cidx;
  for (int e : elements(rows)) ridx.push_back(e - 1);
  for (int e : elements(cols)) cidx.push_back(e - 1);
  return det_quad(square_submatrix(m.entries, ridx, cidx));
}

PosMatrix phi_embed(const PosMatrix& rect) {
  if (rect.kind != PosMatrix::Kind::rectangular_tp)
    throw bad_input("phi_embed: expected a rectangular matrix");
  rect.validate();
  const int k = rect.k, m = rect.entry_cols();
  PosMatrix out;
  out.k = k;
  out.n = k + m;
  out.kind = PosMatrix::Kind::grassmann_point;
  out.entries = Mat<Quad>(k, k + m);
  for (int i = 1; i <= k; ++i) {
    for (int c = 0; c < k + m; ++c) out.entries(i - 1, c) = Quad(Rat(0));
    out.entries(i - 1, i - 1) = Quad(Rat(1));
    // Sign (-1)^(k-i) on the reversed row k+1-i.
    Rat s((k - i) % 2 == 0 ? 1 : -1);
    for (int j = 1; j <= m; ++j)
      out.entries(i - 1, k + j - 1) = Quad(s) * rect.entries(k + 1 - i - 1, j - 1);
  }
  return out;
}

sub_t minor_index_map(int k, sub_t rows, sub_t cols) {
  if (popcount(rows) != popcount(cols))
    throw bad_input("minor_index_map: |I| != |J|");
  sub_t out = full_set(k);
  for (int i : elements(rows)) out = without(out, k + 1 - i);
  for (int j : elements(cols)) out = with(out, j + k);
  return out;
}

PosMatrix cyclic_shift_matrix(const PosMatrix& m) {
  if (m.kind != PosMatrix::Kind::grassmann_point)
    throw bad_input("cyclic_shift: expected a grassmann point (embed first)");
  m.validate();
  PosMatrix out = m;
  Rat s((m.k - 1) % 2 == 0 ? 1 : -1);
  for (int r = 0; r < m.k; ++r) {
    out.entries(r, 0) = Quad(s) * m.entries(r, m.n - 1);
    for (int c = 1; c < m.n; ++c) out.entries(r, c) = m.entries(r, c - 1);
  }
  return out;
}

// Strictly increasing positive rationals.
static std::vector<Rat> increasing_positive(int len, RatRng& rng) {
  std::vector<Rat> xs;
  Rat acc(0);
  for (int i = 0; i < len; ++i) {
    acc += rng.positive();
    xs.push_back(acc);
  }
  return xs;
}

// Cauchy-kernel matrix a_{ij} = 1 / (x_i + y_j) with strictly increasing
// positive x and y.  Every square submatrix is again of this form, and the
// Cauchy determinant formula makes each such minor strictly positive, so the
// matrix is totally positive.
static Mat<Quad> cauchy_block(const std::vector<Rat>& x, const std::vector<Rat>& y) {
  Mat<Quad> a(static_cast<int>(x.size()), static_cast<int>(y.size()));
  for (std::size_t r = 0; r < x.size(); ++r)
    for (std::size_t c = 0; c < y.size(); ++c)
      a(static_cast<int>(r), static_cast<int>(c)) = Quad(Rat(1) / (x[r] + y[c]));
  return a;
}

static Mat<Quad> mat_mul(const Mat<Quad>& a, const Mat<Quad>& b) {
  Mat<Quad> out(a.rows, b.cols);
  for (int r = 0; r < a.rows; ++r)
    for (int c = 0; c < b.cols; ++c) {
      Quad acc(Rat(0));
      for (int t = 0; t < a.cols; ++t) acc = acc + a(r, t) * b(t, c);
      out(r, c) = acc;
    }
  return out;
}

PosMatrix random_tp(int k, int m, std::uint64_t seed) {
  if (k < 1 || m < 1) throw bad_input("random_tp: need k, m >= 1");
  RatRng rng(seed);
  // Product of two Cauchy-kernel blocks through an inner dimension
  // p >= min(k, m), with positive diagonal scalings on either side.  Each
  // factor is totally positive, and by Cauchy-Binet every d x d minor of the
  // product (d <= min(k, m) <= p) is a nonempty sum of products of positive
  // minors, so the product is totally positive.
  const int p = std::max(k, m);
  Mat<Quad> a = mat_mul(cauchy_block(increasing_positive(k, rng),
                                     increasing_positive(p, rng)),
                        cauchy_block(increasing_positive(p, rng),
                                     increasing_positive(m, rng)));
  for (int r = 0; r < k; ++r) {
    Quad s(rng.positive());
    for (int c = 0; c < m; ++c) a(r, c) = a(r, c) * s;
  }
  for (int c = 0; c < m; ++c) {
    Quad s(rng.positive());
    for (int r = 0; r < k; ++r) a(r, c) = a(r, c) * s;
  }
  PosMatrix out;
  out.k = k;
  out.n = k + m;
  out.kind = PosMatrix::Kind::rectangular_tp;
  out.entries = std::move(a);
  return out;
}

PosMatrix random_grassmann_point(int k, int n, std::uint64_t seed) {
  if (!(1 <= k && k < n)) throw bad_input("random_grassmann_point: need 1 <= k < n");
  return phi_embed(random_tp(k, n - k, seed));
}

bool is_totally_positive(const Mat<Quad>& m) {
  const int maxd = std::min(m.rows, m.cols);
  for (int d = 1; d <= maxd; ++d) {
    // All d-subsets of rows and of columns.
    for (sub_t rs = first_subset(d); rs != 0; rs = next_subset(rs, m.rows)) {
      std::vector<int> ridx;
      for (int e : elements(rs)) ridx.push_back(e - 1);
      for (sub_t cs = first_subset(d); cs != 0; cs = next_subset(cs, m.cols)) {
        std::vector<int> cidx;
        for (int e : elements(cs)) cidx.push_back(e - 1);
        if (quad_sign(det_quad(square_submatrix(m, ridx, cidx))) <= 0) return false;
      }
    }
  }
  return true;
}

}  // namespace eqm
