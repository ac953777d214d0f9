#include "eqm/alcove.hpp"

#include <algorithm>
#include <optional>

#include "eqm/arrangement.hpp"
#include "eqm/enumerate.hpp"
#include "eqm/errors.hpp"

namespace eqm {

long separation_distance(const std::vector<sub_t>& S, sub_t J, int n) {
  if (S.empty()) throw bad_input("separation_distance: empty family");
  long total = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      sub_t window = interval_set(i, j);
      int lo = n + 1, hi = -1;
      for (sub_t I : S) {
        int c = popcount(I & window);
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      }
      int beta = popcount(J & window);
      if (beta < lo) total += lo - beta;
      if (beta > hi) total += beta - hi;
    }
  }
  return total;
}

bool is_sort_closed(const std::vector<sub_t>& S, int n) {
  (void)n;
  std::vector<sub_t> sorted_s = S;
  std::sort(sorted_s.begin(), sorted_s.end());
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = i + 1; j < S.size(); ++j) {
      auto [a, b] = sort_pair(S[i], S[j]);
      if (!std::binary_search(sorted_s.begin(), sorted_s.end(), a) ||
          !std::binary_search(sorted_s.begin(), sorted_s.end(), b))
        return false;
    }
  return true;
}

int affine_dim(const std::vector<sub_t>& S, int n) {
  if (S.empty()) return -1;
  // Rank over Q of { e_I - e_{S0} }, by integer echelon elimination.
  std::vector<std::vector<long>> rows;
  for (std::size_t i = 1; i < S.size(); ++i) {
    std::vector<long> v(n, 0);
    for (int e : elements(S[i])) v[e - 1] += 1;
    for (int e : elements(S[0])) v[e - 1] -= 1;
    rows.push_back(std::move(v));
  }
  int rank = 0;
  int col = 0;
  for (; col < n && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col] == 0) continue;
      // Fraction-free: r <- rows[rank][col]*r - rows[r][col]*rank-row.
      long a = rows[rank][col], b = rows[r][col];
      for (int c = col; c < n; ++c) rows[r][c] = a * rows[r][c] - b * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<sub_t>> maximal_sorted_subsets(const std::vector<sub_t>& S,
                                                       int n) {
  std::vector<sub_t> verts = S;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<std::vector<bool>> adj(verts.size(),
                                     std::vector<bool>(verts.size(), false));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (is_sorted_pair(verts[i], verts[j], n)) adj[i][j] = adj[j][i] = true;
  return maximal_cliques(verts, adj);
}

long count_alcoves(const std::vector<sub_t>& S, int n) {
  if (!is_sort_closed(S, n))
    throw bad_input("count_alcoves: family is not sort-closed");
  const int d = affine_dim(S, n);
  auto families = maximal_sorted_subsets(S, n);
  for (const auto& f : families)
    if (static_cast<int>(f.size()) != d + 1)
      throw bad_input("count_alcoves: maximal sorted subfamily of unexpected size");
  return static_cast<long>(families.size());
}

namespace {

// Echelon-form basis of the integer lattice spanned by the given vectors.
// Rows are kept sorted by pivot column; pivot entries positive.
struct ZLattice {
  std::vector<std::vector<Int>> rows;

  static int leading(const std::vector<Int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) return static_cast<int>(i);
    return -1;
  }

  void insert(std::vector<Int> v) {
    for (;;) {
      int l = leading(v);
      if (l < 0) return;
      bool hit = false;
      for (auto& b : rows) {
        int p = leading(b);
        if (p != l) continue;
        hit = true;
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                   b[l].get_mpz_t(), v[l].get_mpz_t());
        Int bl = b[l] / g, vl = v[l] / g;
        std::vector<Int> nb(b.size()), nv(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
          nb[i] = s * b[i] + t * v[i];
          nv[i] = bl * v[i] - vl * b[i];
        }
        b = std::move(nb);
        v = std::move(nv);
        break;
      }
      if (!hit) {
        if (v[l] < 0)
          for (auto& x : v) x = -x;
        rows.push_back(std::move(v));
        std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
          return leading(a) < leading(b);
        });
        return;
      }
    }
  }

  // Coordinates of v in this basis; nullopt if v is outside the lattice.
  std::optional<std::vector<Int>> coords(std::vector<Int> v) const {
    std::vector<Int> c(rows.size(), Int(0));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      int p = leading(rows[r]);
      if (p < 0 || v[p] == 0) continue;
      Int q, rem;
      mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), v[p].get_mpz_t(),
                  rows[r][p].get_mpz_t());
      if (rem != 0) return std::nullopt;
      c[r] = q;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= q * rows[r][i];
    }
    for (const Int& x : v)
      if (x != 0) return std::nullopt;
    return c;
  }
};

Int det_int_bareiss(std::vector<std::vector<Int>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return Int(1);
  Int sign(1), prev(1);
  for (int p = 0; p < n - 1; ++p) {
    int piv = -1;
    for (int r = p; r < n; ++r)
      if (m[r][p] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Int(0);
    if (piv != p) {
      std::swap(m[p], m[piv]);
      sign = -sign;
    }
    for (int r = p + 1; r < n; ++r) {
      for (int c = p + 1; c < n; ++c)
        m[r][c] = (m[p][p] * m[r][c] - m[r][p] * m[p][c]) / prev;
      m[r][p] = 0;
    }
    prev = m[p][p];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<Int> indicator_diff(sub_t a, sub_t b, int n) {
  std::vector<Int> v(n, Int(0));
  for (int e : elements(a)) v[e - 1] += 1;
  for (int e : elements(b)) v[e - 1] -= 1;
  return v;
}

}  // namespace

bool simplices_unimodular(const std::vector<sub_t>& S,
                          const std::vector<std::vector<sub_t>>& families, int n) {
  if (S.empty()) throw bad_input("simplices_unimodular: empty family");
  ZLattice lat;
  for (std::size_t i = 1; i < S.size(); ++i)
    lat.insert(indicator_diff(S[i], S[0], n));
  const std::size_t d = lat.rows.size();
  for (const auto& f : families) {
    if (f.size() != d + 1) return false;
    std::vector<std::vector<Int>> coords;
    for (std::size_t i = 1; i < f.size(); ++i) {
      auto c = lat.coords(indicator_diff(f[i], f[0], n));
      if (!c) return false;  // vertex outside the lattice of S
      coords.push_back(std::move(*c));
    }
    Int det = det_int_bareiss(std::move(coords));
    if (det != 1 && det != -1) return false;
  }
  return true;
}

}  // namespace eqm
