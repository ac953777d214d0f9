#include "eqm/enumerate.hpp"

#include <algorithm>

#include "eqm/arrangement.hpp"
#include "eqm/errors.hpp"

namespace eqm {

Int eulerian(unsigned n, unsigned j) {
  if (j >= n) return (n == 0 && j == 0) ? Int(1) : Int(0);
  // A(n, j) = (j+1) A(n-1, j) + (n-j) A(n-1, j-1), A(1, 0) = 1.
  std::vector<Int> row{Int(1)};  // n = 1
  for (unsigned m = 2; m <= n; ++m) {
    std::vector<Int> next(m, Int(0));
    for (unsigned t = 0; t < m; ++t) {
      Int acc(0);
      if (t < row.size()) acc += Int(t + 1) * row[t];
      if (t >= 1 && t - 1 < row.size()) acc += Int(m - t) * row[t - 1];
      next[t] = acc;
    }
    row = std::move(next);
  }
  return row[j];
}

Int catalan(unsigned n) {
  Int b = binomial(2 * static_cast<long>(n), static_cast<long>(n));
  return b / Int(n + 1);
}

namespace {

// Bron-Kerbosch maximal clique enumeration over an index-based adjacency
// matrix; with_pivot selects the standard pivoting variant.
void bron_kerbosch(std::vector<int>& R, std::vector<int> P, std::vector<int> X,
                   const std::vector<std::vector<bool>>& adj, bool with_pivot,
                   std::vector<std::vector<int>>& out) {
  if (P.empty() && X.empty()) {
    out.push_back(R);
    return;
  }
  std::vector<int> candidates = P;
  if (with_pivot) {
    int pivot = -1, best = -1;
    for (int u : P) {
      int deg = 0;
      for (int v : P)
        if (adj[u][v]) ++deg;
      if (deg > best) {
        best = deg;
        pivot = u;
      }
    }
    for (int u : X) {
      int deg = 0;
      for (int v : P)
        if (adj[u][v]) ++deg;
      if (deg > best) {
        best = deg;
        pivot = u;
      }
    }
    candidates.clear();
    for (int v : P)
      if (!adj[pivot][v]) candidates.push_back(v);
  }
  for (int v : candidates) {
    std::vector<int> P2, X2;
    for (int w : P)
      if (adj[v][w]) P2.push_back(w);
    for (int w : X)
      if (adj[v][w]) X2.push_back(w);
    R.push_back(v);
    bron_kerbosch(R, std::move(P2), std::move(X2), adj, with_pivot, out);
    R.pop_back();
    P.erase(std::find(P.begin(), P.end(), v));
    X.push_back(v);
  }
}

std::vector<std::vector<sub_t>> cliques_of_subsets(
    const std::vector<sub_t>& verts, const std::vector<std::vector<bool>>& adj,
    bool with_pivot) {
  std::vector<int> R, P, X;
  for (std::size_t i = 0; i < verts.size(); ++i) P.push_back(static_cast<int>(i));
  std::vector<std::vector<int>> raw;
  bron_kerbosch(R, std::move(P), std::move(X), adj, with_pivot, raw);
  std::vector<std::vector<sub_t>> out;
  out.reserve(raw.size());
  for (auto& c : raw) {
    std::vector<sub_t> fam;
    fam.reserve(c.size());
    for (int i : c) fam.push_back(verts[i]);
    std::sort(fam.begin(), fam.end());
    out.push_back(std::move(fam));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::vector<sub_t>> enumerate_maximal_sorted(int n, int k) {
  if (!(1 <= k && k <= n) || n > 63) throw bad_input("enumerate_maximal_sorted: bad (n, k)");
  std::vector<sub_t> verts;
  for (sub_t s = first_subset(k); s != 0; s = next_subset(s, n)) verts.push_back(s);
  std::vector<std::vector<bool>> adj(verts.size(),
                                     std::vector<bool>(verts.size(), false));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (is_sorted_pair(verts[i], verts[j], n))
        adj[i][j] = adj[j][i] = true;
  return cliques_of_subsets(verts, adj, /*with_pivot=*/true);
}

namespace {

// Diagonal sets of triangulations of the sub-polygon on consecutive vertices
// i, i+1, ..., j, using chord (i, j) as one side.
std::vector<std::vector<sub_t>> polygon_diagonals(int i, int j) {
  std::vector<std::vector<sub_t>> out;
  if (j - i <= 1) {
    out.emplace_back();
    return out;
  }
  for (int t = i + 1; t < j; ++t) {
    auto left = polygon_diagonals(i, t);
    auto right = polygon_diagonals(t, j);
    for (const auto& l : left)
      for (const auto& r : right) {
        std::vector<sub_t> d = l;
        d.insert(d.end(), r.begin(), r.end());
        if (t - i >= 2) d.push_back(with(with(0, i), t));
        if (j - t >= 2) d.push_back(with(with(0, t), j));
        out.push_back(std::move(d));
      }
  }
  return out;
}

}  // namespace

std::vector<std::vector<sub_t>> enumerate_triangulations(int n) {
  if (n < 3 || n > 63) throw bad_input("enumerate_triangulations: need 3 <= n <= 63");
  std::vector<sub_t> sides;
  for (int i = 1; i < n; ++i) sides.push_back(with(with(0, i), i + 1));
  sides.push_back(with(with(0, 1), n));
  auto diag = polygon_diagonals(1, n);
  std::vector<std::vector<sub_t>> out;
  out.reserve(diag.size());
  for (auto& d : diag) {
    std::vector<sub_t> e = sides;
    e.insert(e.end(), d.begin(), d.end());
    std::sort(e.begin(), e.end());
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<sub_t>> enumerate_maximal_thrackles(int n) {
  if (n < 3 || n > 63) throw bad_input("enumerate_maximal_thrackles: need 3 <= n <= 63");
  std::vector<std::vector<sub_t>> out;
  for (int size = 3; size <= n; size += 2) {
    for (sub_t A = first_subset(size); A != 0; A = next_subset(A, n)) {
      std::vector<int> a = elements(A);  // a_1 < ... < a_{2r+1}
      const int p = size;                // = 2r + 1
      const int r = (p - 1) / 2;
      std::vector<sub_t> edges;
      // Star-polygon spine: a_i -- a_{i+r} cyclically.
      for (int i = 0; i < p; ++i)
        edges.push_back(with(with(0, a[i]), a[(i + r) % p]));
      // Leaves: v strictly between a_j and a_{j+1} (cyclically) hangs off the
      // spine vertex opposite that arc.
      for (int v = 1; v <= n; ++v) {
        if (contains(A, v)) continue;
        int j = p - 1;  // default: after a_{p-1} (i.e. between a_p and a_1)
        for (int i = 0; i + 1 < p; ++i)
          if (a[i] < v && v < a[i + 1]) {
            j = i;
            break;
          }
        if (v < a[0]) j = p - 1;  // before a_1 is the same wrap arc
        int partner = a[(j + 1 + r) % p];
        edges.push_back(with(with(0, v), partner));
      }
      std::sort(edges.begin(), edges.end());
      out.push_back(std::move(edges));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool edges_cross_or_share(sub_t x, sub_t y) {
  if ((x & y) != 0) return true;
  auto e = elements(x), f = elements(y);
  if (e.size() != 2 || f.size() != 2) throw bad_input("edges_cross_or_share: not 2-subsets");
  int a = e[0], b = e[1], c = f[0], d = f[1];
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

std::vector<std::vector<sub_t>> maximal_cliques(
    const std::vector<sub_t>& verts, const std::vector<std::vector<bool>>& adj) {
  if (adj.size() != verts.size()) throw bad_input("maximal_cliques: adjacency size mismatch");
  return cliques_of_subsets(verts, adj, /*with_pivot=*/false);
}

}  // namespace eqm
