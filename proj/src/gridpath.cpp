#include "eqm/gridpath.hpp"

#include <algorithm>

#include "eqm/errors.hpp"
#include "eqm/hadamard.hpp"
#include "eqm/quadext.hpp"

namespace eqm {

namespace {

void extend_paths(int k, int m, GridPath& cur, std::vector<GridPath>& out) {
  auto [i, j] = cur.back();
  if (i == k && j == m) {
    out.push_back(cur);
    return;
  }
  if (i < k) {
    cur.emplace_back(i + 1, j);
    extend_paths(k, m, cur, out);
    cur.pop_back();
  }
  if (j < m) {
    cur.emplace_back(i, j + 1);
    extend_paths(k, m, cur, out);
    cur.pop_back();
  }
}

void check_staircase(int k, int m, const GridPath& p) {
  if (p.empty() || p.front() != std::make_pair(1, 1) ||
      p.back() != std::make_pair(k, m))
    throw bad_input("grid path: must run from (1,1) to (k,m)");
  for (std::size_t t = 1; t < p.size(); ++t) {
    int di = p[t].first - p[t - 1].first, dj = p[t].second - p[t - 1].second;
    if (!((di == 1 && dj == 0) || (di == 0 && dj == 1)))
      throw bad_input("grid path: steps must increase one coordinate by 1");
  }
}

void check_transposed(int k, int m, const GridPath& p) {
  if (p.empty() || p.front() != std::make_pair(1, m) ||
      p.back() != std::make_pair(k, 1))
    throw bad_input("transposed grid path: must run from (1,m) to (k,1)");
  for (std::size_t t = 1; t < p.size(); ++t) {
    int di = p[t].first - p[t - 1].first, dj = p[t].second - p[t - 1].second;
    if (!((di == 1 && dj == 0) || (di == 0 && dj == -1)))
      throw bad_input("transposed grid path: bad step");
  }
}

}  // namespace

std::vector<GridPath> grid_paths(int k, int m) {
  if (k < 1 || m < 1) throw bad_input("grid_paths: need k, m >= 1");
  std::vector<GridPath> out;
  GridPath cur{{1, 1}};
  extend_paths(k, m, cur, out);
  return out;
}

GridPath transposed_path(const GridPath& p) {
  GridPath q;
  q.reserve(p.size());
  for (auto [i, j] : p) q.emplace_back(j, i);
  return q;
}

sub_t entry_index(int k, int i, int j) {
  return minor_index_map(k, with(0, i), with(0, j));
}

std::vector<std::vector<std::pair<int, int>>> entry_classes(const PosMatrix& m) {
  if (m.kind != PosMatrix::Kind::rectangular_tp)
    throw bad_input("entry_classes: expected a rectangular matrix");
  m.validate();
  std::vector<std::pair<Quad, std::pair<int, int>>> items;
  for (int i = 1; i <= m.k; ++i)
    for (int j = 1; j <= m.entry_cols(); ++j)
      items.emplace_back(m.entries(i - 1, j - 1), std::make_pair(i, j));
  std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
    int c = quad_cmp(x.first, y.first);
    if (c != 0) return c < 0;
    return x.second < y.second;
  });
  std::vector<std::vector<std::pair<int, int>>> classes;
  for (std::size_t t = 0; t < items.size(); ++t) {
    if (t == 0 || quad_cmp(items[t].first, items[t - 1].first) != 0)
      classes.emplace_back();
    classes.back().push_back(items[t].second);
  }
  return classes;
}

PosMatrix rescale_on_path(const PosMatrix& m, const GridPath& path) {
  if (m.kind != PosMatrix::Kind::rectangular_tp)
    throw bad_input("rescale_on_path: expected a rectangular matrix");
  m.validate();
  const int k = m.k, cols = m.entry_cols();
  check_staircase(k, cols, path);
  // The path's cells, read as edges of the row-column incidence graph, form
  // a spanning tree, so the scaling factors are determined by r_1 = 1 and
  // r_i * c_j * a_ij = 1 along the path.
  std::vector<Quad> r(k + 1, Quad(Rat(0))), c(cols + 1, Quad(Rat(0)));
  std::vector<bool> rknown(k + 1, false), cknown(cols + 1, false);
  r[1] = Quad(Rat(1));
  rknown[1] = true;
  for (auto [i, j] : path) {
    const Quad& a = m.entries(i - 1, j - 1);
    if (rknown[i] && !cknown[j]) {
      c[j] = Quad(Rat(1)) / (r[i] * a);
      cknown[j] = true;
    } else if (cknown[j] && !rknown[i]) {
      r[i] = Quad(Rat(1)) / (c[j] * a);
      rknown[i] = true;
    }
  }
  PosMatrix out = m;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= cols; ++j)
      out.entries(i - 1, j - 1) = r[i] * c[j] * m.entries(i - 1, j - 1);
  return out;
}

PosMatrix largest_entries_on_path(int k, int m, const GridPath& path,
                                  std::uint64_t seed) {
  check_staircase(k, m, path);
  return rescale_on_path(random_tp(k, m, seed), path);
}

PosMatrix smallest_entries_on_path(int k, int m, const GridPath& path,
                                   std::uint64_t seed) {
  check_transposed(k, m, path);
  // Reciprocal-flip bijection: cell (i,j) of the output comes from cell
  // (j, k+1-i) of an m-by-k matrix, turning largest entries into smallest
  // ones; a Hadamard power then restores total positivity without changing
  // the order of the entries.
  GridPath pre;
  pre.reserve(path.size());
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    pre.emplace_back(it->second, k + 1 - it->first);
  check_staircase(m, k, pre);
  PosMatrix big = largest_entries_on_path(m, k, pre, seed);
  Mat<Quad> flipped = flip_reciprocal(big.entries);
  int e = find_tp_hadamard_exponent(flipped);
  PosMatrix out;
  out.k = k;
  out.n = k + m;
  out.kind = PosMatrix::Kind::rectangular_tp;
  out.entries = hadamard_power(flipped, e);
  return out;
}

}  // namespace eqm
