#include "eqm/triangmat.hpp"

#include <algorithm>
#include <set>

#include "eqm/enumerate.hpp"
#include "eqm/errors.hpp"

namespace eqm {

namespace {

bool edges_strictly_cross(sub_t x, sub_t y) {
  if ((x & y) != 0) return false;
  auto e = elements(x), f = elements(y);
  int a = e[0], b = e[1], c = f[0], d = f[1];
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

sub_t edge(int a, int b) { return with(with(0, a), b); }

Rat edge_value(const EdgeValues& x, sub_t e) {
  auto it = x.find(e);
  if (it == x.end())
    throw bad_input("triangulation_matrix: missing value on edge " + subset_str(e));
  if (sgn(it->second) <= 0)
    throw bad_input("triangulation_matrix: nonpositive value on edge " + subset_str(e));
  return it->second;
}

struct EarStep {
  int v, prev, next;
};

// One step of the ear peeling: list the interior ears of the current
// sub-triangulation on label list L.
std::vector<EarStep> interior_ears(const std::vector<int>& L,
                                   const std::set<sub_t>& edges) {
  std::vector<EarStep> out;
  for (std::size_t idx = 1; idx + 1 < L.size(); ++idx) {
    int v = L[idx], p = L[idx - 1], q = L[idx + 1];
    if (!edges.count(edge(p, v)) || !edges.count(edge(v, q)) ||
        !edges.count(edge(p, q)))
      continue;
    int deg = 0;
    for (int u : L)
      if (u != v && edges.count(edge(std::min(u, v), std::max(u, v)))) ++deg;
    if (deg == 2) out.push_back({v, p, q});
  }
  return out;
}

void remove_ear(std::vector<int>& L, std::set<sub_t>& edges, const EarStep& s) {
  edges.erase(edge(s.prev, s.v));
  edges.erase(edge(s.v, s.next));
  L.erase(std::find(L.begin(), L.end(), s.v));
}

Mat<Quad> rebuild(int n, const EdgeValues& x, const std::vector<EarStep>& steps) {
  std::vector<std::pair<Quad, Quad>> col(n + 1, {Quad(Rat(0)), Quad(Rat(0))});
  col[1] = {Quad(Rat(1)), Quad(Rat(0))};
  col[n] = {Quad(Rat(0)), Quad(edge_value(x, edge(1, n)))};
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    Rat denom = edge_value(x, edge(it->prev, it->next));
    Quad a(edge_value(x, edge(it->v, it->next)) / denom);
    Quad b(edge_value(x, edge(it->prev, it->v)) / denom);
    col[it->v] = {a * col[it->prev].first + b * col[it->next].first,
                  a * col[it->prev].second + b * col[it->next].second};
  }
  Mat<Quad> out(2, n);
  for (int j = 1; j <= n; ++j) {
    out(0, j - 1) = col[j].first;
    out(1, j - 1) = col[j].second;
  }
  return out;
}

}  // namespace

bool is_triangulation(int n, const std::vector<sub_t>& T) {
  if (n < 3) return false;
  std::set<sub_t> edges(T.begin(), T.end());
  if (edges.size() != T.size()) return false;
  if (static_cast<int>(edges.size()) != 2 * n - 3) return false;
  for (sub_t e : edges) {
    if (popcount(e) != 2 || (e & ~full_set(n))) return false;
    for (sub_t f : edges)
      if (edges_strictly_cross(e, f)) return false;
  }
  for (int i = 1; i < n; ++i)
    if (!edges.count(edge(i, i + 1))) return false;
  return edges.count(edge(1, n)) != 0;
}

Mat<Quad> triangulation_matrix(int n, const std::vector<sub_t>& T, const EdgeValues& x) {
  if (!is_triangulation(n, T))
    throw not_a_triangulation("triangulation_matrix: edge set is not a triangulation");
  std::set<sub_t> edges(T.begin(), T.end());
  std::vector<int> L;
  for (int i = 1; i <= n; ++i) L.push_back(i);
  std::vector<EarStep> steps;
  while (L.size() > 2) {
    auto ears = interior_ears(L, edges);
    if (ears.empty())
      throw not_a_triangulation("triangulation_matrix: no removable ear");
    steps.push_back(ears.front());  // smallest label first (L is sorted)
    remove_ear(L, edges, steps.back());
  }
  return rebuild(n, x, steps);
}

Mat<Quad> triangulation_matrix_ones(int n, const std::vector<sub_t>& T) {
  EdgeValues x;
  for (sub_t e : T) x[e] = Rat(1);
  return triangulation_matrix(n, T, x);
}

Mat<Quad> triangulation_matrix_order(int n, const std::vector<sub_t>& T,
                                     const EdgeValues& x, const std::vector<int>& order) {
  if (!is_triangulation(n, T))
    throw not_a_triangulation("triangulation_matrix: edge set is not a triangulation");
  std::set<sub_t> edges(T.begin(), T.end());
  std::vector<int> L;
  for (int i = 1; i <= n; ++i) L.push_back(i);
  std::vector<EarStep> steps;
  for (int v : order) {
    auto ears = interior_ears(L, edges);
    auto hit = std::find_if(ears.begin(), ears.end(),
                            [&](const EarStep& s) { return s.v == v; });
    if (hit == ears.end())
      throw bad_input("triangulation_matrix_order: not an ear at its turn");
    steps.push_back(*hit);
    remove_ear(L, edges, steps.back());
  }
  if (L.size() != 2)
    throw bad_input("triangulation_matrix_order: order does not peel to the base");
  return rebuild(n, x, steps);
}

namespace {

void ear_orders_rec(std::vector<int>& L, std::set<sub_t>& edges,
                    std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (L.size() == 2) {
    out.push_back(prefix);
    return;
  }
  for (const EarStep& s : interior_ears(L, edges)) {
    auto saved_l = L;
    auto saved_e = edges;
    prefix.push_back(s.v);
    remove_ear(L, edges, s);
    ear_orders_rec(L, edges, prefix, out);
    prefix.pop_back();
    L = saved_l;
    edges = saved_e;
  }
}

}  // namespace

std::vector<std::vector<int>> all_ear_orders(int n, const std::vector<sub_t>& T) {
  if (!is_triangulation(n, T))
    throw not_a_triangulation("all_ear_orders: edge set is not a triangulation");
  std::set<sub_t> edges(T.begin(), T.end());
  std::vector<int> L;
  for (int i = 1; i <= n; ++i) L.push_back(i);
  std::vector<int> prefix;
  std::vector<std::vector<int>> out;
  ear_orders_rec(L, edges, prefix, out);
  return out;
}

Mat<Quad> smallest_arrangement_2xn(int n, const std::vector<sub_t>& S, const Rat& eps) {
  if (S.empty()) throw bad_input("smallest_arrangement_2xn: empty edge set");
  if (sgn(eps) <= 0 || eps > Rat(1, 100))
    throw bad_input("smallest_arrangement_2xn: need 0 < eps <= 1/100");
  std::set<sub_t> sset;
  for (sub_t e : S) {
    if (popcount(e) != 2 || (e & ~full_set(n)))
      throw bad_input("smallest_arrangement_2xn: not a 2-subset of [n]");
    sset.insert(e);
  }
  for (sub_t e : sset)
    for (sub_t f : sset)
      if (edges_strictly_cross(e, f))
        throw bad_input("smallest_arrangement_2xn: crossing edges");
  // Complete to a triangulation: sides first, then chords in subset order.
  std::set<sub_t> tset = sset;
  for (int i = 1; i < n; ++i) tset.insert(edge(i, i + 1));
  tset.insert(edge(1, n));
  for (int a = 1; a <= n; ++a)
    for (int b = a + 2; b <= n; ++b) {
      if (a == 1 && b == n) continue;
      sub_t cand = edge(a, b);
      if (tset.count(cand)) continue;
      bool ok = true;
      for (sub_t f : tset)
        if (edges_strictly_cross(cand, f)) {
          ok = false;
          break;
        }
      if (ok) tset.insert(cand);
    }
  std::vector<sub_t> T(tset.begin(), tset.end());
  EdgeValues x;
  for (sub_t e : T) x[e] = sset.count(e) ? Rat(1) : Rat(1) + eps;
  return triangulation_matrix(n, T, x);
}

}  // namespace eqm
