#include "eqm/polygon.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "eqm/enumerate.hpp"
#include "eqm/errors.hpp"
#include "eqm/quadext.hpp"
#include "eqm/torus.hpp"

namespace eqm {

ThrackleShape thrackle_shape(int n, const std::vector<sub_t>& edges) {
  if (n < 3) throw bad_input("thrackle_shape: need n >= 3");
  if (static_cast<int>(edges.size()) != n)
    throw bad_input("thrackle_shape: a maximal thrackle on [n] has n edges");
  std::vector<int> deg(n + 1, 0);
  for (sub_t e : edges) {
    if (popcount(e) != 2 || (e & ~full_set(n)))
      throw bad_input("thrackle_shape: not a 2-subset of [n]");
    for (int v : elements(e)) ++deg[v];
    for (sub_t f : edges)
      if (e != f && !edges_cross_or_share(e, f))
        throw bad_input("thrackle_shape: two edges neither cross nor share");
  }
  ThrackleShape shape;
  shape.n = n;
  for (int v = 1; v <= n; ++v) {
    if (deg[v] == 0) throw bad_input("thrackle_shape: isolated vertex");
    if (deg[v] >= 2) shape.spine.push_back(v);
  }
  const int p = static_cast<int>(shape.spine.size());
  if (p < 3 || p % 2 == 0)
    throw bad_input("thrackle_shape: spine is not an odd cycle");
  shape.r = (p - 1) / 2;
  std::vector<sub_t> want;
  const auto& a = shape.spine;
  for (int i = 0; i < p; ++i)
    want.push_back(with(with(0, a[i]), a[(i + shape.r) % p]));
  for (int v = 1; v <= n; ++v) {
    if (deg[v] != 1) continue;
    int j = p;  // 1-based arc index; p means the wrap arc
    for (int i = 0; i + 1 < p; ++i)
      if (a[i] < v && v < a[i + 1]) {
        j = i + 1;
        break;
      }
    int partner = a[(j + shape.r) % p];
    shape.leaves.emplace_back(v, partner);
    want.push_back(with(with(0, v), partner));
  }
  std::vector<sub_t> got = edges;
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  if (want != got)
    throw bad_input("thrackle_shape: edges do not match the spine-leaf pattern");
  return shape;
}

namespace {

struct Vec2 {
  Ival x, y;
};

Vec2 direction(int idx, int p, mpfr_prec_t prec) {
  Ival theta = mul_rat(Ival::pi(prec), Rat(idx, p));
  return {cos_i(theta), sin_i(theta)};
}

Vec2 negate(const Vec2& v) {
  return {Ival::exact_zero(v.x.prec()) - v.x, Ival::exact_zero(v.y.prec()) - v.y};
}

Vec2 combo(const Vec2& u, const Vec2& v, const Rat& cu, const Rat& cv) {
  return {mul_rat(u.x, cu) + mul_rat(v.x, cv), mul_rat(u.y, cu) + mul_rat(v.y, cv)};
}

}  // namespace

IvalMatrix thrackle_matrix(int n, const std::vector<sub_t>& edges, mpfr_prec_t prec) {
  ThrackleShape shape = thrackle_shape(n, edges);
  const int p = static_cast<int>(shape.spine.size());
  const auto& a = shape.spine;
  std::vector<Vec2> w;
  for (int t = 0; t < p; ++t) w.push_back(direction(t, p, prec));

  // Group leaves by arc, in cyclic order. Arc t (1-based, t < p) runs between
  // a_t and a_{t+1}; arc p wraps, holding labels above a_p and then labels
  // below a_1 (whose vectors get negated to keep angles increasing by label).
  std::map<int, std::vector<int>> arc_leaves;
  for (auto [v, partner] : shape.leaves) {
    (void)partner;
    int j = p;
    for (int i = 0; i + 1 < p; ++i)
      if (a[i] < v && v < a[i + 1]) {
        j = i + 1;
        break;
      }
    arc_leaves[j].push_back(v);
  }
  for (auto& [arc, vs] : arc_leaves) {
    std::sort(vs.begin(), vs.end());
    if (arc == p) {
      // cyclic order: labels > a_p first, then labels < a_1
      std::stable_partition(vs.begin(), vs.end(),
                            [&](int v) { return v > a[p - 1]; });
    }
  }

  IvalMatrix m;
  m.k = 2;
  m.n = n;
  m.cols.assign(n, {Ival::exact_zero(prec), Ival::exact_zero(prec)});
  for (int t = 0; t < p; ++t) m.cols[a[t] - 1] = {w[t].x, w[t].y};
  for (const auto& [arc, vs] : arc_leaves) {
    const int K = static_cast<int>(vs.size());
    const Vec2& from = w[arc - 1];
    const Vec2 to = arc == p ? negate(w[0]) : w[arc];
    for (int s = 1; s <= K; ++s) {
      Vec2 u = combo(from, to, Rat(K + 1 - s, K + 1), Rat(s, K + 1));
      if (arc == p && vs[s - 1] < a[0]) u = negate(u);
      m.cols[vs[s - 1] - 1] = {u.x, u.y};
    }
  }
  return m;
}

bool certify_thrackle_largest(const IvalMatrix& m, int n,
                              const std::vector<sub_t>& edges, int r) {
  if (m.n != n || m.k != 2) return false;
  const mpfr_prec_t prec = m.cols.at(0).at(0).prec();
  IvalTable t = minor_table_2xn(m);
  const int p = 2 * r + 1;
  Ival tau = sin_i(mul_rat(Ival::pi(prec), Rat(r, p)));
  std::vector<bool> is_edge(t.v.size(), false);
  for (sub_t e : edges) is_edge[colex_rank(e)] = true;

  mpfr_t bound;
  mpfr_init2(bound, prec);
  bool first = true, ok = true;
  sub_t s = first_subset(2);
  for (std::size_t i = 0; i < t.v.size(); ++i, s = next_subset(s, n)) {
    if (!is_edge[i]) continue;
    if (!within_rel(t.v[i], tau, 128)) {
      ok = false;
      break;
    }
    if (first || mpfr_cmp(t.v[i].lo(), bound) < 0) mpfr_set(bound, t.v[i].lo(), MPFR_RNDD);
    first = false;
  }
  if (ok) {
    s = first_subset(2);
    for (std::size_t i = 0; i < t.v.size(); ++i, s = next_subset(s, n)) {
      if (is_edge[i]) continue;
      if (!(t.v[i].sign() > 0 && mpfr_cmp(t.v[i].hi(), bound) < 0)) {
        ok = false;
        break;
      }
    }
  }
  mpfr_clear(bound);
  return ok;
}

IvalMatrix regular_polygon_point(int n, mpfr_prec_t prec) {
  if (n < 2) throw bad_input("regular_polygon_point: need n >= 2");
  IvalMatrix m;
  m.k = 2;
  m.n = n;
  for (int i = 0; i < n; ++i) {
    Vec2 v = direction(i, n, prec);
    m.cols.push_back({v.x, v.y});
  }
  return m;
}

std::vector<std::vector<int>> pentagon_lambda_patterns(mpfr_prec_t prec) {
  // Regular pentagon as a rank-3 positive point: columns (cos, sin, 1) at
  // angles 2 pi (i-1)/5, counterclockwise so all 3x3 minors are positive.
  const int n = 5, k = 3;
  std::vector<std::array<Ival, 3>> cols;
  for (int i = 0; i < n; ++i) {
    Ival theta = mul_rat(Ival::pi(prec), Rat(2 * i, n));
    cols.push_back({cos_i(theta), sin_i(theta), Ival::from_rat(Rat(1), prec)});
  }
  IvalTable tbl;
  tbl.n = n;
  tbl.k = k;
  for (sub_t s = first_subset(k); s != 0; s = next_subset(s, n)) {
    auto e = elements(s);
    const auto &u = cols[e[0] - 1], &v = cols[e[1] - 1], &w = cols[e[2] - 1];
    Ival det = u[0] * (v[1] * w[2] - v[2] * w[1]) -
               u[1] * (v[0] * w[2] - v[2] * w[0]) +
               u[2] * (v[0] * w[1] - v[1] * w[0]);
    if (det.sign() <= 0)
      throw undecided_comparison("pentagon: minor not certainly positive");
    tbl.v.push_back(std::move(det));
  }

  const Quad phi(Rat(1, 2), Rat(1, 2), Int(5));  // golden ratio
  std::vector<Quad> powers{Quad(Rat(1)), phi, phi * phi};
  std::vector<std::vector<int>> out;
  for (const auto& family : enumerate_maximal_sorted(n, k)) {
    std::vector<Ival> lam = torus_factors(tbl, family, prec);
    // Normalize by the smallest factor.
    int mn = 0;
    for (int i = 1; i < n; ++i)
      if (certainly_less(lam[i], lam[mn])) mn = i;
    std::vector<int> pattern;
    for (int i = 0; i < n; ++i) {
      Ival ratio = lam[i] / lam[mn];
      int found = -1;
      for (int e = 0; e < 3; ++e)
        if (within_rel(ratio, Ival::from_quad(powers[e], prec), 128)) {
          found = e;
          break;
        }
      if (found < 0)
        throw undecided_comparison("pentagon: factor is not a certified phi power");
      pattern.push_back(found);
    }
    std::sort(pattern.begin(), pattern.end());
    out.push_back(std::move(pattern));
  }
  return out;
}

}  // namespace eqm
