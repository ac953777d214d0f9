#include "eqm/torus.hpp"

#include <algorithm>
#include <optional>

#include "eqm/errors.hpp"

namespace eqm {

namespace {

// Exact rational solve layer: for the 0/1 incidence system
//   sum_{i in I} z_i = b_c   (one row per member of S)
// pick pivot columns by Gaussian elimination, pin the free columns to z = 0,
// and return the inverse of the pivot submatrix, so that
//   z_{pivot[r]} = sum_c inv[r][c] * b_c.
struct TorusSystem {
  std::vector<int> pivot_cols;             // 0-based column indices, size s
  std::vector<std::vector<Rat>> inv;       // s x s exact inverse
};

TorusSystem build_system(const std::vector<sub_t>& S, int n) {
  const int s = static_cast<int>(S.size());
  if (s == 0) throw bad_input("torus solve: empty family");
  if (s > n) throw bad_input("torus solve: more members than columns");
  std::vector<std::vector<Rat>> m(s, std::vector<Rat>(n, Rat(0)));
  for (int r = 0; r < s; ++r)
    for (int e : elements(S[r])) m[r][e - 1] = Rat(1);

  // Forward elimination to find pivot columns.
  std::vector<std::vector<Rat>> work = m;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < n && row < s; ++col) {
    int hit = -1;
    for (int r = row; r < s; ++r)
      if (sgn(work[r][col]) != 0) {
        hit = r;
        break;
      }
    if (hit < 0) continue;
    std::swap(work[row], work[hit]);
    for (int r = 0; r < s; ++r) {
      if (r == row || sgn(work[r][col]) == 0) continue;
      Rat f = work[r][col] / work[row][col];
      for (int c = col; c < n; ++c) work[r][c] -= f * work[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  if (row < s)
    throw bad_input("torus solve: the family is affinely dependent");

  // Invert the pivot submatrix by Gauss-Jordan.
  std::vector<std::vector<Rat>> a(s, std::vector<Rat>(2 * s, Rat(0)));
  for (int r = 0; r < s; ++r) {
    for (int c = 0; c < s; ++c) a[r][c] = m[r][pivots[c]];
    a[r][s + r] = Rat(1);
  }
  for (int col = 0; col < s; ++col) {
    int hit = -1;
    for (int r = col; r < s; ++r)
      if (sgn(a[r][col]) != 0) {
        hit = r;
        break;
      }
    if (hit < 0) throw bad_input("torus solve: pivot submatrix is singular");
    std::swap(a[col], a[hit]);
    Rat d = a[col][col];
    for (int c = 0; c < 2 * s; ++c) a[col][c] /= d;
    for (int r = 0; r < s; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      Rat f = a[r][col];
      for (int c = 0; c < 2 * s; ++c) a[r][c] -= f * a[col][c];
    }
  }
  TorusSystem sys;
  sys.pivot_cols = pivots;
  sys.inv.assign(s, std::vector<Rat>(s));
  for (int r = 0; r < s; ++r)
    for (int c = 0; c < s; ++c) sys.inv[r][c] = a[r][s + c];
  return sys;
}

// Column factors making the minor on S[c] equal target[c]; everything in
// intervals at the table's precision.
std::vector<Ival> solve_factors(const IvalTable& table, const std::vector<sub_t>& S,
                                const std::vector<Rat>& target, mpfr_prec_t prec) {
  const int s = static_cast<int>(S.size());
  TorusSystem sys = build_system(S, table.n);
  std::vector<Ival> b;
  b.reserve(s);
  for (int c = 0; c < s; ++c) {
    const Ival& v = table.at(S[c]);
    if (v.sign() <= 0)
      throw undecided_comparison("torus solve: minor not certainly positive");
    b.push_back(log_i(Ival::from_rat(target[c], prec)) - log_i(v));
  }
  std::vector<Ival> t(table.n, Ival::exact_zero(prec));
  for (int r = 0; r < s; ++r) {
    Ival z = Ival::exact_zero(prec);
    for (int c = 0; c < s; ++c) {
      if (sgn(sys.inv[r][c]) == 0) continue;
      z = z + mul_rat(b[c], sys.inv[r][c]);
    }
    t[sys.pivot_cols[r]] = z;
  }
  for (auto& z : t) z = exp_i(z);
  return t;
}

IvalTable apply_factors(const IvalTable& table, const std::vector<Ival>& t) {
  IvalTable out;
  out.n = table.n;
  out.k = table.k;
  out.v.reserve(table.v.size());
  sub_t s = first_subset(table.k);
  for (std::size_t r = 0; r < table.v.size(); ++r, s = next_subset(s, table.n)) {
    Ival v = table.v[r];
    for (int e : elements(s)) v = v * t[e - 1];
    out.v.push_back(std::move(v));
  }
  return out;
}

// Certify that the rescaled table's extremal class is exactly `cls` with
// common value 1 (within 2^-128 relative); throws undecided_comparison.
void certify_class(const IvalTable& rescaled, const std::vector<sub_t>& cls,
                   ExtremeMode mode, mpfr_prec_t prec) {
  Ival one = Ival::from_rat(Rat(1), prec);
  undecided_comparison undecided("extremal class certification undecided");
  std::vector<bool> in_cls(rescaled.v.size(), false);
  for (sub_t I : cls) {
    in_cls[colex_rank(I)] = true;
    if (!within_rel(rescaled.at(I), one, 128))
      undecided.pairs.emplace_back(subset_str(I), "1");
  }
  // Boundary of the on-class range: off-class values must be certainly
  // beyond the worst on-class endpoint.
  mpfr_t bound;
  mpfr_init2(bound, prec);
  bool first = true;
  sub_t witness = 0;
  for (sub_t I : cls) {
    const Ival& v = rescaled.at(I);
    if (mode == ExtremeMode::largest) {
      if (first || mpfr_cmp(v.lo(), bound) < 0) {
        mpfr_set(bound, v.lo(), MPFR_RNDD);
        witness = I;
      }
    } else {
      if (first || mpfr_cmp(v.hi(), bound) > 0) {
        mpfr_set(bound, v.hi(), MPFR_RNDU);
        witness = I;
      }
    }
    first = false;
  }
  sub_t s = first_subset(rescaled.k);
  for (std::size_t r = 0; r < rescaled.v.size(); ++r, s = next_subset(s, rescaled.n)) {
    if (in_cls[r]) continue;
    bool ok = mode == ExtremeMode::largest
                  ? mpfr_cmp(rescaled.v[r].hi(), bound) < 0
                  : mpfr_cmp(rescaled.v[r].lo(), bound) > 0;
    if (!ok) undecided.pairs.emplace_back(subset_str(s), subset_str(witness));
  }
  mpfr_clear(bound);
  if (!undecided.pairs.empty()) throw undecided;
}

}  // namespace

TorusScaling torus_rescale(const IvalTable& table, const std::vector<sub_t>& S,
                           ExtremeMode mode, mpfr_prec_t prec) {
  std::vector<Rat> target(S.size(), Rat(1));
  TorusScaling r;
  r.t = solve_factors(table, S, target, prec);
  r.rescaled = apply_factors(table, r.t);
  r.prec = prec;
  certify_class(r.rescaled, S, mode, prec);
  return r;
}

TorusScaling torus_rescale(const MinorTable& table, const std::vector<sub_t>& S,
                           ExtremeMode mode) {
  return interval_refine<TorusScaling>(
      [&](mpfr_prec_t p) -> std::optional<TorusScaling> {
        return torus_rescale(to_intervals(table, p), S, mode, p);
      });
}

TorusScaling epsilon_perturb_largest(const MinorTable& table,
                                     const std::vector<sub_t>& S,
                                     const std::vector<sub_t>& keep) {
  for (sub_t I : keep)
    if (std::find(S.begin(), S.end(), I) == S.end())
      throw bad_input("epsilon perturbation: keep is not a subfamily");
  Rat eps(1, 64);
  for (int round = 0; round < 20; ++round, eps /= 2) {
    std::vector<Rat> target;
    target.reserve(S.size());
    for (sub_t I : S) {
      bool kept = std::find(keep.begin(), keep.end(), I) != keep.end();
      target.push_back(kept ? Rat(1) : Rat(1) - eps);
    }
    try {
      return interval_refine<TorusScaling>(
          [&](mpfr_prec_t p) -> std::optional<TorusScaling> {
            IvalTable tbl = to_intervals(table, p);
            TorusScaling r;
            r.t = solve_factors(tbl, S, target, p);
            r.rescaled = apply_factors(tbl, r.t);
            r.prec = p;
            certify_class(r.rescaled, keep, ExtremeMode::largest, p);
            return r;
          });
    } catch (const precision_exhausted&) {
      // class boundary too tight at this eps; try a smaller perturbation
    }
  }
  throw cap_exceeded("epsilon perturbation: no eps in 20 halvings certified");
}

std::vector<Ival> torus_factors(const IvalTable& table, const std::vector<sub_t>& S,
                                mpfr_prec_t prec) {
  std::vector<Rat> target(S.size(), Rat(1));
  return solve_factors(table, S, target, prec);
}

}  // namespace eqm
