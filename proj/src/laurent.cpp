#include "eqm/laurent.hpp"

#include <algorithm>
#include <numeric>

#include "eqm/errors.hpp"

namespace eqm {

bool GrlexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Laurent Laurent::constant(int nvars, const Rat& c) {
  Laurent p(nvars);
  p.add_term(std::vector<int>(nvars, 0), c);
  return p;
}

Laurent Laurent::var(int nvars, int i, int e) {
  Laurent p(nvars);
  std::vector<int> ex(nvars, 0);
  ex.at(i) = e;
  p.add_term(ex, Rat(1));
  return p;
}

void Laurent::add_term(const std::vector<int>& e, const Rat& c) {
  if (static_cast<int>(e.size()) != nv_) throw bad_input("exponent arity mismatch");
  if (sgn(c) == 0) return;
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(e, c);
  } else {
    it->second += c;
    if (sgn(it->second) == 0) t_.erase(it);
  }
}

Laurent operator+(const Laurent& x, const Laurent& y) {
  if (x.nvars() != y.nvars()) throw bad_input("arity mismatch");
  Laurent r = x;
  for (const auto& [e, c] : y.terms()) r.add_term(e, c);
  return r;
}

Laurent operator-(const Laurent& x, const Laurent& y) {
  if (x.nvars() != y.nvars()) throw bad_input("arity mismatch");
  Laurent r = x;
  for (const auto& [e, c] : y.terms()) r.add_term(e, -c);
  return r;
}

Laurent operator-(const Laurent& x) {
  Laurent r(x.nvars());
  for (const auto& [e, c] : x.terms()) r.add_term(e, -c);
  return r;
}

Laurent operator*(const Laurent& x, const Laurent& y) {
  if (x.nvars() != y.nvars()) throw bad_input("arity mismatch");
  Laurent r(x.nvars());
  std::vector<int> e(x.nvars());
  for (const auto& [ex, cx] : x.terms()) {
    for (const auto& [ey, cy] : y.terms()) {
      for (int i = 0; i < x.nvars(); ++i) e[i] = ex[i] + ey[i];
      r.add_term(e, cx * cy);
    }
  }
  return r;
}

Laurent Laurent::exact_div(const Laurent& d) const {
  if (nv_ != d.nvars()) throw bad_input("arity mismatch");
  if (d.is_zero()) throw bad_input("division by zero polynomial");
  if (is_zero()) return Laurent(nv_);

  // Shift both operands so every variable has minimum exponent 0; the
  // monomial shifts divide out exactly in the quotient.
  std::vector<int> shift_n(nv_, 0), shift_d(nv_, 0);
  for (int i = 0; i < nv_; ++i) {
    shift_n[i] = exponent_range(i).first;
    shift_d[i] = d.exponent_range(i).first;
  }
  auto shifted = [&](const Laurent& p, const std::vector<int>& s) {
    Laurent q(p.nvars());
    std::vector<int> e(p.nvars());
    for (const auto& [ex, c] : p.terms()) {
      for (int i = 0; i < p.nvars(); ++i) e[i] = ex[i] - s[i];
      q.add_term(e, c);
    }
    return q;
  };
  Laurent num = shifted(*this, shift_n);
  Laurent den = shifted(d, shift_d);

  // Single-divisor polynomial division w.r.t. graded lex; exact iff the
  // remainder would be zero at every step.
  Laurent quot(nv_);
  const auto& dlead = *den.terms().rbegin();
  while (!num.is_zero()) {
    const auto& nlead = *num.terms().rbegin();
    std::vector<int> e(nv_);
    for (int i = 0; i < nv_; ++i) {
      e[i] = nlead.first[i] - dlead.first[i];
      if (e[i] < 0) throw inexact_division("leading monomial does not divide");
    }
    Rat c = nlead.second / dlead.second;
    Laurent mono(nv_);
    mono.add_term(e, c);
    quot = quot + mono;
    num = num - mono * den;
  }
  // Re-apply the monomial shift difference.
  Laurent shift_mono(nv_);
  std::vector<int> e(nv_);
  for (int i = 0; i < nv_; ++i) e[i] = shift_n[i] - shift_d[i];
  shift_mono.add_term(e, Rat(1));
  return quot * shift_mono;
}

Rat Laurent::eval(const std::vector<Rat>& x) const {
  if (static_cast<int>(x.size()) != nv_) throw bad_input("arity mismatch");
  Rat acc(0);
  for (const auto& [e, c] : t_) {
    Rat term = c;
    for (int i = 0; i < nv_; ++i)
      if (e[i] != 0) term *= rat_pow(x[i], e[i]);
    acc += term;
  }
  return acc;
}

std::pair<int, int> Laurent::exponent_range(int i) const {
  if (t_.empty()) throw bad_input("exponent range of zero polynomial");
  int lo = t_.begin()->first[i], hi = lo;
  for (const auto& [e, c] : t_) {
    (void)c;
    lo = std::min(lo, e[i]);
    hi = std::max(hi, e[i]);
  }
  return {lo, hi};
}

bool Laurent::all_coeffs_positive() const {
  for (const auto& [e, c] : t_) {
    (void)e;
    if (sgn(c) <= 0) return false;
  }
  return true;
}

std::string Laurent::str(const std::vector<std::string>& names) const {
  if (t_.empty()) return "0";
  std::string s;
  // print in decreasing graded-lex order, leading term first
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (int i = 0; i < nv_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(i);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    std::string coef = rat_str(c);
    if (!s.empty() && sgn(c) > 0) s += "+";
    if (mono.empty()) {
      s += coef;
    } else if (c == Rat(1)) {
      s += mono;
    } else if (c == Rat(-1)) {
      s += "-" + mono;
    } else {
      s += coef + "*" + mono;
    }
  }
  return s;
}

std::string Laurent::str1(const std::string& name) const {
  return str(std::vector<std::string>(nv_, name));
}

}  // namespace eqm
