#pragma once

#include <map>
#include <string>
#include <vector>

#include "eqm/rational.hpp"

namespace eqm {

// Graded-lex order on integer exponent vectors (total degree first).
struct GrlexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Multivariate Laurent polynomial with rational coefficients.
// Invariant: no explicit zero coefficients are stored.
class Laurent {
 public:
  explicit Laurent(int nvars = 1) : nv_(nvars) {}
  static Laurent constant(int nvars, const Rat& c);
  static Laurent var(int nvars, int i, int e = 1);  // x_i^e, 0-based i

  int nvars() const { return nv_; }
  bool is_zero() const { return t_.empty(); }
  int num_terms() const { return static_cast<int>(t_.size()); }
  const std::map<std::vector<int>, Rat, GrlexLess>& terms() const { return t_; }

  void add_term(const std::vector<int>& e, const Rat& c);

  // Exact division; throws inexact_division when the quotient is not a
  // Laurent polynomial.
  Laurent exact_div(const Laurent& d) const;

  Rat eval(const std::vector<Rat>& x) const;  // x_i != 0 if negative exponents
  // min/max exponent of variable i over all terms; requires nonzero poly.
  std::pair<int, int> exponent_range(int i) const;
  bool all_coeffs_positive() const;

  bool operator==(const Laurent& o) const { return nv_ == o.nv_ && t_ == o.t_; }
  std::string str(const std::vector<std::string>& names) const;
  std::string str1(const std::string& name = "T") const;

 private:
  int nv_;
  std::map<std::vector<int>, Rat, GrlexLess> t_;
};

Laurent operator+(const Laurent& x, const Laurent& y);
Laurent operator-(const Laurent& x, const Laurent& y);
Laurent operator-(const Laurent& x);
Laurent operator*(const Laurent& x, const Laurent& y);

}  // namespace eqm
