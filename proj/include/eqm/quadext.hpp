#pragma once

#include <string>

#include "eqm/rational.hpp"

namespace eqm {

// Element a + b*sqrt(D) of a real quadratic extension of Q.
// Invariant: b == 0  <=>  D == 0. A computation uses a single radicand;
// combining values with different nonzero radicands throws mixed_radicand.
// All comparisons are exact (integer arithmetic on a^2 vs b^2 D).
struct Quad {
  Rat a;
  Rat b;
  Int D;

  Quad() : a(0), b(0), D(0) {}
  Quad(const Rat& r) : a(r), b(0), D(0) {}  // NOLINT: implicit by design
  Quad(long v) : a(v), b(0), D(0) {}        // NOLINT
  Quad(const Rat& a_, const Rat& b_, const Int& D_);

  bool is_rational() const { return sgn(b) == 0; }
  const Rat& rat() const;  // throws bad_input if not rational

  static Quad sqrt_of(const Int& D);  // 0 + 1*sqrt(D)
};

Quad operator+(const Quad& x, const Quad& y);
Quad operator-(const Quad& x, const Quad& y);
Quad operator-(const Quad& x);
Quad operator*(const Quad& x, const Quad& y);
Quad operator/(const Quad& x, const Quad& y);  // exact field division
Quad& operator+=(Quad& x, const Quad& y);
Quad& operator-=(Quad& x, const Quad& y);
Quad& operator*=(Quad& x, const Quad& y);
Quad& operator/=(Quad& x, const Quad& y);

// Exact sign of a + b*sqrt(D): -1, 0, or +1.
int quad_sign(const Quad& x);

// Exact three-way comparison; this is the quad_cmp operation.
int quad_cmp(const Quad& x, const Quad& y);

inline bool operator==(const Quad& x, const Quad& y) { return quad_cmp(x, y) == 0; }
inline bool operator!=(const Quad& x, const Quad& y) { return quad_cmp(x, y) != 0; }
inline bool operator<(const Quad& x, const Quad& y) { return quad_cmp(x, y) < 0; }
inline bool operator>(const Quad& x, const Quad& y) { return quad_cmp(x, y) > 0; }
inline bool operator<=(const Quad& x, const Quad& y) { return quad_cmp(x, y) <= 0; }
inline bool operator>=(const Quad& x, const Quad& y) { return quad_cmp(x, y) >= 0; }

// Display form: "3/4", "1/2+5*sqrt(3)", "-sqrt(2)", ...
std::string quad_str(const Quad& x);

}  // namespace eqm
