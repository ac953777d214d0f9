#include "eqm/quadext.hpp"

#include "eqm/errors.hpp"

namespace eqm {

Quad::Quad(const Rat& a_, const Rat& b_, const Int& D_) : a(a_), b(b_), D(D_) {
  if (sgn(b) == 0) {
    D = 0;
  } else {
    if (sgn(D) <= 0) throw bad_input("radicand must be positive");
  }
}

const Rat& Quad::rat() const {
  if (!is_rational()) throw bad_input("value is irrational: " + quad_str(*this));
  return a;
}

Quad Quad::sqrt_of(const Int& D) { return Quad(Rat(0), Rat(1), D); }

namespace {
// Common radicand of two operands; throws on a true mix.
Int join_radicand(const Quad& x, const Quad& y) {
  if (x.is_rational()) return y.D;
  if (y.is_rational()) return x.D;
  if (x.D != y.D)
    throw mixed_radicand("cannot combine sqrt(" + int_str(x.D) + ") with sqrt(" +
                         int_str(y.D) + ")");
  return x.D;
}
}  // namespace

Quad operator+(const Quad& x, const Quad& y) {
  Int D = join_radicand(x, y);
  return Quad(x.a + y.a, x.b + y.b, D);
}

Quad operator-(const Quad& x, const Quad& y) {
  Int D = join_radicand(x, y);
  return Quad(x.a - y.a, x.b - y.b, D);
}

Quad operator-(const Quad& x) { return Quad(-x.a, -x.b, x.D); }

Quad operator*(const Quad& x, const Quad& y) {
  Int D = join_radicand(x, y);
  // (a1 + b1 s)(a2 + b2 s) = a1 a2 + b1 b2 D + (a1 b2 + a2 b1) s
  Rat a = x.a * y.a + x.b * y.b * Rat(D);
  Rat b = x.a * y.b + y.a * x.b;
  return Quad(a, b, D);
}

Quad operator/(const Quad& x, const Quad& y) {
  Int D = join_radicand(x, y);
  // multiply by the conjugate: norm = a^2 - b^2 D is nonzero for y != 0
  Rat norm = y.a * y.a - y.b * y.b * Rat(D);
  if (sgn(norm) == 0) {
    if (quad_sign(y) == 0) throw bad_input("division by zero");
    // a^2 == b^2 D with y != 0 means sqrt(D) is rational; fall back to the
    // rational value. This only happens for square radicands.
    throw bad_input("radicand is a perfect square; use rationals");
  }
  Quad num = x * Quad(y.a, -y.b, D);
  return Quad(num.a / norm, num.b / norm, D);
}

Quad& operator+=(Quad& x, const Quad& y) { return x = x + y; }
Quad& operator-=(Quad& x, const Quad& y) { return x = x - y; }
Quad& operator*=(Quad& x, const Quad& y) { return x = x * y; }
Quad& operator/=(Quad& x, const Quad& y) { return x = x / y; }

int quad_sign(const Quad& x) {
  int sa = sgn(x.a), sb = sgn(x.b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 against b^2 D exactly
  Rat lhs = x.a * x.a;
  Rat rhs = x.b * x.b * Rat(x.D);
  int c = cmp(lhs, rhs);
  if (c == 0) return 0;
  return c > 0 ? sa : sb;
}

int quad_cmp(const Quad& x, const Quad& y) { return quad_sign(x - y); }

std::string quad_str(const Quad& x) {
  if (x.is_rational()) return rat_str(x.a);
  std::string s;
  if (sgn(x.a) != 0) s += rat_str(x.a);
  if (sgn(x.b) > 0 && !s.empty()) s += "+";
  if (x.b == Rat(-1))
    s += "-";
  else if (x.b != Rat(1))
    s += rat_str(x.b) + "*";
  s += "sqrt(" + int_str(x.D) + ")";
  return s;
}

}  // namespace eqm
