#pragma once

#include <mpfr.h>

#include <functional>
#include <optional>
#include <string>

#include "eqm/errors.hpp"
#include "eqm/quadext.hpp"
#include "eqm/rational.hpp"

namespace eqm {

// Closed interval [lo, hi] with MPFR endpoints; lo rounds down, hi rounds up,
// so the represented real set always contains the mathematical value.
class Ival {
 public:
  explicit Ival(mpfr_prec_t prec = 256);
  Ival(const Ival& o);
  Ival(Ival&& o) noexcept;
  Ival& operator=(const Ival& o);
  Ival& operator=(Ival&& o) noexcept;
  ~Ival();

  static Ival from_rat(const Rat& q, mpfr_prec_t prec);
  static Ival from_quad(const Quad& q, mpfr_prec_t prec);
  static Ival pi(mpfr_prec_t prec);
  static Ival exact_zero(mpfr_prec_t prec);

  mpfr_prec_t prec() const { return prec_; }
  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }
  mpfr_t& lo_mut() { return lo_; }
  mpfr_t& hi_mut() { return hi_; }

  bool contains_zero() const;
  // +1 if certainly positive, -1 if certainly negative, 0 if undecided.
  int sign() const;
  double mid_d() const;
  std::string str(int digits = 20) const;

 private:
  mpfr_t lo_;
  mpfr_t hi_;
  mpfr_prec_t prec_;
};

Ival operator+(const Ival& x, const Ival& y);
Ival operator-(const Ival& x, const Ival& y);
Ival operator-(const Ival& x);
Ival operator*(const Ival& x, const Ival& y);
// Division throws undecided_comparison if the divisor straddles zero.
Ival operator/(const Ival& x, const Ival& y);

Ival sqrt_i(const Ival& x);  // requires lo >= 0 (clamps tiny negative noise? no: throws)
Ival exp_i(const Ival& x);
Ival log_i(const Ival& x);  // requires certainly positive
Ival sin_i(const Ival& x);
Ival cos_i(const Ival& x);
Ival abs_i(const Ival& x);
Ival mul_rat(const Ival& x, const Rat& q);

// Certified strict order: true only when provable.
bool certainly_less(const Ival& x, const Ival& y);
bool certainly_greater(const Ival& x, const Ival& y);
// |x - y| <= 2^-bits * min(|x|,|y|), certified. Both must be bounded away
// from zero unless both contain zero candidates (then false).
bool within_rel(const Ival& x, const Ival& y, int bits);
// Relative width of the interval itself is below 2^-bits (certified tightness).
bool rel_width_below(const Ival& x, int bits);

// Precision ladder: run `attempt` at 256, 512, ..., up to `max_prec` bits,
// doubling, until it returns a value. attempt() should return std::nullopt
// when the working precision was insufficient (it may also throw
// undecided_comparison, treated the same way). Throws precision_exhausted.
template <class T>
T interval_refine(const std::function<std::optional<T>(mpfr_prec_t)>& attempt,
                  mpfr_prec_t start_prec = 256, mpfr_prec_t max_prec = 4096) {
  for (mpfr_prec_t p = start_prec; p <= max_prec; p *= 2) {
    try {
      if (auto r = attempt(p)) return *r;
    } catch (const undecided_comparison&) {
      // retry at doubled precision
    }
  }
  throw precision_exhausted("undecided after precision ladder up to max bits");
}

}  // namespace eqm
