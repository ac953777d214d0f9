#include "eqm/interval.hpp"

#include <algorithm>
#include <cmath>

namespace eqm {

Ival::Ival(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Ival::Ival(const Ival& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Ival::Ival(Ival&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Ival& Ival::operator=(const Ival& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, o.prec_);
    mpfr_set_prec(hi_, o.prec_);
    prec_ = o.prec_;
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Ival& Ival::operator=(Ival&& o) noexcept {
  if (this != &o) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
  }
  return *this;
}

Ival::~Ival() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Ival Ival::from_rat(const Rat& q, mpfr_prec_t prec) {
  Ival r(prec);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Ival Ival::from_quad(const Quad& q, mpfr_prec_t prec) {
  if (q.is_rational()) return from_rat(q.a, prec);
  Ival rad(prec);
  mpfr_set_z(rad.lo_mut(), q.D.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(rad.hi_mut(), q.D.get_mpz_t(), MPFR_RNDU);
  Ival root = sqrt_i(rad);
  return from_rat(q.a, prec) + mul_rat(root, q.b);
}

Ival Ival::pi(mpfr_prec_t prec) {
  Ival r(prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Ival Ival::exact_zero(mpfr_prec_t prec) { return Ival(prec); }

bool Ival::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

int Ival::sign() const {
  if (mpfr_sgn(lo_) > 0) return 1;
  if (mpfr_sgn(hi_) < 0) return -1;
  return 0;
}

double Ival::mid_d() const {
  return (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)) / 2.0;
}

std::string Ival::str(int digits) const {
  char* a = nullptr;
  char* b = nullptr;
  mpfr_asprintf(&a, "%.*Rg", digits, lo_);
  mpfr_asprintf(&b, "%.*Rg", digits, hi_);
  std::string s = std::string("[") + a + ", " + b + "]";
  mpfr_free_str(a);
  mpfr_free_str(b);
  return s;
}

namespace {
mpfr_prec_t join_prec(const Ival& x, const Ival& y) {
  return std::max(x.prec(), y.prec());
}
}  // namespace

Ival operator+(const Ival& x, const Ival& y) {
  Ival r(join_prec(x, y));
  mpfr_add(r.lo_mut(), x.lo(), y.lo(), MPFR_RNDD);
  mpfr_add(r.hi_mut(), x.hi(), y.hi(), MPFR_RNDU);
  return r;
}

Ival operator-(const Ival& x, const Ival& y) {
  Ival r(join_prec(x, y));
  mpfr_sub(r.lo_mut(), x.lo(), y.hi(), MPFR_RNDD);
  mpfr_sub(r.hi_mut(), x.hi(), y.lo(), MPFR_RNDU);
  return r;
}

Ival operator-(const Ival& x) {
  Ival r(x.prec());
  mpfr_neg(r.lo_mut(), x.hi(), MPFR_RNDD);
  mpfr_neg(r.hi_mut(), x.lo(), MPFR_RNDU);
  return r;
}

Ival operator*(const Ival& x, const Ival& y) {
  Ival r(join_prec(x, y));
  mpfr_t t;
  mpfr_init2(t, r.prec());
  // lo = min of the four products rounded down
  mpfr_mul(r.lo_mut(), x.lo(), y.lo(), MPFR_RNDD);
  mpfr_mul(t, x.lo(), y.hi(), MPFR_RNDD);
  mpfr_min(r.lo_mut(), r.lo_mut(), t, MPFR_RNDD);
  mpfr_mul(t, x.hi(), y.lo(), MPFR_RNDD);
  mpfr_min(r.lo_mut(), r.lo_mut(), t, MPFR_RNDD);
  mpfr_mul(t, x.hi(), y.hi(), MPFR_RNDD);
  mpfr_min(r.lo_mut(), r.lo_mut(), t, MPFR_RNDD);
  // hi = max of the four products rounded up
  mpfr_mul(r.hi_mut(), x.lo(), y.lo(), MPFR_RNDU);
  mpfr_mul(t, x.lo(), y.hi(), MPFR_RNDU);
  mpfr_max(r.hi_mut(), r.hi_mut(), t, MPFR_RNDU);
  mpfr_mul(t, x.hi(), y.lo(), MPFR_RNDU);
  mpfr_max(r.hi_mut(), r.hi_mut(), t, MPFR_RNDU);
  mpfr_mul(t, x.hi(), y.hi(), MPFR_RNDU);
  mpfr_max(r.hi_mut(), r.hi_mut(), t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Ival operator/(const Ival& x, const Ival& y) {
  if (y.contains_zero())
    throw undecided_comparison("interval division by interval containing zero");
  Ival r(join_prec(x, y));
  mpfr_t t;
  mpfr_init2(t, r.prec());
  mpfr_div(r.lo_mut(), x.lo(), y.lo(), MPFR_RNDD);
  mpfr_div(t, x.lo(), y.hi(), MPFR_RNDD);
  mpfr_min(r.lo_mut(), r.lo_mut(), t, MPFR_RNDD);
  mpfr_div(t, x.hi(), y.lo(), MPFR_RNDD);
  mpfr_min(r.lo_mut(), r.lo_mut(), t, MPFR_RNDD);
  mpfr_div(t, x.hi(), y.hi(), MPFR_RNDD);
  mpfr_min(r.lo_mut(), r.lo_mut(), t, MPFR_RNDD);
  mpfr_div(r.hi_mut(), x.lo(), y.lo(), MPFR_RNDU);
  mpfr_div(t, x.lo(), y.hi(), MPFR_RNDU);
  mpfr_max(r.hi_mut(), r.hi_mut(), t, MPFR_RNDU);
  mpfr_div(t, x.hi(), y.lo(), MPFR_RNDU);
  mpfr_max(r.hi_mut(), r.hi_mut(), t, MPFR_RNDU);
  mpfr_div(t, x.hi(), y.hi(), MPFR_RNDU);
  mpfr_max(r.hi_mut(), r.hi_mut(), t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Ival sqrt_i(const Ival& x) {
  if (mpfr_sgn(x.lo()) < 0)
    throw undecided_comparison("sqrt of interval with negative endpoint");
  Ival r(x.prec());
  mpfr_sqrt(r.lo_mut(), x.lo(), MPFR_RNDD);
  mpfr_sqrt(r.hi_mut(), x.hi(), MPFR_RNDU);
  return r;
}

Ival exp_i(const Ival& x) {
  Ival r(x.prec());
  mpfr_exp(r.lo_mut(), x.lo(), MPFR_RNDD);
  mpfr_exp(r.hi_mut(), x.hi(), MPFR_RNDU);
  return r;
}

Ival log_i(const Ival& x) {
  if (mpfr_sgn(x.lo()) <= 0)
    throw undecided_comparison("log of interval not certainly positive");
  Ival r(x.prec());
  mpfr_log(r.lo_mut(), x.lo(), MPFR_RNDD);
  mpfr_log(r.hi_mut(), x.hi(), MPFR_RNDU);
  return r;
}

namespace {

// Whether a critical point of sin/cos lies inside [lo, hi]: checks whether
// floor((x - phase)/pi) differs between the endpoints.
bool crosses_critical(const Ival& x, double phase_halves) {
  mpfr_prec_t p = x.prec() + 16;
  mpfr_t pi, t1, t2;
  mpfr_inits2(p, pi, t1, t2, static_cast<mpfr_ptr>(nullptr));
  bool cross = false;
  // t = x/pi - phase (phase in units of 1: 0.5 for sin-critical, 0 for cos)
  mpfr_const_pi(pi, MPFR_RNDD);
  mpfr_div(t1, x.lo(), pi, MPFR_RNDD);
  mpfr_const_pi(pi, MPFR_RNDU);
  mpfr_div(t2, x.hi(), pi, MPFR_RNDU);
  mpfr_sub_d(t1, t1, phase_halves, MPFR_RNDD);
  mpfr_sub_d(t2, t2, phase_halves, MPFR_RNDU);
  mpfr_floor(t1, t1);
  mpfr_floor(t2, t2);
  cross = !mpfr_equal_p(t1, t2);
  mpfr_clears(pi, t1, t2, static_cast<mpfr_ptr>(nullptr));
  return cross;
}

template <int (*F)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)>
Ival trig(const Ival& x, double crit_phase) {
  Ival r(x.prec());
  mpfr_t a, b;
  mpfr_inits2(x.prec(), a, b, static_cast<mpfr_ptr>(nullptr));
  F(r.lo_mut(), x.lo(), MPFR_RNDD);
  F(a, x.hi(), MPFR_RNDD);
  mpfr_min(r.lo_mut(), r.lo_mut(), a, MPFR_RNDD);
  F(r.hi_mut(), x.lo(), MPFR_RNDU);
  F(b, x.hi(), MPFR_RNDU);
  mpfr_max(r.hi_mut(), r.hi_mut(), b, MPFR_RNDU);
  mpfr_clears(a, b, static_cast<mpfr_ptr>(nullptr));
  if (crosses_critical(x, crit_phase)) {
    // a max or min of the function lies inside; widen to the safe hull
    mpfr_set_si(r.lo_mut(), -1, MPFR_RNDD);
    mpfr_set_si(r.hi_mut(), 1, MPFR_RNDU);
  }
  return r;
}

}  // namespace

Ival sin_i(const Ival& x) { return trig<mpfr_sin>(x, 0.5); }
Ival cos_i(const Ival& x) { return trig<mpfr_cos>(x, 0.0); }

Ival abs_i(const Ival& x) {
  Ival r(x.prec());
  if (mpfr_sgn(x.lo()) >= 0) return x;
  if (mpfr_sgn(x.hi()) <= 0) return -x;
  mpfr_set_zero(r.lo_mut(), 1);
  mpfr_neg(r.hi_mut(), x.lo(), MPFR_RNDU);
  mpfr_t t;
  mpfr_init2(t, x.prec());
  mpfr_set(t, x.hi(), MPFR_RNDU);
  mpfr_max(r.hi_mut(), r.hi_mut(), t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Ival mul_rat(const Ival& x, const Rat& q) {
  return x * Ival::from_rat(q, x.prec());
}

bool certainly_less(const Ival& x, const Ival& y) {
  return mpfr_less_p(x.hi(), y.lo());
}

bool certainly_greater(const Ival& x, const Ival& y) {
  return mpfr_greater_p(x.lo(), y.hi());
}

bool within_rel(const Ival& x, const Ival& y, int bits) {
  // |x - y| <= 2^-bits * min(|x|, |y|), all certified from above/below.
  Ival d = abs_i(x - y);
  Ival ax = abs_i(x), ay = abs_i(y);
  mpfr_t scale, tol;
  mpfr_inits2(std::max(x.prec(), y.prec()), scale, tol,
              static_cast<mpfr_ptr>(nullptr));
  mpfr_min(scale, ax.lo(), ay.lo(), MPFR_RNDD);  // lower bound on min(|x|,|y|)
  bool ok = false;
  if (mpfr_sgn(scale) > 0) {
    mpfr_mul_2si(tol, scale, -bits, MPFR_RNDD);
    ok = mpfr_lessequal_p(d.hi(), tol);
  }
  mpfr_clears(scale, tol, static_cast<mpfr_ptr>(nullptr));
  return ok;
}

bool rel_width_below(const Ival& x, int bits) {
  mpfr_t w, scale;
  mpfr_inits2(x.prec(), w, scale, static_cast<mpfr_ptr>(nullptr));
  mpfr_sub(w, x.hi(), x.lo(), MPFR_RNDU);
  Ival ax = abs_i(x);
  mpfr_set(scale, ax.lo(), MPFR_RNDD);
  bool ok = false;
  if (mpfr_sgn(scale) > 0) {
    mpfr_mul_2si(scale, scale, -bits, MPFR_RNDD);
    ok = mpfr_lessequal_p(w, scale);
  }
  mpfr_clears(w, scale, static_cast<mpfr_ptr>(nullptr));
  return ok;
}

}  // namespace eqm
