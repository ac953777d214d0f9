#include "eqm/rational.hpp"

#include "eqm/errors.hpp"

namespace eqm {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw bad_input("empty rational literal");
  // validate: optional sign, digits, optional "/digits"
  std::size_t i = 0;
  auto digits = [&](std::size_t& j) {
    std::size_t start = j;
    while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
    return j > start;
  };
  if (s[i] == '+' || s[i] == '-') ++i;
  if (!digits(i)) throw bad_input("bad rational literal: " + s);
  if (i < s.size()) {
    if (s[i] != '/') throw bad_input("bad rational literal: " + s);
    ++i;
    if (s[i] == '-') throw bad_input("negative denominator not allowed: " + s);
    if (!digits(i) || i != s.size()) throw bad_input("bad rational literal: " + s);
  }
  Rat q;
  const std::string body = s[0] == '+' ? s.substr(1) : s;  // set_str rejects '+'
  if (q.set_str(body, 10) != 0) throw bad_input("bad rational literal: " + s);
  if (sgn(q.get_den()) == 0) throw bad_input("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

std::string int_str(const Int& z) { return z.get_str(); }

Rat rat_pow(const Rat& q, long e) {
  if (e == 0) return Rat(1);
  bool inv = e < 0;
  unsigned long ae = static_cast<unsigned long>(inv ? -e : e);
  if (inv && sgn(q) == 0) throw bad_input("0 raised to a negative power");
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num().get_mpz_t(), ae);
  mpz_pow_ui(den.get_mpz_t(), q.get_den().get_mpz_t(), ae);
  Rat r(num, den);
  r.canonicalize();
  if (inv) r = Rat(1) / r;
  return r;
}

Int binomial(unsigned n, unsigned k) {
  Int r;
  if (k > n) return Int(0);
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::uint64_t RatRng::next(std::uint64_t bound) {
  // splitmix64: deterministic and platform-independent
  auto step = [&]() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  if (bound == 0) return step();
  // rejection sampling for uniformity
  std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v;
  do {
    v = step();
  } while (v >= limit);
  return v % bound;
}

Rat RatRng::positive(unsigned hi, unsigned den) {
  std::uint64_t num = 1 + next(static_cast<std::uint64_t>(hi) * den);
  Rat q(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

Rat RatRng::at_least_one(unsigned hi, unsigned den) {
  std::uint64_t num = den + next(static_cast<std::uint64_t>(hi - 1) * den + 1);
  Rat q(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

}  // namespace eqm
