#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace eqm {

// mpq_class keeps values canonical (lowest terms, positive denominator),
// which is exactly the invariant the exact layer needs.
using Int = mpz_class;
using Rat = mpq_class;

// Parse "p/q" or "p" (optional sign, arbitrary size). Throws bad_input.
Rat parse_rat(const std::string& s);

// Canonical form: "p/q" when the denominator is not 1, else "p".
std::string rat_str(const Rat& q);

std::string int_str(const Int& z);

// q^e for integer e (negative allowed; q must be nonzero then).
Rat rat_pow(const Rat& q, long e);

inline int sgn(const Rat& q) { return sgn(q.get_num()); }

Int binomial(unsigned n, unsigned k);

// Deterministic uniform rational in (0, hi]: numerator in [1, hi*den],
// denominator fixed. Used by seeded generators.
class RatRng {
 public:
  explicit RatRng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
  // uniform integer in [0, bound)
  std::uint64_t next(std::uint64_t bound);
  // rational in (0, hi] with denominator `den`
  Rat positive(unsigned hi = 10, unsigned den = 1000);
  // rational in [1, hi] with denominator `den`
  Rat at_least_one(unsigned hi = 10, unsigned den = 1000);

 private:
  std::uint64_t state_;
};

}  // namespace eqm
