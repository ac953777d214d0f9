#include "eqm/hadamard.hpp"

#include "eqm/errors.hpp"
#include "eqm/rational.hpp"

namespace eqm {

Mat<Quad> hadamard_power(const Mat<Quad>& m, int e) {
  if (e < 1) throw bad_input("hadamard_power: exponent must be >= 1");
  Mat<Quad> out(m.rows, m.cols);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) {
      const Quad& v = m(r, c);
      Quad acc(Rat(1));
      for (int i = 0; i < e; ++i) acc = acc * v;
      out(r, c) = acc;
    }
  return out;
}

Mat<Quad> flip_reciprocal(const Mat<Quad>& m) {
  Mat<Quad> out(m.cols, m.rows);
  for (int i = 1; i <= m.cols; ++i)
    for (int j = 1; j <= m.rows; ++j) {
      const Quad& v = m(j - 1, m.cols - i);
      if (quad_sign(v) == 0) throw bad_input("flip_reciprocal: zero entry");
      out(i - 1, j - 1) = Quad(Rat(1)) / v;
    }
  return out;
}

int find_tp_hadamard_exponent(const Mat<Quad>& m, int cap) {
  for (int e = 1; e <= cap; ++e)
    if (is_totally_positive(hadamard_power(m, e))) return e;
  throw cap_exceeded("no Hadamard power up to the cap is totally positive");
}

}  // namespace eqm
