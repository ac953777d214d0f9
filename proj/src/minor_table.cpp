#include "eqm/minor_table.hpp"

#include "eqm/errors.hpp"

namespace eqm {

MinorTable minor_table(const PosMatrix& m) {
  m.validate();
  const PosMatrix pt =
      m.kind == PosMatrix::Kind::grassmann_point ? m : phi_embed(m);
  MinorTable t;
  t.n = pt.n;
  t.k = pt.k;
  t.v.reserve(static_cast<std::size_t>(binomial(t.n, t.k).get_ui()));
  for (sub_t s = first_subset(t.k); s != 0; s = next_subset(s, t.n))
    t.v.push_back(plucker(pt, s));
  return t;
}

IvalTable minor_table_2xn(const IvalMatrix& m) {
  if (m.k != 2) throw bad_input("minor_table_2xn: k != 2");
  if (static_cast<int>(m.cols.size()) != m.n || m.n < 2)
    throw bad_input("minor_table_2xn: bad column count");
  IvalTable t;
  t.n = m.n;
  t.k = 2;
  for (sub_t s = first_subset(2); s != 0; s = next_subset(s, t.n)) {
    auto e = elements(s);
    const auto& ci = m.cols[e[0] - 1];
    const auto& cj = m.cols[e[1] - 1];
    t.v.push_back(ci[0] * cj[1] - ci[1] * cj[0]);
  }
  return t;
}

IvalTable to_intervals(const MinorTable& t, mpfr_prec_t prec) {
  IvalTable out;
  out.n = t.n;
  out.k = t.k;
  out.v.reserve(t.v.size());
  for (const Quad& q : t.v) out.v.push_back(Ival::from_quad(q, prec));
  return out;
}

}  // namespace eqm
