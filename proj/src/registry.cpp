#include "eqm/registry.hpp"

#include "eqm/errors.hpp"
#include "eqm/minor_table.hpp"

namespace eqm {

RegistryId parse_registry_id(const std::string& s) {
  if (s == "k4_n8") return RegistryId::k4_n8;
  if (s == "k5a_n10") return RegistryId::k5a_n10;
  if (s == "k5b_n10") return RegistryId::k5b_n10;
  throw bad_input("unknown registry id: " + s);
}

std::string registry_id_str(RegistryId id) {
  switch (id) {
    case RegistryId::k4_n8:
      return "k4_n8";
    case RegistryId::k5a_n10:
      return "k5a_n10";
    default:
      return "k5b_n10";
  }
}

namespace {

PosMatrix from_rows(int k, int n, const std::vector<std::vector<Quad>>& rows) {
  PosMatrix m;
  m.k = k;
  m.n = n;
  m.kind = PosMatrix::Kind::grassmann_point;
  m.entries = Mat<Quad>(k, n);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < n; ++c) m.entries(r, c) = rows[r][c];
  return m;
}

Quad q(long num, long den = 1) { return Quad(Rat(num, den)); }

}  // namespace

RegistryEntry paper_matrix(RegistryId id) {
  RegistryEntry e;
  if (id == RegistryId::k4_n8) {
    e.matrix = from_rows(
        4, 8,
        {{q(1), q(0), q(0), q(0), q(-1), q(-7), q(-37, 2), q(-13)},
         {q(0), q(1), q(0), q(0), q(3, 2), q(19, 2), q(95, 4), q(33, 2)},
         {q(0), q(0), q(1), q(0), q(-5, 2), q(-27, 2), q(-125, 4), q(-43, 2)},
         {q(0), q(0), q(0), q(1), q(1), q(1), q(3, 2), q(1)}});
    e.I = parse_subset("{1,2,3,6}");
    e.J = parse_subset("{4,5,7,8}");
    return e;
  }
  const Int D("8665656785065");
  const Quad Q = Quad(Rat(-2955617)) + Quad::sqrt_of(D);
  if (id == RegistryId::k5a_n10) {
    e.matrix = from_rows(
        5, 10,
        {{q(1), q(0), q(0), q(0), q(0), q(1), q(6), q(53), q(98311) + Q / q(124),
          q(237904)},
         {q(0), q(1), q(0), q(0), q(0), q(-1), q(-5), q(-36), q(-32768),
          q(-79343)},
         {q(0), q(0), q(1), q(0), q(0), q(1), q(4), q(20), q(0) - Q / q(372),
          q(-19) - Q / q(186)},
         {q(0), q(0), q(0), q(1), q(0), q(-1), q(-3), q(-5), q(-6), q(-7)},
         {q(0), q(0), q(0), q(0), q(1), q(1), q(1), q(1), q(1), q(1)}});
    e.I = parse_subset("{1,2,3,4,7}");
    e.J = parse_subset("{5,6,8,9,10}");
    return e;
  }
  e.matrix = from_rows(
      5, 10,
      {{q(1), q(0), q(0), q(0), q(0), q(1), q(5), q(25), q(265), q(318)},
       {q(0), q(1), q(0), q(0), q(0), q(-1), q(-4), q(-17), q(-128),
        q(-4869, 32)},
       {q(0), q(0), q(1), q(0), q(0), q(1), q(3), q(10), q(43), q(123761, 2480)},
       {q(0), q(0), q(0), q(1), q(0), q(-1), q(-2), q(-4), q(-9), q(-10)},
       {q(0), q(0), q(0), q(0), q(1), q(1), q(1), q(1), q(1), q(1)}});
  e.I = parse_subset("{1,2,3,4,8}");
  e.J = parse_subset("{5,6,7,9,10}");
  return e;
}

std::string verify_paper_matrix(RegistryId id) {
  RegistryEntry e = paper_matrix(id);
  MinorTable t = minor_table(e.matrix);
  const Quad one(Rat(1));
  if (quad_cmp(t.at(e.I), one) != 0)
    return "minor on " + subset_str(e.I) + " is " + quad_str(t.at(e.I)) +
           ", expected 1";
  if (quad_cmp(t.at(e.J), one) != 0)
    return "minor on " + subset_str(e.J) + " is " + quad_str(t.at(e.J)) +
           ", expected 1";
  sub_t s = first_subset(t.k);
  for (std::size_t r = 0; r < t.v.size(); ++r, s = next_subset(s, t.n)) {
    int c = quad_cmp(t.v[r], one);
    if (c < 0)
      return "minor on " + subset_str(s) + " is " + quad_str(t.v[r]) + " < 1";
    if (e.others_strictly_above && c == 0 && s != e.I && s != e.J)
      return "minor on " + subset_str(s) + " equals 1 but is outside the pair";
  }
  return "";
}

std::vector<TriangulationExample> triangulation_examples() {
  auto edges = [](std::initializer_list<const char*> strs) {
    std::vector<sub_t> out;
    for (const char* s : strs) out.push_back(parse_subset(s));
    return out;
  };
  auto mat = [](int n, std::initializer_list<long> top,
                std::initializer_list<long> bot) {
    Mat<Quad> m(2, n);
    int c = 0;
    for (long v : top) m(0, c++) = Quad(Rat(v));
    c = 0;
    for (long v : bot) m(1, c++) = Quad(Rat(v));
    return m;
  };
  std::vector<TriangulationExample> out;
  out.push_back({3, edges({"{1,2}", "{2,3}", "{1,3}"}), mat(3, {1, 1, 0}, {0, 1, 1})});
  out.push_back({4, edges({"{1,2}", "{2,3}", "{3,4}", "{1,4}", "{2,4}"}),
                 mat(4, {1, 1, 1, 0}, {0, 1, 2, 1})});
  out.push_back({5,
                 edges({"{1,2}", "{2,3}", "{3,4}", "{4,5}", "{1,5}", "{1,3}",
                        "{1,4}"}),
                 mat(5, {1, 3, 2, 1, 0}, {0, 1, 1, 1, 1})});
  out.push_back({6,
                 edges({"{1,2}", "{2,3}", "{3,4}", "{4,5}", "{5,6}", "{1,6}",
                        "{1,3}", "{1,4}", "{1,5}"}),
                 mat(6, {1, 4, 3, 2, 1, 0}, {0, 1, 1, 1, 1, 1})});
  out.push_back({6,
                 edges({"{1,2}", "{2,3}", "{3,4}", "{4,5}", "{5,6}", "{1,6}",
                        "{1,3}", "{3,5}", "{1,5}"}),
                 mat(6, {1, 3, 2, 3, 1, 0}, {0, 1, 1, 2, 1, 1})});
  out.push_back({6,
                 edges({"{1,2}", "{2,3}", "{3,4}", "{4,5}", "{5,6}", "{1,6}",
                        "{2,6}", "{3,5}", "{3,6}"}),
                 mat(6, {1, 1, 1, 2, 1, 0}, {0, 1, 2, 5, 3, 1})});
  return out;
}

}  // namespace eqm
