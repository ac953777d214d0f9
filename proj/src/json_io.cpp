#include "eqm/json_io.hpp"

#include <string>
#include <vector>

#include "eqm/errors.hpp"
#include "eqm/quadext.hpp"
#include "eqm/rational.hpp"
#include "eqm/subset.hpp"
#include "json.hpp"

namespace eqm {

namespace {

using ojson = nlohmann::ordered_json;

// Rationals serialize as "p/q" strings; proper quadratic values as an
// {a, b, D} object. This is the shared value encoding for all the files.
ojson quad_value(const Quad& q) {
  if (q.is_rational()) return rat_str(q.a);
  ojson j;
  j["a"] = rat_str(q.a);
  j["b"] = rat_str(q.b);
  j["D"] = int_str(q.D);
  return j;
}

Quad quad_value_parse(const ojson& j) {
  if (j.is_string()) return Quad(parse_rat(j.get<std::string>()));
  if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("D"))
    throw bad_input("value: expected \"p/q\" or {\"a\",\"b\",\"D\"}");
  const Rat a = parse_rat(j.at("a").get<std::string>());
  const Rat b = parse_rat(j.at("b").get<std::string>());
  const std::string ds = j.at("D").get<std::string>();
  Int D;
  if (D.set_str(ds, 10) != 0) throw bad_input("value: D is not an integer");
  return Quad(a, b, D);
}

ojson parse_text(const std::string& text, const char* what) {
  try {
    return ojson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw bad_input(std::string(what) + ": " + e.what());
  }
}

int get_int(const ojson& j, const char* key, const char* what) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw bad_input(std::string(what) + ": missing integer field \"" + key + "\"");
  return j.at(key).get<int>();
}

}  // namespace

std::string quad_to_json(const Quad& q) { return quad_value(q).dump(); }

Quad quad_from_json_str(const std::string& s) {
  return quad_value_parse(parse_text(s, "value"));
}

std::string matrix_to_json(const PosMatrix& m) {
  m.validate();
  ojson j;
  j["k"] = m.k;
  j["n"] = m.n;
  j["kind"] = m.kind == PosMatrix::Kind::grassmann_point ? "grassmann_point" : "rectangular_tp";
  ojson rows = ojson::array();
  for (int r = 0; r < m.entries.rows; ++r) {
    ojson row = ojson::array();
    for (int c = 0; c < m.entries.cols; ++c) row.push_back(quad_value(m.entries(r, c)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j.dump();
}

PosMatrix matrix_from_json(const std::string& text) {
  const ojson j = parse_text(text, "matrix");
  PosMatrix m;
  m.k = get_int(j, "k", "matrix");
  m.n = get_int(j, "n", "matrix");
  if (!j.contains("kind") || !j.at("kind").is_string())
    throw bad_input("matrix: missing \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "grassmann_point")
    m.kind = PosMatrix::Kind::grassmann_point;
  else if (kind == "rectangular_tp")
    m.kind = PosMatrix::Kind::rectangular_tp;
  else
    throw bad_input("matrix: kind must be grassmann_point or rectangular_tp");
  if (!j.contains("entries") || !j.at("entries").is_array())
    throw bad_input("matrix: missing \"entries\" array");
  const auto& rows = j.at("entries");
  const int want_cols = m.kind == PosMatrix::Kind::grassmann_point ? m.n : m.n - m.k;
  m.entries = Mat<Quad>(static_cast<int>(rows.size()), want_cols);
  for (int r = 0; r < m.entries.rows; ++r) {
    if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != want_cols)
      throw bad_input("matrix: ragged or misshapen entry rows");
    for (int c = 0; c < want_cols; ++c) m.entries(r, c) = quad_value_parse(rows[r][c]);
  }
  m.validate();
  return m;
}

std::string table_to_json(const MinorTable& t) {
  ojson j;
  j["n"] = t.n;
  j["k"] = t.k;
  ojson vals = ojson::object();
  std::size_t count = 0;
  for (sub_t s = first_subset(t.k); s; s = next_subset(s, t.n)) {
    vals[subset_str(s)] = quad_value(t.v.at(colex_rank(s)));
    ++count;
  }
  if (count != t.v.size()) throw bad_input("table: value count does not match C(n,k)");
  j["values"] = std::move(vals);
  return j.dump();
}

MinorTable table_from_json(const std::string& text) {
  const ojson j = parse_text(text, "table");
  MinorTable t;
  t.n = get_int(j, "n", "table");
  t.k = get_int(j, "k", "table");
  if (t.n < 1 || t.n > 62 || t.k < 0 || t.k > t.n)
    throw bad_input("table: need 1 <= n <= 62 and 0 <= k <= n");
  if (!j.contains("values") || !j.at("values").is_object())
    throw bad_input("table: missing \"values\" object");
  const std::size_t want = binomial(static_cast<unsigned>(t.n), static_cast<unsigned>(t.k)).get_ui();
  t.v.assign(want, Quad());
  std::vector<bool> seen(want, false);
  for (const auto& [key, val] : j.at("values").items()) {
    const sub_t s = parse_subset(key);
    if (popcount(s) != t.k || (s & ~full_set(t.n)))
      throw bad_input("table: key " + key + " is not a k-subset of [n]");
    const std::size_t r = colex_rank(s);
    if (seen[r]) throw bad_input("table: duplicate key " + key);
    seen[r] = true;
    t.v[r] = quad_value_parse(val);
  }
  for (std::size_t r = 0; r < want; ++r)
    if (!seen[r]) throw bad_input("table: missing minors (need all C(n,k) keys)");
  return t;
}

std::string arrangement_to_json(const Arrangement& a) {
  ojson j;
  ojson zeros = ojson::array();
  for (sub_t s : a.zeros) zeros.push_back(subset_str(s));
  j["zeros"] = std::move(zeros);
  ojson classes = ojson::array();
  for (const auto& cls : a.classes) {
    ojson c = ojson::array();
    for (sub_t s : cls) c.push_back(subset_str(s));
    classes.push_back(std::move(c));
  }
  j["classes"] = std::move(classes);
  return j.dump();
}

}  // namespace eqm
