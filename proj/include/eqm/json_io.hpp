#pragma once

#include <string>

#include "eqm/arrangement.hpp"
#include "eqm/matrix.hpp"
#include "eqm/minor_table.hpp"

namespace eqm {

// Matrix JSON: {"k":4,"n":8,"kind":"grassmann_point","entries":[[...]]}
// with entries either "p/q" strings or {"a":"p/q","b":"p/q","D":"d"}.
std::string matrix_to_json(const PosMatrix& m);
PosMatrix matrix_from_json(const std::string& text);  // throws bad_input

// MinorTable JSON: {"n":8,"k":4,"values":{"{1,2,3,4}":"1", ...}} in colex
// key order (keys are canonical subset strings).
std::string table_to_json(const MinorTable& t);
MinorTable table_from_json(const std::string& text);

// Arrangement JSON: {"zeros":["{...}"],"classes":[["{...}"],...]}.
std::string arrangement_to_json(const Arrangement& a);

std::string quad_to_json(const Quad& q);  // value encoding used above
Quad quad_from_json_str(const std::string& s);

}  // namespace eqm
