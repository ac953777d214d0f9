#pragma once

#include <string>
#include <vector>

#include "eqm/matrix.hpp"

namespace eqm {

// Built-in reference matrices with documented extremal arrangements.
enum class RegistryId { k4_n8, k5a_n10, k5b_n10 };

RegistryId parse_registry_id(const std::string& s);
std::string registry_id_str(RegistryId id);

struct RegistryEntry {
  PosMatrix matrix;           // grassmann_point
  sub_t I = 0, J = 0;          // the documented unit pair (both minors == 1)
  bool others_strictly_above = false;  // every other minor strictly > 1
};

// The fixed k=4, n=8 and the two k=5, n=10 points, entries exact (the k=5
// ones live in Q(sqrt(8665656785065))).
RegistryEntry paper_matrix(RegistryId id);

// Recomputes the minor table and checks the documented claims; returns the
// failure description or empty string on success.
std::string verify_paper_matrix(RegistryId id);

// The six 2 x n examples produced by triangulation_matrix with x = 1, with
// their triangulations; n = 3, 4, 5, 6, 6, 6.
struct TriangulationExample {
  int n;
  std::vector<sub_t> edges;
  Mat<Quad> matrix;
};
std::vector<TriangulationExample> triangulation_examples();

}  // namespace eqm
