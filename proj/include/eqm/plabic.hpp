#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqm/subset.hpp"

namespace eqm {

// Planar bicolored graph in a disk as a half-edge rotation system.
//
// Vertices: interior vertices are colored black/white; boundary vertices sit
// on a circle, carry labels 1..n clockwise, and have degree 3 here: an arc to
// each circle neighbor plus one leg into the disk. Arcs exist only to close
// face walks around the boundary; strands never traverse them.
//
// Half-edges: h and twin(h) form an edge; tail(h) is the vertex h leaves.
// rot[v] lists the half-edges leaving v in counterclockwise order.
class Plabic {
 public:
  enum Color : int { boundary = 0, black = 1, white = 2 };

  int n = 0;                               // boundary vertex count
  std::vector<int> color;                  // per vertex
  std::vector<std::vector<int>> rot;       // ccw half-edge ids per vertex
  std::vector<int> he_tail;                // per half-edge
  std::vector<int> he_twin;
  std::vector<bool> he_arc;                // true for boundary-circle arcs
  std::vector<int> bnd;                    // bnd[i] = vertex of label i+1

  int head(int h) const { return he_tail[he_twin[h]]; }
  int degree(int v) const { return static_cast<int>(rot[v].size()); }
  int rot_index(int h) const;              // position of h in rot[tail(h)]
  int rot_next(int h) const;               // ccw-next half-edge at tail
  int rot_prev(int h) const;
  int leg_of(int label) const;             // the inward half-edge at boundary label

  // structural checks (degrees, twin involution, arcs ring); throws bad_input
  void validate() const;

  int add_vertex(int col);
  int add_edge(int u, int v, bool arc = false);  // appends to rot; returns h at u

  bool operator==(const Plabic& o) const;
};

// ---- faces ---------------------------------------------------------------

struct Face {
  std::vector<int> half_edges;  // the ccw walk (face kept on the left)
  bool boundary = false;        // touches the boundary circle (contains arcs)
};

// All faces except the outer one.
std::vector<Face> faces(const Plabic& g);

// ---- strands -------------------------------------------------------------

struct Strands {
  std::vector<int> perm;                // pi[i-1] = endpoint of strand i
  std::vector<std::vector<int>> edges;  // directed half-edges per strand
};

// Trace all boundary strands (right turn at black, left at white).
Strands trace_strands(const Plabic& g);

// Reducedness witness: empty string means reduced.
std::string reducedness_violation(const Plabic& g);
inline bool is_reduced(const Plabic& g) { return reducedness_violation(g).empty(); }

// Face labels: face F is labeled by the set of strands having F on their
// left. All labels share one size k, and are pairwise distinct on a reduced
// graph. Throws not_reduced for non-reduced input. Returned in the order of
// faces(g).
std::vector<sub_t> face_labels(const Plabic& g);

// ---- moves ---------------------------------------------------------------

// Square move at the interior quadrilateral face carrying `label`. The four
// corners are made trivalent by splitting (M2 expansion) if needed, must
// alternate in color, then flip color; afterwards the graph is normalized:
// same-colored edges contracted (M2) and interior degree-2 vertices removed
// (M3). Throws pattern_mismatch when the face is not a mutable square.
void square_move(Plabic& g, sub_t label);

// Individual moves (testing / CLI hooks).
void contract_edge(Plabic& g, int h);             // M2: same-color endpoints
void insert_degree2(Plabic& g, int h, int col);   // M3 inverse
void remove_degree2(Plabic& g, int v);            // M3
void normalize(Plabic& g);

// ---- honeycomb patches ----------------------------------------------------

// Hexagonal-cell patch with b1*b2 cells in a rhombus, the corner cell turned
// into a quadrilateral; 2(b1+b2) boundary legs. The square face label equals
// [1, k-1] union {k+b1} with k = b1+b2 (calibrated at construction).
Plabic honeycomb(int b1, int b2);

// Result of a chain of square moves.
struct ChainLog {
  std::vector<std::pair<sub_t, sub_t>> moves;  // (label before, after) per move
  sub_t final_square = 0;                      // label created by the last move
};

// Wave of square moves over all interior faces, starting at the unique
// square; every interior face is mutated exactly once (b1*b2 moves).
ChainLog chain_reaction(Plabic& g);

// The fixed 12-cell two-tier instance on n = 12: a 2x2 core wrapped by an
// open arc of hexagons, run as two passes (all cells, then deep-interior
// cells only), 16 moves total; the final square is labeled by the complement
// of the initial square label.
ChainLog layered_chain_reaction(Plabic& g_out);
Plabic layered_honeycomb();

// ---- misc ----------------------------------------------------------------

// Projection of a label W onto the cyclic blocks of I: sizes of the
// intersections with the maximal cyclic runs of I and of its complement.
std::vector<int> project_pi(sub_t W, sub_t I, int n);

// Deterministic Graphviz export (stable vertex/edge order).
std::string export_dot(const Plabic& g);

// JSON round trip for the CLI.
std::string plabic_to_json(const Plabic& g);
Plabic plabic_from_json(const std::string& text);

}  // namespace eqm
