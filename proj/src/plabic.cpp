#include "eqm/plabic.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "eqm/errors.hpp"
#include "eqm/quadext.hpp"

namespace eqm {

namespace {

// Next half-edge of the face walk that keeps the face on the left.
int face_next(const Plabic& g, int h) { return g.rot_prev(g.he_twin[h]); }

// Undirected edge id shared by h and twin(h).
int eid(const Plabic& g, int h) { return std::min(h, g.he_twin[h]); }

std::vector<std::vector<int>> face_walks(const Plabic& g) {
  int hcount = static_cast<int>(g.he_tail.size());
  std::vector<char> seen(hcount, 0);
  std::vector<std::vector<int>> walks;
  for (int h0 = 0; h0 < hcount; ++h0) {
    if (seen[h0]) continue;
    std::vector<int> walk;
    int h = h0;
    do {
      seen[h] = 1;
      walk.push_back(h);
      h = face_next(g, h);
    } while (h != h0);
    walks.push_back(std::move(walk));
  }
  return walks;
}

bool all_arcs(const Plabic& g, const std::vector<int>& walk) {
  for (int h : walk)
    if (!g.he_arc[h]) return false;
  return true;
}

}  // namespace

// ---- Plabic basics ---------------------------------------------------------

int Plabic::rot_index(int h) const {
  const auto& r = rot[he_tail[h]];
  for (int i = 0; i < static_cast<int>(r.size()); ++i)
    if (r[i] == h) return i;
  throw bad_input("plabic: half-edge missing from its rotation list");
}

int Plabic::rot_next(int h) const {
  const auto& r = rot[he_tail[h]];
  return r[(rot_index(h) + 1) % r.size()];
}

int Plabic::rot_prev(int h) const {
  const auto& r = rot[he_tail[h]];
  return r[(rot_index(h) + r.size() - 1) % r.size()];
}

int Plabic::leg_of(int label) const {
  if (label < 1 || label > n) throw bad_input("plabic: boundary label out of range");
  for (int h : rot[bnd[label - 1]])
    if (!he_arc[h]) return h;
  throw bad_input("plabic: boundary vertex has no leg");
}

int Plabic::add_vertex(int col) {
  color.push_back(col);
  rot.emplace_back();
  return static_cast<int>(color.size()) - 1;
}

int Plabic::add_edge(int u, int v, bool arc) {
  int h = static_cast<int>(he_tail.size());
  he_tail.push_back(u);
  he_tail.push_back(v);
  he_twin.push_back(h + 1);
  he_twin.push_back(h);
  he_arc.push_back(arc);
  he_arc.push_back(arc);
  rot[u].push_back(h);
  rot[v].push_back(h + 1);
  return h;
}

bool Plabic::operator==(const Plabic& o) const {
  return n == o.n && color == o.color && rot == o.rot && he_tail == o.he_tail &&
         he_twin == o.he_twin && he_arc == o.he_arc && bnd == o.bnd;
}

void Plabic::validate() const {
  int vcount = static_cast<int>(color.size());
  int hcount = static_cast<int>(he_tail.size());
  if (vcount == 0 && hcount == 0 && n == 0) return;
  if (n < 3) throw bad_input("plabic: need at least three boundary vertices");
  if (static_cast<int>(rot.size()) != vcount)
    throw bad_input("plabic: rotation table size differs from vertex count");
  if (static_cast<int>(he_twin.size()) != hcount ||
      static_cast<int>(he_arc.size()) != hcount || hcount % 2 != 0)
    throw bad_input("plabic: half-edge arrays inconsistent");
  for (int h = 0; h < hcount; ++h) {
    int t = he_twin[h];
    if (t < 0 || t >= hcount || t == h || he_twin[t] != h)
      throw bad_input("plabic: twin is not a fixed-point-free involution");
    if (he_arc[h] != he_arc[t]) throw bad_input("plabic: arc flag differs across an edge");
    if (he_tail[h] < 0 || he_tail[h] >= vcount)
      throw bad_input("plabic: half-edge tail out of range");
  }
  std::vector<int> listed(hcount, 0);
  for (int v = 0; v < vcount; ++v)
    for (int h : rot[v]) {
      if (h < 0 || h >= hcount) throw bad_input("plabic: rotation entry out of range");
      if (he_tail[h] != v) throw bad_input("plabic: rotation entry at the wrong vertex");
      if (listed[h]++) throw bad_input("plabic: half-edge listed twice");
    }
  for (int h = 0; h < hcount; ++h)
    if (!listed[h]) throw bad_input("plabic: half-edge missing from rotations");

  if (static_cast<int>(bnd.size()) != n)
    throw bad_input("plabic: boundary table size differs from n");
  std::vector<int> labeled(vcount, 0);
  for (int i = 0; i < n; ++i) {
    int b = bnd[i];
    if (b < 0 || b >= vcount || color[b] != boundary)
      throw bad_input("plabic: boundary table entry is not a boundary vertex");
    if (labeled[b]++) throw bad_input("plabic: boundary vertex labeled twice");
  }
  int arc_half = 0;
  for (int v = 0; v < vcount; ++v) {
    if (color[v] == boundary) {
      if (!labeled[v]) throw bad_input("plabic: unlabeled boundary vertex");
      if (degree(v) != 3) throw bad_input("plabic: boundary vertex degree must be 3");
      int arcs = 0;
      for (int h : rot[v])
        if (he_arc[h]) {
          ++arcs;
          if (color[he_tail[he_twin[h]]] != boundary)
            throw bad_input("plabic: arc endpoint is interior");
        }
      if (arcs != 2) throw bad_input("plabic: boundary vertex needs two arcs and one leg");
    } else if (color[v] == black || color[v] == white) {
      if (degree(v) == 0) throw bad_input("plabic: isolated interior vertex");
      for (int h : rot[v])
        if (he_arc[h]) throw bad_input("plabic: interior vertex on a boundary arc");
    } else {
      throw bad_input("plabic: bad vertex color");
    }
  }
  for (int h = 0; h < hcount; ++h)
    if (he_arc[h]) ++arc_half;
  if (arc_half != 2 * n) throw bad_input("plabic: boundary arcs do not form a single cycle");
  for (int i = 0; i < n; ++i) {
    bool found = false;
    for (int h : rot[bnd[i]])
      if (he_arc[h] && he_tail[he_twin[h]] == bnd[(i + 1) % n]) found = true;
    if (!found) throw bad_input("plabic: missing arc between consecutive boundary labels");
  }

  // Euler characteristic of the sphere (disk interior plus outer face).
  int fcount = static_cast<int>(face_walks(*this).size());
  if (vcount - hcount / 2 + fcount != 2)
    throw bad_input("plabic: rotation system is not planar and connected");
}

// ---- faces ------------------------------------------------------------------

std::vector<Face> faces(const Plabic& g) {
  std::vector<Face> out;
  int outer = 0;
  for (auto& walk : face_walks(g)) {
    if (all_arcs(g, walk)) {
      ++outer;
      continue;
    }
    Face f;
    f.boundary = false;
    for (int h : walk)
      if (g.he_arc[h]) f.boundary = true;
    f.half_edges = std::move(walk);
    out.push_back(std::move(f));
  }
  if (g.n > 0 && outer != 1) throw bad_input("plabic: expected exactly one outer face");
  return out;
}

// ---- strands ----------------------------------------------------------------

Strands trace_strands(const Plabic& g) {
  Strands st;
  st.perm.assign(g.n, 0);
  st.edges.assign(g.n, {});
  std::vector<int> label_of(g.color.size(), 0);
  for (int i = 0; i < g.n; ++i) label_of[g.bnd[i]] = i + 1;
  std::size_t cap = 4 * g.he_tail.size() + 16;
  for (int i = 1; i <= g.n; ++i) {
    int h = g.leg_of(i);
    auto& path = st.edges[i - 1];
    std::size_t steps = 0;
    for (;;) {
      path.push_back(h);
      int v = g.he_tail[g.he_twin[h]];
      if (g.color[v] == Plabic::boundary) {
        st.perm[i - 1] = label_of[v];
        break;
      }
      int back = g.he_twin[h];
      h = (g.color[v] == Plabic::black) ? g.rot_next(back) : g.rot_prev(back);
      if (++steps > cap) throw bad_input("plabic: strand trace exceeded its step cap");
    }
  }
  return st;
}

std::string reducedness_violation(const Plabic& g) {
  Strands st;
  try {
    st = trace_strands(g);
  } catch (const bad_input& e) {
    return e.what();
  }
  int hcount = static_cast<int>(g.he_tail.size());
  std::vector<char> used(hcount, 0);
  for (int i = 0; i < g.n; ++i)
    for (int h : st.edges[i]) {
      if (used[h]) return "directed half-edge traversed by two strands";
      used[h] = 1;
    }
  for (int h = 0; h < hcount; ++h)
    if (!g.he_arc[h] && !used[h])
      return "closed strand through half-edge " + std::to_string(h);
  // Self-intersections: one strand using an edge twice.
  std::vector<std::map<int, int>> pos_of(g.n);  // strand -> edge id -> position
  for (int i = 0; i < g.n; ++i)
    for (int p = 0; p < static_cast<int>(st.edges[i].size()); ++p) {
      int e = eid(g, st.edges[i][p]);
      if (pos_of[i].count(e))
        return "strand " + std::to_string(i + 1) + " crosses itself";
      pos_of[i][e] = p;
    }
  // Bad double crossings: two strands sharing edges e != f in the same order.
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b) {
      std::vector<std::pair<int, int>> common;  // (pos in a, pos in b)
      for (auto& [e, pa] : pos_of[a]) {
        auto it = pos_of[b].find(e);
        if (it != pos_of[b].end()) common.push_back({pa, it->second});
      }
      if (common.size() < 2) continue;
      std::sort(common.begin(), common.end());
      for (std::size_t i = 1; i < common.size(); ++i)
        if (common[i].second > common[i - 1].second)
          return "strands " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                 " cross twice in the same order";
    }
  return "";
}

// ---- face labels --------------------------------------------------------------

std::vector<sub_t> face_labels(const Plabic& g) {
  std::string why = reducedness_violation(g);
  if (!why.empty()) throw not_reduced("face labels need a reduced graph: " + why);
  auto fs = faces(g);
  int hcount = static_cast<int>(g.he_tail.size());
  std::vector<int> face_of(hcount, -1);
  for (int f = 0; f < static_cast<int>(fs.size()); ++f)
    for (int h : fs[f].half_edges) face_of[h] = f;
  // Face adjacency across interior (non-arc) edges.
  std::vector<std::vector<std::pair<int, int>>> adj(fs.size());  // (face, edge id)
  for (int f = 0; f < static_cast<int>(fs.size()); ++f)
    for (int h : fs[f].half_edges) {
      if (g.he_arc[h]) continue;
      int f2 = face_of[g.he_twin[h]];
      if (f2 >= 0) adj[f].push_back({f2, eid(g, h)});
    }
  auto st = trace_strands(g);
  std::vector<sub_t> labels(fs.size(), 0);
  for (int i = 1; i <= g.n; ++i) {
    int t = st.perm[i - 1];
    const auto& path = st.edges[i - 1];
    std::set<int> blocked;
    for (int h : path) blocked.insert(eid(g, h));
    // Flood the region to the left of the strand: seed with the faces the
    // strand walk itself borders on its left, then grow without crossing it.
    std::vector<char> vis(fs.size(), 0);
    std::queue<int> q;
    for (int h : path) {
      int f = face_of[h];
      if (f >= 0 && !vis[f]) {
        vis[f] = 1;
        q.push(f);
      }
    }
    while (!q.empty()) {
      int f = q.front();
      q.pop();
      for (auto& [f2, e] : adj[f])
        if (!vis[f2] && !blocked.count(e)) {
          vis[f2] = 1;
          q.push(f2);
        }
    }
    for (int f = 0; f < static_cast<int>(fs.size()); ++f)
      if (vis[f]) labels[f] = with(labels[f], t);
  }
  std::set<sub_t> distinct(labels.begin(), labels.end());
  bool even = true;
  for (sub_t s : labels)
    if (popcount(s) != popcount(labels[0])) even = false;
  if (!even || distinct.size() != labels.size())
    throw not_reduced("face labels are not distinct subsets of one size");
  return labels;
}

// ---- elementary moves ----------------------------------------------------------

namespace {

// Drop vertices and half-edges marked dead (color/tail == -1), renumbering in
// the old order.
void compact(Plabic& g) {
  int vcount = static_cast<int>(g.color.size());
  int hcount = static_cast<int>(g.he_tail.size());
  std::vector<int> vmap(vcount, -1), hmap(hcount, -1);
  int nv = 0, nh = 0;
  for (int v = 0; v < vcount; ++v)
    if (g.color[v] != -1) vmap[v] = nv++;
  for (int h = 0; h < hcount; ++h)
    if (g.he_tail[h] != -1) hmap[h] = nh++;
  Plabic out;
  out.n = g.n;
  out.color.resize(nv);
  out.rot.resize(nv);
  out.he_tail.resize(nh);
  out.he_twin.resize(nh);
  out.he_arc.resize(nh);
  for (int v = 0; v < vcount; ++v) {
    if (vmap[v] < 0) continue;
    out.color[vmap[v]] = g.color[v];
    auto& r = out.rot[vmap[v]];
    for (int h : g.rot[v]) r.push_back(hmap[h]);
  }
  for (int h = 0; h < hcount; ++h) {
    if (hmap[h] < 0) continue;
    out.he_tail[hmap[h]] = vmap[g.he_tail[h]];
    out.he_twin[hmap[h]] = hmap[g.he_twin[h]];
    out.he_arc[hmap[h]] = g.he_arc[h];
  }
  out.bnd.reserve(g.bnd.size());
  for (int b : g.bnd) out.bnd.push_back(vmap[b]);
  g = std::move(out);
}

}  // namespace

void contract_edge(Plabic& g, int h) {
  int t = g.he_twin[h];
  int u = g.he_tail[h], v = g.he_tail[t];
  if (u == v) throw pattern_mismatch("contract: cannot contract a loop");
  if (g.he_arc[h]) throw pattern_mismatch("contract: cannot contract a boundary arc");
  if (g.color[u] == Plabic::boundary || g.color[v] == Plabic::boundary ||
      g.color[u] != g.color[v])
    throw pattern_mismatch("contract: endpoints must be interior and same-colored");
  int pos_t = g.rot_index(t);
  int pos_h = g.rot_index(h);
  std::vector<int> moved;
  int dv = g.degree(v);
  for (int s = 1; s < dv; ++s) moved.push_back(g.rot[v][(pos_t + s) % dv]);
  for (int x : moved) g.he_tail[x] = u;
  auto& ru = g.rot[u];
  ru.erase(ru.begin() + pos_h);
  ru.insert(ru.begin() + pos_h, moved.begin(), moved.end());
  g.rot[v].clear();
  g.color[v] = -1;
  g.he_tail[h] = -1;
  g.he_tail[t] = -1;
  compact(g);
}

void insert_degree2(Plabic& g, int h, int col) {
  if (col != Plabic::black && col != Plabic::white)
    throw pattern_mismatch("insert: new vertex must be black or white");
  if (g.he_arc[h]) throw pattern_mismatch("insert: cannot subdivide a boundary arc");
  int t = g.he_twin[h];
  int x = g.add_vertex(col);
  int a = static_cast<int>(g.he_tail.size());
  int b = a + 1;
  g.he_tail.push_back(x);
  g.he_tail.push_back(x);
  g.he_twin.push_back(h);
  g.he_twin.push_back(t);
  g.he_arc.push_back(false);
  g.he_arc.push_back(false);
  g.he_twin[h] = a;
  g.he_twin[t] = b;
  g.rot[x] = {a, b};
}

void remove_degree2(Plabic& g, int v) {
  if (v < 0 || v >= static_cast<int>(g.color.size()) ||
      (g.color[v] != Plabic::black && g.color[v] != Plabic::white))
    throw pattern_mismatch("remove: need an interior vertex");
  if (g.degree(v) != 2) throw pattern_mismatch("remove: need a degree-2 vertex");
  int h1 = g.rot[v][0], h2 = g.rot[v][1];
  int a = g.he_twin[h1], b = g.he_twin[h2];
  if (g.he_tail[a] == v || g.he_tail[b] == v)
    throw pattern_mismatch("remove: vertex sits on a loop");
  if (g.he_tail[a] == g.he_tail[b])
    throw pattern_mismatch("remove: removal would create a loop");
  g.he_twin[a] = b;
  g.he_twin[b] = a;
  g.he_tail[h1] = -1;
  g.he_tail[h2] = -1;
  g.rot[v].clear();
  g.color[v] = -1;
  compact(g);
}

void normalize(Plabic& g) {
  bool changed = true;
  while (changed) {
    changed = false;
    int hcount = static_cast<int>(g.he_tail.size());
    for (int h = 0; h < hcount; ++h) {
      if (g.he_arc[h] || h > g.he_twin[h]) continue;
      int u = g.he_tail[h], w = g.he_tail[g.he_twin[h]];
      if (u != w && g.color[u] != Plabic::boundary && g.color[u] == g.color[w]) {
        contract_edge(g, h);
        changed = true;
        break;
      }
    }
    if (changed) continue;
    int vcount = static_cast<int>(g.color.size());
    for (int v = 0; v < vcount; ++v) {
      if ((g.color[v] == Plabic::black || g.color[v] == Plabic::white) && g.degree(v) == 2) {
        int a = g.he_twin[g.rot[v][0]], b = g.he_twin[g.rot[v][1]];
        if (g.he_tail[a] == v || g.he_tail[a] == g.he_tail[b]) continue;
        remove_degree2(g, v);
        changed = true;
        break;
      }
    }
  }
}

// ---- square move ---------------------------------------------------------------

namespace {

// Split corner v so that exactly {h_out, twin(h_in), one new edge} remain at v;
// h_in/h_out are consecutive half-edges of a face walk through v.
void split_corner(Plabic& g, int h_in, int h_out) {
  int v = g.he_tail[h_out];
  int tin = g.he_twin[h_in];  // at v, ccw-successor of h_out
  int v2 = g.add_vertex(g.color[v]);
  std::vector<int> moved;
  int d = g.degree(v), start = g.rot_index(tin);
  for (int s = 1; s < d; ++s) {
    int x = g.rot[v][(start + s) % d];
    if (x != h_out) moved.push_back(x);
  }
  for (int x : moved) g.he_tail[x] = v2;
  g.rot[v2] = moved;
  g.rot[v] = {h_out, tin};
  g.add_edge(v, v2);
}

}  // namespace

void square_move(Plabic& g, sub_t label) {
  auto fs = faces(g);
  auto labels = face_labels(g);
  int idx = -1;
  for (int f = 0; f < static_cast<int>(fs.size()); ++f)
    if (labels[f] == label) idx = f;
  if (idx < 0)
    throw pattern_mismatch("square move: no face is labeled " + subset_str(label));
  if (fs[idx].boundary)
    throw pattern_mismatch("square move: face touches the boundary");
  if (fs[idx].half_edges.size() != 4)
    throw pattern_mismatch("square move: face is not a quadrilateral");
  const std::vector<int> walk = fs[idx].half_edges;
  std::vector<int> corner(4);
  for (int p = 0; p < 4; ++p) corner[p] = g.he_tail[walk[p]];
  for (int p = 0; p < 4; ++p)
    for (int q = p + 1; q < 4; ++q)
      if (corner[p] == corner[q])
        throw pattern_mismatch("square move: face is pinched at a vertex");
  for (int p = 0; p < 4; ++p) {
    int c = g.color[corner[p]];
    if (c != Plabic::black && c != Plabic::white)
      throw pattern_mismatch("square move: corner is a boundary vertex");
    if (g.degree(corner[p]) < 3)
      throw pattern_mismatch("square move: corner of degree below 3");
  }
  for (int p = 0; p < 4; ++p)
    if (g.color[corner[p]] == g.color[corner[(p + 1) % 4]])
      throw pattern_mismatch("square move: corner colors do not alternate");
  for (int p = 0; p < 4; ++p) {
    int h_out = walk[p], h_in = walk[(p + 3) % 4];
    if (g.degree(g.he_tail[h_out]) > 3) split_corner(g, h_in, h_out);
  }
  for (int p = 0; p < 4; ++p) {
    int v = g.he_tail[walk[p]];
    g.color[v] = (g.color[v] == Plabic::black) ? Plabic::white : Plabic::black;
  }
  normalize(g);
}

// ---- honeycomb construction ------------------------------------------------------

namespace {

struct P2 {
  Quad x, y;
};

P2 p_add(const P2& a, const P2& b) { return {a.x + b.x, a.y + b.y}; }
P2 p_sub(const P2& a, const P2& b) { return {a.x - b.x, a.y - b.y}; }
P2 p_neg(const P2& a) { return {Quad(0L) - a.x, Quad(0L) - a.y}; }
P2 p_scale(const P2& a, long m) { return {a.x * Quad(m), a.y * Quad(m)}; }

struct P2Less {
  bool operator()(const P2& a, const P2& b) const {
    int c = quad_cmp(a.x, b.x);
    if (c != 0) return c < 0;
    return quad_cmp(a.y, b.y) < 0;
  }
};

// 0 for directions with angle in [0, 180), 1 for [180, 360).
int half_plane(const P2& d) {
  int sy = quad_sign(d.y);
  if (sy > 0) return 0;
  if (sy < 0) return 1;
  return quad_sign(d.x) > 0 ? 0 : 1;
}

Quad p_cross(const P2& a, const P2& b) { return a.x * b.y - a.y * b.x; }

// Strict counterclockwise order of directions starting at angle 0.
bool dir_less(const P2& a, const P2& b) {
  int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  int s = quad_sign(p_cross(a, b));
  if (s == 0) throw bad_input("plabic: coincident edge directions at a vertex");
  return s > 0;
}

void apply_mirror(Plabic& g) {
  for (auto& r : g.rot) std::reverse(r.begin(), r.end());
}

void apply_color_swap(Plabic& g) {
  for (auto& c : g.color) {
    if (c == Plabic::black)
      c = Plabic::white;
    else if (c == Plabic::white)
      c = Plabic::black;
  }
}

sub_t shift_set(sub_t s, int o, int n) {
  o %= n;
  if (o == 0) return s;
  return ((s << o) | (s >> (n - o))) & full_set(n);
}

// Relabel the boundary (rotation), optionally mirroring the disk and swapping
// the two interior colors, so that the unique interior quadrilateral face
// carries `target`. When two mirror-related relabelings both realize the
// target, `pref_label` (if nonzero) picks the one where some face carries
// that label; the choice only matters when the target set is fixed by a
// boundary reflection, and every quantity computed downstream is invariant
// under that reflection.
void calibrate_boundary(Plabic& g, sub_t target, sub_t pref_label) {
  struct Cand {
    int sw = 0, mir = 0, off = 0;
    bool pref = false;
  };
  std::optional<Cand> best;
  std::string seen;
  const Plabic base = g;
  for (int sw = 0; sw < 2; ++sw)
    for (int mir = 0; mir < 2; ++mir) {
      Plabic t = base;
      if (sw) apply_color_swap(t);
      if (mir) apply_mirror(t);
      std::vector<Face> fs;
      std::vector<sub_t> labels;
      try {
        fs = faces(t);
        labels = face_labels(t);
      } catch (const not_reduced&) {
        continue;
      }
      int sq = -1;
      bool multi = false;
      for (int f = 0; f < static_cast<int>(fs.size()); ++f)
        if (!fs[f].boundary && fs[f].half_edges.size() == 4) {
          if (sq >= 0) multi = true;
          sq = f;
        }
      if (sq < 0 || multi) continue;
      seen += (seen.empty() ? "" : ", ") + subset_str(labels[sq]);
      for (int o = 0; o < t.n; ++o) {
        if (shift_set(labels[sq], o, t.n) != target) continue;
        bool pref = false;
        if (pref_label)
          for (sub_t s : labels)
            if (shift_set(s, o, t.n) == pref_label) pref = true;
        if (!best || (pref && !best->pref)) best = Cand{sw, mir, o, pref};
      }
    }
  if (!best)
    throw search_budget_exceeded("patch calibration: no relabeling realizes square label " +
                                 subset_str(target) + " (observed " + seen + ")");
  Plabic t = base;
  if (best->sw) apply_color_swap(t);
  if (best->mir) apply_mirror(t);
  std::vector<int> nb(t.n);
  for (int i = 0; i < t.n; ++i) nb[(i + best->off) % t.n] = t.bnd[i];
  t.bnd = nb;
  g = std::move(t);
  auto fs = faces(g);
  auto labels = face_labels(g);
  bool ok = false;
  for (int f = 0; f < static_cast<int>(fs.size()); ++f)
    if (!fs[f].boundary && fs[f].half_edges.size() == 4 && labels[f] == target) ok = true;
  if (!ok)
    throw search_budget_exceeded("patch calibration: relabeling failed verification");
}

}  // namespace

Plabic honeycomb(int b1, int b2) {
  if (b1 < 1 || b2 < 1 || b1 + b2 > 31)
    throw bad_input("honeycomb: need b1, b2 >= 1 with b1 + b2 <= 31");
  const int k = b1 + b2;
  const int n = 2 * k;
  // Exact hexagonal-lattice geometry over Q(sqrt 3), pointy-top cells.
  const Rat half_r(1, 2);
  const Quad s3h(Rat(0), half_r, 3);  // sqrt(3)/2
  const Quad one(1L), h2(half_r), th(Rat(3, 2));
  const P2 off[6] = {
      {s3h, h2},                       // 30 degrees
      {Quad(0L), one},                 // 90
      {Quad(0L) - s3h, h2},            // 150
      {Quad(0L) - s3h, Quad(0L) - h2}, // 210
      {Quad(0L), Quad(0L) - one},      // 270
      {s3h, Quad(0L) - h2},            // 330
  };
  const P2 axis_u = {s3h + s3h, Quad(0L)};
  const P2 axis_v = {s3h, th};

  Plabic g;
  std::vector<P2> pos;
  std::map<P2, int, P2Less> vid;
  auto vertex_at = [&](const P2& p, int cls) {
    auto it = vid.find(p);
    if (it != vid.end()) return it->second;
    int v = g.add_vertex(cls == 0 ? Plabic::black : Plabic::white);
    pos.push_back(p);
    vid.emplace(p, v);
    return v;
  };
  std::set<std::pair<int, int>> edges_seen;
  // b1 rows along axis_v, b2 columns along axis_u: this orientation makes the
  // corner quadrilateral carry a rotation of {1..k-1, k+b1} after calibration.
  for (int j = 1; j <= b1; ++j)
    for (int i = 1; i <= b2; ++i) {
      P2 c = p_add(p_scale(axis_u, i), p_scale(axis_v, j));
      std::vector<int> ts;
      if (i == 1 && j == 1)
        ts = {5, 0, 1, 2};  // quadrilateral corner cell
      else
        ts = {0, 1, 2, 3, 4, 5};
      std::vector<int> vs;
      for (int t : ts) vs.push_back(vertex_at(p_add(c, off[t]), t % 2));
      for (std::size_t s = 0; s < vs.size(); ++s) {
        int u = vs[s], w = vs[(s + 1) % vs.size()];
        auto key = std::minmax(u, w);
        if (edges_seen.insert({key.first, key.second}).second) g.add_edge(u, w);
      }
    }
  // Counterclockwise rotations from the exact embedding.
  for (int v = 0; v < static_cast<int>(g.color.size()); ++v)
    std::sort(g.rot[v].begin(), g.rot[v].end(), [&](int a, int b) {
      P2 da = p_sub(pos[g.he_tail[g.he_twin[a]]], pos[v]);
      P2 db = p_sub(pos[g.he_tail[g.he_twin[b]]], pos[v]);
      return dir_less(da, db);
    });
  // The outer region is the unique face walk with clockwise (negative) area.
  std::vector<int> outer;
  for (auto& walk : face_walks(g)) {
    Quad twice_area(0L);
    for (std::size_t s = 0; s < walk.size(); ++s) {
      const P2& p = pos[g.he_tail[walk[s]]];
      const P2& q = pos[g.he_tail[walk[(s + 1) % walk.size()]]];
      twice_area = twice_area + p_cross(p, q);
    }
    if (quad_sign(twice_area) < 0) {
      if (!outer.empty()) throw bad_input("honeycomb: two clockwise face walks");
      outer = walk;
    }
  }
  if (outer.empty()) throw bad_input("honeycomb: no outer face walk");
  // Legs sit at the degree-2 patch vertices, in clockwise outer-walk order.
  std::vector<int> attach;
  for (int h : outer) {
    int v = g.he_tail[h];
    if (g.degree(v) == 2) attach.push_back(v);
  }
  if (static_cast<int>(attach.size()) != n)
    throw bad_input("honeycomb: leg count disagrees with the patch shape");
  std::vector<int> bverts, leg_h(n), arc_h(n);
  for (int t = 0; t < n; ++t) {
    int a = attach[t];
    P2 d1 = p_sub(pos[g.he_tail[g.he_twin[g.rot[a][0]]]], pos[a]);
    P2 d2 = p_sub(pos[g.he_tail[g.he_twin[g.rot[a][1]]]], pos[a]);
    P2 out_dir = p_neg(p_add(d1, d2));
    int bv = g.add_vertex(Plabic::boundary);
    pos.push_back(p_add(pos[a], out_dir));
    bverts.push_back(bv);
  }
  for (int t = 0; t < n; ++t) {
    int a = attach[t];
    leg_h[t] = g.add_edge(bverts[t], a);
    std::sort(g.rot[a].begin(), g.rot[a].end(), [&](int x, int y) {
      P2 dx = p_sub(pos[g.he_tail[g.he_twin[x]]], pos[a]);
      P2 dy = p_sub(pos[g.he_tail[g.he_twin[y]]], pos[a]);
      return dir_less(dx, dy);
    });
  }
  for (int t = 0; t < n; ++t) arc_h[t] = g.add_edge(bverts[t], bverts[(t + 1) % n], true);
  for (int t = 0; t < n; ++t)
    g.rot[bverts[t]] = {g.he_twin[arc_h[(t + n - 1) % n]], leg_h[t], arc_h[t]};
  g.n = n;
  g.bnd = bverts;
  g.validate();

  // For the 2x2 patch both mirror images realize the square label; prefer the
  // one whose faces include {2,3,5,6} so the documented completion applies.
  sub_t pref = (b1 == 2 && b2 == 2) ? subset_of({2, 3, 5, 6}) : sub_t{0};
  calibrate_boundary(g, with(interval_set(1, k - 1), k + b1), pref);
  return g;
}

// ---- chain reactions ---------------------------------------------------------------

namespace {

// One mutation step of a wave: pick the smallest fresh interior-quadrilateral
// label, apply the square move, and report (before, after). `fresh` means not
// yet consumed or produced by the wave. Returns false when no candidate fits.
bool wave_step(Plabic& g, const std::set<sub_t>& consumed, const std::set<sub_t>& produced,
               const std::set<sub_t>* restrict_to, std::pair<sub_t, sub_t>& move) {
  auto fs = faces(g);
  auto labels = face_labels(g);
  std::vector<sub_t> cands;
  for (int f = 0; f < static_cast<int>(fs.size()); ++f) {
    if (fs[f].boundary || fs[f].half_edges.size() != 4) continue;
    sub_t l = labels[f];
    if (consumed.count(l) || produced.count(l)) continue;
    if (restrict_to && !restrict_to->count(l)) continue;
    cands.push_back(l);
  }
  std::sort(cands.begin(), cands.end());
  for (sub_t l : cands) {
    std::set<sub_t> before(labels.begin(), labels.end());
    try {
      square_move(g, l);
    } catch (const pattern_mismatch&) {
      continue;
    }
    auto after_labels = face_labels(g);
    std::set<sub_t> after(after_labels.begin(), after_labels.end());
    std::vector<sub_t> gone, born;
    std::set_difference(before.begin(), before.end(), after.begin(), after.end(),
                        std::back_inserter(gone));
    std::set_difference(after.begin(), after.end(), before.begin(), before.end(),
                        std::back_inserter(born));
    if (gone.size() != 1 || born.size() != 1 || gone[0] != l)
      throw search_budget_exceeded("chain reaction: a move changed labels unexpectedly");
    move = {l, born[0]};
    return true;
  }
  return false;
}

}  // namespace

ChainLog chain_reaction(Plabic& g) {
  auto fs = faces(g);
  int interior = 0, quads = 0;
  for (auto& f : fs)
    if (!f.boundary) {
      ++interior;
      if (f.half_edges.size() == 4) ++quads;
    }
  if (quads != 1)
    throw pattern_mismatch("chain reaction: need exactly one interior quadrilateral");
  ChainLog log;
  std::set<sub_t> consumed, produced;
  for (int step = 0; step < interior; ++step) {
    std::pair<sub_t, sub_t> mv;
    if (!wave_step(g, consumed, produced, nullptr, mv))
      throw search_budget_exceeded("chain reaction stalled before covering all faces");
    consumed.insert(mv.first);
    produced.insert(mv.second);
    log.moves.push_back(mv);
    log.final_square = mv.second;
  }
  return log;
}

// ---- the two-tier 12-cell patch -------------------------------------------------------

Plabic layered_honeycomb() {
  Plabic g2 = honeycomb(2, 2);
  const int n_old = g2.n;  // 8
  // Path length (non-leg, non-arc edges) of each boundary face, by gap index.
  auto fs = faces(g2);
  std::vector<int> face_of(g2.he_tail.size(), -1);
  for (int f = 0; f < static_cast<int>(fs.size()); ++f)
    for (int h : fs[f].half_edges) face_of[h] = f;
  std::vector<int> path_len(n_old, -1), fwd_arc(n_old, -1);
  for (int t = 0; t < n_old; ++t) {
    for (int h : g2.rot[g2.bnd[t]])
      if (g2.he_arc[h] && g2.he_tail[g2.he_twin[h]] == g2.bnd[(t + 1) % n_old])
        fwd_arc[t] = h;
    if (fwd_arc[t] < 0) throw bad_input("layered patch: missing boundary arc");
    int rev = -1;  // arc from label t+2 back to t+1 bounds the gap face
    for (int h : g2.rot[g2.bnd[(t + 1) % n_old]])
      if (g2.he_arc[h] && g2.he_tail[g2.he_twin[h]] == g2.bnd[t]) rev = h;
    if (rev < 0) throw bad_input("layered patch: missing reverse boundary arc");
    int f = face_of[rev];
    int arcs = 0;
    for (int h : fs[f].half_edges)
      if (g2.he_arc[h]) ++arcs;
    if (arcs != 1) throw bad_input("layered patch: boundary face bounded by two arcs");
    path_len[t] = static_cast<int>(fs[f].half_edges.size()) - 3;
  }

  Plabic g = g2;
  std::fill(g.he_arc.begin(), g.he_arc.end(), false);
  // Old boundary vertices join the interior, colored opposite their leg's
  // other endpoint so that every face stays even.
  for (int t = 0; t < n_old; ++t) {
    int b = g2.bnd[t];
    int attach_color = g2.color[g2.he_tail[g2.he_twin[g2.leg_of(t + 1)]]];
    g.color[b] = (attach_color == Plabic::black) ? Plabic::white : Plabic::black;
  }
  // Replace each old arc by an outer path through new leg-bearing vertices;
  // every enclosed band face then has exactly six sides.
  std::vector<int> new_attach;
  for (int t = 0; t < n_old; ++t) {
    int o = 4 - path_len[t];
    if (o < 1) throw bad_input("layered patch: boundary gap too long to band-extend");
    int b0 = g2.bnd[t], b1v = g2.bnd[(t + 1) % n_old];
    int a = fwd_arc[t], ta = g.he_twin[a];
    if (o == 1) continue;  // the old arc itself becomes the band edge
    std::vector<int> ws;
    int prev_color = g.color[b0];
    for (int s = 1; s < o; ++s) {
      int w = g.add_vertex(prev_color == Plabic::black ? Plabic::white : Plabic::black);
      prev_color = g.color[w];
      ws.push_back(w);
      new_attach.push_back(w);
    }
    if (((prev_color == Plabic::black) ? Plabic::white : Plabic::black) != g.color[b1v])
      throw bad_input("layered patch: band recoloring parity failed");
    std::vector<int> fwd(o + 1, -1), rev(o + 1, -1);
    for (int s = 1; s <= o; ++s) {
      if (s == 1)
        fwd[s] = a;
      else {
        fwd[s] = static_cast<int>(g.he_tail.size());
        g.he_tail.push_back(ws[s - 2]);
        g.he_twin.push_back(-1);
        g.he_arc.push_back(false);
      }
      if (s == o)
        rev[s] = ta;
      else {
        rev[s] = static_cast<int>(g.he_tail.size());
        g.he_tail.push_back(ws[s - 1]);
        g.he_twin.push_back(-1);
        g.he_arc.push_back(false);
      }
      g.he_twin[fwd[s]] = rev[s];
      g.he_twin[rev[s]] = fwd[s];
    }
    for (int s = 1; s < o; ++s) g.rot[ws[s - 1]] = {rev[s], fwd[s + 1]};
  }
  int nb = static_cast<int>(new_attach.size());
  if (nb != 12) throw bad_input("layered patch: expected twelve new legs");
  std::vector<int> bverts, leg_h(nb), arc_h(nb);
  for (int t = 0; t < nb; ++t) bverts.push_back(g.add_vertex(Plabic::boundary));
  for (int t = 0; t < nb; ++t) leg_h[t] = g.add_edge(bverts[t], new_attach[t]);
  for (int t = 0; t < nb; ++t) arc_h[t] = g.add_edge(bverts[t], bverts[(t + 1) % nb], true);
  for (int t = 0; t < nb; ++t)
    g.rot[bverts[t]] = {g.he_twin[arc_h[(t + nb - 1) % nb]], leg_h[t], arc_h[t]};
  g.n = nb;
  g.bnd = bverts;
  g.validate();
  for (int h = 0; h < static_cast<int>(g.he_tail.size()); ++h) {
    int u = g.he_tail[h], w = g.he_tail[g.he_twin[h]];
    if (g.color[u] != Plabic::boundary && g.color[w] != Plabic::boundary &&
        g.color[u] == g.color[w])
      throw bad_input("layered patch: recoloring left a same-colored edge");
  }

  calibrate_boundary(g, with(with(interval_set(1, 4), 8), 9), sub_t{0});
  return g;
}

ChainLog layered_chain_reaction(Plabic& g_out) {
  g_out = layered_honeycomb();
  Plabic& g = g_out;
  // Deep-interior cells: interior faces sharing no edge with a boundary face.
  auto fs = faces(g);
  auto labels = face_labels(g);
  std::vector<int> face_of(g.he_tail.size(), -1);
  for (int f = 0; f < static_cast<int>(fs.size()); ++f)
    for (int h : fs[f].half_edges) face_of[h] = f;
  std::set<sub_t> core;
  for (int f = 0; f < static_cast<int>(fs.size()); ++f) {
    if (fs[f].boundary) continue;
    bool touches = false;
    for (int h : fs[f].half_edges) {
      int f2 = face_of[g.he_twin[h]];
      if (f2 >= 0 && fs[f2].boundary) touches = true;
    }
    if (!touches) core.insert(labels[f]);
  }
  if (core.size() != 4)
    throw search_budget_exceeded("layered chain: expected a four-cell deep interior");

  ChainLog log;
  std::set<sub_t> consumed, produced;
  int interior = 0;
  for (auto& f : fs)
    if (!f.boundary) ++interior;
  for (int step = 0; step < interior; ++step) {
    std::pair<sub_t, sub_t> mv;
    if (!wave_step(g, consumed, produced, nullptr, mv))
      throw search_budget_exceeded("layered chain stalled in its first pass");
    consumed.insert(mv.first);
    produced.insert(mv.second);
    if (core.count(mv.first)) {
      core.erase(mv.first);
      core.insert(mv.second);
    }
    log.moves.push_back(mv);
  }
  std::set<sub_t> consumed2, produced2;
  for (int step = 0; step < 4; ++step) {
    std::pair<sub_t, sub_t> mv;
    if (!wave_step(g, consumed2, produced2, &core, mv))
      throw search_budget_exceeded("layered chain stalled in its second pass");
    consumed2.insert(mv.first);
    produced2.insert(mv.second);
    core.erase(mv.first);
    core.insert(mv.second);
    log.moves.push_back(mv);
  }
  log.final_square = log.moves.back().second;
  return log;
}

// ---- block projection ------------------------------------------------------------------

std::vector<int> project_pi(sub_t W, sub_t I, int n) {
  if (n < 1 || n > 63) throw bad_input("projection: n out of range");
  sub_t full = full_set(n);
  if ((W & ~full) || (I & ~full)) throw bad_input("projection: subset exceeds the ground set");
  if (I == 0 || I == full)
    throw bad_input("projection: blocks need a proper nonempty subset");
  int start = -1;
  for (int i = 1; i <= n; ++i) {
    int p = (i == 1) ? n : i - 1;
    if (contains(I, i) && !contains(I, p)) {
      start = i;
      break;
    }
  }
  std::vector<int> out;
  int run = 0;
  bool in_block = true;
  for (int s = 0; s < n; ++s) {
    int e = ((start - 1 + s) % n) + 1;
    bool m = contains(I, e);
    if (m != in_block) {
      out.push_back(run);
      run = 0;
      in_block = m;
    }
    if (contains(W, e)) ++run;
  }
  out.push_back(run);
  return out;
}

// ---- export ------------------------------------------------------------------------------

std::string export_dot(const Plabic& g) {
  std::vector<int> label_of(g.color.size(), 0);
  for (int i = 0; i < g.n; ++i) label_of[g.bnd[i]] = i + 1;
  auto name = [&](int v) {
    if (g.color[v] == Plabic::boundary) return "b" + std::to_string(label_of[v]);
    return "v" + std::to_string(v);
  };
  std::ostringstream os;
  os << "graph plabic {\n";
  for (int i = 0; i < g.n; ++i)
    os << "  b" << (i + 1) << " [shape=none, label=\"" << (i + 1) << "\"];\n";
  for (int v = 0; v < static_cast<int>(g.color.size()); ++v) {
    if (g.color[v] == Plabic::black)
      os << "  v" << v << " [shape=circle, style=filled, fillcolor=black, label=\"\"];\n";
    else if (g.color[v] == Plabic::white)
      os << "  v" << v << " [shape=circle, fillcolor=white, label=\"\"];\n";
  }
  for (int h = 0; h < static_cast<int>(g.he_tail.size()); ++h) {
    if (h > g.he_twin[h]) continue;
    os << "  " << name(g.he_tail[h]) << " -- " << name(g.he_tail[g.he_twin[h]]);
    if (g.he_arc[h]) os << " [style=dotted]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string plabic_to_json(const Plabic& g) {
  nlohmann::json j;
  j["n"] = g.n;
  j["colors"] = g.color;
  j["rot"] = g.rot;
  j["tail"] = g.he_tail;
  j["twin"] = g.he_twin;
  j["arc"] = std::vector<int>(g.he_arc.begin(), g.he_arc.end());
  j["bnd"] = g.bnd;
  return j.dump();
}

Plabic plabic_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw bad_input(std::string("plabic json: ") + e.what());
  }
  Plabic g;
  try {
    g.n = j.at("n").get<int>();
    g.color = j.at("colors").get<std::vector<int>>();
    g.rot = j.at("rot").get<std::vector<std::vector<int>>>();
    g.he_tail = j.at("tail").get<std::vector<int>>();
    g.he_twin = j.at("twin").get<std::vector<int>>();
    auto arcs = j.at("arc").get<std::vector<int>>();
    g.he_arc.assign(arcs.begin(), arcs.end());
    g.bnd = j.at("bnd").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw bad_input(std::string("plabic json: ") + e.what());
  }
  g.validate();
  return g;
}

}  // namespace eqm
