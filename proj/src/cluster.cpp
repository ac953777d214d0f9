#include "eqm/cluster.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <set>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "eqm/errors.hpp"
#include "eqm/pairs.hpp"
#include "eqm/plabic.hpp"

namespace eqm {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

using State = std::vector<sub_t>;  // sorted face sets, the canonical encoding

std::uint64_t hash_state(const State& st, std::uint64_t salt) {
  std::uint64_t h = splitmix64(salt ^ (0x61c8864680b583ebULL * st.size()));
  for (sub_t f : st) h = splitmix64(h ^ f);
  return h;
}

// Two independent 64-bit hashes; collision odds are negligible at the state
// counts the searches visit, and states are never reconstructed from them.
using H128 = std::pair<std::uint64_t, std::uint64_t>;

H128 hash2(const State& st) { return {hash_state(st, 0x10d5), hash_state(st, 0x9c0ffee1)}; }

struct H128Hash {
  std::size_t operator()(const H128& h) const { return h.first ^ (h.second << 1); }
};

void check_subset_arg(int n, int k, sub_t s, const char* who) {
  if (n < 2 || n > 62 || k < 1 || k >= n)
    throw bad_input(std::string(who) + ": need 2 <= n <= 62 and 1 <= k < n");
  if ((s & ~full_set(n)) || popcount(s) != k)
    throw bad_input(std::string(who) + ": argument is not a k-subset of [n]");
}

// All exchanges applicable at K inside the sorted collection `faces`.
// The quadrilateral relation swaps the alternating pairs of a < b < c < d
// over a common R: K may supply either {a,c} (replaced by {b,d}) or {b,d}
// (replaced by {a,c}); both orientations use the same four partner faces
// R+{a,b}, R+{b,c}, R+{c,d}, R+{a,d}, all of which must be present. The
// incoming face must be absent and weakly separated with everything else.
// `ws_filter` re-checks the incoming face against every member; mutation of a
// maximal weakly separated collection with all four partners present lands on
// a maximal weakly separated collection again, so the searches skip the scan
// (the public entry point keeps it and the property tests assert agreement).
std::vector<Exchange> exchanges_on(int n, const State& faces, sub_t K, bool ws_filter = true) {
  std::vector<Exchange> out;
  if (!std::binary_search(faces.begin(), faces.end(), K)) return out;
  auto has = [&](sub_t f) { return std::binary_search(faces.begin(), faces.end(), f); };
  auto admit = [&](sub_t X) {  // absent and compatible with the rest
    if (has(X)) return false;
    if (!ws_filter) return true;
    for (sub_t f : faces)
      if (f != K && !is_weakly_separated(f, X)) return false;
    return true;
  };
  const std::vector<int> els = elements(K);
  const int m = static_cast<int>(els.size());
  for (int ix = 0; ix < m; ++ix)
    for (int iy = ix + 1; iy < m; ++iy) {
      const int x = els[ix], y = els[iy];
      const sub_t R = without(without(K, x), y);
      // K supplies (a, c) = (x, y); X = R + {b, d}.
      for (int b = x + 1; b < y; ++b) {
        if (contains(K, b)) continue;
        if (!has(with(with(R, x), b)) || !has(with(with(R, b), y))) continue;
        for (int d = y + 1; d <= n; ++d) {
          if (contains(K, d)) continue;
          if (!has(with(with(R, y), d)) || !has(with(with(R, x), d))) continue;
          const sub_t X = with(with(R, b), d);
          if (admit(X)) out.push_back(Exchange{K, X, x, b, y, d, R});
        }
      }
      // K supplies (b, d) = (x, y); X = R + {a, c}.
      for (int a = 1; a < x; ++a) {
        if (contains(K, a)) continue;
        if (!has(with(with(R, a), x)) || !has(with(with(R, a), y))) continue;
        for (int c = x + 1; c < y; ++c) {
          if (contains(K, c)) continue;
          if (!has(with(with(R, x), c)) || !has(with(with(R, c), y))) continue;
          const sub_t X = with(with(R, a), c);
          if (admit(X)) out.push_back(Exchange{K, X, a, x, c, y, R});
        }
      }
    }
  return out;
}

// All exchanges available anywhere in the collection, face by face in
// ascending order (deterministic successor order for the searches).
std::vector<Exchange> all_exchanges(int n, const State& faces, bool ws_filter = true) {
  std::vector<Exchange> out;
  for (sub_t K : faces) {
    auto es = exchanges_on(n, faces, K, ws_filter);
    out.insert(out.end(), es.begin(), es.end());
  }
  return out;
}

State apply_to_state(const State& faces, const Exchange& e) {
  State next;
  next.reserve(faces.size());
  for (sub_t f : faces)
    if (f != e.out) next.push_back(f);
  next.insert(std::lower_bound(next.begin(), next.end(), e.in), e.in);
  return next;
}

// Smallest symmetric difference between J and any member; zero iff J present.
int sym_dist(const State& faces, sub_t J) {
  int best = 64;
  for (sub_t f : faces) best = std::min(best, popcount(f ^ J));
  return best;
}

// Guided best-first search for a mutation path from `start` to a collection
// containing J. Only face sets are explored here; values are replayed by the
// caller along the returned exchange sequence. Ties on the heuristic break by
// a per-state hash salted with the attempt seed, so distinct seeds explore
// plateaus in different orders; the budget is shared across the restarts.
std::vector<Exchange> find_path(int n, const State& start, sub_t J, std::uint64_t budget,
                                std::uint64_t rng_seed) {
  if (std::binary_search(start.begin(), start.end(), J)) return {};
  constexpr int kAttempts = 4;
  const std::uint64_t slice = std::max<std::uint64_t>(budget / kAttempts, 1);
  std::uint64_t spent = 0;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const std::uint64_t salt = splitmix64(rng_seed + 0x9e3779b9ULL * attempt);
    const std::uint64_t cap =
        (attempt == kAttempts - 1) ? (budget > spent ? budget - spent : 0) : slice;
    struct Node {
      State faces;
      int parent;
      Exchange via;
    };
    std::vector<Node> arena;
    arena.push_back({start, -1, Exchange{}});
    std::set<State> visited{start};
    using PQItem = std::tuple<int, std::uint64_t, int>;  // (heuristic, tie, arena index)
    std::priority_queue<PQItem, std::vector<PQItem>, std::greater<PQItem>> pq;
    pq.emplace(sym_dist(start, J), hash_state(start, salt), 0);
    std::uint64_t used = 0;
    while (!pq.empty()) {
      auto [h, tie, idx] = pq.top();
      pq.pop();
      if (h == 0) {
        std::vector<Exchange> path;
        for (int at = idx; arena[at].parent >= 0; at = arena[at].parent)
          path.push_back(arena[at].via);
        std::reverse(path.begin(), path.end());
        return path;
      }
      if (++used > cap) break;
      const State cur = arena[idx].faces;  // copy: arena may reallocate below
      for (const Exchange& e : all_exchanges(n, cur, false)) {
        State nxt = apply_to_state(cur, e);
        if (!visited.insert(nxt).second) continue;
        const int h2 = sym_dist(nxt, J);
        arena.push_back({std::move(nxt), idx, e});
        pq.emplace(h2, hash_state(arena.back().faces, salt), static_cast<int>(arena.size()) - 1);
      }
    }
    spent += used;
  }
  throw search_budget_exceeded("evaluate: mutation path search exhausted its budget");
}

template <class V>
V divide_values(const V& num, const V& den);
template <>
Rat divide_values<Rat>(const Rat& num, const Rat& den) {
  if (sgn(den) == 0) throw bad_input("exchange: division by a zero seed value");
  return num / den;
}
template <>
Laurent divide_values<Laurent>(const Laurent& num, const Laurent& den) {
  return num.exact_div(den);
}

template <class V>
void apply_exchange_impl(Seed<V>& s, const Exchange& e) {
  const int iK = s.index_of(e.out);
  const int iab = s.index_of(with(with(e.R, e.a), e.b));
  const int icd = s.index_of(with(with(e.R, e.c), e.d));
  const int iad = s.index_of(with(with(e.R, e.a), e.d));
  const int ibc = s.index_of(with(with(e.R, e.b), e.c));
  if (iK < 0 || iab < 0 || icd < 0 || iad < 0 || ibc < 0 || s.has(e.in))
    throw pattern_mismatch("exchange: collection does not match the quadrilateral pattern");
  V num = s.val[iab] * s.val[icd] + s.val[iad] * s.val[ibc];
  V nv = divide_values<V>(num, s.val[iK]);
  s.faces.erase(s.faces.begin() + iK);
  s.val.erase(s.val.begin() + iK);
  const auto it = std::lower_bound(s.faces.begin(), s.faces.end(), e.in);
  const int pos = static_cast<int>(it - s.faces.begin());
  s.faces.insert(it, e.in);
  s.val.insert(s.val.begin() + pos, std::move(nv));
}

template <class V>
V evaluate_impl(const Seed<V>& s, sub_t J, std::uint64_t budget, std::uint64_t rng_seed) {
  validate_seed(s);
  check_subset_arg(s.n, s.k, J, "evaluate");
  const int i0 = s.index_of(J);
  if (i0 >= 0) return s.val[i0];
  const auto path = find_path(s.n, s.faces, J, budget, rng_seed);
  Seed<V> t = s;
  for (const Exchange& e : path) apply_exchange_impl(t, e);
  return t.val[t.index_of(J)];
}

}  // namespace

template <class V>
int Seed<V>::index_of(sub_t f) const {
  const auto it = std::lower_bound(faces.begin(), faces.end(), f);
  return (it != faces.end() && *it == f) ? static_cast<int>(it - faces.begin()) : -1;
}

template <class V>
std::vector<Exchange> exchanges_at(const Seed<V>& s, sub_t K) {
  return exchanges_on(s.n, s.faces, K);
}

void apply_exchange(RatSeed& s, const Exchange& e) { apply_exchange_impl(s, e); }
void apply_exchange(LaurentSeed& s, const Exchange& e) { apply_exchange_impl(s, e); }

template <class V>
void validate_seed(const Seed<V>& s) {
  if (s.n < 2 || s.n > 62 || s.k < 1 || s.k >= s.n)
    throw bad_input("seed: need 2 <= n <= 62 and 1 <= k < n");
  const std::size_t want = static_cast<std::size_t>(s.k) * (s.n - s.k) + 1;
  if (s.faces.size() != want || s.val.size() != want)
    throw bad_input("seed: a maximal collection has k(n-k)+1 members, one value each");
  for (std::size_t i = 0; i < s.faces.size(); ++i) {
    if ((s.faces[i] & ~full_set(s.n)) || popcount(s.faces[i]) != s.k)
      throw bad_input("seed: every face must be a k-subset of [n]");
    if (i && s.faces[i - 1] >= s.faces[i])
      throw bad_input("seed: faces must be strictly ascending");
  }
  for (std::size_t i = 0; i < s.faces.size(); ++i)
    for (std::size_t j = i + 1; j < s.faces.size(); ++j)
      if (!is_weakly_separated(s.faces[i], s.faces[j]))
        throw bad_input("seed: faces must be pairwise weakly separated");
}

template struct Seed<Rat>;
template struct Seed<Laurent>;
template std::vector<Exchange> exchanges_at<Rat>(const Seed<Rat>&, sub_t);
template std::vector<Exchange> exchanges_at<Laurent>(const Seed<Laurent>&, sub_t);
template void validate_seed<Rat>(const Seed<Rat>&);
template void validate_seed<Laurent>(const Seed<Laurent>&);

Rat evaluate_plucker(const RatSeed& s, sub_t J, std::uint64_t budget, std::uint64_t rng_seed) {
  return evaluate_impl(s, J, budget, rng_seed);
}

Laurent evaluate_plucker(const LaurentSeed& s, sub_t J, std::uint64_t budget,
                         std::uint64_t rng_seed) {
  return evaluate_impl(s, J, budget, rng_seed);
}

std::vector<sub_t> greedy_maximal_ws(int n, int k, const std::vector<sub_t>& seeds) {
  if (n < 2 || n > 62 || k < 1 || k >= n)
    throw bad_input("greedy_maximal_ws: need 2 <= n <= 62 and 1 <= k < n");
  for (sub_t s : seeds) check_subset_arg(n, k, s, "greedy_maximal_ws");
  for (std::size_t i = 0; i < seeds.size(); ++i)
    for (std::size_t j = i + 1; j < seeds.size(); ++j)
      if (seeds[i] != seeds[j] && !is_weakly_separated(seeds[i], seeds[j]))
        throw bad_input("greedy_maximal_ws: seeds are not pairwise weakly separated");
  std::set<sub_t> cur(seeds.begin(), seeds.end());
  sub_t iv = interval_set(1, k);
  for (int i = 0; i < n; ++i) {
    cur.insert(iv);
    iv = cyclic_shift_set(iv, n);
  }
  for (sub_t s = first_subset(k); s; s = next_subset(s, n)) {
    if (cur.count(s)) continue;
    bool ok = true;
    for (sub_t f : cur)
      if (!is_weakly_separated(f, s)) {
        ok = false;
        break;
      }
    if (ok) cur.insert(s);
  }
  const std::size_t want = static_cast<std::size_t>(k) * (n - k) + 1;
  if (cur.size() != want)
    throw std::logic_error("greedy_maximal_ws: maximal collection has the wrong size");
  return {cur.begin(), cur.end()};
}

std::vector<std::vector<sub_t>> collections_containing(int n, int k, sub_t I) {
  check_subset_arg(n, k, I, "collections_containing");
  constexpr std::size_t kStateCap = 4000000;
  State start = greedy_maximal_ws(n, k, {I});
  std::set<State> seen{start};
  std::queue<State> q;
  q.push(std::move(start));
  while (!q.empty()) {
    State cur = std::move(q.front());
    q.pop();
    for (const Exchange& e : all_exchanges(n, cur, false)) {
      if (e.out == I) continue;
      State nxt = apply_to_state(cur, e);
      if (!seen.insert(nxt).second) continue;
      if (seen.size() > kStateCap)
        throw search_budget_exceeded("collections_containing: state cap exceeded");
      q.push(std::move(nxt));
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

// Admissible distance lower bound toward "some collection contains J".
// A mutation inserting J needs its whole quadrilateral pattern present: the
// face exchanged away plus the four partner faces. Every move adds exactly
// one new face, so at least (missing members of the best pattern) + 1 moves
// remain. The bound is consistent: one move changes any missing count by at
// most one.
struct PatternBound {
  sub_t J;
  std::vector<std::array<sub_t, 5>> pats;  // {exchanged-away face, 4 partners}

  PatternBound(int n, sub_t J_) : J(J_) {
    const std::vector<int> els = elements(J);
    const int k = static_cast<int>(els.size());
    auto push = [&](sub_t R, int a, int b, int c, int d, bool j_is_outer) {
      const sub_t K = j_is_outer ? with(with(R, b), d) : with(with(R, a), c);
      pats.push_back({K, with(with(R, a), b), with(with(R, b), c), with(with(R, c), d),
                      with(with(R, a), d)});
    };
    for (int ix = 0; ix < k; ++ix)
      for (int iy = ix + 1; iy < k; ++iy) {
        const int x = els[ix], y = els[iy];
        const sub_t R = without(without(J, x), y);
        // J = R + {a, c}: the incoming face of an exchange removing R+{b,d}.
        for (int b = x + 1; b < y; ++b) {
          if (contains(J, b)) continue;
          for (int d = y + 1; d <= n; ++d)
            if (!contains(J, d)) push(R, x, b, y, d, true);
        }
        // J = R + {b, d}: the incoming face of an exchange removing R+{a,c}.
        for (int a = 1; a < x; ++a) {
          if (contains(J, a)) continue;
          for (int c = x + 1; c < y; ++c)
            if (!contains(J, c)) push(R, a, x, c, y, false);
        }
      }
  }

  int bound(const State& st) const {
    if (std::binary_search(st.begin(), st.end(), J)) return 0;
    int best = 5;
    for (const auto& p : pats) {
      int missing = 0;
      for (sub_t f : p)
        if (!std::binary_search(st.begin(), st.end(), f) && ++missing >= best) break;
      if (missing < best) best = missing;
      if (best == 0) break;
    }
    return best + 1;
  }
};

// Exact multi-source shortest distance to a collection containing J, as an
// A* search with the consistent PatternBound heuristic. Returns cap+1 when
// every state within radius `cap` is exhausted.
int astar_distance(int n, const std::vector<State>& sources, sub_t J, int cap) {
  const PatternBound hb(n, J);
  struct Node {
    State faces;
    int g;
  };
  constexpr std::size_t kNodeCap = 12000000;
  std::vector<Node> arena;
  std::unordered_map<H128, int, H128Hash> best_g;
  using Item = std::tuple<int, std::uint64_t, int>;  // (f, tie, arena index)
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> open;
  for (const State& s : sources) {
    const H128 h = hash2(s);
    if (!best_g.emplace(h, 0).second) continue;
    const int f = hb.bound(s);
    arena.push_back({s, 0});
    open.emplace(f, hash_state(s, 0x5eedULL), static_cast<int>(arena.size()) - 1);
  }
  while (!open.empty()) {
    const auto [f, tie, idx] = open.top();
    open.pop();
    if (f > cap) return cap + 1;
    const int g = arena[idx].g;
    {
      const auto it = best_g.find(hash2(arena[idx].faces));
      if (it != best_g.end() && it->second < g) continue;  // stale queue entry
    }
    if (f == g) return g;  // heuristic zero: J is a member
    const State cur = arena[idx].faces;  // copy: arena reallocation below
    for (const Exchange& e : all_exchanges(n, cur, false)) {
      State nxt = apply_to_state(cur, e);
      const H128 h = hash2(nxt);
      const auto it = best_g.find(h);
      if (it != best_g.end() && it->second <= g + 1) continue;
      if (it == best_g.end())
        best_g.emplace(h, g + 1);
      else
        it->second = g + 1;
      if (arena.size() >= kNodeCap)
        throw search_budget_exceeded("mutation_distance: state cap exceeded");
      const int f2 = g + 1 + hb.bound(nxt);
      if (f2 > cap + 1) continue;  // beyond provability horizon either way
      const std::uint64_t t2 = hash_state(nxt, 0x5eedULL);
      arena.push_back({std::move(nxt), g + 1});
      open.emplace(f2, t2, static_cast<int>(arena.size()) - 1);
    }
  }
  return cap + 1;  // exhausted the reachable cap-ball without meeting J
}

// The four partner faces of a move recorded as (out, in), reconstructed from
// the label pair: R is the common part, and the four exchanged positions
// split alternately between out and in.
std::array<sub_t, 5> move_pattern(sub_t out, sub_t in) {
  const sub_t R = out & in;
  std::vector<int> q = elements((out | in) & ~R);  // a < b < c < d
  return {out, with(with(R, q[0]), q[1]), with(with(R, q[1]), q[2]),
          with(with(R, q[2]), q[3]), with(with(R, q[0]), q[3])};
}

using Move = std::pair<sub_t, sub_t>;  // (face exchanged away, face brought in)

bool move_applicable(const State& st, const Move& m) {
  if (std::binary_search(st.begin(), st.end(), m.second)) return false;
  for (sub_t f : move_pattern(m.first, m.second))
    if (!std::binary_search(st.begin(), st.end(), f)) return false;
  return true;
}

State apply_move(const State& st, const Move& m) {
  State next;
  next.reserve(st.size());
  for (sub_t f : st)
    if (f != m.first) next.push_back(f);
  next.insert(std::lower_bound(next.begin(), next.end(), m.second), m.second);
  return next;
}

// Canonical representative of a move sequence modulo interchange of adjacent
// commuting moves (the lexicographically least word of its trace class):
// bubble a later-smaller move leftward whenever the swap is valid and yields
// the same final collection.
std::vector<Move> canonical_sequence(const State& source, std::vector<Move> seq) {
  bool changed = true;
  while (changed) {
    changed = false;
    State st = source;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      if (seq[i + 1] < seq[i] && move_applicable(st, seq[i + 1])) {
        const State other = apply_move(st, seq[i + 1]);
        if (move_applicable(other, seq[i])) {
          std::swap(seq[i], seq[i + 1]);
          changed = true;
        }
      }
      st = apply_move(st, seq[i]);
    }
  }
  return seq;
}

// Exact geodesic enumeration: a leveled forward BFS recording parent edges,
// then a backward walk collecting the label sequences, counted modulo
// commutation of independent moves.
std::uint64_t count_geodesics(int n, const std::vector<State>& sources, sub_t J, int D) {
  struct Node {
    State faces;
    int lvl;
    std::vector<std::pair<int, Move>> parents;
  };
  constexpr std::size_t kNodeCap = 2000000;
  std::vector<Node> arena;
  std::unordered_map<H128, int, H128Hash> index;
  std::vector<int> frontier;
  for (const State& s : sources) {
    const H128 h = hash2(s);
    if (index.count(h)) continue;
    index.emplace(h, static_cast<int>(arena.size()));
    frontier.push_back(static_cast<int>(arena.size()));
    arena.push_back({s, 0, {}});
  }
  for (int lvl = 0; lvl < D; ++lvl) {
    std::vector<int> next;
    for (int id : frontier) {
      const State cur = arena[id].faces;
      for (const Exchange& e : all_exchanges(n, cur, false)) {
        State nxt = apply_to_state(cur, e);
        const H128 h = hash2(nxt);
        auto it = index.find(h);
        if (it == index.end()) {
          if (arena.size() >= kNodeCap)
            throw search_budget_exceeded("mutation_distance: geodesic arena cap exceeded");
          it = index.emplace(h, static_cast<int>(arena.size())).first;
          next.push_back(it->second);
          arena.push_back({std::move(nxt), lvl + 1, {}});
        }
        if (arena[it->second].lvl == lvl + 1)
          arena[it->second].parents.push_back({id, {e.out, e.in}});
      }
    }
    frontier = std::move(next);
  }
  std::set<std::vector<Move>> classes;
  std::vector<Move> seq(D);
  std::uint64_t walked = 0;
  // Depth-first over parent edges from every level-D state containing J.
  std::function<void(int, int)> walk = [&](int id, int depth) {
    if (++walked > 50000000)
      throw search_budget_exceeded("mutation_distance: geodesic walk cap exceeded");
    if (depth == 0) {
      classes.insert(canonical_sequence(arena[id].faces, seq));
      return;
    }
    for (const auto& [pid, label] : arena[id].parents) {
      seq[depth - 1] = label;
      walk(pid, depth - 1);
    }
  };
  for (int id : frontier)
    if (std::binary_search(arena[id].faces.begin(), arena[id].faces.end(), J)) walk(id, D);
  return classes.size();
}

DistanceResult distance_between(int n, const std::vector<State>& sources, sub_t J, int cap,
                                bool count_geodesics_q) {
  const int d = astar_distance(n, sources, J, cap);
  if (d > cap) return {cap + 1, true, 0};
  DistanceResult r{d, false, 0};
  if (count_geodesics_q) r.geodesic_label_sequences = count_geodesics(n, sources, J, d);
  return r;
}

}  // namespace

DistanceResult mutation_distance(int n, int k, sub_t I, sub_t J, int cap, bool count_geodesics_q) {
  check_subset_arg(n, k, I, "mutation_distance");
  check_subset_arg(n, k, J, "mutation_distance");
  if (cap < 0) throw bad_input("mutation_distance: cap must be nonnegative");
  if (is_weakly_separated(I, J))
    return {0, false, count_geodesics_q ? std::uint64_t{1} : std::uint64_t{0}};
  const std::vector<State> sources = collections_containing(n, k, I);
  return distance_between(n, sources, J, cap, count_geodesics_q);
}

DistanceResult mutation_distance_from(int n, int k, const std::vector<sub_t>& source, sub_t J,
                                      int cap, bool count_geodesics_q) {
  check_subset_arg(n, k, J, "mutation_distance_from");
  if (cap < 0) throw bad_input("mutation_distance_from: cap must be nonnegative");
  RatSeed shim;
  shim.n = n;
  shim.k = k;
  shim.faces = source;
  std::sort(shim.faces.begin(), shim.faces.end());
  shim.val.assign(shim.faces.size(), Rat(1));
  validate_seed(shim);  // maximal, pairwise weakly separated, right sizes
  if (std::binary_search(shim.faces.begin(), shim.faces.end(), J))
    return {0, false, count_geodesics_q ? std::uint64_t{1} : std::uint64_t{0}};
  return distance_between(n, {shim.faces}, J, cap, count_geodesics_q);
}

PosMatrix ws_point(const RatSeed& s) {
  validate_seed(s);
  for (const Rat& v : s.val)
    if (sgn(v) <= 0) throw bad_input("ws_point: seed values must be positive");
  const sub_t base = interval_set(1, s.k);
  const int ib = s.index_of(base);
  if (ib < 0) throw bad_input("ws_point: collection is missing the initial interval");
  const Rat v0 = s.val[ib];
  Mat<Quad> m(s.k, s.n);
  for (int i = 1; i <= s.k; ++i) m(i - 1, i - 1) = Quad(Rat(1));
  for (int i = 1; i <= s.k; ++i)
    for (int j = s.k + 1; j <= s.n; ++j) {
      const sub_t K = with(without(base, i), j);
      const int idx = s.index_of(K);
      const Rat w = (idx >= 0 ? s.val[idx] : evaluate_plucker(s, K)) / v0;
      m(i - 1, j - 1) = Quad(((s.k - i) % 2) ? -w : w);
    }
  for (int j = 0; j < s.n; ++j) m(0, j) = m(0, j) * Quad(v0);
  PosMatrix p;
  p.k = s.k;
  p.n = s.n;
  p.kind = PosMatrix::Kind::grassmann_point;
  p.entries = std::move(m);
  p.validate();
  for (std::size_t i = 0; i < s.faces.size(); ++i)
    if (plucker(p, s.faces[i]) != Quad(s.val[i]))
      throw bad_input("ws_point: seed values are not the minors of any rank-k point");
  return p;
}

LaurentSeed honeycomb_seed(int b1, int b2) {
  Plabic g = honeycomb(b1, b2);
  const int k = b1 + b2, n = 2 * k;
  const auto fs = faces(g);
  const auto labels = face_labels(g);
  std::vector<sub_t> hexes;
  std::vector<sub_t> members(labels.begin(), labels.end());
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (!fs[i].boundary && fs[i].half_edges.size() == 6) hexes.push_back(labels[i]);
  std::vector<sub_t> collection;
  if (b1 == 2 && b2 == 2) {
    // The documented completion of the 2x2 patch: five further sets close the
    // twelve face labels into a maximal collection.
    std::vector<sub_t> extra = {subset_of({1, 2, 3, 4}), subset_of({4, 5, 6, 7}),
                                subset_of({1, 6, 7, 8}), subset_of({1, 2, 7, 8}),
                                subset_of({1, 3, 7, 8})};
    std::vector<sub_t> cand = members;
    cand.insert(cand.end(), extra.begin(), extra.end());
    std::sort(cand.begin(), cand.end());
    bool ok = std::adjacent_find(cand.begin(), cand.end()) == cand.end() &&
              cand.size() == static_cast<std::size_t>(k) * (n - k) + 1;
    for (std::size_t i = 0; ok && i < cand.size(); ++i)
      for (std::size_t j = i + 1; ok && j < cand.size(); ++j)
        if (!is_weakly_separated(cand[i], cand[j])) ok = false;
    collection = ok ? cand : greedy_maximal_ws(n, k, members);
  } else {
    collection = greedy_maximal_ws(n, k, members);
  }
  LaurentSeed s;
  s.n = n;
  s.k = k;
  s.faces = collection;
  const Laurent one = Laurent::constant(1, Rat(1));
  const Laurent T = Laurent::var(1, 0, 1);
  s.val.assign(s.faces.size(), one);
  for (sub_t h : hexes) {
    const int idx = s.index_of(h);
    if (idx < 0) throw std::logic_error("honeycomb_seed: hexagon label missing");
    s.val[idx] = T;
  }
  validate_seed(s);
  return s;
}

ConjectureReport check_honeycomb_conjecture(int b1, int b2) {
  const LaurentSeed s = honeycomb_seed(b1, b2);
  const int k = b1 + b2, n = 2 * k;
  const sub_t square = with(interval_set(1, k - 1), k + b1);
  ConjectureReport rep;
  rep.J = full_set(n) ^ square;
  for (sub_t K = first_subset(k); K; K = next_subset(K, n)) {
    const Laurent p = evaluate_plucker(s, K);
    const auto [lo, hi] = p.exponent_range(0);
    if (K == rep.J) {
      rep.delta_J = p;
      if (hi > -1) rep.violations.push_back(K);
    } else if (hi < 0) {
      rep.violations.push_back(K);
    }
  }
  rep.holds = rep.violations.empty();
  return rep;
}

PosMatrix honeycomb_matrix_2x2(const Rat& T) {
  if (sgn(T) <= 0) throw bad_input("honeycomb matrix: T must be positive");
  const LaurentSeed hs = honeycomb_seed(2, 2);
  RatSeed rs;
  rs.n = hs.n;
  rs.k = hs.k;
  rs.faces = hs.faces;
  const std::vector<Rat> at{T};
  rs.val.reserve(hs.val.size());
  for (const Laurent& v : hs.val) rs.val.push_back(v.eval(at));
  return ws_point(rs);
}

RandomCheckReport random_case3_check(int trials, std::uint64_t seed) {
  if (trials < 1) throw bad_input("random check: need at least one trial");
  const int n = 10, k = 5;
  const sub_t I = subset_of({1, 2, 3, 4, 8});
  const sub_t J = subset_of({5, 6, 7, 9, 10});
  const State coll = greedy_maximal_ws(n, k, {I});
  const auto path = find_path(n, coll, J, 200000, 0);
  RandomCheckReport rep;
  rep.trials = trials;
  RatRng rng(seed);
  for (int t = 0; t < trials; ++t) {
    RatSeed s;
    s.n = n;
    s.k = k;
    s.faces = coll;
    s.val.reserve(coll.size());
    for (std::size_t i = 0; i < coll.size(); ++i) s.val.push_back(rng.at_least_one(10, 1000));
    for (const Exchange& e : path) apply_exchange(s, e);
    const Rat dj = s.val[s.index_of(J)];
    if (dj <= 1) ++rep.failures;
    if (t == 0 || dj < rep.min_value) rep.min_value = dj;
  }
  return rep;
}

ExtendedCase3Report extended_case3_check() {
  const int n = 10, k = 5;
  const sub_t I = subset_of({1, 2, 3, 4, 8});
  const sub_t J = subset_of({5, 6, 7, 9, 10});
  const State coll = greedy_maximal_ws(n, k, {I});
  const int m = static_cast<int>(coll.size());
  LaurentSeed s;
  s.n = n;
  s.k = k;
  s.faces = coll;
  s.val.reserve(coll.size());
  for (int i = 0; i < m; ++i) s.val.push_back(Laurent::var(m, i));
  const Laurent dj = evaluate_plucker(s, J);
  ExtendedCase3Report rep;
  rep.num_terms = dj.num_terms();
  rep.coeffs_positive = dj.all_coeffs_positive();
  rep.value_at_ones = dj.eval(std::vector<Rat>(m, Rat(1)));
  return rep;
}

}  // namespace eqm
