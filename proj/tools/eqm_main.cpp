#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "eqm/acceptance.hpp"
#include "eqm/alcove.hpp"
#include "eqm/arrangement.hpp"
#include "eqm/cluster.hpp"
#include "eqm/enumerate.hpp"
#include "eqm/errors.hpp"
#include "eqm/gr2.hpp"
#include "eqm/gridpath.hpp"
#include "eqm/json_io.hpp"
#include "eqm/matrix.hpp"
#include "eqm/minor_table.hpp"
#include "eqm/pairs.hpp"
#include "eqm/plabic.hpp"
#include "eqm/polygon.hpp"
#include "eqm/registry.hpp"
#include "eqm/torus.hpp"
#include "eqm/triangmat.hpp"

namespace {

using eqm::sub_t;
using ojson = nlohmann::ordered_json;

constexpr const char* kVersion = "eqm-0.1.0";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw eqm::bad_input("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "{1,2},{2,3},..." -> list of subsets.
std::vector<sub_t> parse_subset_list(const std::string& text) {
  std::vector<sub_t> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t open = text.find('{', pos);
    if (open == std::string::npos) break;
    const std::size_t close = text.find('}', open);
    if (close == std::string::npos) throw eqm::bad_input("unbalanced braces in subset list");
    out.push_back(eqm::parse_subset(text.substr(open, close - open + 1)));
    pos = close + 1;
  }
  if (out.empty()) throw eqm::bad_input("empty subset list");
  return out;
}

ojson subsets_json(const std::vector<sub_t>& v) {
  ojson a = ojson::array();
  for (sub_t s : v) a.push_back(eqm::subset_str(s));
  return a;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Content-addressed enumeration cache: key = subcommand + canonical
// parameters + version; value = the exact output text.
std::string cache_lookup(const std::string& key) {
  const char* dir = std::getenv("EQM_CACHE_DIR");
  if (!dir || !*dir) return {};
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json",
                static_cast<unsigned long long>(fnv1a(key)));
  const std::filesystem::path p = std::filesystem::path(dir) / name;
  if (!std::filesystem::exists(p)) return {};
  return read_file(p.string());
}

void cache_store(const std::string& key, const std::string& value) {
  const char* dir = std::getenv("EQM_CACHE_DIR");
  if (!dir || !*dir) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json",
                static_cast<unsigned long long>(fnv1a(key)));
  const std::filesystem::path p = std::filesystem::path(dir) / name;
  const std::filesystem::path tmp =
      p.string() + ".tmp" + std::to_string(static_cast<long>(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary);
    out << value;
  }
  std::filesystem::rename(tmp, p, ec);  // atomic publish
  if (ec) std::filesystem::remove(tmp, ec);
}

struct Ctx {
  std::uint64_t seed = 0;
  long trials = 1000;
  long precision_bits = 256;
  bool use_cache = false;

  int exit_code = 0;
  std::string output;      // printed to stdout followed by newline
  bool raw_output = false; // DOT export: print as-is
  std::string cache_key;   // non-empty => result may be cached
};

void emit(Ctx& ctx, const ojson& j) { ctx.output = j.dump(); }

// Returns true when the cached text was loaded; the stored text already
// carries its trailing newline, so it is replayed verbatim.
bool cache_probe(Ctx& ctx) {
  if (!ctx.use_cache || ctx.cache_key.empty()) return false;
  const std::string hit = cache_lookup(ctx.cache_key);
  if (hit.empty()) return false;
  std::cerr << "cache hit" << std::endl;
  ctx.output = hit;
  ctx.raw_output = true;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  Ctx ctx;
  CLI::App app{"Exact tools for arrangements of equal minors on the positive Grassmannian"};
  app.require_subcommand(1);
  app.add_option("--seed", ctx.seed, "PRNG seed for randomized operations")->capture_default_str();
  app.add_option("--trials", ctx.trials, "trial count for randomized operations")
      ->capture_default_str();
  app.add_option("--precision-bits", ctx.precision_bits, "working precision for interval checks")
      ->capture_default_str();
  app.add_flag("--cache", ctx.use_cache,
               "cache enumeration results under $EQM_CACHE_DIR (atomic, content addressed)");

  std::function<void()> action;

  // ---- check ---------------------------------------------------------------
  auto* check = app.add_subcommand("check", "pairwise predicates on k-subsets");
  check->require_subcommand(1);
  static std::string arg_i, arg_j, arg_k, arg_l;
  static int arg_n = 0, arg_kk = 0, arg_m = 0;

  auto* c_ws = check->add_subcommand("ws", "weak separation of two subsets");
  c_ws->add_option("I", arg_i)->required();
  c_ws->add_option("J", arg_j)->required();
  c_ws->callback([&] {
    action = [&] {
      const bool ws = eqm::is_weakly_separated(eqm::parse_subset(arg_i), eqm::parse_subset(arg_j));
      emit(ctx, ojson{{"ws", ws}});
    };
  });

  auto* c_sorted = check->add_subcommand("sorted", "sortedness of two subsets");
  c_sorted->add_option("I", arg_i)->required();
  c_sorted->add_option("J", arg_j)->required();
  c_sorted->add_option("--n", arg_n, "ground set size")->required();
  c_sorted->callback([&] {
    action = [&] {
      const bool s =
          eqm::is_sorted_pair(eqm::parse_subset(arg_i), eqm::parse_subset(arg_j), arg_n);
      emit(ctx, ojson{{"sorted", s}});
    };
  });

  auto* c_sk = check->add_subcommand("skandera", "interval-count product dominance");
  c_sk->add_option("I", arg_i)->required();
  c_sk->add_option("J", arg_j)->required();
  c_sk->add_option("K", arg_k)->required();
  c_sk->add_option("L", arg_l)->required();
  c_sk->add_option("--n", arg_n, "ground set size")->required();
  c_sk->callback([&] {
    action = [&] {
      const bool d = eqm::skandera_dominates(eqm::parse_subset(arg_i), eqm::parse_subset(arg_j),
                                             eqm::parse_subset(arg_k), eqm::parse_subset(arg_l),
                                             arg_n);
      emit(ctx, ojson{{"dominates", d}});
    };
  });

  auto* c_cl = check->add_subcommand("classify", "full pair classification (path data)");
  c_cl->add_option("I", arg_i)->required();
  c_cl->add_option("J", arg_j)->required();
  c_cl->add_option("--n", arg_n, "ground set size")->required();
  c_cl->callback([&] {
    action = [&] {
      const auto pc =
          eqm::classify_pair(eqm::parse_subset(arg_i), eqm::parse_subset(arg_j), arg_n);
      ojson j;
      j["weakly_separated"] = pc.weakly_separated;
      j["sorted"] = pc.sorted;
      j["steps"] = pc.path.steps;
      j["dyck"] = pc.path.dyck;
      j["interlacing"] = pc.path.interlacing;
      j["rotation"] = pc.path.rotation;
      j["alphas"] = pc.path.alphas;
      j["betas"] = pc.path.betas;
      emit(ctx, j);
    };
  });

  // ---- enumerate -------------------------------------------------------------
  auto* enumer = app.add_subcommand("enumerate", "exhaustive enumerations (cacheable)");
  enumer->require_subcommand(1);

  auto* e_sorted = enumer->add_subcommand("sorted", "maximal sorted families");
  e_sorted->add_option("--n", arg_n)->required();
  e_sorted->add_option("--k", arg_kk)->required();
  e_sorted->callback([&] {
    action = [&] {
      ctx.cache_key = std::string("enumerate/sorted?n=") + std::to_string(arg_n) +
                      "&k=" + std::to_string(arg_kk) + "&v=" + kVersion;
      if (cache_probe(ctx)) return;
      const auto fams = eqm::enumerate_maximal_sorted(arg_n, arg_kk);
      ojson j;
      j["count"] = fams.size();
      ojson items = ojson::array();
      for (const auto& f : fams) items.push_back(subsets_json(f));
      j["families"] = std::move(items);
      emit(ctx, j);
    };
  });

  auto* e_tri = enumer->add_subcommand("triangulations", "triangulations of the n-gon");
  e_tri->add_option("--n", arg_n)->required();
  e_tri->callback([&] {
    action = [&] {
      ctx.cache_key =
          std::string("enumerate/triangulations?n=") + std::to_string(arg_n) + "&v=" + kVersion;
      if (cache_probe(ctx)) return;
      const auto ts = eqm::enumerate_triangulations(arg_n);
      ojson j;
      j["count"] = ts.size();
      ojson items = ojson::array();
      for (const auto& t : ts) items.push_back(subsets_json(t));
      j["triangulations"] = std::move(items);
      emit(ctx, j);
    };
  });

  auto* e_thr = enumer->add_subcommand("thrackles", "maximal thrackles");
  e_thr->add_option("--n", arg_n)->required();
  e_thr->callback([&] {
    action = [&] {
      ctx.cache_key =
          std::string("enumerate/thrackles?n=") + std::to_string(arg_n) + "&v=" + kVersion;
      if (cache_probe(ctx)) return;
      const auto ts = eqm::enumerate_maximal_thrackles(arg_n);
      ojson j;
      j["count"] = ts.size();
      ojson items = ojson::array();
      for (const auto& t : ts) items.push_back(subsets_json(t));
      j["thrackles"] = std::move(items);
      emit(ctx, j);
    };
  });

  auto* e_alc = enumer->add_subcommand("alcoves", "alcoves of the hypersimplex");
  e_alc->add_option("--n", arg_n)->required();
  e_alc->add_option("--k", arg_kk)->required();
  e_alc->callback([&] {
    action = [&] {
      ctx.cache_key = std::string("enumerate/alcoves?n=") + std::to_string(arg_n) +
                      "&k=" + std::to_string(arg_kk) + "&v=" + kVersion;
      if (cache_probe(ctx)) return;
      std::vector<sub_t> all;
      for (sub_t s = eqm::first_subset(arg_kk); s; s = eqm::next_subset(s, arg_n))
        all.push_back(s);
      const auto fams = eqm::maximal_sorted_subsets(all, arg_n);
      ojson j;
      j["count"] = fams.size();
      ojson items = ojson::array();
      for (const auto& f : fams) items.push_back(subsets_json(f));
      j["families"] = std::move(items);
      emit(ctx, j);
    };
  });

  auto* e_gp = enumer->add_subcommand("gridpaths", "monotone staircase paths in a k x m grid");
  e_gp->add_option("--k", arg_kk)->required();
  e_gp->add_option("--m", arg_m)->required();
  e_gp->callback([&] {
    action = [&] {
      ctx.cache_key = std::string("enumerate/gridpaths?k=") + std::to_string(arg_kk) +
                      "&m=" + std::to_string(arg_m) + "&v=" + kVersion;
      if (cache_probe(ctx)) return;
      const auto ps = eqm::grid_paths(arg_kk, arg_m);
      ojson j;
      j["count"] = ps.size();
      ojson items = ojson::array();
      for (const auto& p : ps) {
        ojson path = ojson::array();
        for (auto [r, cc] : p) path.push_back(ojson::array({r, cc}));
        items.push_back(std::move(path));
      }
      j["paths"] = std::move(items);
      emit(ctx, j);
    };
  });

  // ---- count -----------------------------------------------------------------
  auto* count = app.add_subcommand("count", "closed-form counts");
  count->require_subcommand(1);

  auto* n_eul = count->add_subcommand("eulerian", "Eulerian number A(n,k)");
  n_eul->add_option("--n", arg_n)->required();
  n_eul->add_option("--k", arg_kk)->required();
  n_eul->callback([&] {
    action = [&] {
      emit(ctx, ojson{{"value", eqm::int_str(eqm::eulerian(arg_n, arg_kk))}});
    };
  });

  auto* n_cat = count->add_subcommand("catalan", "Catalan number C_n");
  n_cat->add_option("--n", arg_n)->required();
  n_cat->callback([&] {
    action = [&] { emit(ctx, ojson{{"value", eqm::int_str(eqm::catalan(arg_n))}}); };
  });

  auto* n_thr = count->add_subcommand("thrackles", "maximal thrackle count 2^(n-1)-n");
  n_thr->add_option("--n", arg_n)->required();
  n_thr->callback([&] {
    action = [&] {
      if (arg_n < 3) throw eqm::bad_input("count thrackles: need n >= 3");
      const eqm::Int v = (eqm::Int(1) << (arg_n - 1)) - arg_n;
      emit(ctx, ojson{{"value", eqm::int_str(v)}});
    };
  });

  auto* n_gr2 = count->add_subcommand("nonneg-gr2", "largest-class maximum on nonnegative Gr(2,n)");
  n_gr2->add_option("--n", arg_n)->required();
  n_gr2->callback([&] {
    action = [&] { emit(ctx, ojson{{"value", eqm::int_str(eqm::nonneg_gr2_max(arg_n))}}); };
  });

  // ---- construct ---------------------------------------------------------------
  auto* cons = app.add_subcommand("construct", "explicit matrices and graphs");
  cons->require_subcommand(1);
  static std::string arg_edges, arg_x = "1", arg_table, arg_set, arg_keep, arg_mode = "largest";
  static std::string arg_id, arg_t = "6";
  static int arg_b1 = 2, arg_b2 = 2;

  auto* k_tri = cons->add_subcommand("triangulation", "2 x n matrix from a triangulation");
  k_tri->add_option("--n", arg_n)->required();
  k_tri->add_option("--edges", arg_edges, "sides + chords, e.g. \"{1,2},{2,3},...\"")->required();
  k_tri->add_option("--x", arg_x, "common target value on the edges");
  k_tri->callback([&] {
    action = [&] {
      const auto edges = parse_subset_list(arg_edges);
      eqm::EdgeValues x;
      for (sub_t e : edges) x[e] = eqm::parse_rat(arg_x);
      const eqm::Mat<eqm::Quad> m = eqm::triangulation_matrix(arg_n, edges, x);
      eqm::PosMatrix pm;
      pm.k = 2;
      pm.n = arg_n;
      pm.kind = eqm::PosMatrix::Kind::grassmann_point;
      pm.entries = m;
      emit(ctx, ojson::parse(eqm::matrix_to_json(pm)));
    };
  });

  auto* k_thr = cons->add_subcommand("thrackle", "certify a maximal thrackle as a largest class");
  k_thr->add_option("--n", arg_n)->required();
  k_thr->add_option("--edges", arg_edges)->required();
  k_thr->callback([&] {
    action = [&] {
      const auto edges = parse_subset_list(arg_edges);
      const auto shape = eqm::thrackle_shape(arg_n, edges);
      const eqm::IvalMatrix m =
          eqm::thrackle_matrix(arg_n, edges, static_cast<mpfr_prec_t>(ctx.precision_bits));
      const bool ok = eqm::certify_thrackle_largest(m, arg_n, edges, shape.r);
      ojson j;
      j["n"] = arg_n;
      j["edges"] = subsets_json(edges);
      j["r"] = shape.r;
      j["certified"] = ok;
      emit(ctx, j);
      if (!ok) ctx.exit_code = 2;
    };
  });

  auto* k_tor = cons->add_subcommand("torus", "rescale columns to equalize the minors on S");
  k_tor->add_option("table", arg_table, "minor table JSON file")->required();
  k_tor->add_option("--set", arg_set, "family S, e.g. \"{1,2},{2,3}\"")->required();
  k_tor->add_option("--mode", arg_mode)->check(CLI::IsMember({"largest", "smallest"}));
  k_tor->callback([&] {
    action = [&] {
      const eqm::MinorTable t = eqm::table_from_json(read_file(arg_table));
      const auto S = parse_subset_list(arg_set);
      const auto mode =
          arg_mode == "largest" ? eqm::ExtremeMode::largest : eqm::ExtremeMode::smallest;
      const eqm::TorusScaling sc = eqm::torus_rescale(t, S, mode);
      ojson j;
      j["certified"] = true;
      j["mode"] = arg_mode;
      j["precision"] = static_cast<long>(sc.prec);
      ojson f = ojson::array();
      for (const auto& iv : sc.t) f.push_back(iv.str());
      j["factors"] = std::move(f);
      emit(ctx, j);
    };
  });

  auto* k_pert = cons->add_subcommand("perturb", "shrink a largest class to a subfamily");
  k_pert->add_option("table", arg_table)->required();
  k_pert->add_option("--set", arg_set, "the sorted family S")->required();
  k_pert->add_option("--keep", arg_keep, "subfamily to keep extremal")->required();
  k_pert->callback([&] {
    action = [&] {
      const eqm::MinorTable t = eqm::table_from_json(read_file(arg_table));
      const eqm::TorusScaling sc =
          eqm::epsilon_perturb_largest(t, parse_subset_list(arg_set), parse_subset_list(arg_keep));
      ojson j;
      j["certified"] = true;
      j["precision"] = static_cast<long>(sc.prec);
      ojson f = ojson::array();
      for (const auto& iv : sc.t) f.push_back(iv.str());
      j["factors"] = std::move(f);
      emit(ctx, j);
    };
  });

  auto* k_hc = cons->add_subcommand("honeycomb", "honeycomb plabic patch");
  k_hc->add_option("--b1", arg_b1)->required();
  k_hc->add_option("--b2", arg_b2)->required();
  k_hc->callback([&] {
    action = [&] {
      emit(ctx, ojson::parse(eqm::plabic_to_json(eqm::honeycomb(arg_b1, arg_b2))));
    };
  });

  auto* k_pm = cons->add_subcommand("paper-matrix", "documented reference matrix");
  k_pm->add_option("--id", arg_id, "k4_n8 | k5a_n10 | k5b_n10")->required();
  k_pm->callback([&] {
    action = [&] {
      const eqm::RegistryEntry e = eqm::paper_matrix(eqm::parse_registry_id(arg_id));
      emit(ctx, ojson::parse(eqm::matrix_to_json(e.matrix)));
    };
  });

  // ---- verify -------------------------------------------------------------------
  static std::string arg_file, arg_vmode = "full";
  auto* verify = app.add_subcommand("verify", "extract the arrangement of a matrix file");
  verify->add_option("matrix", arg_file, "matrix JSON file")->required();
  verify->add_option("--mode", arg_vmode)->check(CLI::IsMember({"smallest", "largest", "full"}));
  verify->callback([&] {
    action = [&] {
      const eqm::PosMatrix m = eqm::matrix_from_json(read_file(arg_file));
      const eqm::MinorTable t = eqm::minor_table(m);
      const eqm::ArrMode mode = arg_vmode == "smallest" ? eqm::ArrMode::smallest
                                : arg_vmode == "largest" ? eqm::ArrMode::largest
                                                         : eqm::ArrMode::full;
      const eqm::Arrangement a = eqm::extract_arrangement(t, mode);
      emit(ctx, ojson::parse(eqm::arrangement_to_json(a)));
    };
  });

  // ---- plabic ---------------------------------------------------------------------
  auto* plabic = app.add_subcommand("plabic", "plabic graphs: strands, faces, moves");
  plabic->require_subcommand(1);
  static std::string arg_graph, arg_label, arg_w;
  static bool arg_layered = false;

  auto* p_trace = plabic->add_subcommand("trace", "strand permutation");
  p_trace->add_option("graph", arg_graph)->required();
  p_trace->callback([&] {
    action = [&] {
      const eqm::Plabic g = eqm::plabic_from_json(read_file(arg_graph));
      emit(ctx, ojson{{"perm", eqm::trace_strands(g).perm}});
    };
  });

  auto* p_faces = plabic->add_subcommand("faces", "face walks and labels");
  p_faces->add_option("graph", arg_graph)->required();
  p_faces->callback([&] {
    action = [&] {
      const eqm::Plabic g = eqm::plabic_from_json(read_file(arg_graph));
      const auto fs = eqm::faces(g);
      std::vector<sub_t> labels;
      bool labeled = true;
      try {
        labels = eqm::face_labels(g);
      } catch (const eqm::not_reduced&) {
        labeled = false;
      }
      ojson items = ojson::array();
      for (std::size_t i = 0; i < fs.size(); ++i) {
        ojson f;
        if (labeled) f["label"] = eqm::subset_str(labels[i]);
        f["boundary"] = fs[i].boundary;
        f["edges"] = fs[i].half_edges.size();
        items.push_back(std::move(f));
      }
      emit(ctx, ojson{{"faces", std::move(items)}});
    };
  });

  auto* p_red = plabic->add_subcommand("reduced", "reducedness check with witness");
  p_red->add_option("graph", arg_graph)->required();
  p_red->callback([&] {
    action = [&] {
      const eqm::Plabic g = eqm::plabic_from_json(read_file(arg_graph));
      const std::string why = eqm::reducedness_violation(g);
      emit(ctx, ojson{{"reduced", why.empty()}, {"violation", why}});
    };
  });

  auto* p_move = plabic->add_subcommand("move", "square move at a face label");
  p_move->add_option("graph", arg_graph)->required();
  p_move->add_option("--label", arg_label, "face label, e.g. \"{1,2,3,6}\"")->required();
  p_move->callback([&] {
    action = [&] {
      eqm::Plabic g = eqm::plabic_from_json(read_file(arg_graph));
      eqm::square_move(g, eqm::parse_subset(arg_label));
      emit(ctx, ojson::parse(eqm::plabic_to_json(g)));
    };
  });

  auto* p_hc = plabic->add_subcommand("honeycomb", "honeycomb patch as JSON");
  p_hc->add_option("--b1", arg_b1)->required();
  p_hc->add_option("--b2", arg_b2)->required();
  p_hc->callback([&] {
    action = [&] {
      emit(ctx, ojson::parse(eqm::plabic_to_json(eqm::honeycomb(arg_b1, arg_b2))));
    };
  });

  auto* p_chain = plabic->add_subcommand("chain", "square-move chain reaction");
  p_chain->add_option("--b1", arg_b1);
  p_chain->add_option("--b2", arg_b2);
  p_chain->add_flag("--layered", arg_layered, "the fixed 12-cell two-tier instance");
  p_chain->callback([&] {
    action = [&] {
      eqm::ChainLog log;
      if (arg_layered) {
        eqm::Plabic g;
        log = eqm::layered_chain_reaction(g);
      } else {
        eqm::Plabic g = eqm::honeycomb(arg_b1, arg_b2);
        log = eqm::chain_reaction(g);
      }
      ojson moves = ojson::array();
      for (const auto& [before, after] : log.moves)
        moves.push_back(ojson::array({eqm::subset_str(before), eqm::subset_str(after)}));
      ojson j;
      j["moves"] = std::move(moves);
      j["final_square"] = eqm::subset_str(log.final_square);
      emit(ctx, j);
    };
  });

  auto* p_proj = plabic->add_subcommand("project", "cyclic block projection of a label");
  p_proj->add_option("--w", arg_w, "label W")->required();
  p_proj->add_option("--i", arg_i, "reference subset I")->required();
  p_proj->add_option("--n", arg_n)->required();
  p_proj->callback([&] {
    action = [&] {
      const auto blocks =
          eqm::project_pi(eqm::parse_subset(arg_w), eqm::parse_subset(arg_i), arg_n);
      emit(ctx, ojson{{"blocks", blocks}});
    };
  });

  auto* p_dot = plabic->add_subcommand("export-dot", "Graphviz text for a graph file");
  p_dot->add_option("graph", arg_graph)->required();
  p_dot->callback([&] {
    action = [&] {
      const eqm::Plabic g = eqm::plabic_from_json(read_file(arg_graph));
      ctx.output = eqm::export_dot(g);
      ctx.raw_output = true;
    };
  });

  // ---- cluster ---------------------------------------------------------------------
  auto* cluster = app.add_subcommand("cluster", "seeds, mutation, distances");
  cluster->require_subcommand(1);
  static int arg_cap = 12;
  static bool arg_geo = false;

  auto* cl_eval = cluster->add_subcommand("evaluate", "coordinate on the honeycomb seed");
  cl_eval->add_option("--b1", arg_b1)->required();
  cl_eval->add_option("--b2", arg_b2)->required();
  cl_eval->add_option("--j", arg_j, "target subset J")->required();
  cl_eval->callback([&] {
    action = [&] {
      const eqm::LaurentSeed s = eqm::honeycomb_seed(arg_b1, arg_b2);
      const eqm::Laurent v = eqm::evaluate_plucker(s, eqm::parse_subset(arg_j));
      emit(ctx, ojson{{"value", v.str1("T")}});
    };
  });

  auto* cl_dist = cluster->add_subcommand("distance", "square-move distance between labels");
  cl_dist->add_option("--n", arg_n)->required();
  cl_dist->add_option("--k", arg_kk)->required();
  cl_dist->add_option("--i", arg_i)->required();
  cl_dist->add_option("--j", arg_j)->required();
  cl_dist->add_option("--cap", arg_cap)->capture_default_str();
  cl_dist->add_flag("--geodesics", arg_geo, "count distinct shortest label sequences");
  cl_dist->callback([&] {
    action = [&] {
      const eqm::DistanceResult d =
          eqm::mutation_distance(arg_n, arg_kk, eqm::parse_subset(arg_i),
                                 eqm::parse_subset(arg_j), arg_cap, arg_geo);
      ojson j;
      j["distance"] = d.distance;
      j["exceeded_cap"] = d.exceeded_cap;
      if (arg_geo) j["geodesic_label_sequences"] = d.geodesic_label_sequences;
      emit(ctx, j);
    };
  });

  auto* cl_conj = cluster->add_subcommand("conjecture-1017", "exponent bounds on a honeycomb");
  cl_conj->add_option("--b1", arg_b1)->required();
  cl_conj->add_option("--b2", arg_b2)->required();
  cl_conj->callback([&] {
    action = [&] {
      const eqm::ConjectureReport r = eqm::check_honeycomb_conjecture(arg_b1, arg_b2);
      ojson j;
      j["J"] = eqm::subset_str(r.J);
      j["holds"] = r.holds;
      j["violations"] = subsets_json(r.violations);
      j["delta_J"] = r.delta_J.str1("T");
      emit(ctx, j);
      if (!r.holds) ctx.exit_code = 2;
    };
  });

  auto* cl_ws = cluster->add_subcommand("ws-point", "rank-4 honeycomb point at numeric T");
  cl_ws->add_option("--t", arg_t, "positive rational T")->capture_default_str();
  cl_ws->callback([&] {
    action = [&] {
      const eqm::PosMatrix m = eqm::honeycomb_matrix_2x2(eqm::parse_rat(arg_t));
      emit(ctx, ojson::parse(eqm::matrix_to_json(m)));
    };
  });

  // ---- reproduce --------------------------------------------------------------------
  static std::string arg_claim;
  static long arg_narg = 0;
  auto* rep = app.add_subcommand("reproduce", "scripted reproduction of a documented value");
  rep->add_option("claim", arg_claim,
                  "one of: honeycomb-6-over-T, distance-2x2, distance-5-10, thrackle-count, "
                  "nonneg-gr2, eulerian-counts, chain-moves (--n 10*b1+b2), layered-chain-moves, "
                  "k4-matrix, k5a-matrix, k5b-matrix")
      ->required();
  rep->add_option("--n", arg_narg, "numeric argument for claims that take one");
  rep->callback([&] {
    action = [&] {
      if (arg_claim == "k4-matrix" || arg_claim == "k5a-matrix" || arg_claim == "k5b-matrix") {
        const eqm::RegistryId id = eqm::parse_registry_id(
            arg_claim == "k4-matrix" ? "k4_n8" : arg_claim == "k5a-matrix" ? "k5a_n10" : "k5b_n10");
        const std::string err = eqm::verify_paper_matrix(id);
        const eqm::RegistryEntry e = eqm::paper_matrix(id);
        ojson j;
        j["status"] = err.empty() ? "verified" : "failed";
        j["equal_min"] = ojson::array({eqm::subset_str(e.I), eqm::subset_str(e.J)});
        if (!err.empty()) j["error"] = err;
        emit(ctx, j);
        if (!err.empty()) ctx.exit_code = 2;
        return;
      }
      const eqm::ReproResult r = eqm::reproduce_claim(arg_claim, arg_narg);
      ojson j;
      j["claim"] = r.claim;
      j["observed"] = r.observed;
      j["expected"] = r.expected;
      j["pass"] = r.pass;
      emit(ctx, j);
      if (!r.pass) ctx.exit_code = 2;
    };
  });

  // ---- parse and run ------------------------------------------------------------------
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 64;
  }

  try {
    if (!action) {
      std::cerr << "no action selected" << std::endl;
      return 64;
    }
    action();
    if (ctx.use_cache && !ctx.cache_key.empty() && !ctx.raw_output) {
      cache_store(ctx.cache_key, ctx.output + "\n");
      std::cerr << "cache store" << std::endl;
    }
    std::cout << ctx.output;
    if (!ctx.raw_output) std::cout << "\n";
    return ctx.exit_code;
  } catch (const eqm::precision_exhausted& e) {
    std::cerr << "undecided: " << e.what() << std::endl;
    return 3;
  } catch (const eqm::undecided_comparison& e) {
    std::cerr << "undecided: " << e.what() << std::endl;
    return 3;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 65;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << std::endl;
    return 70;
  }
}
