// siltlab: command-line front end for the bound-quiver silting toolkit.
//
// Subcommands
//   info        algebra summary (vertices, arrows, relations, dimension)
//   indecs      indecomposable module universe; --format dot emits the AR quiver
//   hom         Hom dimension between two named objects (modules or complexes)
//   silting     census of basic two-term silting objects
//   table       one row per silting object: summands, cotorsion pair, thick
//               subcategory, wide subcategory, torsion class; --format dot
//               emits the inclusion poset of the thick subcategories
//   diagram     edge-by-edge commutativity report for the correspondence square
//   semistable  semistability of a named object (notions: M, king, numerical)
//
// Exit codes: 0 clean success, 1 hard error, 2 success with incompleteness
// flags (truncated universe or budget-limited verdict).  Identical config and
// seed produce byte-identical output.

#include "CLI11.hpp"
#include "json.hpp"

#include "siltlab/corr.hpp"
#include "siltlab/rep_ops.hpp"
#include "siltlab/stability.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace siltlab;

constexpr int kOk = 0;
constexpr int kIncomplete = 2;  // hard errors exit 1 via the catch in main()

struct CommandConfig {
  std::string algebra_path;
  std::string command;
  std::string field;  // "", "Q", or "Fp:<p>"; empty means "use the file's field line"
  std::string field_desc = "Q";
  int dim_bound = 12;
  int mult_bound = 2;
  int samples = 60;
  std::uint64_t seed = 20240901;
  std::string format = "text";
  // hom positionals
  std::string src_id, dst_id;
  // semistable options
  std::string complex_id, module_id;
  std::string notion = "M";
  std::vector<int> theta;
};

std::string text_header(const CommandConfig& cfg) {
  return "# siltlab " + cfg.command + " | algebra=" + cfg.algebra_path +
         " field=" + cfg.field_desc + " seed=" + std::to_string(cfg.seed) + "\n";
}

std::string dot_header(const CommandConfig& cfg) {
  return "  // siltlab " + cfg.command + " | algebra=" + cfg.algebra_path +
         " field=" + cfg.field_desc + " seed=" + std::to_string(cfg.seed) + "\n";
}

json base_json(const CommandConfig& cfg) {
  json j;
  j["command"] = cfg.command;
  j["algebra"] = cfg.algebra_path;
  j["field"] = cfg.field_desc;
  j["seed"] = cfg.seed;
  return j;
}

// ---------------------------------------------------------------------------
// Object naming.  Modules are named by module_display_name with the same
// "#k" deduplication the complex universe applies, so a module and its
// minimal presentation share a name.  Quiver files may attach extra names
// with comment lines of the form "# name <alias> = <label>"; the parser
// ignores them, the CLI resolves them.

template <class K>
std::vector<std::string> module_name_table(const Algebra<K>& A, const ModuleUniverse<K>& MU) {
  std::map<std::string, int> used;
  std::vector<std::string> names;
  for (const Representation<K>& M : MU.modules) {
    std::string n = module_display_name(A, M);
    int k = ++used[n];
    if (k > 1) n += "#" + std::to_string(k);
    names.push_back(n);
  }
  return names;
}

std::map<std::string, std::string> read_name_aliases(const std::string& path) {
  std::map<std::string, std::string> out;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string hash, kw, alias, eq, label;
    if (!(ls >> hash) || hash != "#") continue;
    if (!(ls >> kw) || kw != "name") continue;
    if (!(ls >> alias >> eq >> label) || eq != "=") continue;
    out[alias] = label;
  }
  return out;
}

int find_label(const std::vector<std::string>& labels, const std::string& name) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == name) return static_cast<int>(i);
  return -1;
}

std::string expand_alias(const std::map<std::string, std::string>& aliases,
                         const std::string& name) {
  auto it = aliases.find(name);
  return it == aliases.end() ? name : it->second;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string join_labels(const std::vector<std::string>& labels, const std::vector<int>& idx) {
  std::string s = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ",";
    s += labels[idx[i]];
  }
  return s + "}";
}

std::vector<std::string> label_array(const std::vector<std::string>& labels,
                                     const std::vector<int>& idx) {
  std::vector<std::string> out;
  for (int i : idx) out.push_back(labels[i]);
  return out;
}

std::string dims_string(const std::vector<int>& dims) {
  std::string s = "(";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(dims[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// cmd_info

template <class K>
int cmd_info(const CommandConfig& cfg, const Algebra<K>& A) {
  const QuiverDescription& d = A.description();
  int dim = 0;
  for (int u = 0; u < A.num_vertices(); ++u)
    for (int w = 0; w < A.num_vertices(); ++w)
      dim += static_cast<int>(A.words_from_to(u, w).size());
  if (cfg.format == "json") {
    json j = base_json(cfg);
    j["vertices"] = d.vertex_labels;
    json arrows = json::array();
    for (const ArrowDecl& a : d.arrows)
      arrows.push_back({{"name", a.name}, {"src", a.src_label}, {"tgt", a.tgt_label}});
    j["arrows"] = arrows;
    j["num_relations"] = d.relations.size();
    j["dim_algebra"] = dim;
    j["complete"] = true;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text_header(cfg);
    std::cout << serialize_quiver(d);
    std::cout << "dim_k algebra = " << dim << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// AR quiver: irreducible maps from rad/rad^2.  For non-isomorphic
// indecomposables every morphism is radical; for an indecomposable M the
// radical of the local algebra End(M) is the radical of its trace form
// tr(f o g), which identifies the Jacobson radical in characteristic zero.
// The DOT output is therefore offered over Q only.

template <class K>
RepMorphism<K> compose_morphisms(const RepMorphism<K>& f, const RepMorphism<K>& g) {
  RepMorphism<K> h;  // g after f
  for (std::size_t v = 0; v < f.at.size(); ++v) h.at.push_back(g.at[v] * f.at[v]);
  return h;
}

template <class K>
std::vector<K> flatten_morphism(const RepMorphism<K>& f) {
  std::vector<K> out;
  for (const Matrix<K>& m : f.at)
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) out.push_back(m.at(i, j));
  return out;
}

template <class K>
K morphism_trace(const Algebra<K>& A, const RepMorphism<K>& f) {
  K t = A.one() * K(0);
  for (const Matrix<K>& m : f.at)
    for (int i = 0; i < m.rows() && i < m.cols(); ++i) t += m.at(i, i);
  return t;
}

template <class K>
int span_rank(const std::vector<std::vector<K>>& rows) {
  if (rows.empty()) return 0;
  Matrix<K> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  return rank(m);
}

template <class K>
std::vector<RepMorphism<K>> radical_hom(const Algebra<K>& A, const Representation<K>& M,
                                        const Representation<K>& N, bool same_object) {
  std::vector<RepMorphism<K>> basis = hom_space(A, M, N);
  if (!same_object) return basis;
  int k = static_cast<int>(basis.size());
  Matrix<K> gram(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      gram.at(i, j) = morphism_trace(A, compose_morphisms(basis[i], basis[j]));
  std::vector<RepMorphism<K>> rad;
  for (const std::vector<K>& c : kernel_basis(gram)) {
    RepMorphism<K> f = morphism_scale(c[0], basis[0]);
    for (int i = 1; i < k; ++i) f = morphism_add(f, morphism_scale(c[i], basis[i]));
    rad.push_back(std::move(f));
  }
  return rad;
}

struct ArEdge {
  int src = 0, dst = 0, mult = 0;
};

template <class K>
std::vector<ArEdge> ar_quiver_edges(const Algebra<K>& A, const ModuleUniverse<K>& MU) {
  int n = static_cast<int>(MU.modules.size());
  std::vector<std::vector<std::vector<RepMorphism<K>>>> rad(n);
  for (int i = 0; i < n; ++i) {
    rad[i].resize(n);
    for (int j = 0; j < n; ++j)
      rad[i][j] = radical_hom(A, MU.modules[i], MU.modules[j], i == j);
  }
  std::vector<ArEdge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (rad[i][j].empty()) continue;
      std::vector<std::vector<K>> sq;
      for (int l = 0; l < n; ++l)
        for (const RepMorphism<K>& f : rad[i][l])
          for (const RepMorphism<K>& g : rad[l][j])
            sq.push_back(flatten_morphism(compose_morphisms(f, g)));
      int irr = static_cast<int>(rad[i][j].size()) - span_rank(sq);
      if (irr > 0) edges.push_back({i, j, irr});
    }
  return edges;
}

template <class K>
std::vector<std::pair<int, int>> ar_translate_pairs(const Algebra<K>& A,
                                                    const ModuleUniverse<K>& MU) {
  std::vector<std::pair<int, int>> out;  // (module, its translate)
  for (std::size_t i = 0; i < MU.modules.size(); ++i) {
    bool projective = false;
    for (int v = 0; v < A.num_vertices() && !projective; ++v)
      if (is_isomorphic(A, MU.modules[i], projective_rep(A, v))) projective = true;
    if (projective) continue;
    Representation<K> T = tau_translate(A, MU.modules[i]);
    for (std::size_t j = 0; j < MU.modules.size(); ++j)
      if (is_isomorphic(A, T, MU.modules[j])) {
        out.push_back({static_cast<int>(i), static_cast<int>(j)});
        break;
      }
  }
  return out;
}

template <class K>
int cmd_indecs(const CommandConfig& cfg, const Algebra<K>& A, const ModuleUniverse<K>& MU) {
  std::vector<std::string> names = module_name_table(A, MU);
  if (cfg.format == "dot") {
    if constexpr (std::is_same_v<K, Fp>) {
      throw std::runtime_error(
          "the AR-quiver DOT output uses a trace-form radical and is only offered over Q");
    }
    std::cout << "digraph ar_quiver {\n" << dot_header(cfg);
    std::cout << "  rankdir=LR;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < names.size(); ++i)
      std::cout << "  m" << i << " [label=\"" << names[i] << "\"];\n";
    for (const ArEdge& e : ar_quiver_edges(A, MU)) {
      std::cout << "  m" << e.src << " -> m" << e.dst;
      if (e.mult > 1) std::cout << " [label=\"" << e.mult << "\"]";
      std::cout << ";\n";
    }
    for (const auto& [i, j] : ar_translate_pairs(A, MU))
      std::cout << "  m" << i << " -> m" << j << " [style=dashed, constraint=false];\n";
    std::cout << "}\n";
  } else if (cfg.format == "json") {
    json j = base_json(cfg);
    j["dim_bound"] = cfg.dim_bound;
    j["complete"] = MU.complete;
    json mods = json::array();
    for (std::size_t i = 0; i < MU.modules.size(); ++i)
      mods.push_back({{"id", i},
                      {"name", names[i]},
                      {"dims", MU.modules[i].dims},
                      {"total_dim", total_dim(MU.modules[i])},
                      {"certified", static_cast<bool>(MU.certified[i])}});
    j["modules"] = mods;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text_header(cfg);
    for (std::size_t i = 0; i < MU.modules.size(); ++i)
      std::cout << i << ": " << names[i] << "  dim=" << dims_string(MU.modules[i].dims)
                << " total=" << total_dim(MU.modules[i])
                << (MU.certified[i] ? "" : "  (uncertified)") << "\n";
    std::cout << MU.modules.size() << " modules ("
              << (MU.complete ? "complete" : "truncated") << ")\n";
  }
  return MU.complete ? kOk : kIncomplete;
}

// ---------------------------------------------------------------------------
// cmd_hom

template <class K>
int cmd_hom(const CommandConfig& cfg, const Algebra<K>& A, const ModuleUniverse<K>& MU,
            const ComplexUniverse<K>& CU, const std::map<std::string, std::string>& aliases) {
  std::vector<std::string> mod_names = module_name_table(A, MU);
  std::string src = expand_alias(aliases, cfg.src_id);
  std::string dst = expand_alias(aliases, cfg.dst_id);
  int ms = find_label(mod_names, src), md = find_label(mod_names, dst);
  int cs = find_label(CU.labels, src), cd = find_label(CU.labels, dst);
  std::string kind;
  int dim = 0;
  if (ms >= 0 && md >= 0) {
    kind = "module";
    dim = hom_dim(A, MU.modules[ms], MU.modules[md]);
  } else if (cs >= 0 && cd >= 0) {
    kind = "complex";
    dim = hom_k(A, CU.objects[cs], CU.objects[cd]).dim;
  } else {
    const std::string& bad = (ms < 0 && cs < 0) ? cfg.src_id : cfg.dst_id;
    throw std::runtime_error("unknown object id '" + bad + "'" +
                             (MU.complete ? "" : " (universe truncated at the dimension bound)"));
  }
  if (cfg.format == "json") {
    json j = base_json(cfg);
    j["kind"] = kind;
    j["src"] = src;
    j["dst"] = dst;
    j["dim"] = dim;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text_header(cfg);
    std::cout << "dim Hom(" << src << ", " << dst << ") = " << dim << "  [" << kind << "]\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// cmd_silting

template <class K>
int cmd_silting(const CommandConfig& cfg, const ComplexUniverse<K>& CU,
                const SiltingEnumeration& silt) {
  bool complete = CU.complete && silt.complete;
  if (cfg.format == "json") {
    json j = base_json(cfg);
    j["complete"] = complete;
    j["count"] = silt.objects.size();
    json objs = json::array();
    for (const std::vector<int>& obj : silt.objects)
      objs.push_back({{"summands", label_array(CU.labels, obj)}});
    j["objects"] = objs;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text_header(cfg);
    for (std::size_t r = 0; r < silt.objects.size(); ++r)
      std::cout << (r + 1) << ": " << join_labels(CU.labels, silt.objects[r]) << "\n";
    std::cout << silt.objects.size() << " silting objects ("
              << (complete ? "complete" : "truncated") << ")\n";
  }
  return complete ? kOk : kIncomplete;
}

// ---------------------------------------------------------------------------
// cmd_table / cmd_diagram

struct TableRow {
  std::vector<int> silting;
  CotorsionPair pair;
  SubcategorySpec thick;
  SubcategorySpec wide;
  TorsionPair torsion;
};

template <class K>
std::vector<TableRow> compute_table(const Algebra<K>& A, const CorrContext<K>& ctx,
                                    const SiltingEnumeration& silt) {
  std::vector<TableRow> rows;
  for (const std::vector<int>& obj : silt.objects) {
    TableRow row;
    row.silting = obj;
    row.pair = xi(ctx, obj);
    row.torsion = phi(ctx, row.pair);
    row.thick = thick_of_rho(A, ctx, obj);
    row.wide = alpha_map(A, ctx, row.torsion.t_part);
    rows.push_back(std::move(row));
  }
  return rows;
}

// Hasse diagram of the inclusion order on the thick subcategories of the
// table (duplicates merged), emitted as DOT.
void print_thick_poset(const CommandConfig& cfg, const std::vector<std::string>& labels,
                       const std::vector<TableRow>& rows) {
  std::vector<std::vector<int>> sets;
  for (const TableRow& row : rows) {
    if (std::find(sets.begin(), sets.end(), row.thick.members) == sets.end())
      sets.push_back(row.thick.members);
  }
  auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  std::cout << "digraph thick_poset {\n" << dot_header(cfg);
  std::cout << "  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < sets.size(); ++i)
    std::cout << "  t" << i << " [label=\"" << join_labels(labels, sets[i]) << "\"];\n";
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i == j || sets[i] == sets[j] || !subset(sets[i], sets[j])) continue;
      bool covering = true;
      for (std::size_t l = 0; l < sets.size() && covering; ++l) {
        if (l == i || l == j || sets[l] == sets[i] || sets[l] == sets[j]) continue;
        if (subset(sets[i], sets[l]) && subset(sets[l], sets[j])) covering = false;
      }
      if (covering) std::cout << "  t" << i << " -> t" << j << ";\n";
    }
  std::cout << "}\n";
}

template <class K>
int cmd_table(const CommandConfig& cfg, const Algebra<K>& A, const ModuleUniverse<K>& MU,
              const ComplexUniverse<K>& CU, const CorrContext<K>& ctx,
              const SiltingEnumeration& silt) {
  std::vector<std::string> mod_names = module_name_table(A, MU);
  std::vector<TableRow> rows = compute_table(A, ctx, silt);
  bool complete = MU.complete && CU.complete && silt.complete && ctx.scans_complete;
  if (cfg.format == "dot") {
    print_thick_poset(cfg, CU.labels, rows);
  } else if (cfg.format == "json") {
    json j = base_json(cfg);
    j["complete"] = complete;
    json out = json::array();
    for (const TableRow& row : rows)
      out.push_back({{"silting", label_array(CU.labels, row.silting)},
                     {"cotorsion_x", label_array(CU.labels, row.pair.x_part.members)},
                     {"cotorsion_y", label_array(CU.labels, row.pair.y_part.members)},
                     {"thick", label_array(CU.labels, row.thick.members)},
                     {"wide", label_array(mod_names, row.wide.members)},
                     {"torsion_t", label_array(mod_names, row.torsion.t_part.members)},
                     {"torsion_f", label_array(mod_names, row.torsion.f_part.members)}});
    j["rows"] = out;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text_header(cfg);
    std::cout << "# columns: silting | cotorsion X ; Y | thick | wide | torsion T\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const TableRow& row = rows[r];
      std::cout << "row " << (r + 1) << ": " << join_labels(CU.labels, row.silting) << " | X="
                << join_labels(CU.labels, row.pair.x_part.members) << " ; Y="
                << join_labels(CU.labels, row.pair.y_part.members) << " | thick="
                << join_labels(CU.labels, row.thick.members) << " | wide="
                << join_labels(mod_names, row.wide.members) << " | T="
                << join_labels(mod_names, row.torsion.t_part.members) << "\n";
    }
    std::cout << rows.size() << " rows (" << (complete ? "complete" : "truncated") << ")\n";
  }
  return complete ? kOk : kIncomplete;
}

template <class K>
int cmd_diagram(const CommandConfig& cfg, const Algebra<K>& A, const ComplexUniverse<K>& CU,
                const CorrContext<K>& ctx, const SiltingEnumeration& silt) {
  DiagramReport rep = verify_main_diagram(A, ctx, silt);
  bool complete = CU.complete && silt.complete && ctx.scans_complete;
  if (cfg.format == "json") {
    json j = base_json(cfg);
    j["complete"] = complete;
    json out = json::array();
    for (const DiagramRow& row : rep.rows)
      out.push_back({{"silting", label_array(CU.labels, row.silting)},
                     {"cotorsion_to_torsion_matches_h0", row.phi_xi_matches_vartheta_h0},
                     {"cotorsion_to_thick_matches_split", row.beta_xi_matches_thick_rho},
                     {"thick_to_wide_matches_torsion", row.wide_thick_matches_alpha_fac}});
    j["rows"] = out;
    j["all_pass"] = rep.all_pass;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text_header(cfg);
    auto verdict = [](bool b) { return b ? "OK" : "FAIL"; };
    for (const DiagramRow& row : rep.rows)
      std::cout << join_labels(CU.labels, row.silting)
                << ": cotorsion->torsion vs H0 " << verdict(row.phi_xi_matches_vartheta_h0)
                << " | cotorsion->thick vs split " << verdict(row.beta_xi_matches_thick_rho)
                << " | thick->wide vs torsion " << verdict(row.wide_thick_matches_alpha_fac)
                << "\n";
    std::cout << (rep.all_pass ? "all rows commute" : "COMMUTATIVITY FAILURE") << "\n";
  }
  if (!rep.all_pass) throw std::runtime_error("diagram commutativity failed");
  return complete ? kOk : kIncomplete;
}

// ---------------------------------------------------------------------------
// cmd_semistable

template <class K>
TwoTermComplex<K> resolve_complex_sum(const CommandConfig& cfg, const Algebra<K>& A,
                                      const ComplexUniverse<K>& CU,
                                      const std::map<std::string, std::string>& aliases) {
  std::vector<TwoTermComplex<K>> pieces;
  for (const std::string& name : split_commas(cfg.complex_id)) {
    int c = find_label(CU.labels, expand_alias(aliases, name));
    if (c < 0) throw std::runtime_error("unknown object id '" + name + "'");
    pieces.push_back(CU.objects[c]);
  }
  if (pieces.empty()) throw std::runtime_error("semistable: --complex needs at least one name");
  return pieces.size() == 1 ? pieces[0] : direct_sum_complex(A, pieces);
}

template <class K>
const Representation<K>& resolve_module(const CommandConfig& cfg, const Algebra<K>& A,
                                        const ModuleUniverse<K>& MU,
                                        const std::map<std::string, std::string>& aliases) {
  std::vector<std::string> names = module_name_table(A, MU);
  int m = find_label(names, expand_alias(aliases, cfg.module_id));
  if (m < 0) throw std::runtime_error("unknown object id '" + cfg.module_id + "'");
  return MU.modules[m];
}

template <class K>
int cmd_semistable(const CommandConfig& cfg, const Algebra<K>& A, const ModuleUniverse<K>& MU,
                   const ComplexUniverse<K>& CU,
                   const std::map<std::string, std::string>& aliases) {
  json j = base_json(cfg);
  j["notion"] = cfg.notion;
  std::ostringstream text;
  text << text_header(cfg);
  int code = kOk;
  if (cfg.notion == "M") {
    if (cfg.complex_id.empty() || cfg.module_id.empty())
      throw std::runtime_error("semistable --notion M needs --complex and --module");
    TwoTermComplex<K> X = resolve_complex_sum(cfg, A, CU, aliases);
    const Representation<K>& M = resolve_module(cfg, A, MU, aliases);
    bool ok = is_M_semistable(A, X, M);
    j["complex"] = cfg.complex_id;
    j["module"] = cfg.module_id;
    j["semistable"] = ok;
    text << "X = " << cfg.complex_id << ", M = " << cfg.module_id << "\n"
         << (ok ? "semistable" : "not semistable") << "\n";
  } else if (cfg.notion == "king") {
    if (cfg.module_id.empty() || cfg.theta.empty())
      throw std::runtime_error("semistable --notion king needs --module and --theta");
    const Representation<K>& M = resolve_module(cfg, A, MU, aliases);
    bool ok = king_semistable(A, M, cfg.theta);  // rejected over Q by the library
    j["module"] = cfg.module_id;
    j["theta"] = cfg.theta;
    j["semistable"] = ok;
    text << "M = " << cfg.module_id << ", theta = " << dims_string(cfg.theta) << "\n"
         << (ok ? "semistable" : "not semistable") << "\n";
  } else if (cfg.notion == "numerical") {
    if (cfg.complex_id.empty() || cfg.theta.empty())
      throw std::runtime_error("semistable --notion numerical needs --complex and --theta");
    TwoTermComplex<K> X = resolve_complex_sum(cfg, A, CU, aliases);
    NumericalBudget budget;
    budget.mult_bound = cfg.mult_bound;
    budget.samples = cfg.samples;
    budget.seed = cfg.seed;
    NumericalVerdict v = is_numerically_semistable(A, CU, X, cfg.theta, budget);
    j["complex"] = cfg.complex_id;
    j["theta"] = cfg.theta;
    j["budget"] = {{"mult_bound", cfg.mult_bound}, {"samples", cfg.samples}};
    text << "X = " << cfg.complex_id << ", d = " << dims_string(cfg.theta) << "\n";
    if (!v.semistable) {
      j["semistable"] = false;
      j["witness"] = v.witness;
      j["witness_pairing"] = v.witness_pairing;
      text << "not semistable\nwitness: " << v.witness << "  pairing " << v.witness_pairing
           << "\n";
    } else if (v.budget_limited) {
      j["semistable"] = "true-within-budget";
      text << "semistable (within budget: mult-bound " << cfg.mult_bound << ", samples "
           << cfg.samples << ")\n";
      code = kIncomplete;
    } else {
      j["semistable"] = true;
      text << "semistable\n";
    }
    if (!CU.complete) code = kIncomplete;
  } else {
    throw std::runtime_error("unknown notion '" + cfg.notion + "'");
  }
  if (cfg.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text.str();
  return code;
}

// ---------------------------------------------------------------------------
// Dispatch

template <class K>
int run_command(CommandConfig cfg, const QuiverDescription& d, std::uint32_t modulus) {
  if (cfg.format == "dot" && cfg.command != "indecs" && cfg.command != "table")
    throw std::runtime_error("format 'dot' is only offered for 'indecs' (AR quiver) and "
                             "'table' (thick-subcategory poset)");
  Algebra<K> A = Algebra<K>::build(d, {}, modulus);
  if (cfg.command == "info") return cmd_info(cfg, A);

  EnumerateOptions eo;
  eo.dim_bound = cfg.dim_bound;
  eo.seed = cfg.seed;
  ModuleUniverse<K> MU = enumerate_indecomposables(A, eo);
  if (cfg.command == "indecs") return cmd_indecs(cfg, A, MU);

  std::map<std::string, std::string> aliases = read_name_aliases(cfg.algebra_path);
  ComplexUniverse<K> CU = two_term_universe(A, MU);
  if (cfg.command == "hom") return cmd_hom(cfg, A, MU, CU, aliases);
  if (cfg.command == "semistable") return cmd_semistable(cfg, A, MU, CU, aliases);

  ConflationTables CT = build_conflation_tables(A, CU);
  SiltingEnumeration silt = enumerate_two_term_silting(A, CU, CT);
  if (cfg.command == "silting") return cmd_silting(cfg, CU, silt);

  CorrOptions co;
  co.sweep_samples = cfg.samples;
  co.seed = cfg.seed;
  CorrContext<K> ctx = build_corr_context(A, MU, CU, CT, co);
  if (cfg.command == "table") return cmd_table(cfg, A, MU, CU, ctx, silt);
  if (cfg.command == "diagram") return cmd_diagram(cfg, A, CU, ctx, silt);
  throw std::runtime_error("unknown command '" + cfg.command + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"siltlab: silting objects, cotorsion pairs, thick/wide/torsion "
               "correspondences, and semistability over bound quiver algebras"};
  app.require_subcommand(1);
  CommandConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("algebra", cfg.algebra_path, "bound quiver file")->required();
    sub->add_option("--field", cfg.field,
                    "coefficient field: Q or Fp:<p> (default: the file's field line)");
    sub->add_option("--dim-bound", cfg.dim_bound, "total-dimension cap for the module universe")
        ->check(CLI::PositiveNumber);
    sub->add_option("--mult-bound", cfg.mult_bound, "summand multiplicity cap in searches")
        ->check(CLI::PositiveNumber);
    sub->add_option("--samples", cfg.samples, "seeded sample count for coefficient sweeps")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "random seed (recorded in every output)");
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json", "dot"}));
  };

  add_common(app.add_subcommand("info", "print the algebra summary"));
  add_common(app.add_subcommand("indecs", "list the indecomposable module universe"));
  CLI::App* c_hom = app.add_subcommand("hom", "Hom dimension between two named objects");
  add_common(c_hom);
  c_hom->add_option("src", cfg.src_id, "source object name")->required();
  c_hom->add_option("dst", cfg.dst_id, "target object name")->required();
  add_common(app.add_subcommand("silting", "enumerate basic two-term silting objects"));
  add_common(app.add_subcommand("table", "silting/cotorsion/thick/wide/torsion table"));
  add_common(app.add_subcommand("diagram", "correspondence-square commutativity report"));
  CLI::App* c_semi = app.add_subcommand("semistable", "decide semistability of a named object");
  add_common(c_semi);
  c_semi->add_option("--complex", cfg.complex_id,
                     "complex name (comma-separated names form a direct sum)");
  c_semi->add_option("--module", cfg.module_id, "module name");
  c_semi->add_option("--notion", cfg.notion, "semistability notion")
      ->check(CLI::IsMember({"M", "king", "numerical"}));
  c_semi->add_option("--theta", cfg.theta, "integer weight vector, comma separated")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    QuiverDescription d = parse_quiver_file(cfg.algebra_path);
    bool use_fp = false;
    std::uint32_t p = 0;
    if (cfg.field.empty()) {
      use_fp = d.has_field && !d.field_is_q;
      p = d.modulus;
    } else if (cfg.field == "Q") {
      use_fp = false;
    } else if (cfg.field.rfind("Fp:", 0) == 0) {
      use_fp = true;
      p = static_cast<std::uint32_t>(std::stoul(cfg.field.substr(3)));
    } else {
      throw std::runtime_error("--field expects Q or Fp:<p>, got '" + cfg.field + "'");
    }
    cfg.field_desc = use_fp ? "Fp:" + std::to_string(p) : "Q";
    return use_fp ? run_command<Fp>(cfg, d, p) : run_command<Rational>(cfg, d, 0);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
