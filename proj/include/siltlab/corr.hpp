#pragma once
// The web of correspondences over a fixed pair of universes (indecomposable
// modules, indecomposable two-term complexes):
//
//   silting objects  <-- xi/psi -->  complete cotorsion pairs
//   cotorsion pairs  <-- phi/theta --> functorially finite torsion pairs
//   resolving subcategories -- beta/iota --> thick subcategories
//   torsion classes  <-- alpha/vartheta --> left-finite wide subcategories
//
// plus the predicates (thick / wide / torsion class / resolving / enough
// injectives / cotorsion pair) and a commutativity checker for the whole
// diagram.  Subcategories are additive and idempotent-complete, so a
// subcategory is stored as the sorted list of universe indices of the
// indecomposables it contains.
//
// Everything here is driven by finite scan tables built once per context:
// morphism kernels/cokernels and extension middles between small sums of
// universe objects.  Scans use bounded coefficient sweeps over hom bases;
// verdicts degrade to "unknown" instead of lying when a universe is
// incomplete or a scanned object fails to decompose inside it.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "siltlab/silting.hpp"
#include "siltlab/stability.hpp"

namespace siltlab {

// ---------------------------------------------------------------------------
// Subcategory currency.

struct SubcategorySpec {
  enum class Ambient { modules, complexes };
  Ambient ambient = Ambient::complexes;
  std::vector<int> members;  // sorted, unique universe indices
  bool complete = true;      // inherited from the universe
  friend bool operator==(const SubcategorySpec&, const SubcategorySpec&) = default;
};

struct CotorsionPair {
  SubcategorySpec x_part, y_part;  // both live in the complex universe
  friend bool operator==(const CotorsionPair&, const CotorsionPair&) = default;
};

struct TorsionPair {
  SubcategorySpec t_part, f_part;  // both live in the module universe
  friend bool operator==(const TorsionPair&, const TorsionPair&) = default;
};

namespace corr_detail {

inline std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline bool subset_of(const std::vector<int>& a, const std::set<int>& s) {
  for (int x : a)
    if (!s.count(x)) return false;
  return true;
}

}  // namespace corr_detail

// ---------------------------------------------------------------------------
// Precomputed scan tables.

struct CorrOptions {
  int sweep_samples = 60;          // coefficient samples for hom sweeps of dim > 3
  std::uint64_t seed = 20240901;
  int max_middle_pieces = 3;       // candidate middles for module extensions
};

template <class K>
struct CorrContext {
  ModuleUniverse<K> MU;
  ComplexUniverse<K> CU;
  ConflationTables CT;
  CorrOptions opts;

  std::vector<std::vector<int>> mod_hom;    // [i][j] = dim Hom(M_i, M_j)
  std::vector<std::vector<int>> h0_pieces;  // per complex: module indices of H^0
  std::vector<int> proj_stalks;             // complex indices of the (0 -> P_v)

  // True when both universes are complete and every scanned kernel, cokernel
  // and conflation term decomposed into universe members.
  bool scans_complete = true;

  // Kernel/cokernel types of swept morphisms between sums of at most two
  // indecomposable modules.
  struct MapScan {
    std::vector<int> src, dst;   // sorted multisets of module indices
    std::vector<int> ker, coker; // sorted unique piece indices
  };
  std::vector<MapScan> mod_map_scans;

  // Middle types of module extensions 0 -> M_sub -> E -> M_quot -> 0.
  struct ExtScan {
    int sub = 0, quot = 0;
    std::vector<int> middle;     // sorted unique piece indices
  };
  std::vector<ExtScan> mod_ext_scans;

  // Conflations U_x >--> E -->> Z with Z of at most two indecomposable
  // summands (plus the through-zero conflation U_x >--> 0 -->> U_x[1] when
  // the shift is representable in the window).
  struct BetaScan {
    int x = 0;
    std::vector<int> middle, third;  // sorted unique piece indices
  };
  std::vector<BetaScan> beta_scans;
};

namespace corr_detail {

template <class K>
std::optional<int> module_index_of(const Algebra<K>& A, const ModuleUniverse<K>& MU,
                                   const Representation<K>& M) {
  for (std::size_t i = 0; i < MU.modules.size(); ++i)
    if (MU.modules[i].dims == M.dims && is_isomorphic(A, MU.modules[i], M))
      return static_cast<int>(i);
  return std::nullopt;
}

// Decompose a module and name its pieces inside the universe; nullopt when a
// piece escapes (the caller then drops the scan and clears scans_complete).
template <class K>
std::optional<std::vector<int>> module_pieces(const Algebra<K>& A,
                                              const ModuleUniverse<K>& MU,
                                              const Representation<K>& M) {
  if (total_dim(M) == 0) return std::vector<int>{};
  Decomposition<K> D = decompose(A, M);
  std::vector<int> out;
  for (const auto& p : D.pieces) {
    auto idx = module_index_of(A, MU, p.rep);
    if (!idx) return std::nullopt;
    out.push_back(*idx);
  }
  return sorted_unique(out);
}

template <class K>
Representation<K> sum_of_modules(const Algebra<K>& A, const ModuleUniverse<K>& MU,
                                 const std::vector<int>& idx) {
  Representation<K> S = zero_representation(A);
  for (int i : idx) S = direct_sum(S, MU.modules[i]);
  return S;
}

template <class K>
RepMorphism<K> morphism_combo(const Algebra<K>& A,
                              const std::vector<RepMorphism<K>>& basis,
                              const std::vector<int>& c) {
  const K one = A.one();
  RepMorphism<K> f = morphism_scale(one * K(c[0]), basis[0]);
  for (std::size_t b = 1; b < basis.size(); ++b)
    f = morphism_add(f, morphism_scale(one * K(c[b]), basis[b]));
  return f;
}

}  // namespace corr_detail

// ---------------------------------------------------------------------------
// Context construction.

template <class K>
CorrContext<K> build_corr_context(const Algebra<K>& A, const ModuleUniverse<K>& MU,
                                  const ComplexUniverse<K>& CU, const ConflationTables& CT,
                                  const CorrOptions& opts = {}) {
  using corr_detail::module_pieces;
  using corr_detail::morphism_combo;
  using corr_detail::sorted_unique;
  using corr_detail::sum_of_modules;

  CorrContext<K> ctx;
  ctx.MU = MU;
  ctx.CU = CU;
  ctx.CT = CT;
  ctx.opts = opts;
  ctx.scans_complete = MU.complete && CU.complete && CT.decompositions_ok;

  const int nm = static_cast<int>(MU.modules.size());
  const int nc = static_cast<int>(CU.objects.size());

  ctx.mod_hom.assign(nm, std::vector<int>(nm, 0));
  for (int i = 0; i < nm; ++i)
    for (int j = 0; j < nm; ++j)
      ctx.mod_hom[i][j] = hom_dim(A, MU.modules[i], MU.modules[j]);

  ctx.h0_pieces.assign(nc, {});
  for (int i = 0; i < nc; ++i)
    if (CU.h0_index[i] >= 0) ctx.h0_pieces[i] = {CU.h0_index[i]};
  for (int i = 0; i < nc; ++i)
    if (CU.objects[i].v1.empty() && CU.objects[i].v0.size() == 1)
      ctx.proj_stalks.push_back(i);

  // --- module-side morphism scans: sources and targets of <= 2 summands ---
  std::vector<std::vector<int>> groups;
  for (int i = 0; i < nm; ++i) groups.push_back({i});
  for (int i = 0; i < nm; ++i)
    for (int j = i; j < nm; ++j) groups.push_back({i, j});

  for (const auto& src : groups) {
    Representation<K> Ms = sum_of_modules(A, MU, src);
    for (const auto& dst : groups) {
      Representation<K> Md = sum_of_modules(A, MU, dst);
      std::vector<RepMorphism<K>> basis = hom_space(A, Ms, Md);
      if (basis.empty()) continue;
      std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
      for (const auto& c :
           stab_detail::coeff_sweeps(static_cast<int>(basis.size()),
                                     opts.sweep_samples, opts.seed)) {
        RepMorphism<K> f = morphism_combo(A, basis, c);
        auto kp = module_pieces(A, MU, kernel_of(A, Ms, Md, f).rep);
        auto cp = module_pieces(A, MU, cokernel_of(A, Ms, Md, f).rep);
        if (!kp || !cp) {
          ctx.scans_complete = false;
          continue;
        }
        if (seen.insert({*kp, *cp}).second)
          ctx.mod_map_scans.push_back({src, dst, *kp, *cp});
      }
    }
  }

  // --- module-side extension scans: candidate middles by dimension vector ---
  std::vector<std::vector<int>> cands;  // multisets of <= max_middle_pieces indices
  {
    std::vector<int> cur;
    // depth-first enumeration of multisets i1 <= i2 <= ... of bounded size
    std::vector<std::pair<int, std::vector<int>>> stack;  // (min index, chosen)
    stack.push_back({0, {}});
    while (!stack.empty()) {
      auto [lo, chosen] = stack.back();
      stack.pop_back();
      if (!chosen.empty()) cands.push_back(chosen);
      if (static_cast<int>(chosen.size()) >= opts.max_middle_pieces) continue;
      for (int i = lo; i < nm; ++i) {
        auto next = chosen;
        next.push_back(i);
        stack.push_back({i, next});
      }
    }
  }
  auto dims_sum = [&](const std::vector<int>& idx) {
    std::vector<int> d(A.num_vertices(), 0);
    for (int i : idx)
      for (int v = 0; v < A.num_vertices(); ++v) d[v] += MU.modules[i].dims[v];
    return d;
  };
  for (int sub = 0; sub < nm; ++sub) {
    for (int quot = 0; quot < nm; ++quot) {
      std::vector<int> want(A.num_vertices(), 0);
      for (int v = 0; v < A.num_vertices(); ++v)
        want[v] = MU.modules[sub].dims[v] + MU.modules[quot].dims[v];
      std::set<std::vector<int>> seen;
      for (const auto& cand : cands) {
        if (dims_sum(cand) != want) continue;
        Representation<K> E = sum_of_modules(A, MU, cand);
        std::vector<RepMorphism<K>> basis = hom_space(A, MU.modules[sub], E);
        if (basis.empty()) continue;
        for (const auto& c :
             stab_detail::coeff_sweeps(static_cast<int>(basis.size()),
                                       opts.sweep_samples, opts.seed)) {
          RepMorphism<K> g = morphism_combo(A, basis, c);
          if (!is_injective_morphism(g)) continue;
          Representation<K> Q = cokernel_of(A, MU.modules[sub], E, g).rep;
          if (Q.dims != MU.modules[quot].dims) continue;
          if (!is_isomorphic(A, Q, MU.modules[quot])) continue;
          std::vector<int> mid = sorted_unique(cand);
          if (seen.insert(mid).second)
            ctx.mod_ext_scans.push_back({sub, quot, mid});
          break;  // this candidate middle is realized; move on
        }
      }
    }
  }

  // --- complex-side conflation scans for beta: thirds of <= 2 summands ---
  for (int x = 0; x < nc; ++x) {
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    auto record = [&](const std::vector<int>& mid, const std::vector<int>& thr) {
      if (seen.insert({mid, thr}).second) ctx.beta_scans.push_back({x, mid, thr});
    };
    if (CT.shift_pieces[x])  // U_x >--> 0 -->> U_x[1]
      record({}, sorted_unique(*CT.shift_pieces[x]));
    // single thirds reuse the conflation tables directly
    for (int z = 0; z < nc; ++z)
      for (const auto& mid : CT.middles[x][z]) record(sorted_unique(mid), {z});
    // pair thirds: sweep joint extension classes of Z = U_z1 + U_z2
    const K one = A.one();
    const TwoTermComplex<K>& X = CU.objects[x];
    for (int z1 = 0; z1 < nc; ++z1) {
      for (int z2 = z1; z2 < nc; ++z2) {
        if (CT.ext_dims[z1][x] == 0 && CT.ext_dims[z2][x] == 0) continue;
        TwoTermComplex<K> Z =
            direct_sum_complex(A, CU.objects[z1], CU.objects[z2]);
        ExtK<K> E = ext_k(A, Z, X);
        if (E.dim == 0) continue;
        std::vector<int> third = sorted_unique({z1, z2});
        for (const auto& c :
             stab_detail::coeff_sweeps(E.dim, opts.sweep_samples, opts.seed)) {
          ElemMat<K> h = elem_zero_mat(A, static_cast<int>(X.v0.size()),
                                       static_cast<int>(Z.v1.size()));
          for (std::size_t b = 0; b < c.size(); ++b)
            if (c[b] != 0) h = elem_add(A, h, elem_scale(A, one * K(c[b]), E.reps[b]));
          TwoTermComplex<K> mid = extension_middle(A, X, Z, h);
          auto pieces = silt_detail::piece_list(decompose_against(A, mid, CU));
          if (!pieces) {
            ctx.scans_complete = false;
            continue;
          }
          record(sorted_unique(*pieces), third);
        }
      }
    }
  }

  return ctx;
}

// ---------------------------------------------------------------------------
// SubcategorySpec constructors.

template <class K>
SubcategorySpec cx_spec(const CorrContext<K>& ctx, std::vector<int> members) {
  return {SubcategorySpec::Ambient::complexes, corr_detail::sorted_unique(std::move(members)),
          ctx.CU.complete};
}

template <class K>
SubcategorySpec mod_spec(const CorrContext<K>& ctx, std::vector<int> members) {
  return {SubcategorySpec::Ambient::modules, corr_detail::sorted_unique(std::move(members)),
          ctx.MU.complete};
}

// ---------------------------------------------------------------------------
// Predicates.  Violations are decisive; clean scans are only as good as the
// universe, hence yes/unknown.

template <class K>
Verdict is_thick(const CorrContext<K>& ctx, const SubcategorySpec& S) {
  if (S.ambient != SubcategorySpec::Ambient::complexes)
    throw std::invalid_argument("is_thick expects a subcategory of complexes");
  ClosureResult R = thick_closure(ctx.CT, S.members);
  std::set<int> want(S.members.begin(), S.members.end());
  if (R.members != want) return Verdict::no;
  return R.exact ? Verdict::yes : Verdict::unknown;
}

template <class K>
Verdict is_wide(const CorrContext<K>& ctx, const SubcategorySpec& S) {
  if (S.ambient != SubcategorySpec::Ambient::modules)
    throw std::invalid_argument("is_wide expects a subcategory of modules");
  std::set<int> s(S.members.begin(), S.members.end());
  using corr_detail::subset_of;
  for (const auto& ms : ctx.mod_map_scans) {
    if (!subset_of(ms.src, s) || !subset_of(ms.dst, s)) continue;
    if (!subset_of(ms.ker, s) || !subset_of(ms.coker, s)) return Verdict::no;
  }
  for (const auto& es : ctx.mod_ext_scans) {
    if (!s.count(es.sub) || !s.count(es.quot)) continue;
    if (!subset_of(es.middle, s)) return Verdict::no;
  }
  return ctx.scans_complete ? Verdict::yes : Verdict::unknown;
}

template <class K>
Verdict is_torsion_class(const Algebra<K>& A, const CorrContext<K>& ctx,
                         const SubcategorySpec& S) {
  if (S.ambient != SubcategorySpec::Ambient::modules)
    throw std::invalid_argument("is_torsion_class expects a subcategory of modules");
  std::set<int> s(S.members.begin(), S.members.end());
  using corr_detail::subset_of;
  // extensions stay inside
  for (const auto& es : ctx.mod_ext_scans) {
    if (!s.count(es.sub) || !s.count(es.quot)) continue;
    if (!subset_of(es.middle, s)) return Verdict::no;
  }
  // quotient-closed: no outside module lies in Fac of the members
  std::vector<Representation<K>> gens;
  for (int i : S.members) gens.push_back(ctx.MU.modules[i]);
  if (!gens.empty())
    for (std::size_t j = 0; j < ctx.MU.modules.size(); ++j)
      if (!s.count(static_cast<int>(j)) && module_in_fac(A, gens, ctx.MU.modules[j]))
        return Verdict::no;
  return ctx.scans_complete ? Verdict::yes : Verdict::unknown;
}

template <class K>
Verdict is_resolving(const CorrContext<K>& ctx, const SubcategorySpec& S) {
  if (S.ambient != SubcategorySpec::Ambient::complexes)
    throw std::invalid_argument("is_resolving expects a subcategory of complexes");
  std::set<int> s(S.members.begin(), S.members.end());
  for (int p : ctx.proj_stalks)
    if (!s.count(p)) return Verdict::no;
  // closed under extensions and cocones (and summands, implicit in the tables)
  ClosureResult R = closure_saturate(ctx.CT, S.members, ClosureRules{true, false, true});
  if (R.members != s) return Verdict::no;
  return R.exact ? Verdict::yes : Verdict::unknown;
}

struct InjectivesReport {
  Verdict verdict = Verdict::no;
  std::vector<int> generators;  // a cone-closed presilting generator set
};

template <class K>
InjectivesReport has_enough_injectives(const CorrContext<K>& ctx, const SubcategorySpec& S) {
  InjectivesReport rep;
  if (is_thick(ctx, S) == Verdict::no) return rep;
  const auto& mem = S.members;
  const int n = static_cast<int>(mem.size());
  if (n > 20) throw std::invalid_argument("has_enough_injectives: subcategory too large");
  std::set<int> want(mem.begin(), mem.end());
  using corr_detail::subset_of;
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 0; m < (1u << n); ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  for (std::uint32_t m : masks) {
    std::vector<int> P;
    for (int b = 0; b < n; ++b)
      if (m & (1u << b)) P.push_back(mem[b]);
    if (!is_presilting(ctx.CT, P)) continue;
    std::set<int> ps(P.begin(), P.end());
    bool cone_closed = true;
    for (int i : P) {
      if (ctx.CT.shift_pieces[i] && !subset_of(*ctx.CT.shift_pieces[i], ps))
        cone_closed = false;
      for (int j : P)
        for (const auto& pieces : ctx.CT.cones[i][j])
          if (!subset_of(pieces, ps)) cone_closed = false;
    }
    if (!cone_closed) continue;
    if (thick_closure(ctx.CT, P).members != want) continue;
    rep.verdict = ctx.scans_complete ? Verdict::yes : Verdict::unknown;
    rep.generators = P;
    return rep;
  }
  rep.verdict = ctx.scans_complete ? Verdict::no : Verdict::unknown;
  return rep;
}

template <class K>
Verdict is_cotorsion_pair(const CorrContext<K>& ctx, const CotorsionPair& P) {
  const int n = static_cast<int>(ctx.CU.objects.size());
  std::set<int> xs(P.x_part.members.begin(), P.x_part.members.end());
  std::set<int> ys(P.y_part.members.begin(), P.y_part.members.end());
  for (int j = 0; j < n; ++j) {
    bool perp = true;
    for (int i : P.x_part.members)
      if (ctx.CT.ext_dims[i][j] != 0) perp = false;
    if (perp != (ys.count(j) != 0)) return Verdict::no;
  }
  for (int i = 0; i < n; ++i) {
    bool perp = true;
    for (int j : P.y_part.members)
      if (ctx.CT.ext_dims[i][j] != 0) perp = false;
    if (perp != (xs.count(i) != 0)) return Verdict::no;
  }
  return ctx.CU.complete ? Verdict::yes : Verdict::unknown;
}

// Complete when every universe object is a cone over Y-approximations and a
// cocone over X-approximations: the minimal right add(X)-approximation must
// be a deflation with cocone in Y, and dually.  Weak idempotent completeness
// makes the minimal approximation decisive: any deflation from add(X)
// factors through it, and a composite being a deflation forces the last leg
// to be one.
template <class K>
Verdict is_complete_cotorsion_pair(const Algebra<K>& A, const CorrContext<K>& ctx,
                                   const CotorsionPair& P) {
  Verdict base = is_cotorsion_pair(ctx, P);
  if (base == Verdict::no) return Verdict::no;
  std::set<int> xs(P.x_part.members.begin(), P.x_part.members.end());
  std::set<int> ys(P.y_part.members.begin(), P.y_part.members.end());
  const int n = static_cast<int>(ctx.CU.objects.size());
  for (int t = 0; t < n; ++t) {
    const TwoTermComplex<K>& T = ctx.CU.objects[t];
    auto right = silt_detail::min_right_data(A, ctx.CU, P.x_part.members, T);
    if (!is_deflation(A, right.f, right.u0, T)) return Verdict::no;
    TwoTermComplex<K> W = cocone_third(A, right.f, right.u0, T);
    auto wp = silt_detail::piece_list(decompose_against(A, W, ctx.CU));
    if (!wp) return Verdict::unknown;
    for (int p : *wp)
      if (!ys.count(p)) return Verdict::no;
    auto left = silt_detail::min_left_data(A, ctx.CU, P.y_part.members, T);
    if (!is_inflation(A, left.f, T, left.u0)) return Verdict::no;
    TwoTermComplex<K> C = cone_third(A, left.f, T, left.u0);
    auto cp = silt_detail::piece_list(decompose_against(A, C, ctx.CU));
    if (!cp) return Verdict::unknown;
    for (int p : *cp)
      if (!xs.count(p)) return Verdict::no;
  }
  return base;
}

// ---------------------------------------------------------------------------
// The correspondences.

// Xi: silting object U |-> (add(U)^vee, add(U)^wedge).
template <class K>
CotorsionPair xi(const CorrContext<K>& ctx, const std::vector<int>& silting_idx) {
  if (is_silting(ctx.CT, silting_idx) != Verdict::yes)
    throw std::invalid_argument("xi: the given object is not silting");
  ClosureResult X = closure_vee(ctx.CT, silting_idx);
  ClosureResult Y = closure_wedge(ctx.CT, silting_idx);
  CotorsionPair out;
  out.x_part = cx_spec(ctx, std::vector<int>(X.members.begin(), X.members.end()));
  out.y_part = cx_spec(ctx, std::vector<int>(Y.members.begin(), Y.members.end()));
  return out;
}

// Psi: complete cotorsion pair |-> basic silting object X cap Y.
template <class K>
std::vector<int> psi(const CorrContext<K>& ctx, const CotorsionPair& P) {
  std::vector<int> inter;
  std::set<int> ys(P.y_part.members.begin(), P.y_part.members.end());
  for (int i : P.x_part.members)
    if (ys.count(i)) inter.push_back(i);
  if (is_silting(ctx.CT, inter) != Verdict::yes)
    throw std::runtime_error(
        "psi: X cap Y is not a silting object (the pair is not a complete cotorsion pair)");
  return inter;
}

// hom-perpendicular inside the module universe.
template <class K>
std::vector<int> hom_perp(const CorrContext<K>& ctx, const std::vector<int>& T) {
  std::vector<int> out;
  for (std::size_t j = 0; j < ctx.MU.modules.size(); ++j) {
    bool perp = true;
    for (int i : T)
      if (ctx.mod_hom[i][static_cast<std::size_t>(j)] != 0) perp = false;
    if (perp) out.push_back(static_cast<int>(j));
  }
  return out;
}

// Phi: cotorsion pair (X, Y) |-> (H^0(Y), H^0(Y)^perp).
template <class K>
TorsionPair phi(const CorrContext<K>& ctx, const CotorsionPair& P) {
  if (is_cotorsion_pair(ctx, P) == Verdict::no)
    throw std::invalid_argument("phi: not a cotorsion pair over this universe");
  std::vector<int> t;
  for (int y : P.y_part.members)
    for (int m : ctx.h0_pieces[y]) t.push_back(m);
  t = corr_detail::sorted_unique(t);
  TorsionPair out;
  out.t_part = mod_spec(ctx, t);
  out.f_part = mod_spec(ctx, hom_perp(ctx, t));
  return out;
}

// Fac of a set of generators, inside the module universe.
template <class K>
std::vector<int> fac_spec(const Algebra<K>& A, const CorrContext<K>& ctx,
                          const std::vector<int>& gens) {
  std::vector<Representation<K>> G;
  for (int i : gens) G.push_back(ctx.MU.modules[i]);
  std::vector<int> out;
  if (G.empty()) return out;
  for (std::size_t j = 0; j < ctx.MU.modules.size(); ++j)
    if (module_in_fac(A, G, ctx.MU.modules[j])) out.push_back(static_cast<int>(j));
  return out;
}

// vartheta: support tau-tilting module M |-> (Fac M, M^perp).
template <class K>
TorsionPair vartheta(const Algebra<K>& A, const CorrContext<K>& ctx,
                     const std::vector<int>& gens) {
  std::vector<int> t = fac_spec(A, ctx, gens);
  TorsionPair out;
  out.t_part = mod_spec(ctx, t);
  out.f_part = mod_spec(ctx, hom_perp(ctx, t));
  return out;
}

// Theta: functorially finite torsion pair |-> (perp Z, Z), Z = (H^0)^{-1}(T).
template <class K>
CotorsionPair theta_map(const Algebra<K>& A, const CorrContext<K>& ctx,
                        const TorsionPair& TP) {
  if (is_torsion_class(A, ctx, TP.t_part) == Verdict::no)
    throw std::invalid_argument("theta_map: the given class is not a torsion class");
  if (TP.f_part.members != hom_perp(ctx, TP.t_part.members))
    throw std::invalid_argument("theta_map: the free part is not the perpendicular of T");
  // functorial finiteness: T must be generated by its own members
  if (fac_spec(A, ctx, TP.t_part.members) != TP.t_part.members)
    throw std::invalid_argument(
        "theta_map: the torsion class is not Fac of a universe module (not functorially finite)");
  std::set<int> ts(TP.t_part.members.begin(), TP.t_part.members.end());
  std::vector<int> Z;
  const int n = static_cast<int>(ctx.CU.objects.size());
  for (int i = 0; i < n; ++i) {
    bool h0_in = true;
    for (int m : ctx.h0_pieces[i])
      if (!ts.count(m)) h0_in = false;
    if (h0_in) Z.push_back(i);
  }
  std::vector<int> X;
  for (int i = 0; i < n; ++i) {
    bool perp = true;
    for (int z : Z)
      if (ctx.CT.ext_dims[i][z] != 0) perp = false;
    if (perp) X.push_back(i);
  }
  CotorsionPair out;
  out.x_part = cx_spec(ctx, X);
  out.y_part = cx_spec(ctx, Z);
  return out;
}

// beta: resolving subcategory |-> its largest thick subcategory: the objects
// x whose every conflation x >--> X' -->> X'' with X' in the class keeps the
// third term in the class.
template <class K>
SubcategorySpec beta_map(const CorrContext<K>& ctx, const SubcategorySpec& S) {
  if (is_resolving(ctx, S) == Verdict::no)
    throw std::invalid_argument("beta_map: input subcategory is not resolving");
  std::set<int> s(S.members.begin(), S.members.end());
  using corr_detail::subset_of;
  std::vector<int> out;
  for (int x : S.members) {
    bool ok = true;
    for (const auto& bs : ctx.beta_scans) {
      if (bs.x != x) continue;
      if (!subset_of(bs.middle, s)) continue;
      if (!subset_of(bs.third, s)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return cx_spec(ctx, out);
}

// iota: extension-closed subcategory containing 0 |-> objects admitting an
// inflation into it.  By weak idempotent completeness an inflation into
// add(C) exists iff the minimal left approximation is one.
template <class K>
SubcategorySpec iota_map(const Algebra<K>& A, const CorrContext<K>& ctx,
                         const SubcategorySpec& S) {
  std::set<int> s(S.members.begin(), S.members.end());
  using corr_detail::subset_of;
  for (int i : S.members)
    for (int j : S.members)
      for (const auto& pieces : ctx.CT.middles[i][j])
        if (!subset_of(pieces, s))
          throw std::invalid_argument("iota_map: input subcategory is not extension-closed");
  std::vector<int> out;
  const int n = static_cast<int>(ctx.CU.objects.size());
  for (int x = 0; x < n; ++x) {
    auto data = silt_detail::min_left_data(A, ctx.CU, S.members, ctx.CU.objects[x]);
    if (is_inflation(A, data.f, ctx.CU.objects[x], data.u0)) out.push_back(x);
  }
  return cx_spec(ctx, out);
}

// alpha: torsion class |-> its wide heart: members M such that every swept
// morphism from the class into M has kernel in the class.
template <class K>
SubcategorySpec alpha_map(const Algebra<K>& A, const CorrContext<K>& ctx,
                          const SubcategorySpec& T) {
  if (is_torsion_class(A, ctx, T) == Verdict::no)
    throw std::invalid_argument("alpha_map: input is not a torsion class");
  std::set<int> s(T.members.begin(), T.members.end());
  using corr_detail::subset_of;
  std::vector<int> out;
  for (int m : T.members) {
    bool ok = true;
    for (const auto& ms : ctx.mod_map_scans) {
      if (ms.dst.size() != 1 || ms.dst[0] != m) continue;
      if (!subset_of(ms.src, s)) continue;
      if (!subset_of(ms.ker, s)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(m);
  }
  return mod_spec(ctx, out);
}

// thick(U_rho): the thick closure of the shifted half of a silting object.
template <class K>
SubcategorySpec thick_of_rho(const Algebra<K>& A, const CorrContext<K>& ctx,
                             const std::vector<int>& silting_idx) {
  LambdaRhoSplit<K> sp = split_lambda_rho(A, ctx.CU, silting_idx);
  ClosureResult R = thick_closure(ctx.CT, sp.u_rho);
  return cx_spec(ctx, std::vector<int>(R.members.begin(), R.members.end()));
}

// ---------------------------------------------------------------------------
// Closure generators used by the property suites.

template <class K>
std::vector<int> wide_closure(const CorrContext<K>& ctx, const std::vector<int>& seed) {
  std::set<int> s(seed.begin(), seed.end());
  using corr_detail::subset_of;
  bool changed = true;
  while (changed) {
    changed = false;
    auto absorb = [&](const std::vector<int>& pieces) {
      for (int p : pieces)
        if (s.insert(p).second) changed = true;
    };
    for (const auto& ms : ctx.mod_map_scans) {
      if (!subset_of(ms.src, s) || !subset_of(ms.dst, s)) continue;
      absorb(ms.ker);
      absorb(ms.coker);
    }
    for (const auto& es : ctx.mod_ext_scans) {
      if (!s.count(es.sub) || !s.count(es.quot)) continue;
      absorb(es.middle);
    }
  }
  return std::vector<int>(s.begin(), s.end());
}

template <class K>
SubcategorySpec resolving_closure(const CorrContext<K>& ctx, std::vector<int> seed) {
  for (int p : ctx.proj_stalks) seed.push_back(p);
  ClosureResult R = closure_saturate(ctx.CT, seed, ClosureRules{true, false, true});
  return cx_spec(ctx, std::vector<int>(R.members.begin(), R.members.end()));
}

template <class K>
SubcategorySpec extension_closure(const CorrContext<K>& ctx, const std::vector<int>& seed) {
  ClosureResult R = closure_saturate(ctx.CT, seed, ClosureRules{true, false, false});
  return cx_spec(ctx, std::vector<int>(R.members.begin(), R.members.end()));
}

// ---------------------------------------------------------------------------
// Commutativity of the main diagram, edge by edge, object by object.

struct DiagramRow {
  std::vector<int> silting;
  bool phi_xi_matches_vartheta_h0 = false;   // Phi(Xi(U)) = vartheta(H^0 U)
  bool beta_xi_matches_thick_rho = false;    // beta(Xi(U).x) = thick(U_rho)
  bool wide_thick_matches_alpha_fac = false; // W(thick(U_rho)) = alpha(Fac H^0 U)
};

struct DiagramReport {
  std::vector<DiagramRow> rows;
  bool all_pass = true;
};

template <class K>
DiagramReport verify_main_diagram(const Algebra<K>& A, const CorrContext<K>& ctx,
                                  const SiltingEnumeration& silt) {
  DiagramReport rep;
  for (const auto& U : silt.objects) {
    DiagramRow row;
    row.silting = U;

    CotorsionPair cp = xi(ctx, U);
    std::vector<int> h0;
    for (int u : U)
      for (int m : ctx.h0_pieces[u]) h0.push_back(m);
    h0 = corr_detail::sorted_unique(h0);

    TorsionPair left = phi(ctx, cp);
    TorsionPair right = vartheta(A, ctx, h0);
    row.phi_xi_matches_vartheta_h0 = (left == right);

    SubcategorySpec thick = thick_of_rho(A, ctx, U);
    row.beta_xi_matches_thick_rho = (beta_map(ctx, cp.x_part) == thick);

    std::vector<TwoTermComplex<K>> thick_objs;
    for (int i : thick.members) thick_objs.push_back(ctx.CU.objects[i]);
    std::vector<int> wide = script_W(A, ctx.MU, thick_objs);
    SubcategorySpec alpha = alpha_map(A, ctx, right.t_part);
    row.wide_thick_matches_alpha_fac = (wide == alpha.members);

    rep.all_pass = rep.all_pass && row.phi_xi_matches_vartheta_h0 &&
                   row.beta_xi_matches_thick_rho && row.wide_thick_matches_alpha_fac;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace siltlab
