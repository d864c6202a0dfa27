#pragma once

// Two-term complexes of finitely generated projectives X^{-1} -> X^0 over a
// bound quiver algebra, up to homotopy.  The differential is a matrix of
// algebra elements: d[r][c] lies in e_{v1[c]} Lambda e_{v0[r]} =
// Hom(P_{v1[c]}, P_{v0[r]}), acting by right multiplication.
//
// The category carries conflations X >--> Y -->> Z: a chain map f is an
// inflation iff (f^{-1}; d_X) : X^{-1} -> Y^{-1} (+) X^0 splits off, a
// deflation iff (f^0; d_Y) : X^0 (+) Y^{-1} -> Y^0 splits onto, and the
// missing third term of a conflation is the minimized (co)cone.  Extensions
// are computed as E(X, Y) = Hom(X^{-1}, Y^0) / (d_Y . Hom(X^{-1}, Y^{-1}) +
// Hom(X^0, Y^0) . d_X).

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "siltlab/algebra.hpp"
#include "siltlab/matrix.hpp"
#include "siltlab/rep_decomp.hpp"
#include "siltlab/rep_ops.hpp"
#include "siltlab/representation.hpp"

namespace siltlab {

template <class K>
using ElemMat = std::vector<std::vector<AlgElem<K>>>;  // [target summand][source summand]

template <class K>
struct TwoTermComplex {
  std::vector<int> v1, v0;  // vertices of the projective summands in degrees -1, 0
  ElemMat<K> d;             // d[r][c] in e_{v1[c]} Lambda e_{v0[r]}
};

// ---------------------------------------------------------------------------
// Element-matrix utilities.

template <class K>
ElemMat<K> elem_zero_mat(const Algebra<K>& A, std::size_t rows, std::size_t cols) {
  return ElemMat<K>(rows, std::vector<AlgElem<K>>(cols, A.zero_elem()));
}

template <class K>
ElemMat<K> elem_identity_mat(const Algebra<K>& A, const std::vector<int>& verts) {
  ElemMat<K> m = elem_zero_mat(A, verts.size(), verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) m[i][i] = A.unit(verts[i]);
  return m;
}

template <class K>
bool elem_mat_is_zero(const ElemMat<K>& m) {
  for (const auto& row : m)
    for (const AlgElem<K>& x : row)
      if (!x.is_zero()) return false;
  return true;
}

// first f : S -> M, then g : M -> T; result[t][s] = sum_m f[m][s] * g[t][m].
// Sizes are passed explicitly because an empty middle loses the shape.
template <class K>
ElemMat<K> elem_compose(const Algebra<K>& A, const ElemMat<K>& f, const ElemMat<K>& g,
                        std::size_t n_src, std::size_t n_mid, std::size_t n_dst) {
  if (f.size() != n_mid || g.size() != n_dst)
    throw std::logic_error("elem_compose: shape mismatch");
  ElemMat<K> r = elem_zero_mat(A, n_dst, n_src);
  for (std::size_t t = 0; t < n_dst; ++t)
    for (std::size_t s = 0; s < n_src; ++s)
      for (std::size_t m = 0; m < n_mid; ++m)
        r[t][s] = A.add(r[t][s], A.mul(f[m][s], g[t][m]));
  return r;
}

template <class K>
ElemMat<K> elem_add(const Algebra<K>& A, const ElemMat<K>& f, const ElemMat<K>& g) {
  ElemMat<K> r = f;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] = A.add(f[i][j], g[i][j]);
  return r;
}

template <class K>
ElemMat<K> elem_scale(const Algebra<K>& A, const K& c, const ElemMat<K>& f) {
  ElemMat<K> r = f;
  for (auto& row : r)
    for (AlgElem<K>& x : row) x = A.scale(c, x);
  return r;
}

// ---------------------------------------------------------------------------
// Builders.

template <class K>
TwoTermComplex<K> zero_complex() {
  return TwoTermComplex<K>{};
}

template <class K>
bool complex_is_zero(const TwoTermComplex<K>& X) {
  return X.v1.empty() && X.v0.empty();
}

// 0 -> P_v, the stalk of a projective in degree zero.
template <class K>
TwoTermComplex<K> proj_complex(const Algebra<K>& A, int v) {
  (void)A;
  TwoTermComplex<K> X;
  X.v0 = {v};
  X.d = {std::vector<AlgElem<K>>{}};
  return X;
}

// P_v -> 0, the shifted projective P_v[1].
template <class K>
TwoTermComplex<K> shifted_proj_complex(const Algebra<K>& A, int v) {
  (void)A;
  TwoTermComplex<K> X;
  X.v1 = {v};
  return X;
}

// 0 -> Lambda (one copy of every indecomposable projective).
template <class K>
TwoTermComplex<K> lambda_complex(const Algebra<K>& A) {
  TwoTermComplex<K> X;
  for (int v = 0; v < A.num_vertices(); ++v) X.v0.push_back(v);
  X.d.assign(X.v0.size(), std::vector<AlgElem<K>>{});
  return X;
}

template <class K>
TwoTermComplex<K> lambda_shift_complex(const Algebra<K>& A) {
  TwoTermComplex<K> X;
  for (int v = 0; v < A.num_vertices(); ++v) X.v1.push_back(v);
  return X;
}

// The minimal projective presentation of a module, viewed as a complex.
template <class K>
TwoTermComplex<K> presentation_complex(const Algebra<K>& A, const Representation<K>& M) {
  MinPresentation<K> p = minimal_presentation(A, M);
  TwoTermComplex<K> X;
  X.v1 = p.p1.verts;
  X.v0 = p.p0.verts;
  X.d = p.d;
  return X;
}

template <class K>
TwoTermComplex<K> direct_sum_complex(const Algebra<K>& A, const TwoTermComplex<K>& X,
                                     const TwoTermComplex<K>& Y) {
  TwoTermComplex<K> Z;
  Z.v1 = X.v1;
  Z.v1.insert(Z.v1.end(), Y.v1.begin(), Y.v1.end());
  Z.v0 = X.v0;
  Z.v0.insert(Z.v0.end(), Y.v0.begin(), Y.v0.end());
  Z.d = elem_zero_mat(A, Z.v0.size(), Z.v1.size());
  for (std::size_t r = 0; r < X.v0.size(); ++r)
    for (std::size_t c = 0; c < X.v1.size(); ++c) Z.d[r][c] = X.d[r][c];
  for (std::size_t r = 0; r < Y.v0.size(); ++r)
    for (std::size_t c = 0; c < Y.v1.size(); ++c)
      Z.d[X.v0.size() + r][X.v1.size() + c] = Y.d[r][c];
  return Z;
}

template <class K>
TwoTermComplex<K> direct_sum_complex(const Algebra<K>& A,
                                     const std::vector<TwoTermComplex<K>>& parts) {
  TwoTermComplex<K> Z = zero_complex<K>();
  for (const auto& p : parts) Z = direct_sum_complex(A, Z, p);
  return Z;
}

// Class in K_0(proj): [X] = [X^0] - [X^{-1}] on the basis of the P_v.
template <class K>
std::vector<int> g_vector(const Algebra<K>& A, const TwoTermComplex<K>& X) {
  std::vector<int> g(A.num_vertices(), 0);
  for (int v : X.v0) ++g[v];
  for (int v : X.v1) --g[v];
  return g;
}

// <[X], [M]> = dim Hom(X^0, M) - dim Hom(X^{-1}, M) = sum_v g_v dim M_v.
template <class K>
int euler_pairing(const Algebra<K>& A, const TwoTermComplex<K>& X,
                  const Representation<K>& M) {
  std::vector<int> g = g_vector(A, X);
  int s = 0;
  for (int v = 0; v < A.num_vertices(); ++v) s += g[v] * M.dims[v];
  return s;
}

// ---------------------------------------------------------------------------
// Word-coordinate bases for Hom((+)P_{src[c]}, (+)P_{dst[r]}).

namespace tt_detail {

template <class K>
struct PairBasis {
  std::vector<int> src, dst;
  std::vector<std::vector<std::vector<int>>> words;  // words[r][c]: src[c] -> dst[r]
  std::vector<std::vector<int>> off;                 // off[r][c]
  int total = 0;
};

template <class K>
PairBasis<K> build_pair_basis(const Algebra<K>& A, const std::vector<int>& src,
                              const std::vector<int>& dst) {
  PairBasis<K> pb;
  pb.src = src;
  pb.dst = dst;
  pb.words.assign(dst.size(), std::vector<std::vector<int>>(src.size()));
  pb.off.assign(dst.size(), std::vector<int>(src.size(), 0));
  for (std::size_t r = 0; r < dst.size(); ++r)
    for (std::size_t c = 0; c < src.size(); ++c) {
      pb.off[r][c] = pb.total;
      pb.words[r][c] = A.words_from_to(src[c], dst[r]);
      pb.total += static_cast<int>(pb.words[r][c].size());
    }
  return pb;
}

template <class K>
std::vector<K> mat_to_vec(const Algebra<K>& A, const PairBasis<K>& pb, const ElemMat<K>& m) {
  std::vector<K> v(pb.total, K(0));
  (void)A;
  for (std::size_t r = 0; r < pb.dst.size(); ++r)
    for (std::size_t c = 0; c < pb.src.size(); ++c)
      for (std::size_t k = 0; k < pb.words[r][c].size(); ++k)
        v[pb.off[r][c] + k] = m[r][c].c[pb.words[r][c][k]];
  return v;
}

template <class K>
ElemMat<K> vec_to_mat(const Algebra<K>& A, const PairBasis<K>& pb, const std::vector<K>& v) {
  ElemMat<K> m = elem_zero_mat(A, pb.dst.size(), pb.src.size());
  for (std::size_t r = 0; r < pb.dst.size(); ++r)
    for (std::size_t c = 0; c < pb.src.size(); ++c)
      for (std::size_t k = 0; k < pb.words[r][c].size(); ++k)
        m[r][c].c[pb.words[r][c][k]] = v[pb.off[r][c] + k];
  return m;
}

// Scatter the coordinates of an algebra element into the rows of a linear
// system: row index = equation coordinate (R, C, word), restricted to the
// words from src[C] to dst[R].
template <class K>
void scatter(const PairBasis<K>& eq, std::size_t R, std::size_t C, const AlgElem<K>& prod,
             Matrix<K>& sys, int col, bool negate) {
  for (std::size_t k = 0; k < eq.words[R][C].size(); ++k) {
    const K& coef = prod.c[eq.words[R][C][k]];
    if (coef.is_zero()) continue;
    if (negate)
      sys.at(eq.off[R][C] + static_cast<int>(k), col) -= coef;
    else
      sys.at(eq.off[R][C] + static_cast<int>(k), col) += coef;
  }
}

}  // namespace tt_detail

// ---------------------------------------------------------------------------
// Bridges between element matrices and module morphisms of projective sums.

// The module morphism (+)_c P_{src.verts[c]} -> (+)_r P_{dst.verts[r]} acting
// by right multiplication with the element matrix.
template <class K>
RepMorphism<K> elem_to_morphism(const Algebra<K>& A, const ProjSum<K>& src,
                                const ProjSum<K>& dst, const ElemMat<K>& m) {
  std::vector<std::vector<K>> gens;
  for (std::size_t c = 0; c < src.verts.size(); ++c) {
    int u = src.verts[c];
    std::vector<K> g(dst.rep.dims[u], K(0));
    for (std::size_t r = 0; r < dst.verts.size(); ++r)
      for (std::size_t k = 0; k < dst.words[r][u].size(); ++k)
        g[dst.offset[r][u] + k] = m[r][c].c[dst.words[r][u][k]];
    gens.push_back(std::move(g));
  }
  return proj_sum_hom(A, src, dst.rep, gens);
}

// Read an element matrix back off a module morphism between projective sums
// (the image of each generator determines the entries).
template <class K>
ElemMat<K> read_elem_mat(const Algebra<K>& A, const ProjSum<K>& src, const ProjSum<K>& dst,
                         const RepMorphism<K>& f) {
  ElemMat<K> m = elem_zero_mat(A, dst.verts.size(), src.verts.size());
  for (std::size_t c = 0; c < src.verts.size(); ++c) {
    int u = src.verts[c];
    int triv = A.trivial_word_index(u);
    int pos = -1;
    for (std::size_t k = 0; k < src.words[c][u].size(); ++k)
      if (src.words[c][u][k] == triv) {
        pos = src.offset[c][u] + static_cast<int>(k);
        break;
      }
    if (pos < 0) throw std::logic_error("read_elem_mat: trivial word missing");
    std::vector<K> img = f.at[u].column_vector(pos);
    for (std::size_t r = 0; r < dst.verts.size(); ++r) {
      AlgElem<K> w = A.zero_elem();
      for (std::size_t k = 0; k < dst.words[r][u].size(); ++k)
        w.c[dst.words[r][u][k]] = img[dst.offset[r][u] + static_cast<int>(k)];
      m[r][c] = std::move(w);
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Minimization: strip contractible summands P_v --iso--> P_v.

// x in e_v Lambda e_v is a unit iff its coefficient on the trivial word is
// nonzero; the radical part is nilpotent, so the inverse is a geometric series.
template <class K>
bool local_unit(const Algebra<K>& A, const AlgElem<K>& x, int v) {
  return !x.c[A.trivial_word_index(v)].is_zero();
}

template <class K>
AlgElem<K> local_inverse(const Algebra<K>& A, const AlgElem<K>& x, int v) {
  K c = x.c[A.trivial_word_index(v)];
  if (c.is_zero()) throw std::logic_error("local_inverse: not a unit");
  K cinv = c.inverse();
  AlgElem<K> e = A.unit(v);
  AlgElem<K> m = A.sub(e, A.scale(cinv, x));  // radical part of cinv*x
  AlgElem<K> acc = e, pw = e;
  for (int k = 1; k < A.nilpotency_index(); ++k) {
    pw = A.mul(pw, m);
    if (pw.is_zero()) break;
    acc = A.add(acc, pw);
  }
  return A.scale(cinv, acc);
}

template <class K>
bool is_minimal_complex(const Algebra<K>& A, const TwoTermComplex<K>& X) {
  for (std::size_t r = 0; r < X.v0.size(); ++r)
    for (std::size_t c = 0; c < X.v1.size(); ++c)
      if (X.v1[c] == X.v0[r] && local_unit(A, X.d[r][c], X.v1[c])) return false;
  return true;
}

template <class K>
TwoTermComplex<K> minimize_complex(const Algebra<K>& A, TwoTermComplex<K> X) {
  for (;;) {
    int pr = -1, pc = -1;
    for (std::size_t r = 0; r < X.v0.size() && pr < 0; ++r)
      for (std::size_t c = 0; c < X.v1.size(); ++c)
        if (X.v1[c] == X.v0[r] && local_unit(A, X.d[r][c], X.v1[c])) {
          pr = static_cast<int>(r);
          pc = static_cast<int>(c);
          break;
        }
    if (pr < 0) break;
    int v = X.v1[pc];
    AlgElem<K> uinv = local_inverse(A, X.d[pr][pc], v);
    // Source base change clears the pivot row away from the pivot column.
    for (std::size_t c = 0; c < X.v1.size(); ++c) {
      if (static_cast<int>(c) == pc) continue;
      AlgElem<K> alpha = A.mul(X.d[pr][c], uinv);
      if (alpha.is_zero()) continue;
      for (std::size_t r = 0; r < X.v0.size(); ++r)
        X.d[r][c] = A.sub(X.d[r][c], A.mul(alpha, X.d[r][pc]));
    }
    // Target base change clears the pivot column.
    for (std::size_t r = 0; r < X.v0.size(); ++r) {
      if (static_cast<int>(r) == pr) continue;
      AlgElem<K> beta = A.mul(uinv, X.d[r][pc]);
      if (beta.is_zero()) continue;
      for (std::size_t c = 0; c < X.v1.size(); ++c)
        X.d[r][c] = A.sub(X.d[r][c], A.mul(X.d[pr][c], beta));
    }
    // Drop the contractible pair.
    TwoTermComplex<K> Y;
    for (std::size_t c = 0; c < X.v1.size(); ++c)
      if (static_cast<int>(c) != pc) Y.v1.push_back(X.v1[c]);
    for (std::size_t r = 0; r < X.v0.size(); ++r)
      if (static_cast<int>(r) != pr) Y.v0.push_back(X.v0[r]);
    Y.d = elem_zero_mat(A, Y.v0.size(), Y.v1.size());
    for (std::size_t r = 0, rr = 0; r < X.v0.size(); ++r) {
      if (static_cast<int>(r) == pr) continue;
      for (std::size_t c = 0, cc = 0; c < X.v1.size(); ++c) {
        if (static_cast<int>(c) == pc) continue;
        Y.d[rr][cc++] = X.d[r][c];
      }
      ++rr;
    }
    X = std::move(Y);
  }
  return X;
}

// ---------------------------------------------------------------------------
// Chain maps, homotopy, Hom_K and E = Ext^1.

template <class K>
struct StrictMap {
  ElemMat<K> f1, f0;  // degree -1 and degree 0 components
};

template <class K>
StrictMap<K> strict_identity(const Algebra<K>& A, const TwoTermComplex<K>& X) {
  return StrictMap<K>{elem_identity_mat(A, X.v1), elem_identity_mat(A, X.v0)};
}

// first f : X -> Y, then g : Y -> Z.
template <class K>
StrictMap<K> strict_compose(const Algebra<K>& A, const StrictMap<K>& f, const StrictMap<K>& g,
                            const TwoTermComplex<K>& X, const TwoTermComplex<K>& Y,
                            const TwoTermComplex<K>& Z) {
  return StrictMap<K>{
      elem_compose(A, f.f1, g.f1, X.v1.size(), Y.v1.size(), Z.v1.size()),
      elem_compose(A, f.f0, g.f0, X.v0.size(), Y.v0.size(), Z.v0.size())};
}

template <class K>
StrictMap<K> strict_add(const Algebra<K>& A, const StrictMap<K>& f, const StrictMap<K>& g) {
  return StrictMap<K>{elem_add(A, f.f1, g.f1), elem_add(A, f.f0, g.f0)};
}

template <class K>
StrictMap<K> strict_scale(const Algebra<K>& A, const K& c, const StrictMap<K>& f) {
  return StrictMap<K>{elem_scale(A, c, f.f1), elem_scale(A, c, f.f0)};
}

template <class K>
bool is_chain_map(const Algebra<K>& A, const StrictMap<K>& f, const TwoTermComplex<K>& X,
                  const TwoTermComplex<K>& Y) {
  ElemMat<K> lhs = elem_compose(A, X.d, f.f0, X.v1.size(), X.v0.size(), Y.v0.size());
  ElemMat<K> rhs = elem_compose(A, f.f1, Y.d, X.v1.size(), Y.v1.size(), Y.v0.size());
  for (std::size_t r = 0; r < lhs.size(); ++r)
    for (std::size_t c = 0; c < lhs[r].size(); ++c)
      if (!(lhs[r][c] == rhs[r][c])) return false;
  return true;
}

namespace tt_detail {

// Coordinates of all chain maps X -> Y: the kernel of the commutation system
// on [f1-words | f0-words].
template <class K>
struct ChainMapSystem {
  PairBasis<K> pb1, pb0;                  // f1, f0 coordinates
  PairBasis<K> eq;                        // equations live in Hom(X^{-1}, Y^0)
  std::vector<std::vector<K>> chain_vecs; // kernel basis
};

template <class K>
ChainMapSystem<K> chain_map_system(const Algebra<K>& A, const TwoTermComplex<K>& X,
                                   const TwoTermComplex<K>& Y) {
  ChainMapSystem<K> S;
  S.pb1 = build_pair_basis(A, X.v1, Y.v1);
  S.pb0 = build_pair_basis(A, X.v0, Y.v0);
  S.eq = build_pair_basis(A, X.v1, Y.v0);
  Matrix<K> sys(S.eq.total, S.pb1.total + S.pb0.total);
  // (d_X then f0) - (f1 then d_Y) = 0, entrywise on words X.v1[C] -> Y.v0[R].
  for (std::size_t R = 0; R < Y.v0.size(); ++R)
    for (std::size_t C = 0; C < X.v1.size(); ++C) {
      for (std::size_t m = 0; m < X.v0.size(); ++m)
        for (std::size_t k = 0; k < S.pb0.words[R][m].size(); ++k) {
          AlgElem<K> prod = A.mul(X.d[m][C], A.from_word(S.pb0.words[R][m][k]));
          scatter(S.eq, R, C, prod, sys, S.pb1.total + S.pb0.off[R][m] + static_cast<int>(k),
                  false);
        }
      for (std::size_t r = 0; r < Y.v1.size(); ++r)
        for (std::size_t k = 0; k < S.pb1.words[r][C].size(); ++k) {
          AlgElem<K> prod = A.mul(A.from_word(S.pb1.words[r][C][k]), Y.d[R][r]);
          scatter(S.eq, R, C, prod, sys, S.pb1.off[r][C] + static_cast<int>(k), true);
        }
    }
  S.chain_vecs = kernel_basis(sys);
  return S;
}

// Coordinates (in the same [f1 | f0] space) of the null-homotopic maps
// f0 = h then d_Y, f1 = d_X then h for h : X^0 -> Y^{-1}.
template <class K>
std::vector<std::vector<K>> null_homotopic_vecs(const Algebra<K>& A, const TwoTermComplex<K>& X,
                                                const TwoTermComplex<K>& Y,
                                                const PairBasis<K>& pb1,
                                                const PairBasis<K>& pb0) {
  PairBasis<K> pbh = build_pair_basis(A, X.v0, Y.v1);
  std::vector<std::vector<K>> out;
  for (std::size_t rh = 0; rh < Y.v1.size(); ++rh)
    for (std::size_t mh = 0; mh < X.v0.size(); ++mh)
      for (std::size_t kh = 0; kh < pbh.words[rh][mh].size(); ++kh) {
        ElemMat<K> h = elem_zero_mat(A, Y.v1.size(), X.v0.size());
        h[rh][mh] = A.from_word(pbh.words[rh][mh][kh]);
        ElemMat<K> f0 = elem_compose(A, h, Y.d, X.v0.size(), Y.v1.size(), Y.v0.size());
        ElemMat<K> f1 = elem_compose(A, X.d, h, X.v1.size(), X.v0.size(), Y.v1.size());
        std::vector<K> v = mat_to_vec(A, pb1, f1);
        std::vector<K> v0 = mat_to_vec(A, pb0, f0);
        v.insert(v.end(), v0.begin(), v0.end());
        out.push_back(std::move(v));
      }
  return out;
}

template <class K>
StrictMap<K> vec_to_strict(const Algebra<K>& A, const PairBasis<K>& pb1, const PairBasis<K>& pb0,
                           const std::vector<K>& v) {
  std::vector<K> a(v.begin(), v.begin() + pb1.total);
  std::vector<K> b(v.begin() + pb1.total, v.end());
  return StrictMap<K>{vec_to_mat(A, pb1, a), vec_to_mat(A, pb0, b)};
}

}  // namespace tt_detail

template <class K>
struct HomK {
  std::vector<StrictMap<K>> reps;  // strict representatives of a basis mod homotopy
  int chain_dim = 0;               // dimension of the space of chain maps
  int dim = 0;                     // dim Hom_K(X, Y)
};

template <class K>
HomK<K> hom_k(const Algebra<K>& A, const TwoTermComplex<K>& X, const TwoTermComplex<K>& Y) {
  auto S = tt_detail::chain_map_system(A, X, Y);
  auto nulls = tt_detail::null_homotopic_vecs(A, X, Y, S.pb1, S.pb0);
  HomK<K> H;
  H.chain_dim = static_cast<int>(S.chain_vecs.size());
  int total = S.pb1.total + S.pb0.total;
  Matrix<K> cat(total, static_cast<int>(nulls.size() + S.chain_vecs.size()));
  for (std::size_t j = 0; j < nulls.size(); ++j)
    for (int i = 0; i < total; ++i) cat.at(i, static_cast<int>(j)) = nulls[j][i];
  for (std::size_t j = 0; j < S.chain_vecs.size(); ++j)
    for (int i = 0; i < total; ++i)
      cat.at(i, static_cast<int>(nulls.size() + j)) = S.chain_vecs[j][i];
  Rref<K> r = rref(cat);
  for (int pc : r.pivot_cols)
    if (pc >= static_cast<int>(nulls.size())) {
      const std::vector<K>& v = S.chain_vecs[pc - nulls.size()];
      H.reps.push_back(tt_detail::vec_to_strict(A, S.pb1, S.pb0, v));
      ++H.dim;
    }
  return H;
}

template <class K>
int hom_k_dim(const Algebra<K>& A, const TwoTermComplex<K>& X, const TwoTermComplex<K>& Y) {
  auto S = tt_detail::chain_map_system(A, X, Y);
  auto nulls = tt_detail::null_homotopic_vecs(A, X, Y, S.pb1, S.pb0);
  int total = S.pb1.total + S.pb0.total;
  Matrix<K> nm(total, static_cast<int>(nulls.size()));
  for (std::size_t j = 0; j < nulls.size(); ++j)
    for (int i = 0; i < total; ++i) nm.at(i, static_cast<int>(j)) = nulls[j][i];
  return static_cast<int>(S.chain_vecs.size()) - rank(nm);
}

// E(X, Y): classes of maps X^{-1} -> Y^0 modulo maps factoring through the
// differentials.  Representatives are single basis words.
template <class K>
struct ExtK {
  std::vector<ElemMat<K>> reps;  // each an element matrix X.v1 -> Y.v0
  int dim = 0;
};

template <class K>
ExtK<K> ext_k(const Algebra<K>& A, const TwoTermComplex<K>& X, const TwoTermComplex<K>& Y) {
  using namespace tt_detail;
  PairBasis<K> amb = build_pair_basis<K>(A, X.v1, Y.v0);
  std::vector<std::vector<K>> image;
  // s : X^{-1} -> Y^{-1} contributes s then d_Y.
  PairBasis<K> pbs = build_pair_basis<K>(A, X.v1, Y.v1);
  for (std::size_t r = 0; r < Y.v1.size(); ++r)
    for (std::size_t c = 0; c < X.v1.size(); ++c)
      for (std::size_t k = 0; k < pbs.words[r][c].size(); ++k) {
        ElemMat<K> s = elem_zero_mat(A, Y.v1.size(), X.v1.size());
        s[r][c] = A.from_word(pbs.words[r][c][k]);
        image.push_back(mat_to_vec(
            A, amb, elem_compose(A, s, Y.d, X.v1.size(), Y.v1.size(), Y.v0.size())));
      }
  // t : X^0 -> Y^0 contributes d_X then t.
  PairBasis<K> pbt = build_pair_basis<K>(A, X.v0, Y.v0);
  for (std::size_t r = 0; r < Y.v0.size(); ++r)
    for (std::size_t c = 0; c < X.v0.size(); ++c)
      for (std::size_t k = 0; k < pbt.words[r][c].size(); ++k) {
        ElemMat<K> t = elem_zero_mat(A, Y.v0.size(), X.v0.size());
        t[r][c] = A.from_word(pbt.words[r][c][k]);
        image.push_back(mat_to_vec(
            A, amb, elem_compose(A, X.d, t, X.v1.size(), X.v0.size(), Y.v0.size())));
      }
  // rref of [image | identity]: ambient coordinates whose unit vector survives
  // give single-word representatives of a basis of the quotient.
  Matrix<K> cat(amb.total, static_cast<int>(image.size()) + amb.total);
  for (std::size_t j = 0; j < image.size(); ++j)
    for (int i = 0; i < amb.total; ++i) cat.at(i, static_cast<int>(j)) = image[j][i];
  for (int i = 0; i < amb.total; ++i) cat.at(i, static_cast<int>(image.size()) + i) = A.one();
  Rref<K> r = rref(cat);
  ExtK<K> E;
  for (int pc : r.pivot_cols)
    if (pc >= static_cast<int>(image.size())) {
      std::vector<K> unit(amb.total, K(0));
      unit[pc - image.size()] = A.one();
      E.reps.push_back(vec_to_mat(A, amb, unit));
      ++E.dim;
    }
  return E;
}

template <class K>
int ext_dim(const Algebra<K>& A, const TwoTermComplex<K>& X, const TwoTermComplex<K>& Y) {
  using namespace tt_detail;
  PairBasis<K> amb = build_pair_basis<K>(A, X.v1, Y.v0);
  std::vector<std::vector<K>> image;
  PairBasis<K> pbs = build_pair_basis<K>(A, X.v1, Y.v1);
  for (std::size_t r = 0; r < Y.v1.size(); ++r)
    for (std::size_t c = 0; c < X.v1.size(); ++c)
      for (std::size_t k = 0; k < pbs.words[r][c].size(); ++k) {
        ElemMat<K> s = elem_zero_mat(A, Y.v1.size(), X.v1.size());
        s[r][c] = A.from_word(pbs.words[r][c][k]);
        image.push_back(mat_to_vec(
            A, amb, elem_compose(A, s, Y.d, X.v1.size(), Y.v1.size(), Y.v0.size())));
      }
  PairBasis<K> pbt = build_pair_basis<K>(A, X.v0, Y.v0);
  for (std::size_t r = 0; r < Y.v0.size(); ++r)
    for (std::size_t c = 0; c < X.v0.size(); ++c)
      for (std::size_t k = 0; k < pbt.words[r][c].size(); ++k) {
        ElemMat<K> t = elem_zero_mat(A, Y.v0.size(), X.v0.size());
        t[r][c] = A.from_word(pbt.words[r][c][k]);
        image.push_back(mat_to_vec(
            A, amb, elem_compose(A, X.d, t, X.v1.size(), X.v0.size(), Y.v0.size())));
      }
  Matrix<K> im(amb.total, static_cast<int>(image.size()));
  for (std::size_t j = 0; j < image.size(); ++j)
    for (int i = 0; i < amb.total; ++i) im.at(i, static_cast<int>(j)) = image[j][i];
  return amb.total - rank(im);
}

// ---------------------------------------------------------------------------
// Inflations, deflations, cones and extensions.

namespace tt_detail {

// The combined map X^{-1} -> X^0 (+) Y^{-1}, [ -d_X ; f1 ], whose splitting
// characterizes inflations.
template <class K>
void inflation_pack(const Algebra<K>& A, const StrictMap<K>& f, const TwoTermComplex<K>& X,
                    const TwoTermComplex<K>& Y, std::vector<int>& M, ElemMat<K>& e) {
  M = X.v0;
  M.insert(M.end(), Y.v1.begin(), Y.v1.end());
  e = elem_zero_mat(A, M.size(), X.v1.size());
  for (std::size_t r = 0; r < X.v0.size(); ++r)
    for (std::size_t c = 0; c < X.v1.size(); ++c)
      e[r][c] = A.scale(K(0) - A.one(), X.d[r][c]);
  for (std::size_t r = 0; r < Y.v1.size(); ++r)
    for (std::size_t c = 0; c < X.v1.size(); ++c) e[X.v0.size() + r][c] = f.f1[r][c];
}

// The combined map X^0 (+) Y^{-1} -> Y^0, [ f0 ; d_Y ], whose splitting
// characterizes deflations.
template <class K>
void deflation_pack(const Algebra<K>& A, const StrictMap<K>& f, const TwoTermComplex<K>& X,
                    const TwoTermComplex<K>& Y, std::vector<int>& M, ElemMat<K>& g) {
  M = X.v0;
  M.insert(M.end(), Y.v1.begin(), Y.v1.end());
  g = elem_zero_mat(A, Y.v0.size(), M.size());
  for (std::size_t t = 0; t < Y.v0.size(); ++t) {
    for (std::size_t m = 0; m < X.v0.size(); ++m) g[t][m] = f.f0[t][m];
    for (std::size_t m = 0; m < Y.v1.size(); ++m) g[t][X.v0.size() + m] = Y.d[t][m];
  }
}

// Does phi : (+)P_{S[s]} -> (+)P_{M[m]} admit a retraction rho with
// phi then rho = id?
template <class K>
bool has_retraction(const Algebra<K>& A, const std::vector<int>& S, const std::vector<int>& M,
                    const ElemMat<K>& phi) {
  if (S.empty()) return true;
  PairBasis<K> unk = build_pair_basis<K>(A, M, S);  // rho[s'][m]
  PairBasis<K> eq = build_pair_basis<K>(A, S, S);   // equations over Hom(S, S)
  Matrix<K> sys(eq.total, unk.total);
  std::vector<K> rhs(eq.total, K(0));
  for (std::size_t sp = 0; sp < S.size(); ++sp)
    for (std::size_t s = 0; s < S.size(); ++s)
      for (std::size_t m = 0; m < M.size(); ++m)
        for (std::size_t k = 0; k < unk.words[sp][m].size(); ++k) {
          AlgElem<K> prod = A.mul(phi[m][s], A.from_word(unk.words[sp][m][k]));
          scatter(eq, sp, s, prod, sys, unk.off[sp][m] + static_cast<int>(k), false);
        }
  for (std::size_t s = 0; s < S.size(); ++s) {
    AlgElem<K> unit = A.unit(S[s]);
    for (std::size_t k = 0; k < eq.words[s][s].size(); ++k)
      rhs[eq.off[s][s] + k] = unit.c[eq.words[s][s][k]];
  }
  return solve(sys, rhs).has_value();
}

// Does psi : (+)P_{M[m]} -> (+)P_{T[t]} admit a section sigma with
// sigma then psi = id?
template <class K>
bool has_section(const Algebra<K>& A, const std::vector<int>& M, const std::vector<int>& T,
                 const ElemMat<K>& psi) {
  if (T.empty()) return true;
  PairBasis<K> unk = build_pair_basis<K>(A, T, M);  // sigma[m][t]
  PairBasis<K> eq = build_pair_basis<K>(A, T, T);
  Matrix<K> sys(eq.total, unk.total);
  std::vector<K> rhs(eq.total, K(0));
  for (std::size_t tp = 0; tp < T.size(); ++tp)
    for (std::size_t t = 0; t < T.size(); ++t)
      for (std::size_t m = 0; m < M.size(); ++m)
        for (std::size_t k = 0; k < unk.words[m][t].size(); ++k) {
          AlgElem<K> prod = A.mul(A.from_word(unk.words[m][t][k]), psi[tp][m]);
          scatter(eq, tp, t, prod, sys, unk.off[m][t] + static_cast<int>(k), false);
        }
  for (std::size_t t = 0; t < T.size(); ++t) {
    AlgElem<K> unit = A.unit(T[t]);
    for (std::size_t k = 0; k < eq.words[t][t].size(); ++k)
      rhs[eq.off[t][t] + k] = unit.c[eq.words[t][t][k]];
  }
  return solve(sys, rhs).has_value();
}

}  // namespace tt_detail

template <class K>
bool is_inflation(const Algebra<K>& A, const StrictMap<K>& f, const TwoTermComplex<K>& X,
                  const TwoTermComplex<K>& Y) {
  std::vector<int> M;
  ElemMat<K> e;
  tt_detail::inflation_pack(A, f, X, Y, M, e);
  return tt_detail::has_retraction(A, X.v1, M, e);
}

template <class K>
bool is_deflation(const Algebra<K>& A, const StrictMap<K>& f, const TwoTermComplex<K>& X,
                  const TwoTermComplex<K>& Y) {
  std::vector<int> M;
  ElemMat<K> g;
  tt_detail::deflation_pack(A, f, X, Y, M, g);
  return tt_detail::has_section(A, M, Y.v0, g);
}

namespace tt_detail {

// Cancel split pairs between a three-term chain S -e-> M -g-> T from the left:
// pivots of e are consumed until S is empty.  Maintains e then g = 0.
template <class K>
void reduce_left(const Algebra<K>& A, std::vector<int>& S, std::vector<int>& M,
                 ElemMat<K>& e, ElemMat<K>& g) {
  for (;;) {
    int pm = -1, ps = -1;
    for (std::size_t m = 0; m < M.size() && pm < 0; ++m)
      for (std::size_t s = 0; s < S.size(); ++s)
        if (S[s] == M[m] && local_unit(A, e[m][s], S[s])) {
          pm = static_cast<int>(m);
          ps = static_cast<int>(s);
          break;
        }
    if (pm < 0) break;
    int v = S[ps];
    AlgElem<K> uinv = local_inverse(A, e[pm][ps], v);
    // Source base change on S: clear row pm.
    for (std::size_t s = 0; s < S.size(); ++s) {
      if (static_cast<int>(s) == ps) continue;
      AlgElem<K> alpha = A.mul(e[pm][s], uinv);
      if (alpha.is_zero()) continue;
      for (std::size_t m = 0; m < M.size(); ++m)
        e[m][s] = A.sub(e[m][s], A.mul(alpha, e[m][ps]));
    }
    // Target base change on M: clear column ps; g picks up the inverse change.
    for (std::size_t m = 0; m < M.size(); ++m) {
      if (static_cast<int>(m) == pm) continue;
      AlgElem<K> beta = A.mul(uinv, e[m][ps]);
      if (beta.is_zero()) continue;
      for (std::size_t s = 0; s < S.size(); ++s)
        e[m][s] = A.sub(e[m][s], A.mul(e[pm][s], beta));
      for (std::size_t t = 0; t < g.size(); ++t)
        g[t][pm] = A.add(g[t][pm], A.mul(beta, g[t][m]));
    }
    for (std::size_t t = 0; t < g.size(); ++t)
      if (!g[t][pm].is_zero())
        throw std::logic_error("reduce_left: composite through the pivot did not vanish");
    // Delete summand ps of S and pm of M.
    std::vector<int> S2, M2;
    ElemMat<K> e2, g2;
    for (std::size_t s = 0; s < S.size(); ++s)
      if (static_cast<int>(s) != ps) S2.push_back(S[s]);
    for (std::size_t m = 0; m < M.size(); ++m)
      if (static_cast<int>(m) != pm) M2.push_back(M[m]);
    e2 = elem_zero_mat(A, M2.size(), S2.size());
    for (std::size_t m = 0, mm = 0; m < M.size(); ++m) {
      if (static_cast<int>(m) == pm) continue;
      for (std::size_t s = 0, ss = 0; s < S.size(); ++s) {
        if (static_cast<int>(s) == ps) continue;
        e2[mm][ss++] = e[m][s];
      }
      ++mm;
    }
    g2 = elem_zero_mat(A, g.size(), M2.size());
    for (std::size_t t = 0; t < g.size(); ++t)
      for (std::size_t m = 0, mm = 0; m < M.size(); ++m) {
        if (static_cast<int>(m) == pm) continue;
        g2[t][mm++] = g[t][m];
      }
    S = std::move(S2);
    M = std::move(M2);
    e = std::move(e2);
    g = std::move(g2);
  }
}

// Mirror image: cancel split pairs between M -g-> T from the right until T is
// empty; e : S -> M is carried along.
template <class K>
void reduce_right(const Algebra<K>& A, std::vector<int>& M, std::vector<int>& T,
                  ElemMat<K>& e, ElemMat<K>& g) {
  for (;;) {
    int pt = -1, pm = -1;
    for (std::size_t t = 0; t < T.size() && pt < 0; ++t)
      for (std::size_t m = 0; m < M.size(); ++m)
        if (M[m] == T[t] && local_unit(A, g[t][m], M[m])) {
          pt = static_cast<int>(t);
          pm = static_cast<int>(m);
          break;
        }
    if (pt < 0) break;
    int v = M[pm];
    AlgElem<K> uinv = local_inverse(A, g[pt][pm], v);
    // Source base change on M: clear row pt; e picks up the inverse change.
    for (std::size_t m = 0; m < M.size(); ++m) {
      if (static_cast<int>(m) == pm) continue;
      AlgElem<K> alpha = A.mul(g[pt][m], uinv);
      if (alpha.is_zero()) continue;
      for (std::size_t t = 0; t < T.size(); ++t)
        g[t][m] = A.sub(g[t][m], A.mul(alpha, g[t][pm]));
      for (std::size_t s = 0; s < e[pm].size(); ++s)
        e[pm][s] = A.add(e[pm][s], A.mul(e[m][s], alpha));
    }
    // Target base change on T: clear column pm.
    for (std::size_t t = 0; t < T.size(); ++t) {
      if (static_cast<int>(t) == pt) continue;
      AlgElem<K> beta = A.mul(uinv, g[t][pm]);
      if (beta.is_zero()) continue;
      for (std::size_t m = 0; m < M.size(); ++m)
        g[t][m] = A.sub(g[t][m], A.mul(g[pt][m], beta));
    }
    if (!e.empty())
      for (std::size_t s = 0; s < e[pm].size(); ++s)
        if (!e[pm][s].is_zero())
          throw std::logic_error("reduce_right: composite through the pivot did not vanish");
    std::vector<int> M2, T2;
    for (std::size_t m = 0; m < M.size(); ++m)
      if (static_cast<int>(m) != pm) M2.push_back(M[m]);
    for (std::size_t t = 0; t < T.size(); ++t)
      if (static_cast<int>(t) != pt) T2.push_back(T[t]);
    ElemMat<K> e2 = elem_zero_mat(A, M2.size(), e.empty() ? 0 : e[0].size());
    for (std::size_t m = 0, mm = 0; m < M.size(); ++m) {
      if (static_cast<int>(m) == pm) continue;
      for (std::size_t s = 0; s < e2[mm].size(); ++s) e2[mm][s] = e[m][s];
      ++mm;
    }
    ElemMat<K> g2 = elem_zero_mat(A, T2.size(), M2.size());
    for (std::size_t t = 0, tt = 0; t < T.size(); ++t) {
      if (static_cast<int>(t) == pt) continue;
      for (std::size_t m = 0, mm = 0; m < M.size(); ++m) {
        if (static_cast<int>(m) == pm) continue;
        g2[tt][mm++] = g[t][m];
      }
      ++tt;
    }
    M = std::move(M2);
    T = std::move(T2);
    e = std::move(e2);
    g = std::move(g2);
  }
}

}  // namespace tt_detail

// Third term of the conflation X >-f-> Y -->> Z for an inflation f.
template <class K>
TwoTermComplex<K> cone_third(const Algebra<K>& A, const StrictMap<K>& f,
                             const TwoTermComplex<K>& X, const TwoTermComplex<K>& Y) {
  std::vector<int> S = X.v1, M;
  ElemMat<K> e;
  tt_detail::inflation_pack(A, f, X, Y, M, e);
  ElemMat<K> g = elem_zero_mat(A, Y.v0.size(), M.size());
  for (std::size_t t = 0; t < Y.v0.size(); ++t) {
    for (std::size_t m = 0; m < X.v0.size(); ++m) g[t][m] = f.f0[t][m];
    for (std::size_t m = 0; m < Y.v1.size(); ++m) g[t][X.v0.size() + m] = Y.d[t][m];
  }
  tt_detail::reduce_left(A, S, M, e, g);
  if (!S.empty())
    throw std::runtime_error("cone_third: the map is not an inflation");
  TwoTermComplex<K> Z;
  Z.v1 = M;
  Z.v0 = Y.v0;
  Z.d = g;
  return minimize_complex(A, Z);
}

// First term of the conflation W >--> Y -f->> Z for a deflation f.
template <class K>
TwoTermComplex<K> cocone_third(const Algebra<K>& A, const StrictMap<K>& f,
                               const TwoTermComplex<K>& Y, const TwoTermComplex<K>& Z) {
  std::vector<int> S = Y.v1;
  std::vector<int> M = Y.v0;
  M.insert(M.end(), Z.v1.begin(), Z.v1.end());
  std::vector<int> T = Z.v0;
  ElemMat<K> e = elem_zero_mat(A, M.size(), S.size());
  for (std::size_t m = 0; m < Y.v0.size(); ++m)
    for (std::size_t s = 0; s < S.size(); ++s) e[m][s] = Y.d[m][s];
  for (std::size_t m = 0; m < Z.v1.size(); ++m)
    for (std::size_t s = 0; s < S.size(); ++s)
      e[Y.v0.size() + m][s] = A.scale(K(0) - A.one(), f.f1[m][s]);
  ElemMat<K> g = elem_zero_mat(A, T.size(), M.size());
  for (std::size_t t = 0; t < T.size(); ++t) {
    for (std::size_t m = 0; m < Y.v0.size(); ++m) g[t][m] = f.f0[t][m];
    for (std::size_t m = 0; m < Z.v1.size(); ++m) g[t][Y.v0.size() + m] = Z.d[t][m];
  }
  tt_detail::reduce_right(A, M, T, e, g);
  if (!T.empty())
    throw std::runtime_error("cocone_third: the map is not a deflation");
  TwoTermComplex<K> W;
  W.v1 = S;
  W.v0 = M;
  W.d = e;
  return minimize_complex(A, W);
}

// Middle term of the conflation B >--> E -->> X classified by
// h : X^{-1} -> B^0 (h = 0 gives the split extension).
template <class K>
TwoTermComplex<K> extension_middle(const Algebra<K>& A, const TwoTermComplex<K>& B,
                                   const TwoTermComplex<K>& X, const ElemMat<K>& h) {
  TwoTermComplex<K> E;
  E.v1 = B.v1;
  E.v1.insert(E.v1.end(), X.v1.begin(), X.v1.end());
  E.v0 = B.v0;
  E.v0.insert(E.v0.end(), X.v0.begin(), X.v0.end());
  E.d = elem_zero_mat(A, E.v0.size(), E.v1.size());
  for (std::size_t r = 0; r < B.v0.size(); ++r) {
    for (std::size_t c = 0; c < B.v1.size(); ++c) E.d[r][c] = B.d[r][c];
    for (std::size_t c = 0; c < X.v1.size(); ++c) E.d[r][B.v1.size() + c] = h[r][c];
  }
  for (std::size_t r = 0; r < X.v0.size(); ++r)
    for (std::size_t c = 0; c < X.v1.size(); ++c)
      E.d[B.v0.size() + r][B.v1.size() + c] = X.d[r][c];
  return minimize_complex(A, E);
}

// ---------------------------------------------------------------------------
// Strict isomorphisms, summand peeling, decomposition against a universe.

template <class K>
bool is_strict_iso(const Algebra<K>& A, const StrictMap<K>& f, const TwoTermComplex<K>& X,
                   const TwoTermComplex<K>& Y) {
  ProjSum<K> x1 = build_proj_sum(A, X.v1), x0 = build_proj_sum(A, X.v0);
  ProjSum<K> y1 = build_proj_sum(A, Y.v1), y0 = build_proj_sum(A, Y.v0);
  RepMorphism<K> m1 = elem_to_morphism(A, x1, y1, f.f1);
  RepMorphism<K> m0 = elem_to_morphism(A, x0, y0, f.f0);
  for (int v = 0; v < A.num_vertices(); ++v) {
    if (m1.at[v].rows() != m1.at[v].cols() || rank(m1.at[v]) != m1.at[v].rows()) return false;
    if (m0.at[v].rows() != m0.at[v].cols() || rank(m0.at[v]) != m0.at[v].rows()) return false;
  }
  return true;
}

template <class K>
StrictMap<K> strict_inverse(const Algebra<K>& A, const StrictMap<K>& f,
                            const TwoTermComplex<K>& X, const TwoTermComplex<K>& Y) {
  ProjSum<K> x1 = build_proj_sum(A, X.v1), x0 = build_proj_sum(A, X.v0);
  ProjSum<K> y1 = build_proj_sum(A, Y.v1), y0 = build_proj_sum(A, Y.v0);
  RepMorphism<K> m1 = elem_to_morphism(A, x1, y1, f.f1);
  RepMorphism<K> m0 = elem_to_morphism(A, x0, y0, f.f0);
  RepMorphism<K> i1, i0;
  for (int v = 0; v < A.num_vertices(); ++v) {
    auto a = inverse(m1.at[v]);
    auto b = inverse(m0.at[v]);
    if (!a || !b) throw std::logic_error("strict_inverse: map is not invertible");
    i1.at.push_back(std::move(*a));
    i0.at.push_back(std::move(*b));
  }
  return StrictMap<K>{read_elem_mat(A, y1, x1, i1), read_elem_mat(A, y0, x0, i0)};
}

// X and Y isomorphic in the homotopy category?  Both are minimized; between
// minimal complexes every homotopy-iso is a strict iso, so we search the hom
// space for a strictly invertible element.
template <class K>
bool is_isomorphic_complex(const Algebra<K>& A, const TwoTermComplex<K>& X0,
                           const TwoTermComplex<K>& Y0, std::uint64_t seed = 20240901) {
  TwoTermComplex<K> X = minimize_complex(A, X0), Y = minimize_complex(A, Y0);
  std::vector<int> a1 = X.v1, a0 = X.v0, b1 = Y.v1, b0 = Y.v0;
  std::sort(a1.begin(), a1.end());
  std::sort(b1.begin(), b1.end());
  std::sort(a0.begin(), a0.end());
  std::sort(b0.begin(), b0.end());
  if (a1 != b1 || a0 != b0) return false;
  if (complex_is_zero(X)) return true;
  HomK<K> H = hom_k(A, X, Y);
  for (const StrictMap<K>& f : H.reps)
    if (is_strict_iso(A, f, X, Y)) return true;
  if (H.reps.empty()) return false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int tries = 0; tries < 40; ++tries) {
    StrictMap<K> f{elem_zero_mat(A, Y.v1.size(), X.v1.size()),
                   elem_zero_mat(A, Y.v0.size(), X.v0.size())};
    for (const StrictMap<K>& h : H.reps) {
      K c = A.one() * K(coef(rng));
      if (c.is_zero()) continue;
      f = strict_add(A, f, strict_scale(A, c, h));
    }
    if (is_strict_iso(A, f, X, Y)) return true;
  }
  return false;
}

// If the indecomposable minimal complex C is a direct summand of the minimal
// complex X, return the complement; std::nullopt otherwise.
template <class K>
std::optional<TwoTermComplex<K>> peel_summand(const Algebra<K>& A, const TwoTermComplex<K>& C,
                                              const TwoTermComplex<K>& X) {
  if (complex_is_zero(C)) return std::nullopt;
  HomK<K> in = hom_k(A, C, X);
  if (in.dim == 0) return std::nullopt;
  HomK<K> out = hom_k(A, X, C);
  if (out.dim == 0) return std::nullopt;
  for (const StrictMap<K>& f : in.reps)
    for (const StrictMap<K>& g : out.reps) {
      StrictMap<K> u = strict_compose(A, f, g, C, X, C);
      if (!is_strict_iso(A, u, C, C)) continue;
      StrictMap<K> uinv = strict_inverse(A, u, C, C);
      StrictMap<K> r = strict_compose(A, g, uinv, X, C, C);  // split epi X -> C
      return cocone_third(A, r, X, C);
    }
  return std::nullopt;
}

template <class K>
struct ComplexPiece {
  int index = -1;  // position in the universe
  int multiplicity = 0;
};

template <class K>
struct ComplexUniverse {
  std::vector<TwoTermComplex<K>> objects;
  std::vector<std::string> labels;
  std::vector<int> h0_index;  // index of the module with this presentation, -1 for shifts
  bool complete = true;
  std::vector<std::string> notes;
};

template <class K>
struct ComplexDecomposition {
  std::vector<ComplexPiece<K>> pieces;
  TwoTermComplex<K> remainder;  // zero iff complete
  bool complete = true;
};

template <class K>
ComplexDecomposition<K> decompose_against(const Algebra<K>& A, const TwoTermComplex<K>& X0,
                                          const ComplexUniverse<K>& U) {
  ComplexDecomposition<K> D;
  TwoTermComplex<K> X = minimize_complex(A, X0);
  for (std::size_t i = 0; i < U.objects.size() && !complex_is_zero(X); ++i) {
    int mult = 0;
    for (;;) {
      auto rest = peel_summand(A, U.objects[i], X);
      if (!rest) break;
      X = std::move(*rest);
      ++mult;
      if (complex_is_zero(X)) break;
    }
    if (mult) D.pieces.push_back({static_cast<int>(i), mult});
  }
  D.remainder = X;
  D.complete = complex_is_zero(X);
  return D;
}

// ---------------------------------------------------------------------------
// Display names and the universe of indecomposable two-term complexes.

// "P1", "I2", "S3" for the standard modules, otherwise "M(d1,...,dn)".
template <class K>
std::string module_display_name(const Algebra<K>& A, const Representation<K>& M) {
  // Prefer P over I over S when a module carries several of these names
  // (e.g. a projective-injective, or a simple projective).
  for (int v = 0; v < A.num_vertices(); ++v)
    if (is_isomorphic(A, M, projective_rep(A, v)))
      return "P" + std::to_string(A.vertex_label(v));
  for (int v = 0; v < A.num_vertices(); ++v)
    if (is_isomorphic(A, M, injective_rep(A, v)))
      return "I" + std::to_string(A.vertex_label(v));
  for (int v = 0; v < A.num_vertices(); ++v)
    if (is_isomorphic(A, M, simple_rep(A, v)))
      return "S" + std::to_string(A.vertex_label(v));
  std::string s = "M(";
  for (std::size_t v = 0; v < M.dims.size(); ++v) {
    if (v) s += ",";
    s += std::to_string(M.dims[v]);
  }
  return s + ")";
}

// Indecomposable objects of the two-term homotopy category: the minimal
// presentations of the indecomposable modules together with the shifts P_v[1].
template <class K>
ComplexUniverse<K> two_term_universe(const Algebra<K>& A, const ModuleUniverse<K>& MU) {
  ComplexUniverse<K> U;
  U.complete = MU.complete;
  U.notes = MU.notes;
  std::map<std::string, int> used;
  for (std::size_t i = 0; i < MU.modules.size(); ++i) {
    U.objects.push_back(presentation_complex(A, MU.modules[i]));
    std::string name = module_display_name(A, MU.modules[i]);
    int n = ++used[name];
    if (n > 1) name += "#" + std::to_string(n);
    U.labels.push_back(name);
    U.h0_index.push_back(static_cast<int>(i));
  }
  for (int v = 0; v < A.num_vertices(); ++v) {
    U.objects.push_back(shifted_proj_complex(A, v));
    U.labels.push_back("P" + std::to_string(A.vertex_label(v)) + "[1]");
    U.h0_index.push_back(-1);
  }
  return U;
}

template <class K>
std::string complex_display(const Algebra<K>& A, const TwoTermComplex<K>& X) {
  auto side = [&](const std::vector<int>& vs) {
    if (vs.empty()) return std::string("0");
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i) s += "+";
      s += "P" + std::to_string(A.vertex_label(vs[i]));
    }
    return s;
  };
  return "(" + side(X.v1) + " -> " + side(X.v0) + ")";
}

// ---------------------------------------------------------------------------
// Cohomology as modules.

template <class K>
Representation<K> h0_module(const Algebra<K>& A, const TwoTermComplex<K>& X) {
  ProjSum<K> p1 = build_proj_sum(A, X.v1), p0 = build_proj_sum(A, X.v0);
  RepMorphism<K> d = elem_to_morphism(A, p1, p0, X.d);
  return cokernel_of(A, p1.rep, p0.rep, d).rep;
}

template <class K>
Representation<K> hminus1_module(const Algebra<K>& A, const TwoTermComplex<K>& X) {
  ProjSum<K> p1 = build_proj_sum(A, X.v1), p0 = build_proj_sum(A, X.v0);
  RepMorphism<K> d = elem_to_morphism(A, p1, p0, X.d);
  return kernel_of(A, p1.rep, p0.rep, d).rep;
}

// ---------------------------------------------------------------------------
// Factorization through a map, up to homotopy (used for approximations).

// Is there a chain map g : Y -> Z with phi homotopic to f then g?
template <class K>
bool factors_through_left(const Algebra<K>& A, const StrictMap<K>& phi, const StrictMap<K>& f,
                          const TwoTermComplex<K>& X, const TwoTermComplex<K>& Y,
                          const TwoTermComplex<K>& Z) {
  using namespace tt_detail;
  PairBasis<K> g1b = build_pair_basis<K>(A, Y.v1, Z.v1);
  PairBasis<K> g0b = build_pair_basis<K>(A, Y.v0, Z.v0);
  PairBasis<K> hb = build_pair_basis<K>(A, X.v0, Z.v1);
  PairBasis<K> chain_eq = build_pair_basis<K>(A, Y.v1, Z.v0);
  PairBasis<K> eq1 = build_pair_basis<K>(A, X.v1, Z.v1);
  PairBasis<K> eq0 = build_pair_basis<K>(A, X.v0, Z.v0);
  int off_g0 = g1b.total, off_h = g1b.total + g0b.total;
  int cols = off_h + hb.total;
  int row_eq1 = chain_eq.total, row_eq0 = chain_eq.total + eq1.total;
  Matrix<K> sys(row_eq0 + eq0.total, cols);
  std::vector<K> rhs(row_eq0 + eq0.total, K(0));
  // (a) g must be a chain map: (d_Y then g0) - (g1 then d_Z) = 0.
  for (std::size_t R = 0; R < Z.v0.size(); ++R)
    for (std::size_t C = 0; C < Y.v1.size(); ++C) {
      for (std::size_t m = 0; m < Y.v0.size(); ++m)
        for (std::size_t k = 0; k < g0b.words[R][m].size(); ++k) {
          AlgElem<K> prod = A.mul(Y.d[m][C], A.from_word(g0b.words[R][m][k]));
          scatter(chain_eq, R, C, prod, sys, off_g0 + g0b.off[R][m] + static_cast<int>(k),
                  false);
        }
      for (std::size_t r = 0; r < Z.v1.size(); ++r)
        for (std::size_t k = 0; k < g1b.words[r][C].size(); ++k) {
          AlgElem<K> prod = A.mul(A.from_word(g1b.words[r][C][k]), Z.d[R][r]);
          scatter(chain_eq, R, C, prod, sys, g1b.off[r][C] + static_cast<int>(k), true);
        }
    }
  auto scatter_at = [&](const PairBasis<K>& eq, int row0, std::size_t R, std::size_t C,
                        const AlgElem<K>& prod, int col, bool neg) {
    for (std::size_t k = 0; k < eq.words[R][C].size(); ++k) {
      const K& coef = prod.c[eq.words[R][C][k]];
      if (coef.is_zero()) continue;
      if (neg)
        sys.at(row0 + eq.off[R][C] + static_cast<int>(k), col) -= coef;
      else
        sys.at(row0 + eq.off[R][C] + static_cast<int>(k), col) += coef;
    }
  };
  // (b) degree -1: (f1 then g1) + (d_X then h) = phi1.
  for (std::size_t R = 0; R < Z.v1.size(); ++R)
    for (std::size_t C = 0; C < X.v1.size(); ++C) {
      for (std::size_t r = 0; r < Y.v1.size(); ++r)
        for (std::size_t k = 0; k < g1b.words[R][r].size(); ++k) {
          AlgElem<K> prod = A.mul(f.f1[r][C], A.from_word(g1b.words[R][r][k]));
          scatter_at(eq1, row_eq1, R, C, prod, g1b.off[R][r] + static_cast<int>(k), false);
        }
      for (std::size_t m = 0; m < X.v0.size(); ++m)
        for (std::size_t k = 0; k < hb.words[R][m].size(); ++k) {
          AlgElem<K> prod = A.mul(X.d[m][C], A.from_word(hb.words[R][m][k]));
          scatter_at(eq1, row_eq1, R, C, prod, off_h + hb.off[R][m] + static_cast<int>(k),
                     false);
        }
      for (std::size_t k = 0; k < eq1.words[R][C].size(); ++k)
        rhs[row_eq1 + eq1.off[R][C] + k] = phi.f1[R][C].c[eq1.words[R][C][k]];
    }
  // (c) degree 0: (f0 then g0) + (h then d_Z) = phi0.
  for (std::size_t R = 0; R < Z.v0.size(); ++R)
    for (std::size_t C = 0; C < X.v0.size(); ++C) {
      for (std::size_t m = 0; m < Y.v0.size(); ++m)
        for (std::size_t k = 0; k < g0b.words[R][m].size(); ++k) {
          AlgElem<K> prod = A.mul(f.f0[m][C], A.from_word(g0b.words[R][m][k]));
          scatter_at(eq0, row_eq0, R, C, prod, off_g0 + g0b.off[R][m] + static_cast<int>(k),
                     false);
        }
      for (std::size_t r = 0; r < Z.v1.size(); ++r)
        for (std::size_t k = 0; k < hb.words[r][C].size(); ++k) {
          AlgElem<K> prod = A.mul(A.from_word(hb.words[r][C][k]), Z.d[R][r]);
          scatter_at(eq0, row_eq0, R, C, prod, off_h + hb.off[r][C] + static_cast<int>(k),
                     false);
        }
      for (std::size_t k = 0; k < eq0.words[R][C].size(); ++k)
        rhs[row_eq0 + eq0.off[R][C] + k] = phi.f0[R][C].c[eq0.words[R][C][k]];
    }
  return solve(sys, rhs).has_value();
}

// Is there a chain map s : X -> Y with phi homotopic to s then g?
template <class K>
bool factors_through_right(const Algebra<K>& A, const StrictMap<K>& phi, const StrictMap<K>& g,
                           const TwoTermComplex<K>& X, const TwoTermComplex<K>& Y,
                           const TwoTermComplex<K>& Z) {
  using namespace tt_detail;
  PairBasis<K> s1b = build_pair_basis<K>(A, X.v1, Y.v1);
  PairBasis<K> s0b = build_pair_basis<K>(A, X.v0, Y.v0);
  PairBasis<K> hb = build_pair_basis<K>(A, X.v0, Z.v1);
  PairBasis<K> chain_eq = build_pair_basis<K>(A, X.v1, Y.v0);
  PairBasis<K> eq1 = build_pair_basis<K>(A, X.v1, Z.v1);
  PairBasis<K> eq0 = build_pair_basis<K>(A, X.v0, Z.v0);
  int off_s0 = s1b.total, off_h = s1b.total + s0b.total;
  int cols = off_h + hb.total;
  int row_eq1 = chain_eq.total, row_eq0 = chain_eq.total + eq1.total;
  Matrix<K> sys(row_eq0 + eq0.total, cols);
  std::vector<K> rhs(row_eq0 + eq0.total, K(0));
  auto scatter_at = [&](const PairBasis<K>& eq, int row0, std::size_t R, std::size_t C,
                        const AlgElem<K>& prod, int col, bool neg) {
    for (std::size_t k = 0; k < eq.words[R][C].size(); ++k) {
      const K& coef = prod.c[eq.words[R][C][k]];
      if (coef.is_zero()) continue;
      if (neg)
        sys.at(row0 + eq.off[R][C] + static_cast<int>(k), col) -= coef;
      else
        sys.at(row0 + eq.off[R][C] + static_cast<int>(k), col) += coef;
    }
  };
  // (a) s must be a chain map.
  for (std::size_t R = 0; R < Y.v0.size(); ++R)
    for (std::size_t C = 0; C < X.v1.size(); ++C) {
      for (std::size_t m = 0; m < X.v0.size(); ++m)
        for (std::size_t k = 0; k < s0b.words[R][m].size(); ++k) {
          AlgElem<K> prod = A.mul(X.d[m][C], A.from_word(s0b.words[R][m][k]));
          scatter_at(chain_eq, 0, R, C, prod, off_s0 + s0b.off[R][m] + static_cast<int>(k),
                     false);
        }
      for (std::size_t r = 0; r < Y.v1.size(); ++r)
        for (std::size_t k = 0; k < s1b.words[r][C].size(); ++k) {
          AlgElem<K> prod = A.mul(A.from_word(s1b.words[r][C][k]), Y.d[R][r]);
          scatter_at(chain_eq, 0, R, C, prod, s1b.off[r][C] + static_cast<int>(k), true);
        }
    }
  // (b) degree -1: (s1 then g1) + (d_X then h) = phi1.
  for (std::size_t R = 0; R < Z.v1.size(); ++R)
    for (std::size_t C = 0; C < X.v1.size(); ++C) {
      for (std::size_t r = 0; r < Y.v1.size(); ++r)
        for (std::size_t k = 0; k < s1b.words[r][C].size(); ++k) {
          AlgElem<K> prod = A.mul(A.from_word(s1b.words[r][C][k]), g.f1[R][r]);
          scatter_at(eq1, row_eq1, R, C, prod, s1b.off[r][C] + static_cast<int>(k), false);
        }
      for (std::size_t m = 0; m < X.v0.size(); ++m)
        for (std::size_t k = 0; k < hb.words[R][m].size(); ++k) {
          AlgElem<K> prod = A.mul(X.d[m][C], A.from_word(hb.words[R][m][k]));
          scatter_at(eq1, row_eq1, R, C, prod, off_h + hb.off[R][m] + static_cast<int>(k),
                     false);
        }
      for (std::size_t k = 0; k < eq1.words[R][C].size(); ++k)
        rhs[row_eq1 + eq1.off[R][C] + k] = phi.f1[R][C].c[eq1.words[R][C][k]];
    }
  // (c) degree 0: (s0 then g0) + (h then d_Z) = phi0.
  for (std::size_t R = 0; R < Z.v0.size(); ++R)
    for (std::size_t C = 0; C < X.v0.size(); ++C) {
      for (std::size_t m = 0; m < Y.v0.size(); ++m)
        for (std::size_t k = 0; k < s0b.words[m][C].size(); ++k) {
          AlgElem<K> prod = A.mul(A.from_word(s0b.words[m][C][k]), g.f0[R][m]);
          scatter_at(eq0, row_eq0, R, C, prod, off_s0 + s0b.off[m][C] + static_cast<int>(k),
                     false);
        }
      for (std::size_t r = 0; r < Z.v1.size(); ++r)
        for (std::size_t k = 0; k < hb.words[r][C].size(); ++k) {
          AlgElem<K> prod = A.mul(A.from_word(hb.words[r][C][k]), Z.d[R][r]);
          scatter_at(eq0, row_eq0, R, C, prod, off_h + hb.off[r][C] + static_cast<int>(k),
                     false);
        }
      for (std::size_t k = 0; k < eq0.words[R][C].size(); ++k)
        rhs[row_eq0 + eq0.off[R][C] + k] = phi.f0[R][C].c[eq0.words[R][C][k]];
    }
  return solve(sys, rhs).has_value();
}

}  // namespace siltlab
