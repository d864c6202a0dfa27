#pragma once
// Structural operations on modules: radical and top, sums of projectives and
// injectives with bookkeeping, projective covers, minimal projective
// presentations with algebra-valued differentials, duality to the opposite
// algebra, and the Auslander-Reiten translate in both directions.

#include "siltlab/representation.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace siltlab {

// rad(M)_v = sum of the images of all arrow actions landing at v.
template <class K>
SubObject<K> radical_sub(const Algebra<K>& A, const Representation<K>& M) {
  std::vector<Matrix<K>> incl;
  for (int v = 0; v < A.num_vertices(); ++v) {
    Matrix<K> stack(M.dims[v], 0);
    for (int a = 0; a < A.num_arrows(); ++a)
      if (A.arrow_src(a) == v)
        stack = stack.cols() == 0 ? M.arrow[a] : Matrix<K>::hstack(stack, M.arrow[a]);
    if (stack.cols() == 0) {
      incl.push_back(Matrix<K>(M.dims[v], 0));
      continue;
    }
    Rref<K> r = rref(stack);
    Matrix<K> B(M.dims[v], r.rank);
    for (int c = 0; c < r.rank; ++c)
      for (int i = 0; i < M.dims[v]; ++i) B.at(i, c) = stack.at(i, r.pivot_cols[c]);
    incl.push_back(std::move(B));
  }
  return subrepresentation_on(A, M, incl);
}

template <class K>
QuotObject<K> top_quotient(const Algebra<K>& A, const Representation<K>& M) {
  return quotient_by(A, M, radical_sub(A, M).incl.at);
}

// ---------------------------------------------------------------------------
// Ordered sums of projectives / injectives with their word-indexed bases.
//
// At vertex u the basis of (+)_j P_{verts[j]} is the concatenation over j of
// the words u -> verts[j]; offsets record where each block starts.

template <class K>
struct ProjSum {
  std::vector<int> verts;
  Representation<K> rep;
  std::vector<std::vector<std::vector<int>>> words;  // words[j][u]
  std::vector<std::vector<int>> offset;              // offset[j][u]
};

template <class K>
ProjSum<K> build_proj_sum(const Algebra<K>& A, const std::vector<int>& verts) {
  ProjSum<K> P;
  P.verts = verts;
  int n = A.num_vertices();
  P.rep.dims.assign(n, 0);
  P.words.resize(verts.size());
  P.offset.assign(verts.size(), std::vector<int>(n, 0));
  for (std::size_t j = 0; j < verts.size(); ++j) {
    P.words[j].resize(n);
    for (int u = 0; u < n; ++u) {
      P.offset[j][u] = P.rep.dims[u];
      P.words[j][u] = A.words_from_to(u, verts[j]);
      P.rep.dims[u] += static_cast<int>(P.words[j][u].size());
    }
  }
  for (int a = 0; a < A.num_arrows(); ++a) {
    int s = A.arrow_src(a), t = A.arrow_tgt(a);
    Matrix<K> act(P.rep.dims[s], P.rep.dims[t]);
    for (std::size_t j = 0; j < verts.size(); ++j)
      for (std::size_t col = 0; col < P.words[j][t].size(); ++col) {
        AlgElem<K> prod = A.mul(A.arrow_elem(a), A.from_word(P.words[j][t][col]));
        for (std::size_t row = 0; row < P.words[j][s].size(); ++row)
          act.at(P.offset[j][s] + static_cast<int>(row),
                 P.offset[j][t] + static_cast<int>(col)) = prod.c[P.words[j][s][row]];
      }
    P.rep.arrow.push_back(std::move(act));
  }
  return P;
}

// The morphism (+)_j P_{verts[j]} -> M sending the j-th generator e_{verts[j]}
// to gens[j] (a vector in M at vertex verts[j]); a word w : u -> verts[j] in
// the source basis maps to (action of w on M)(gens[j]).
template <class K>
RepMorphism<K> proj_sum_hom(const Algebra<K>& A, const ProjSum<K>& P,
                            const Representation<K>& M,
                            const std::vector<std::vector<K>>& gens) {
  RepMorphism<K> f;
  for (int u = 0; u < A.num_vertices(); ++u) {
    Matrix<K> m(M.dims[u], P.rep.dims[u]);
    for (std::size_t j = 0; j < P.verts.size(); ++j)
      for (std::size_t col = 0; col < P.words[j][u].size(); ++col) {
        Matrix<K> act = path_action(A, M, A.word(P.words[j][u][col]));
        std::vector<K> img = act.apply(gens[j]);
        for (int i = 0; i < M.dims[u]; ++i)
          m.at(i, P.offset[j][u] + static_cast<int>(col)) = img[i];
      }
    f.at.push_back(std::move(m));
  }
  return f;
}

template <class K>
struct InjSum {
  std::vector<int> verts;
  Representation<K> rep;
  std::vector<std::vector<std::vector<int>>> words;  // words[j][u] = words verts[j] -> u
  std::vector<std::vector<int>> offset;
};

template <class K>
InjSum<K> build_inj_sum(const Algebra<K>& A, const std::vector<int>& verts) {
  InjSum<K> P;
  P.verts = verts;
  int n = A.num_vertices();
  P.rep.dims.assign(n, 0);
  P.words.resize(verts.size());
  P.offset.assign(verts.size(), std::vector<int>(n, 0));
  for (std::size_t j = 0; j < verts.size(); ++j) {
    P.words[j].resize(n);
    for (int u = 0; u < n; ++u) {
      P.offset[j][u] = P.rep.dims[u];
      P.words[j][u] = A.words_from_to(verts[j], u);
      P.rep.dims[u] += static_cast<int>(P.words[j][u].size());
    }
  }
  for (int a = 0; a < A.num_arrows(); ++a) {
    int s = A.arrow_src(a), t = A.arrow_tgt(a);
    Matrix<K> act(P.rep.dims[s], P.rep.dims[t]);
    for (std::size_t j = 0; j < verts.size(); ++j) {
      // transpose of append: e_j Lambda e_s -> e_j Lambda e_t
      for (std::size_t col = 0; col < P.words[j][s].size(); ++col) {
        AlgElem<K> prod = A.mul(A.from_word(P.words[j][s][col]), A.arrow_elem(a));
        for (std::size_t row = 0; row < P.words[j][t].size(); ++row)
          act.at(P.offset[j][s] + static_cast<int>(col),
                 P.offset[j][t] + static_cast<int>(row)) = prod.c[P.words[j][t][row]];
      }
    }
    P.rep.arrow.push_back(std::move(act));
  }
  return P;
}

// ---------------------------------------------------------------------------
// Projective cover and minimal presentation.

template <class K>
struct Cover {
  ProjSum<K> p;
  RepMorphism<K> onto;  // p.rep ->> M
};

template <class K>
Cover<K> projective_cover(const Algebra<K>& A, const Representation<K>& M) {
  QuotObject<K> top = top_quotient(A, M);
  std::vector<int> verts;
  std::vector<std::vector<K>> gens;
  for (int v = 0; v < A.num_vertices(); ++v) {
    int t = top.rep.dims[v];
    if (t == 0) continue;
    // Lift the top basis: columns of X with proj_v * X = id.
    auto X = solve_matrix(top.proj.at[v], Matrix<K>::identity(t));
    if (!X) throw std::logic_error("projective_cover: top projection is not surjective");
    for (int c = 0; c < t; ++c) {
      verts.push_back(v);
      gens.push_back(X->column_vector(c));
    }
  }
  Cover<K> out;
  out.p = build_proj_sum(A, verts);
  out.onto = proj_sum_hom(A, out.p, M, gens);
  return out;
}

// Minimal presentation P1 -d-> P0 ->> M.  The differential is also produced as
// a matrix of algebra elements: d[r][c] lies in e_{p1.verts[c]} Lambda
// e_{p0.verts[r]} = Hom(P_{p1.verts[c]}, P_{p0.verts[r]}).
template <class K>
struct MinPresentation {
  ProjSum<K> p1, p0;
  std::vector<std::vector<AlgElem<K>>> d;  // indexed [r][c]
  RepMorphism<K> d_rep;                    // p1.rep -> p0.rep
  RepMorphism<K> onto;                     // p0.rep ->> M
};

template <class K>
MinPresentation<K> minimal_presentation(const Algebra<K>& A, const Representation<K>& M) {
  MinPresentation<K> out;
  Cover<K> c0 = projective_cover(A, M);
  SubObject<K> ker = kernel_of(A, c0.p.rep, M, c0.onto);
  Cover<K> c1 = projective_cover(A, ker.rep);
  out.p0 = c0.p;
  out.p1 = c1.p;
  out.onto = c0.onto;
  out.d_rep = then_compose(c1.onto, ker.incl);
  // Read the algebra entries off the generator images.
  std::size_t rows = out.p0.verts.size(), cols = out.p1.verts.size();
  out.d.assign(rows, std::vector<AlgElem<K>>(cols, A.zero_elem()));
  for (std::size_t c = 0; c < cols; ++c) {
    int u = out.p1.verts[c];
    // position of the generator e_u of summand c inside (P1)_u
    int triv = A.trivial_word_index(u);
    int pos = -1;
    for (std::size_t k = 0; k < out.p1.words[c][u].size(); ++k)
      if (out.p1.words[c][u][k] == triv) { pos = out.p1.offset[c][u] + static_cast<int>(k); break; }
    if (pos < 0) throw std::logic_error("minimal_presentation: trivial word missing");
    std::vector<K> img = out.d_rep.at[u].column_vector(pos);
    for (std::size_t r = 0; r < rows; ++r) {
      AlgElem<K> w = A.zero_elem();
      for (std::size_t k = 0; k < out.p0.words[r][u].size(); ++k)
        w.c[out.p0.words[r][u][k]] = img[out.p0.offset[r][u] + static_cast<int>(k)];
      out.d[r][c] = std::move(w);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Duality and the Auslander-Reiten translate.

// D M: module over the opposite algebra on the same vertices; every arrow
// matrix is transposed (the opposite arrow runs the other way, so shapes fit).
template <class K>
Representation<K> dualize(const Representation<K>& M) {
  Representation<K> D;
  D.dims = M.dims;
  for (const Matrix<K>& m : M.arrow) D.arrow.push_back(m.transpose());
  return D;
}

// tau(M) = ker(nu(d) : nu P1 -> nu P0) for a minimal presentation d.
// nu sends P_s to I_s; on a map given by w in e_s Lambda e_t it acts at vertex
// v as the transpose of left multiplication e_t Lambda e_v -> e_s Lambda e_v.
template <class K>
Representation<K> tau_translate(const Algebra<K>& A, const Representation<K>& M) {
  if (rep_is_zero(M)) return zero_representation(A);
  MinPresentation<K> pres = minimal_presentation(A, M);
  InjSum<K> src = build_inj_sum(A, pres.p1.verts);
  InjSum<K> dst = build_inj_sum(A, pres.p0.verts);
  RepMorphism<K> nu_d;
  for (int v = 0; v < A.num_vertices(); ++v) {
    Matrix<K> m(dst.rep.dims[v], src.rep.dims[v]);
    for (std::size_t r = 0; r < pres.p0.verts.size(); ++r)
      for (std::size_t c = 0; c < pres.p1.verts.size(); ++c) {
        const AlgElem<K>& w = pres.d[r][c];
        if (w.is_zero()) continue;
        // left multiplication by w: e_{p0.verts[r]} Lambda e_v -> e_{p1.verts[c]} Lambda e_v
        const std::vector<int>& cols_w = dst.words[r][v];
        const std::vector<int>& rows_w = src.words[c][v];
        Matrix<K> L(static_cast<int>(rows_w.size()), static_cast<int>(cols_w.size()));
        for (std::size_t jc = 0; jc < cols_w.size(); ++jc) {
          AlgElem<K> prod = A.mul(w, A.from_word(cols_w[jc]));
          for (std::size_t ir = 0; ir < rows_w.size(); ++ir)
            L.at(static_cast<int>(ir), static_cast<int>(jc)) = prod.c[rows_w[ir]];
        }
        Matrix<K> T = L.transpose();
        for (int i = 0; i < T.rows(); ++i)
          for (int j = 0; j < T.cols(); ++j)
            m.at(dst.offset[r][v] + i, src.offset[c][v] + j) += T.at(i, j);
      }
    nu_d.at.push_back(std::move(m));
  }
  return kernel_of(A, src.rep, dst.rep, nu_d).rep;
}

template <class K>
Representation<K> tau_inverse_translate(const Algebra<K>& A, const Algebra<K>& Aop,
                                        const Representation<K>& M) {
  (void)A;
  return dualize(tau_translate(Aop, dualize(M)));
}

template <class K>
Representation<K> tau_inverse_translate(const Algebra<K>& A, const Representation<K>& M) {
  Algebra<K> Aop = A.opposite();
  return tau_inverse_translate(A, Aop, M);
}

}  // namespace siltlab
