#pragma once
// Finite-dimensional left modules over a bound quiver algebra, presented as
// quiver representations: a space M_v per vertex and, for each arrow a, a
// matrix M_a : M_{target(a)} -> M_{source(a)}.  With paths composing left to
// right this is exactly a left Lambda-module: the action of a path w = a1*...*ak
// is M_{a1} ∘ ... ∘ M_{ak} : M_{target(w)} -> M_{source(w)}, so that
// M_{p*q} = M_p ∘ M_q.
//
// A morphism f : M -> N is a matrix f_v : M_v -> N_v per vertex with
// f_{source(a)} ∘ M_a = N_a ∘ f_{target(a)} for every arrow.

#include "siltlab/algebra.hpp"
#include "siltlab/matrix.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace siltlab {

template <class K>
struct Representation {
  std::vector<int> dims;          // per vertex index
  std::vector<Matrix<K>> arrow;   // arrow[a]: dims[src(a)] x dims[tgt(a)]
};

template <class K>
struct RepMorphism {
  std::vector<Matrix<K>> at;      // at[v]: N_v x M_v, the map M_v -> N_v
};

template <class K>
Representation<K> zero_representation(const Algebra<K>& A) {
  Representation<K> M;
  M.dims.assign(A.num_vertices(), 0);
  for (int a = 0; a < A.num_arrows(); ++a)
    M.arrow.push_back(Matrix<K>(0, 0));
  return M;
}

template <class K>
int total_dim(const Representation<K>& M) {
  return std::accumulate(M.dims.begin(), M.dims.end(), 0);
}

template <class K>
bool rep_is_zero(const Representation<K>& M) {
  return total_dim(M) == 0;
}

template <class K>
bool same_dims(const Representation<K>& M, const Representation<K>& N) {
  return M.dims == N.dims;
}

// Action of a path: the product of its arrow matrices in traversal order.
template <class K>
Matrix<K> path_action(const Algebra<K>& A, const Representation<K>& M, const Path& w) {
  (void)A;
  if (w.trivial()) return Matrix<K>::identity(M.dims[w.src]);
  Matrix<K> r = M.arrow[w.arrows.front()];
  for (std::size_t i = 1; i < w.arrows.size(); ++i) r = r * M.arrow[w.arrows[i]];
  return r;
}

// Structural and relation checks; throws with a description on failure.
template <class K>
void require_valid(const Algebra<K>& A, const Representation<K>& M) {
  if (static_cast<int>(M.dims.size()) != A.num_vertices())
    throw std::invalid_argument("representation: dimension vector has wrong length");
  if (static_cast<int>(M.arrow.size()) != A.num_arrows())
    throw std::invalid_argument("representation: wrong number of arrow matrices");
  for (int a = 0; a < A.num_arrows(); ++a) {
    if (M.arrow[a].rows() != M.dims[A.arrow_src(a)] ||
        M.arrow[a].cols() != M.dims[A.arrow_tgt(a)])
      throw std::invalid_argument("representation: matrix for arrow '" + A.arrow_name(a) +
                                  "' must be " + std::to_string(M.dims[A.arrow_src(a)]) + "x" +
                                  std::to_string(M.dims[A.arrow_tgt(a)]));
  }
  const QuiverDescription& d = A.description();
  for (std::size_t ri = 0; ri < d.relations.size(); ++ri) {
    const Relation& rel = d.relations[ri];
    Matrix<K> sum;
    bool first = true;
    for (const RelationTerm& t : rel.terms) {
      K c = A.parse_coef(t.coef);
      Path p;
      for (const std::string& name : t.arrows) p.arrows.push_back(d.arrow_index(name));
      p.src = A.arrow_src(p.arrows.front());
      p.tgt = A.arrow_tgt(p.arrows.back());
      Matrix<K> term = c * path_action(A, M, p);
      if (first) { sum = term; first = false; }
      else sum = sum + term;
    }
    if (!sum.is_zero())
      throw std::invalid_argument("representation: relation " + std::to_string(ri + 1) +
                                  " does not act by zero");
  }
}

template <class K>
Representation<K> simple_rep(const Algebra<K>& A, int v) {
  Representation<K> M = zero_representation(A);
  M.dims[v] = 1;
  for (int a = 0; a < A.num_arrows(); ++a)
    M.arrow[a] = Matrix<K>(M.dims[A.arrow_src(a)], M.dims[A.arrow_tgt(a)]);
  return M;
}

// P_i = Lambda e_i: the space at v has basis the words v -> i, and an arrow acts
// by prepending itself (then rewriting).
template <class K>
Representation<K> projective_rep(const Algebra<K>& A, int i) {
  Representation<K> M;
  std::vector<std::vector<int>> basis(A.num_vertices());
  for (int v = 0; v < A.num_vertices(); ++v) basis[v] = A.words_from_to(v, i);
  for (int v = 0; v < A.num_vertices(); ++v)
    M.dims.push_back(static_cast<int>(basis[v].size()));
  for (int a = 0; a < A.num_arrows(); ++a) {
    int s = A.arrow_src(a), t = A.arrow_tgt(a);
    Matrix<K> act(M.dims[s], M.dims[t]);
    for (std::size_t col = 0; col < basis[t].size(); ++col) {
      AlgElem<K> prod = A.mul(A.arrow_elem(a), A.from_word(basis[t][col]));
      for (std::size_t row = 0; row < basis[s].size(); ++row)
        act.at(static_cast<int>(row), static_cast<int>(col)) = prod.c[basis[s][row]];
    }
    M.arrow.push_back(std::move(act));
  }
  return M;
}

// I_i = D(e_i Lambda): the space at v is dual to the words i -> v, and an arrow
// acts by the transpose of appending itself.
template <class K>
Representation<K> injective_rep(const Algebra<K>& A, int i) {
  Representation<K> M;
  std::vector<std::vector<int>> basis(A.num_vertices());
  for (int v = 0; v < A.num_vertices(); ++v) basis[v] = A.words_from_to(i, v);
  for (int v = 0; v < A.num_vertices(); ++v)
    M.dims.push_back(static_cast<int>(basis[v].size()));
  for (int a = 0; a < A.num_arrows(); ++a) {
    int s = A.arrow_src(a), t = A.arrow_tgt(a);
    // append : e_i Lambda e_s -> e_i Lambda e_t, w -> w*a
    Matrix<K> app(M.dims[t], M.dims[s]);
    for (std::size_t col = 0; col < basis[s].size(); ++col) {
      AlgElem<K> prod = A.mul(A.from_word(basis[s][col]), A.arrow_elem(a));
      for (std::size_t row = 0; row < basis[t].size(); ++row)
        app.at(static_cast<int>(row), static_cast<int>(col)) = prod.c[basis[t][row]];
    }
    M.arrow.push_back(app.transpose());
  }
  return M;
}

template <class K>
Representation<K> direct_sum(const Representation<K>& M, const Representation<K>& N) {
  Representation<K> S;
  for (std::size_t v = 0; v < M.dims.size(); ++v) S.dims.push_back(M.dims[v] + N.dims[v]);
  for (std::size_t a = 0; a < M.arrow.size(); ++a) {
    // Block diagonal, M's coordinates first.
    Matrix<K> blk(M.arrow[a].rows() + N.arrow[a].rows(), M.arrow[a].cols() + N.arrow[a].cols());
    blk.set_block(0, 0, M.arrow[a]);
    blk.set_block(M.arrow[a].rows(), M.arrow[a].cols(), N.arrow[a]);
    S.arrow.push_back(std::move(blk));
  }
  return S;
}

// ---------------------------------------------------------------------------
// Morphisms.

template <class K>
bool is_morphism(const Algebra<K>& A, const Representation<K>& M, const Representation<K>& N,
                 const RepMorphism<K>& f) {
  for (int a = 0; a < A.num_arrows(); ++a) {
    int s = A.arrow_src(a), t = A.arrow_tgt(a);
    if ((f.at[s] * M.arrow[a]) != (N.arrow[a] * f.at[t])) return false;
  }
  return true;
}

template <class K>
bool morphism_is_zero(const RepMorphism<K>& f) {
  for (const Matrix<K>& m : f.at)
    if (!m.is_zero()) return false;
  return true;
}

template <class K>
RepMorphism<K> zero_morphism(const Representation<K>& M, const Representation<K>& N) {
  RepMorphism<K> f;
  for (std::size_t v = 0; v < M.dims.size(); ++v)
    f.at.push_back(Matrix<K>(N.dims[v], M.dims[v]));
  return f;
}

template <class K>
RepMorphism<K> identity_morphism(const Representation<K>& M) {
  RepMorphism<K> f;
  for (int d : M.dims) f.at.push_back(Matrix<K>::identity(d));
  return f;
}

// "first f, then g"
template <class K>
RepMorphism<K> then_compose(const RepMorphism<K>& f, const RepMorphism<K>& g) {
  RepMorphism<K> h;
  for (std::size_t v = 0; v < f.at.size(); ++v) h.at.push_back(g.at[v] * f.at[v]);
  return h;
}

template <class K>
RepMorphism<K> morphism_add(const RepMorphism<K>& f, const RepMorphism<K>& g) {
  RepMorphism<K> h;
  for (std::size_t v = 0; v < f.at.size(); ++v) h.at.push_back(f.at[v] + g.at[v]);
  return h;
}

template <class K>
RepMorphism<K> morphism_scale(const K& c, const RepMorphism<K>& f) {
  RepMorphism<K> h;
  for (std::size_t v = 0; v < f.at.size(); ++v) h.at.push_back(c * f.at[v]);
  return h;
}

// Basis of Hom(M, N): vectorize the per-vertex unknowns f_v and impose
// f_{s(a)} M_a = N_a f_{t(a)} for every arrow.
template <class K>
std::vector<RepMorphism<K>> hom_space(const Algebra<K>& A, const Representation<K>& M,
                                      const Representation<K>& N) {
  int n = A.num_vertices();
  std::vector<int> offset(n + 1, 0);
  for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + N.dims[v] * M.dims[v];
  int unknowns = offset[n];
  int n_eq = 0;
  for (int a = 0; a < A.num_arrows(); ++a)
    n_eq += N.dims[A.arrow_src(a)] * M.dims[A.arrow_tgt(a)];
  // Route every entry through the algebra's unit so the system and the basis
  // morphisms are modulus-aligned even when M, N were written down with plain
  // integer literals.
  const K& one = A.one();
  Matrix<K> sys(n_eq, unknowns);
  int row = 0;
  for (int a = 0; a < A.num_arrows(); ++a) {
    int s = A.arrow_src(a), t = A.arrow_tgt(a);
    for (int i = 0; i < N.dims[s]; ++i)
      for (int j = 0; j < M.dims[t]; ++j) {
        // sum_k f_s[i,k] M_a[k,j] - sum_l N_a[i,l] f_t[l,j] = 0
        for (int k = 0; k < M.dims[s]; ++k)
          sys.at(row, offset[s] + i * M.dims[s] + k) += one * M.arrow[a].at(k, j);
        for (int l = 0; l < N.dims[t]; ++l)
          sys.at(row, offset[t] + l * M.dims[t] + j) -= one * N.arrow[a].at(i, l);
        ++row;
      }
  }
  std::vector<RepMorphism<K>> out;
  for (const std::vector<K>& sol : kernel_basis(sys)) {
    RepMorphism<K> f;
    for (int v = 0; v < n; ++v) {
      Matrix<K> m(N.dims[v], M.dims[v]);
      for (int i = 0; i < N.dims[v]; ++i)
        for (int j = 0; j < M.dims[v]; ++j)
          m.at(i, j) = one * sol[offset[v] + i * M.dims[v] + j];
      f.at.push_back(std::move(m));
    }
    out.push_back(std::move(f));
  }
  return out;
}

template <class K>
int hom_dim(const Algebra<K>& A, const Representation<K>& M, const Representation<K>& N) {
  return static_cast<int>(hom_space(A, M, N).size());
}

template <class K>
bool is_injective_morphism(const RepMorphism<K>& f) {
  for (const Matrix<K>& m : f.at)
    if (rank(m) != m.cols()) return false;
  return true;
}

template <class K>
bool is_surjective_morphism(const RepMorphism<K>& f) {
  for (const Matrix<K>& m : f.at)
    if (rank(m) != m.rows()) return false;
  return true;
}

template <class K>
struct SubObject {
  Representation<K> rep;
  RepMorphism<K> incl;  // rep -> ambient
};

template <class K>
struct QuotObject {
  Representation<K> rep;
  RepMorphism<K> proj;  // ambient -> rep
};

// Restrict the ambient action to per-vertex subspaces that are known to be
// stable (columns of incl[v] span the subspace at v).
template <class K>
SubObject<K> subrepresentation_on(const Algebra<K>& A, const Representation<K>& M,
                                  const std::vector<Matrix<K>>& incl) {
  SubObject<K> out;
  for (int v = 0; v < A.num_vertices(); ++v) out.rep.dims.push_back(incl[v].cols());
  for (int a = 0; a < A.num_arrows(); ++a) {
    int s = A.arrow_src(a), t = A.arrow_tgt(a);
    auto act = solve_matrix(incl[s], M.arrow[a] * incl[t]);
    if (!act)
      throw std::invalid_argument("subrepresentation_on: subspaces are not arrow-stable");
    out.rep.arrow.push_back(std::move(*act));
  }
  out.incl.at = incl;
  return out;
}

template <class K>
SubObject<K> kernel_of(const Algebra<K>& A, const Representation<K>& M,
                       const Representation<K>& N, const RepMorphism<K>& f) {
  (void)N;
  std::vector<Matrix<K>> incl;
  for (int v = 0; v < A.num_vertices(); ++v) {
    auto basis = kernel_basis(f.at[v]);
    Matrix<K> B(M.dims[v], static_cast<int>(basis.size()));
    for (std::size_t c = 0; c < basis.size(); ++c)
      for (int i = 0; i < M.dims[v]; ++i) B.at(i, static_cast<int>(c)) = basis[c][i];
    incl.push_back(std::move(B));
  }
  return subrepresentation_on(A, M, incl);
}

template <class K>
SubObject<K> image_of(const Algebra<K>& A, const Representation<K>& M,
                      const Representation<K>& N, const RepMorphism<K>& f) {
  (void)M;
  std::vector<Matrix<K>> incl;
  for (int v = 0; v < A.num_vertices(); ++v) {
    Rref<K> r = rref(f.at[v]);
    Matrix<K> B(N.dims[v], r.rank);
    for (int c = 0; c < r.rank; ++c)
      for (int i = 0; i < N.dims[v]; ++i) B.at(i, c) = f.at[v].at(i, r.pivot_cols[c]);
    incl.push_back(std::move(B));
  }
  return subrepresentation_on(A, N, incl);
}

template <class K>
QuotObject<K> cokernel_of(const Algebra<K>& A, const Representation<K>& M,
                          const Representation<K>& N, const RepMorphism<K>& f) {
  (void)M;
  QuotObject<K> out;
  std::vector<Matrix<K>> proj;
  for (int v = 0; v < A.num_vertices(); ++v) {
    // Rows spanning the left kernel of f_v give a surjection with kernel im f_v.
    auto rows = kernel_basis(f.at[v].transpose());
    Matrix<K> Q(static_cast<int>(rows.size()), N.dims[v]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (int j = 0; j < N.dims[v]; ++j) Q.at(static_cast<int>(r), j) = rows[r][j];
    proj.push_back(std::move(Q));
    out.rep.dims.push_back(static_cast<int>(rows.size()));
  }
  for (int a = 0; a < A.num_arrows(); ++a) {
    int s = A.arrow_src(a), t = A.arrow_tgt(a);
    auto act = solve_matrix_left(proj[t], proj[s] * N.arrow[a]);
    if (!act) throw std::logic_error("cokernel_of: induced action failed to solve");
    out.rep.arrow.push_back(std::move(*act));
  }
  out.proj.at = std::move(proj);
  return out;
}

// Quotient of M by the submodule spanned by the (arrow-stable) subspaces.
template <class K>
QuotObject<K> quotient_by(const Algebra<K>& A, const Representation<K>& M,
                          const std::vector<Matrix<K>>& sub_incl) {
  RepMorphism<K> f;
  f.at = sub_incl;
  Representation<K> S;  // only dims are consulted by cokernel_of
  for (const Matrix<K>& m : sub_incl) S.dims.push_back(m.cols());
  return cokernel_of(A, S, M, f);
}

}  // namespace siltlab
