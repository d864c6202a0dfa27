// Independent brute-force oracles shared by the unit suites and the
// acceptance gate.  They work on dense module matrices and vectorized
// linear systems only -- none of the word-basis machinery of the library
// routes they are checked against.
#pragma once

#include "siltlab/representation.hpp"
#include "siltlab/rep_ops.hpp"
#include "siltlab/twoterm.hpp"

#include <stdexcept>
#include <vector>

namespace oracles {

using namespace siltlab;

// Independent intertwiner-space oracle: column-major vectorization and
// Kronecker-product constraints (M_a^T (x) I) vec(f_s) = (I (x) N_a) vec(f_t),
// assembled per arrow into one big system.
template <class K>
int brute_hom_dim(const Algebra<K>& A, const Representation<K>& M, const Representation<K>& N) {
  int n = A.num_vertices();
  std::vector<int> off(n + 1, 0);
  for (int v = 0; v < n; ++v) off[v + 1] = off[v] + N.dims[v] * M.dims[v];
  // column-major index of f_v entry (i, j): off[v] + j * N.dims[v] + i
  int rows = 0;
  for (int a = 0; a < A.num_arrows(); ++a)
    rows += N.dims[A.arrow_src(a)] * M.dims[A.arrow_tgt(a)];
  Matrix<K> sys(rows, off[n]);
  int r0 = 0;
  for (int a = 0; a < A.num_arrows(); ++a) {
    int s = A.arrow_src(a), t = A.arrow_tgt(a);
    const Matrix<K>& Ma = M.arrow[a];
    const Matrix<K>& Na = N.arrow[a];
    // Equation block: rows indexed (j < M.dims[t], i < N.dims[s]) column-major.
    for (int j = 0; j < M.dims[t]; ++j)
      for (int i = 0; i < N.dims[s]; ++i) {
        int row = r0 + j * N.dims[s] + i;
        for (int k = 0; k < M.dims[s]; ++k)
          sys.at(row, off[s] + k * N.dims[s] + i) += Ma.at(k, j);
        for (int l = 0; l < N.dims[t]; ++l)
          sys.at(row, off[t] + j * N.dims[t] + l) -= Na.at(i, l);
      }
    r0 += N.dims[s] * M.dims[t];
  }
  return static_cast<int>(kernel_basis(sys).size());
}

// Flatten a pair of morphisms into one coordinate vector of all matrix entries.
template <class K>
std::vector<K> flatten_pair(const RepMorphism<K>& f1, const RepMorphism<K>& f0) {
  std::vector<K> v;
  for (const Matrix<K>& m : f1.at)
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  for (const Matrix<K>& m : f0.at)
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

template <class K>
std::vector<K> flatten_one(const RepMorphism<K>& f) {
  std::vector<K> v;
  for (const Matrix<K>& m : f.at)
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

// dim Hom_K(X, Y) via module morphisms: chain pairs (f1, f0) of intertwiners
// with d_X f0 = f1 d_Y, modulo pairs induced by h : X^0 -> Y^{-1}.
template <class K>
int brute_hom_k_dim(const Algebra<K>& A, const TwoTermComplex<K>& X,
                    const TwoTermComplex<K>& Y) {
  ProjSum<K> x1 = build_proj_sum(A, X.v1), x0 = build_proj_sum(A, X.v0);
  ProjSum<K> y1 = build_proj_sum(A, Y.v1), y0 = build_proj_sum(A, Y.v0);
  RepMorphism<K> dx = elem_to_morphism(A, x1, x0, X.d);
  RepMorphism<K> dy = elem_to_morphism(A, y1, y0, Y.d);
  auto B1 = hom_space(A, x1.rep, y1.rep);
  auto B0 = hom_space(A, x0.rep, y0.rep);
  // Chain condition in the coefficient space of (B1, B0).
  std::vector<std::vector<K>> cols;
  for (const auto& f1 : B1) cols.push_back(flatten_one(then_compose(f1, dy)));
  for (const auto& f0 : B0) {
    auto v = flatten_one(then_compose(dx, f0));
    for (K& x : v) x = K(0) - x;
    cols.push_back(std::move(v));
  }
  int rows = cols.empty() ? 0 : static_cast<int>(cols[0].size());
  Matrix<K> sys(rows, static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < rows; ++i) sys.at(i, static_cast<int>(j)) = cols[j][i];
  auto chain = kernel_basis(sys);
  // Null-homotopic pairs, as vectors in the same coefficient space: express
  // (dx h, h dy) in the bases B1, B0 by solving against their flattenings.
  auto H = hom_space(A, x0.rep, y1.rep);
  std::vector<std::vector<K>> nulls;
  if (!H.empty()) {
    // coordinates of an arbitrary pair w.r.t. (B1, B0)
    std::vector<std::vector<K>> basis_vecs;
    for (const auto& f1 : B1) basis_vecs.push_back(flatten_pair(f1, zero_morphism(x0.rep, y0.rep)));
    for (const auto& f0 : B0) basis_vecs.push_back(flatten_pair(zero_morphism(x1.rep, y1.rep), f0));
    int prows = basis_vecs.empty() ? 0 : static_cast<int>(basis_vecs[0].size());
    Matrix<K> bm(prows, static_cast<int>(basis_vecs.size()));
    for (std::size_t j = 0; j < basis_vecs.size(); ++j)
      for (int i = 0; i < prows; ++i) bm.at(i, static_cast<int>(j)) = basis_vecs[j][i];
    for (const auto& h : H) {
      auto target = flatten_pair(then_compose(dx, h), then_compose(h, dy));
      auto sol = solve(bm, target);
      if (!sol.has_value())
        throw std::logic_error("brute_hom_k_dim: null-homotopic pair escaped the chain basis");
      nulls.push_back(*sol);
    }
  }
  Matrix<K> nm(static_cast<int>(cols.size()), static_cast<int>(nulls.size()));
  for (std::size_t j = 0; j < nulls.size(); ++j)
    for (std::size_t i = 0; i < nulls[j].size(); ++i)
      nm.at(static_cast<int>(i), static_cast<int>(j)) = nulls[j][i];
  return static_cast<int>(chain.size()) - rank(nm);
}

// dim E(X, Y) via module morphisms: Hom(X^{-1}, Y^0) intertwiners modulo
// s dy and dx t.
template <class K>
int brute_ext_dim(const Algebra<K>& A, const TwoTermComplex<K>& X, const TwoTermComplex<K>& Y) {
  ProjSum<K> x1 = build_proj_sum(A, X.v1), x0 = build_proj_sum(A, X.v0);
  ProjSum<K> y1 = build_proj_sum(A, Y.v1), y0 = build_proj_sum(A, Y.v0);
  RepMorphism<K> dx = elem_to_morphism(A, x1, x0, X.d);
  RepMorphism<K> dy = elem_to_morphism(A, y1, y0, Y.d);
  int total = hom_dim(A, x1.rep, y0.rep);
  std::vector<std::vector<K>> image;
  for (const auto& s : hom_space(A, x1.rep, y1.rep))
    image.push_back(flatten_one(then_compose(s, dy)));
  for (const auto& t : hom_space(A, x0.rep, y0.rep))
    image.push_back(flatten_one(then_compose(dx, t)));
  int rows = image.empty() ? 0 : static_cast<int>(image[0].size());
  Matrix<K> im(rows, static_cast<int>(image.size()));
  for (std::size_t j = 0; j < image.size(); ++j)
    for (int i = 0; i < rows; ++i) im.at(i, static_cast<int>(j)) = image[j][i];
  return total - rank(im);
}

}  // namespace oracles
