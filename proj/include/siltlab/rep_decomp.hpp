#pragma once
// Direct-sum decomposition with certified indecomposability, isomorphism
// testing, bounded enumeration of indecomposable modules, Fac membership via
// trace submodules, and submodule enumeration over prime fields.
//
// Decomposition searches for a splitting endomorphism (Fitting's lemma applied
// to basis endomorphisms, their pairwise sums, eigenvalue shifts, and seeded
// random combinations).  A piece is *certified* indecomposable when its
// endomorphism algebra E is proved local: the radical of the trace form tr(xy)
// always contains rad E, so once it is verified nilpotent it equals rad E, and
// E is local iff E/rad E is a division algebra.  We recognise that when the
// quotient has dimension one, or is commutative and generated by one element
// whose minimal polynomial has degree at most three and is certifiably
// irreducible.  Anything else is reported honestly as uncertified.

#include "siltlab/rep_ops.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace siltlab {

struct DecomposeOptions {
  std::uint64_t seed = 20240901;
  int random_tries = 40;
};

template <class K>
std::vector<K> morphism_entries(const RepMorphism<K>& f) {
  std::vector<K> v;
  for (const Matrix<K>& m : f.at)
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

template <class K>
bool morphism_invertible(const RepMorphism<K>& f) {
  for (const Matrix<K>& m : f.at) {
    if (m.rows() != m.cols()) return false;
    if (rank(m) != m.rows()) return false;
  }
  return true;
}

// Deterministic textual key; not an isomorphism invariant, only a total order.
template <class K>
std::string rep_key(const Representation<K>& M) {
  std::ostringstream os;
  for (int d : M.dims) os << d << ',';
  os << '|';
  for (const Matrix<K>& m : M.arrow) {
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) os << m.at(i, j).to_string() << ',';
    os << ';';
  }
  return os.str();
}

namespace decomp_detail {

using boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Exact number-theory helpers used by the certification routes.

inline bool is_prime_certain(const cpp_int& n) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  cpp_int d = n - 1;
  int s = 0;
  while (d % 2 == 0) { d /= 2; ++s; }
  // Deterministic Miller-Rabin: this base set is exact for n < 3.3e24.
  for (int b : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    cpp_int x = boost::multiprecision::powm(cpp_int(b), d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i < s - 1; ++i) {
      x = (x * x) % n;
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

// Positive divisors of |n|, or nullopt when a complete factorization is out of
// reach (the callers then refuse to certify rather than guess).
inline std::optional<std::vector<cpp_int>> all_divisors(cpp_int n) {
  if (n < 0) n = -n;
  if (n == 0) return std::nullopt;
  if (n > cpp_int("1000000000000000000")) return std::nullopt;
  std::vector<std::pair<cpp_int, int>> fac;
  auto push = [&](const cpp_int& p) {
    for (auto& pe : fac)
      if (pe.first == p) { ++pe.second; return; }
    fac.push_back({p, 1});
  };
  for (cpp_int p = 2; p * p <= n && p <= 1000000; p == 2 ? p = 3 : p += 2)
    while (n % p == 0) { push(p); n /= p; }
  if (n > 1) {
    if (n <= cpp_int("1000000000000") || is_prime_certain(n)) push(n);
    else return std::nullopt;
  }
  std::vector<cpp_int> div{1};
  for (const auto& pe : fac) {
    std::size_t base = div.size();
    cpp_int pk = 1;
    for (int e = 1; e <= pe.second; ++e) {
      pk *= pe.first;
      for (std::size_t i = 0; i < base; ++i) {
        div.push_back(div[i] * pk);
        if (div.size() > 5000) return std::nullopt;
      }
    }
  }
  std::sort(div.begin(), div.end());
  return div;
}

inline Rational rational_from_cpp(const cpp_int& num, const cpp_int& den) {
  std::string s = num.str() + "/" + den.str();
  return Rational::parse(s);
}

// All rational roots of a polynomial with rational coefficients (low degree
// first).  nullopt means "could not certify the complete list".
inline std::optional<std::vector<Rational>> rational_roots(std::vector<Rational> c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  if (c.empty()) return std::nullopt;  // zero polynomial: every value is a root
  std::vector<Rational> roots;
  std::size_t low = 0;
  while (low < c.size() && c[low].is_zero()) ++low;
  if (low > 0) roots.push_back(Rational(0));
  if (low + 1 == c.size()) {  // c_n t^n: only the root 0
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  // Clear denominators of c[low..].
  cpp_int L = 1;
  for (std::size_t i = low; i < c.size(); ++i) {
    cpp_int d = boost::multiprecision::denominator(c[i].value());
    L = L / boost::multiprecision::gcd(L, d) * d;
  }
  std::vector<cpp_int> ic;
  for (std::size_t i = low; i < c.size(); ++i) {
    Rational scaled = rational_from_cpp(L, 1) * c[i];
    ic.push_back(boost::multiprecision::numerator(scaled.value()));
  }
  auto d0 = all_divisors(ic.front());
  auto dn = all_divisors(ic.back());
  if (!d0 || !dn) return std::nullopt;
  auto eval = [&](const Rational& x) {
    Rational v(0);
    for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
  };
  for (const cpp_int& r : *d0)
    for (const cpp_int& s : *dn) {
      if (boost::multiprecision::gcd(r, s) != 1) continue;
      Rational x = rational_from_cpp(r, s);
      if (eval(x).is_zero()) roots.push_back(x);
      Rational nx = Rational(0) - x;
      if (eval(nx).is_zero()) roots.push_back(nx);
    }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

inline bool is_square_rational(const Rational& r) {
  if (r.sign() < 0) return false;
  if (r.is_zero()) return true;
  cpp_int num = boost::multiprecision::numerator(r.value());
  cpp_int den = boost::multiprecision::denominator(r.value());
  cpp_int sn = boost::multiprecision::sqrt(num), sd = boost::multiprecision::sqrt(den);
  return sn * sn == num && sd * sd == den;
}

inline long long mulmod_ll(long long a, long long b, long long p) {
  return static_cast<long long>((static_cast<__int128>(a) * b) % p);
}

inline long long powmod_ll(long long b, long long e, long long p) {
  long long r = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1) r = mulmod_ll(r, b, p);
    b = mulmod_ll(b, b, p);
    e >>= 1;
  }
  return r;
}

inline bool fp_is_square(long long d, long long p) {
  d %= p;
  if (d < 0) d += p;
  if (d == 0 || p == 2) return true;
  return powmod_ll(d, (p - 1) / 2, p) == 1;
}

// ---------------------------------------------------------------------------
// Endomorphism algebra in coordinates.

template <class K>
struct EndAlgebra {
  std::vector<RepMorphism<K>> basis;
  Matrix<K> bmat;                                 // columns = vectorized basis
  std::vector<std::vector<std::vector<K>>> prod;  // prod[i][j] = coords of (f_i then f_j)
  std::vector<K> id_coords;
  int n = 0;
};

template <class K>
std::vector<K> coords_in(const Matrix<K>& bmat, const std::vector<K>& v) {
  auto s = solve(bmat, v);
  if (!s) throw std::logic_error("endomorphism coordinates failed to solve");
  return *s;
}

template <class K>
EndAlgebra<K> build_end_algebra(const Algebra<K>& A, const Representation<K>& M) {
  EndAlgebra<K> E;
  E.basis = hom_space(A, M, M);
  E.n = static_cast<int>(E.basis.size());
  std::vector<K> v0 = morphism_entries(E.basis.empty() ? identity_morphism(M) : E.basis[0]);
  E.bmat = Matrix<K>(static_cast<int>(v0.size()), E.n);
  for (int j = 0; j < E.n; ++j) {
    std::vector<K> v = morphism_entries(E.basis[j]);
    for (std::size_t i = 0; i < v.size(); ++i) E.bmat.at(static_cast<int>(i), j) = v[i];
  }
  E.prod.assign(E.n, std::vector<std::vector<K>>(E.n));
  for (int i = 0; i < E.n; ++i)
    for (int j = 0; j < E.n; ++j)
      E.prod[i][j] = coords_in(E.bmat, morphism_entries(then_compose(E.basis[i], E.basis[j])));
  E.id_coords = coords_in(E.bmat, morphism_entries(identity_morphism(M)));
  return E;
}

template <class K>
std::vector<K> end_mult(const EndAlgebra<K>& E, const std::vector<K>& a, const std::vector<K>& b) {
  std::vector<K> out(E.n, K(0));
  for (int i = 0; i < E.n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < E.n; ++j) {
      if (b[j].is_zero()) continue;
      K c = a[i] * b[j];
      for (int k = 0; k < E.n; ++k) out[k] += c * E.prod[i][j][k];
    }
  }
  return out;
}

// Echelonized row-space basis of a list of coordinate vectors.
template <class K>
Matrix<K> row_space(const std::vector<std::vector<K>>& rows, int width) {
  Matrix<K> m(static_cast<int>(rows.size()), width);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < width; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
  Rref<K> r = rref(m);
  Matrix<K> out(r.rank, width);
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < width; ++j) out.at(i, j) = r.mat.at(i, j);
  return out;
}

template <class K>
K trace_of(const RepMorphism<K>& f) {
  K t(0);
  for (const Matrix<K>& m : f.at)
    for (int i = 0; i < m.rows(); ++i) t += m.at(i, i);
  return t;
}

// The ideal spanned by the given coordinate rows is nilpotent iff iterated
// products with itself reach zero; ideal powers form a descending chain, so a
// stable nonzero rank proves the opposite.
template <class K>
bool span_is_nilpotent(const EndAlgebra<K>& E, const Matrix<K>& T) {
  Matrix<K> cur = T;
  for (int iter = 0; iter <= E.n + 1; ++iter) {
    if (cur.rows() == 0) return true;
    std::vector<std::vector<K>> prods;
    for (int i = 0; i < cur.rows(); ++i)
      for (int j = 0; j < T.rows(); ++j) {
        std::vector<K> a(E.n), b(E.n);
        for (int k = 0; k < E.n; ++k) { a[k] = cur.at(i, k); b[k] = T.at(j, k); }
        prods.push_back(end_mult(E, a, b));
      }
    Matrix<K> nxt = row_space(prods, E.n);
    if (nxt.rows() == cur.rows()) return false;
    cur = nxt;
  }
  return cur.rows() == 0;
}

template <class K>
struct QuotientAlgebra {
  std::vector<int> comp;   // complement coordinate indices
  Matrix<K> solver;        // [T-basis columns | unit columns], square
  int tdim = 0, qdim = 0;
  std::vector<std::vector<std::vector<K>>> prod;  // quotient structure constants
  std::vector<K> id;
};

template <class K>
std::vector<K> quotient_project(const QuotientAlgebra<K>& Q, const std::vector<K>& x) {
  auto y = solve(Q.solver, x);
  if (!y) throw std::logic_error("quotient projection failed");
  return std::vector<K>(y->begin() + Q.tdim, y->end());
}

template <class K>
QuotientAlgebra<K> build_quotient(const EndAlgebra<K>& E, const Matrix<K>& T) {
  QuotientAlgebra<K> Q;
  Q.tdim = T.rows();
  Q.qdim = E.n - Q.tdim;
  // Greedily extend the T-rows by unit vectors to a basis.
  std::vector<std::vector<K>> rows;
  for (int i = 0; i < T.rows(); ++i) {
    std::vector<K> r(E.n);
    for (int j = 0; j < E.n; ++j) r[j] = T.at(i, j);
    rows.push_back(std::move(r));
  }
  int have = T.rows();
  for (int j = 0; j < E.n && have < E.n; ++j) {
    std::vector<K> unit(E.n, K(0));
    unit[j] = K(1);
    rows.push_back(unit);
    if (row_space(rows, E.n).rows() == have + 1) {
      Q.comp.push_back(j);
      ++have;
    } else {
      rows.pop_back();
    }
  }
  Q.solver = Matrix<K>(E.n, E.n);
  for (int i = 0; i < T.rows(); ++i)
    for (int j = 0; j < E.n; ++j) Q.solver.at(j, i) = T.at(i, j);
  for (int c = 0; c < Q.qdim; ++c) Q.solver.at(Q.comp[c], Q.tdim + c) = K(1);
  Q.prod.assign(Q.qdim, std::vector<std::vector<K>>(Q.qdim));
  for (int a = 0; a < Q.qdim; ++a)
    for (int b = 0; b < Q.qdim; ++b)
      Q.prod[a][b] = quotient_project(Q, E.prod[Q.comp[a]][Q.comp[b]]);
  Q.id = quotient_project(Q, E.id_coords);
  return Q;
}

template <class K>
std::vector<K> quotient_mult(const QuotientAlgebra<K>& Q, const std::vector<K>& a,
                             const std::vector<K>& b) {
  std::vector<K> out(Q.qdim, K(0));
  for (int i = 0; i < Q.qdim; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < Q.qdim; ++j) {
      if (b[j].is_zero()) continue;
      K c = a[i] * b[j];
      for (int k = 0; k < Q.qdim; ++k) out[k] += c * Q.prod[i][j][k];
    }
  }
  return out;
}

// Minimal polynomial of x inside the quotient: returns the monic coefficient
// list (low degree first) once a power becomes dependent on earlier ones.
template <class K>
std::vector<K> quotient_min_poly(const QuotientAlgebra<K>& Q, const std::vector<K>& x) {
  std::vector<std::vector<K>> pw{Q.id};
  for (int k = 1; k <= Q.qdim + 1; ++k) {
    std::vector<K> nxt = quotient_mult(Q, pw.back(), x);
    Matrix<K> P(Q.qdim, static_cast<int>(pw.size()));
    for (std::size_t c = 0; c < pw.size(); ++c)
      for (int r = 0; r < Q.qdim; ++r) P.at(r, static_cast<int>(c)) = pw[c][r];
    if (auto sol = solve(P, nxt)) {
      std::vector<K> monic;
      for (const K& s : *sol) monic.push_back(K(0) - s);
      monic.push_back(K(1));
      return monic;  // degree = pw.size()
    }
    pw.push_back(std::move(nxt));
  }
  throw std::logic_error("minimal polynomial search did not terminate");
}

enum class Cert { Yes, No, Unknown };

// Irreducibility of a monic polynomial of degree <= 3 (degree 1 is reducible
// by convention here: it means the quotient element fails to generate a field
// extension larger than the scalars, which the callers handle separately).
template <class K>
Cert irreducible_low_degree(const Algebra<K>& A, const std::vector<K>& monic) {
  int deg = static_cast<int>(monic.size()) - 1;
  if (deg <= 1) return Cert::No;
  if constexpr (std::is_same_v<K, Rational>) {
    (void)A;
    if (deg == 2) {
      Rational disc = monic[1] * monic[1] - Rational(4) * monic[0];
      return is_square_rational(disc) ? Cert::No : Cert::Yes;
    }
    if (deg == 3) {
      std::vector<Rational> c(monic.begin(), monic.end());
      auto roots = rational_roots(c);
      if (!roots) return Cert::Unknown;
      return roots->empty() ? Cert::Yes : Cert::No;
    }
    return Cert::Unknown;
  } else {
    long long p = A.fp_modulus();
    if (deg == 2 && p > 2) {
      long long b = monic[1].residue(), c0 = monic[0].residue();
      long long disc = ((b * b - 4 * c0) % p + p) % p;
      return fp_is_square(disc, p) ? Cert::No : Cert::Yes;
    }
    if (p <= 65536) {
      for (long long t = 0; t < p; ++t) {
        K v(0);
        for (std::size_t i = monic.size(); i-- > 0;) v = v * K(t) + monic[i];
        if (v.is_zero()) return Cert::No;
      }
      return Cert::Yes;
    }
    return Cert::Unknown;
  }
}

// ---------------------------------------------------------------------------
// Splitting search.

template <class K>
std::optional<std::pair<SubObject<K>, SubObject<K>>> try_fitting_split(
    const Algebra<K>& A, const Representation<K>& M, const RepMorphism<K>& g) {
  auto rank_sum = [&](const RepMorphism<K>& f) {
    int s = 0;
    for (const Matrix<K>& m : f.at) s += rank(m);
    return s;
  };
  RepMorphism<K> cur = g;
  for (int iter = 0; iter < 32; ++iter) {
    RepMorphism<K> nxt = then_compose(cur, cur);
    if (rank_sum(nxt) == rank_sum(cur)) break;
    cur = std::move(nxt);
  }
  int r = rank_sum(cur);
  if (r == 0 || r == total_dim(M)) return std::nullopt;
  return std::make_pair(kernel_of(A, M, M, cur), image_of(A, M, M, cur));
}

// Rational eigenvalue candidates of an endomorphism: certified rational roots
// of the per-vertex characteristic polynomials (computed by interpolation).
inline std::vector<Rational> eigen_candidates(const Algebra<Rational>&,
                                              const RepMorphism<Rational>& f) {
  std::vector<Rational> out;
  for (const Matrix<Rational>& m : f.at) {
    int d = m.rows();
    if (d == 0) continue;
    Matrix<Rational> V(d + 1, d + 1);
    std::vector<Rational> vals;
    for (int i = 0; i <= d; ++i) {
      Rational t(i), tp(1);
      for (int j = 0; j <= d; ++j) { V.at(i, j) = tp; tp = tp * t; }
      Matrix<Rational> shifted = m;
      for (int k = 0; k < d; ++k) shifted.at(k, k) -= t;
      vals.push_back(det(shifted));
    }
    auto coeffs = solve(V, vals);
    if (!coeffs) continue;
    if (auto roots = rational_roots(*coeffs))
      for (const Rational& r : *roots) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<Fp> eigen_candidates(const Algebra<Fp>& A, const RepMorphism<Fp>&) {
  std::vector<Fp> out;
  long long p = A.fp_modulus();
  if (p <= 257) {
    for (long long t = 0; t < p; ++t) out.push_back(Fp(t, static_cast<std::uint32_t>(p)));
  } else {
    for (long long t = 0; t <= 4; ++t) out.push_back(Fp(t, static_cast<std::uint32_t>(p)));
    for (long long t = p - 4; t < p; ++t) out.push_back(Fp(t, static_cast<std::uint32_t>(p)));
  }
  return out;
}

template <class K>
std::optional<std::pair<SubObject<K>, SubObject<K>>> find_split(
    const Algebra<K>& A, const Representation<K>& M, const DecomposeOptions& opts) {
  std::vector<RepMorphism<K>> basis = hom_space(A, M, M);
  if (basis.size() <= 1) return std::nullopt;
  RepMorphism<K> id = identity_morphism(M);
  for (const auto& f : basis)
    if (auto s = try_fitting_split(A, M, f)) return s;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (auto s = try_fitting_split(A, M, morphism_add(basis[i], basis[j]))) return s;
  for (const auto& f : basis)
    for (const K& lam : eigen_candidates(A, f)) {
      RepMorphism<K> g = morphism_add(f, morphism_scale(K(0) - lam, id));
      if (auto s = try_fitting_split(A, M, g)) return s;
    }
  std::mt19937_64 rng(opts.seed ^ (static_cast<std::uint64_t>(total_dim(M)) << 20) ^
                      basis.size());
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int t = 0; t < opts.random_tries; ++t) {
    RepMorphism<K> g = zero_morphism(M, M);
    for (const auto& f : basis) g = morphism_add(g, morphism_scale(K(coef(rng)), f));
    if (auto s = try_fitting_split(A, M, g)) return s;
  }
  return std::nullopt;
}

template <class K>
void decompose_rec(const Algebra<K>& A, const Representation<K>& M,
                   const DecomposeOptions& opts, std::vector<Representation<K>>& out) {
  if (total_dim(M) == 0) return;
  if (auto s = find_split(A, M, opts)) {
    decompose_rec(A, s->first.rep, opts, out);
    decompose_rec(A, s->second.rep, opts, out);
    return;
  }
  out.push_back(M);
}

}  // namespace decomp_detail

// ---------------------------------------------------------------------------
// Certification and the public decomposition interface.

template <class K>
bool certify_indecomposable(const Algebra<K>& A, const Representation<K>& M) {
  using namespace decomp_detail;
  if (total_dim(M) == 0) return false;
  EndAlgebra<K> E = build_end_algebra(A, M);
  if (E.n == 1) return true;
  Matrix<K> G(E.n, E.n);
  for (int i = 0; i < E.n; ++i)
    for (int j = 0; j < E.n; ++j)
      G.at(i, j) = trace_of(then_compose(E.basis[i], E.basis[j]));
  auto tr = kernel_basis(G);
  Matrix<K> T = row_space(tr, E.n);
  if (!span_is_nilpotent(E, T)) return false;
  int qdim = E.n - T.rows();
  if (qdim == 1) return true;
  QuotientAlgebra<K> Q = build_quotient(E, T);
  for (int a = 0; a < Q.qdim; ++a)
    for (int b = a + 1; b < Q.qdim; ++b)
      if (Q.prod[a][b] != Q.prod[b][a]) return false;
  // Candidate generators: complement units and their pairwise sums.
  std::vector<std::vector<K>> gens;
  for (int a = 0; a < Q.qdim; ++a) {
    std::vector<K> u(Q.qdim, K(0));
    u[a] = K(1);
    gens.push_back(u);
  }
  for (int a = 0; a < Q.qdim; ++a)
    for (int b = a + 1; b < Q.qdim; ++b) {
      std::vector<K> u(Q.qdim, K(0));
      u[a] = K(1);
      u[b] = K(1);
      gens.push_back(u);
    }
  for (const auto& x : gens) {
    std::vector<K> mp = quotient_min_poly(Q, x);
    int deg = static_cast<int>(mp.size()) - 1;
    if (deg != Q.qdim) continue;  // does not generate the quotient
    Cert c = irreducible_low_degree(A, mp);
    if (c == Cert::Yes) return true;
    if (c == Cert::No) return false;  // the quotient is visibly not a field
  }
  return false;
}

template <class K>
struct DecompositionPiece {
  Representation<K> rep;
  int multiplicity = 1;
  bool certified = false;
};

template <class K>
struct Decomposition {
  std::vector<DecompositionPiece<K>> pieces;
  bool all_certified = true;
};

template <class K>
bool is_isomorphic(const Algebra<K>& A, const Representation<K>& M,
                   const Representation<K>& N, std::uint64_t seed = 20240901) {
  if (M.dims != N.dims) return false;
  if (total_dim(M) == 0) return true;
  std::vector<RepMorphism<K>> H = hom_space(A, M, N);
  if (H.empty()) return false;
  for (const auto& h : H)
    if (morphism_invertible(h)) return true;
  std::vector<RepMorphism<K>> Gm = hom_space(A, N, M);
  for (const auto& h : H)
    for (const auto& g : Gm)
      if (morphism_invertible(then_compose(h, g))) return true;
  for (std::size_t i = 0; i < H.size(); ++i)
    for (std::size_t j = i + 1; j < H.size(); ++j)
      if (morphism_invertible(morphism_add(H[i], H[j]))) return true;
  std::mt19937_64 rng(seed ^ H.size());
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int t = 0; t < 40; ++t) {
    RepMorphism<K> g = zero_morphism(M, N);
    for (const auto& h : H) g = morphism_add(g, morphism_scale(K(coef(rng)), h));
    if (morphism_invertible(g)) return true;
  }
  return false;
}

template <class K>
Decomposition<K> decompose(const Algebra<K>& A, const Representation<K>& M,
                           const DecomposeOptions& opts = {}) {
  std::vector<Representation<K>> raw;
  decomp_detail::decompose_rec(A, M, opts, raw);
  Decomposition<K> out;
  for (const Representation<K>& piece : raw) {
    bool grouped = false;
    for (auto& g : out.pieces)
      if (is_isomorphic(A, g.rep, piece, opts.seed)) {
        ++g.multiplicity;
        grouped = true;
        break;
      }
    if (!grouped) out.pieces.push_back({piece, 1, false});
  }
  for (auto& g : out.pieces) {
    g.certified = certify_indecomposable(A, g.rep);
    if (!g.certified) out.all_certified = false;
  }
  std::sort(out.pieces.begin(), out.pieces.end(),
            [](const DecompositionPiece<K>& a, const DecompositionPiece<K>& b) {
              int ta = total_dim(a.rep), tb = total_dim(b.rep);
              if (ta != tb) return ta < tb;
              if (a.rep.dims != b.rep.dims) return a.rep.dims < b.rep.dims;
              return rep_key(a.rep) < rep_key(b.rep);
            });
  return out;
}

// Indecomposability verdict: when decomposition splits the module the answer
// is a certified "no"; when it does not, the answer is "yes" with the
// certification flag of the single piece.
template <class K>
struct IndecVerdict {
  bool indecomposable = false;
  bool certified = false;
};

template <class K>
IndecVerdict<K> is_indecomposable(const Algebra<K>& A, const Representation<K>& M,
                                  const DecomposeOptions& opts = {}) {
  Decomposition<K> d = decompose(A, M, opts);
  IndecVerdict<K> v;
  if (d.pieces.size() == 1 && d.pieces[0].multiplicity == 1) {
    v.indecomposable = true;
    v.certified = d.pieces[0].certified;
  } else {
    v.indecomposable = false;
    v.certified = true;  // a split is an explicit witness
  }
  return v;
}

// ---------------------------------------------------------------------------
// Bounded enumeration of indecomposables.

struct EnumerateOptions {
  int dim_bound = 12;          // total dimension cap for universe members
  int sweep_total_dim = 4;     // exhaustive {0,1}-matrix sweep up to this size
  int sweep_entry_budget = 12; // skip sweep shapes with more matrix entries
  int max_modules = 512;
  std::uint64_t seed = 20240901;
};

template <class K>
struct ModuleUniverse {
  std::vector<Representation<K>> modules;
  std::vector<bool> certified;
  bool complete = true;
  std::vector<std::string> notes;
};

template <class K>
ModuleUniverse<K> enumerate_indecomposables(const Algebra<K>& A,
                                            const EnumerateOptions& opts = {}) {
  ModuleUniverse<K> U;
  U.notes.push_back(
      "universe = tau-orbit closure of projectives, injectives, and simples, "
      "seeded with an exhaustive {0,1}-matrix sweep; 'complete' means the closure "
      "terminated without discarding any candidate at the bounds");
  DecomposeOptions dopts;
  dopts.seed = opts.seed;
  std::vector<Representation<K>> work;
  auto add_indec = [&](const Representation<K>& piece, bool cert) {
    if (total_dim(piece) == 0) return;
    if (total_dim(piece) > opts.dim_bound) {
      if (U.complete) U.notes.push_back("truncated at the dimension bound");
      U.complete = false;
      return;
    }
    for (const auto& m : U.modules)
      if (is_isomorphic(A, m, piece, opts.seed)) return;
    if (static_cast<int>(U.modules.size()) >= opts.max_modules) {
      if (U.complete) U.notes.push_back("truncated at the module budget");
      U.complete = false;
      return;
    }
    U.modules.push_back(piece);
    U.certified.push_back(cert);
    work.push_back(piece);
  };
  auto add_module = [&](const Representation<K>& M) {
    Decomposition<K> d = decompose(A, M, dopts);
    for (const auto& p : d.pieces) add_indec(p.rep, p.certified);
  };
  for (int i = 0; i < A.num_vertices(); ++i) {
    add_module(projective_rep(A, i));
    add_module(injective_rep(A, i));
    add_module(simple_rep(A, i));
  }
  // Exhaustive sweep over small dimension vectors with {0,1} matrix entries.
  std::vector<int> dims(A.num_vertices(), 0);
  std::vector<std::vector<int>> shapes;
  std::function<void(int, int)> gen = [&](int v, int left) {
    if (v == A.num_vertices()) {
      if (std::accumulate(dims.begin(), dims.end(), 0) > 0) shapes.push_back(dims);
      return;
    }
    for (int d = 0; d <= left; ++d) {
      dims[v] = d;
      gen(v + 1, left - d);
    }
    dims[v] = 0;
  };
  gen(0, opts.sweep_total_dim);
  bool sweep_skipped = false;
  for (const auto& shape : shapes) {
    int entries = 0;
    for (int a = 0; a < A.num_arrows(); ++a)
      entries += shape[A.arrow_src(a)] * shape[A.arrow_tgt(a)];
    if (entries > opts.sweep_entry_budget) {
      sweep_skipped = true;
      continue;
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << entries); ++mask) {
      Representation<K> M;
      M.dims = shape;
      int bit = 0;
      for (int a = 0; a < A.num_arrows(); ++a) {
        Matrix<K> m(shape[A.arrow_src(a)], shape[A.arrow_tgt(a)]);
        for (int i = 0; i < m.rows(); ++i)
          for (int j = 0; j < m.cols(); ++j) m.at(i, j) = K((mask >> bit++) & 1);
        M.arrow.push_back(std::move(m));
      }
      try {
        require_valid(A, M);
      } catch (const std::invalid_argument&) {
        continue;
      }
      add_module(M);
    }
  }
  if (sweep_skipped)
    U.notes.push_back("sweep skipped shapes above the entry budget");
  // Closure under the translate in both directions.
  Algebra<K> Aop = A.opposite();
  std::size_t head = 0;
  std::vector<Representation<K>> queue = work;
  while (head < queue.size()) {
    Representation<K> M = queue[head++];
    std::size_t before = work.size();
    add_module(tau_translate(A, M));
    add_module(tau_inverse_translate(A, Aop, M));
    for (std::size_t i = before; i < work.size(); ++i) queue.push_back(work[i]);
  }
  // Deterministic presentation order.
  std::vector<std::size_t> idx(U.modules.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    int ta = total_dim(U.modules[a]), tb = total_dim(U.modules[b]);
    if (ta != tb) return ta < tb;
    if (U.modules[a].dims != U.modules[b].dims) return U.modules[a].dims < U.modules[b].dims;
    return rep_key(U.modules[a]) < rep_key(U.modules[b]);
  });
  ModuleUniverse<K> out;
  out.complete = U.complete;
  out.notes = U.notes;
  for (std::size_t i : idx) {
    out.modules.push_back(U.modules[i]);
    out.certified.push_back(U.certified[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fac membership: N is a quotient of a finite sum of the generators iff the
// trace submodule (sum of images of all morphisms from the generators) is all
// of N.  Summing over a basis of each Hom space is exact.

template <class K>
SubObject<K> trace_submodule(const Algebra<K>& A, const std::vector<Representation<K>>& gens,
                             const Representation<K>& N) {
  std::vector<Matrix<K>> stacked;
  for (int v = 0; v < A.num_vertices(); ++v) stacked.push_back(Matrix<K>(N.dims[v], 0));
  for (const auto& G : gens)
    for (const auto& f : hom_space(A, G, N))
      for (int v = 0; v < A.num_vertices(); ++v)
        stacked[v] = Matrix<K>::hstack(stacked[v], f.at[v]);
  std::vector<Matrix<K>> incl;
  for (int v = 0; v < A.num_vertices(); ++v) {
    Rref<K> r = rref(stacked[v]);
    Matrix<K> B(N.dims[v], r.rank);
    for (int c = 0; c < r.rank; ++c)
      for (int i = 0; i < N.dims[v]; ++i) B.at(i, c) = stacked[v].at(i, r.pivot_cols[c]);
    incl.push_back(std::move(B));
  }
  return subrepresentation_on(A, N, incl);
}

template <class K>
bool module_in_fac(const Algebra<K>& A, const std::vector<Representation<K>>& gens,
                   const Representation<K>& N) {
  if (total_dim(N) == 0) return true;
  return trace_submodule(A, gens, N).rep.dims == N.dims;
}

// ---------------------------------------------------------------------------
// Submodule enumeration over a prime field: every submodule is a sum of
// cyclic ones, so close the lattice under joins with cyclic submodules.

template <class K>
struct SubmoduleInfo {
  std::vector<int> dims;
  std::vector<Matrix<K>> incl;
};

struct SubmoduleOptions {
  std::size_t budget = 20000;
};

template <class K>
std::vector<SubmoduleInfo<K>> enumerate_submodules(const Algebra<K>& A,
                                                   const Representation<K>& N,
                                                   const SubmoduleOptions& opts = {}) {
  if constexpr (std::is_same_v<K, Rational>) {
    (void)A; (void)N; (void)opts;
    throw std::runtime_error(
        "submodule enumeration needs a finite field (the lattice is infinite over Q)");
  } else {
    long long p = A.fp_modulus();
    int n = A.num_vertices();
    // Subspace state: per-vertex echelonized row bases.
    using State = std::vector<Matrix<K>>;
    auto key_of = [&](const State& s) {
      std::ostringstream os;
      for (const Matrix<K>& m : s) {
        os << m.rows() << ':';
        for (int i = 0; i < m.rows(); ++i)
          for (int j = 0; j < m.cols(); ++j) os << m.at(i, j).to_string() << ',';
        os << ';';
      }
      return os.str();
    };
    auto join = [&](const State& a, const State& b) {
      State out;
      for (int v = 0; v < n; ++v) {
        std::vector<std::vector<K>> rows;
        for (int i = 0; i < a[v].rows(); ++i) {
          std::vector<K> r(N.dims[v]);
          for (int j = 0; j < N.dims[v]; ++j) r[j] = a[v].at(i, j);
          rows.push_back(std::move(r));
        }
        for (int i = 0; i < b[v].rows(); ++i) {
          std::vector<K> r(N.dims[v]);
          for (int j = 0; j < N.dims[v]; ++j) r[j] = b[v].at(i, j);
          rows.push_back(std::move(r));
        }
        out.push_back(decomp_detail::row_space(rows, N.dims[v]));
      }
      return out;
    };
    // Cyclic submodule generated by one vector at one vertex: close the
    // per-vertex spans under all arrow actions.
    auto cyclic = [&](int v0, const std::vector<K>& w) {
      std::vector<std::vector<std::vector<K>>> spans(n);
      spans[v0].push_back(w);
      bool changed = true;
      while (changed) {
        changed = false;
        State cur;
        for (int v = 0; v < n; ++v) cur.push_back(decomp_detail::row_space(spans[v], N.dims[v]));
        for (int a = 0; a < A.num_arrows(); ++a) {
          int s = A.arrow_src(a), t = A.arrow_tgt(a);
          for (int i = 0; i < cur[t].rows(); ++i) {
            std::vector<K> r(N.dims[t]);
            for (int j = 0; j < N.dims[t]; ++j) r[j] = cur[t].at(i, j);
            std::vector<K> img = N.arrow[a].apply(r);
            std::vector<std::vector<K>> test = spans[s];
            test.push_back(img);
            if (decomp_detail::row_space(test, N.dims[s]).rows() >
                decomp_detail::row_space(spans[s], N.dims[s]).rows()) {
              spans[s].push_back(img);
              changed = true;
            }
          }
        }
      }
      State out;
      for (int v = 0; v < n; ++v) out.push_back(decomp_detail::row_space(spans[v], N.dims[v]));
      return out;
    };
    // All cyclic submodules: one per projective-line representative.
    std::vector<State> cyc;
    std::map<std::string, bool> cyc_seen;
    for (int v = 0; v < n; ++v) {
      int d = N.dims[v];
      if (d == 0) continue;
      double count = 1;
      for (int i = 0; i < d; ++i) count *= p;
      if (count > 200000)
        throw std::runtime_error("submodule enumeration: vector space at a vertex is too large");
      std::vector<long long> digits(d, 0);
      while (true) {
        int pos = 0;
        while (pos < d && digits[pos] == p - 1) { digits[pos] = 0; ++pos; }
        if (pos == d) break;
        ++digits[pos];
        // canonical representative: first nonzero digit equals 1
        int first = -1;
        for (int i = 0; i < d; ++i)
          if (digits[i] != 0) { first = i; break; }
        if (first < 0 || digits[first] != 1) continue;
        std::vector<K> w(d);
        for (int i = 0; i < d; ++i) w[i] = K(digits[i], static_cast<std::uint32_t>(p));
        State c = cyclic(v, w);
        std::string k = key_of(c);
        if (!cyc_seen.count(k)) { cyc_seen[k] = true; cyc.push_back(std::move(c)); }
      }
    }
    // BFS over joins.
    State zero;
    for (int v = 0; v < n; ++v) zero.push_back(Matrix<K>(0, N.dims[v]));
    std::map<std::string, State> known;
    known[key_of(zero)] = zero;
    std::deque<State> q{zero};
    while (!q.empty()) {
      State s = q.front();
      q.pop_front();
      for (const State& c : cyc) {
        State j = join(s, c);
        std::string k = key_of(j);
        if (known.count(k)) continue;
        if (known.size() >= opts.budget)
          throw std::runtime_error("submodule enumeration exceeded the budget");
        known[k] = j;
        q.push_back(j);
      }
    }
    std::vector<SubmoduleInfo<K>> out;
    for (const auto& [k, s] : known) {
      (void)k;
      SubmoduleInfo<K> info;
      for (int v = 0; v < n; ++v) {
        info.dims.push_back(s[v].rows());
        info.incl.push_back(s[v].transpose());
      }
      out.push_back(std::move(info));
    }
    std::sort(out.begin(), out.end(), [](const SubmoduleInfo<K>& a, const SubmoduleInfo<K>& b) {
      int ta = std::accumulate(a.dims.begin(), a.dims.end(), 0);
      int tb = std::accumulate(b.dims.begin(), b.dims.end(), 0);
      if (ta != tb) return ta < tb;
      return a.dims < b.dims;
    });
    return out;
  }
}

}  // namespace siltlab
