#pragma once
// The bound quiver algebra Lambda = kQ/I as a finite-dimensional algebra with a
// distinguished path basis.
//
// Paths compose left to right: p*q means "first p, then q" and needs
// target(p) = source(q).  The basis of Lambda is the set of normal words of a
// completed rewriting system (a noncommutative Groebner basis for the relation
// ideal under the length-then-lex order).  This keeps everything exact:
//   - normal words are found by completing the relation set and enumerating
//     tip-free paths, not by truncating spans at a guessed degree;
//   - multiplication is "concatenate, then rewrite to normal form";
//   - admissibility of the ideal is certified afterwards by driving the powers
//     of the arrow ideal to zero inside the finished algebra.  If the powers
//     stabilize at a nonzero subspace the ideal is not admissible and build()
//     refuses the input.
// Budgets (word length, word count, rule count) guard the completion; hitting
// one raises an error instead of returning a guess.

#include "siltlab/field.hpp"
#include "siltlab/matrix.hpp"
#include "siltlab/quiver.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace siltlab {

struct Path {
  int src = 0, tgt = 0;       // vertex indices
  std::vector<int> arrows;    // arrow indices in traversal order; empty = trivial path
  int length() const { return static_cast<int>(arrows.size()); }
  bool trivial() const { return arrows.empty(); }
  friend bool operator==(const Path&, const Path&) = default;
};

// Length, then source, then arrow sequence.  Multiplicative for parallel paths,
// which is all the rewriting engine compares.
struct PathLess {
  bool operator()(const Path& a, const Path& b) const {
    if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
    if (a.src != b.src) return a.src < b.src;
    return a.arrows < b.arrows;
  }
};

struct PathBasisOptions {
  int max_word_length = 24;
  int max_words = 8192;
  int max_rules = 512;
};

template <class K>
using PathPoly = std::map<Path, K, PathLess>;

namespace gb_detail {

struct QuiverShape {
  int n_vertices = 0;
  std::vector<int> asrc, atgt;  // per arrow, vertex indices
};

inline Path concat(const Path& p, const Path& q) {
  Path r;
  r.src = p.src;
  r.tgt = q.tgt;
  r.arrows = p.arrows;
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  return r;
}

template <class K>
void add_term(PathPoly<K>& f, const Path& p, const K& c) {
  auto it = f.find(p);
  if (it == f.end()) {
    if (!c.is_zero()) f.emplace(p, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) f.erase(it);
}

template <class K>
void add_poly(PathPoly<K>& f, const PathPoly<K>& g, const K& scale) {
  for (const auto& [p, c] : g) add_term(f, p, scale * c);
}

template <class K>
PathPoly<K> sandwich(const Path& u, const PathPoly<K>& f, const Path& v) {
  PathPoly<K> out;
  for (const auto& [p, c] : f) out.emplace(concat(concat(u, p), v), c);
  return out;
}

// Position of tip's arrow sequence inside p, or -1.
inline int find_subpath(const Path& p, const Path& tip) {
  int n = p.length(), m = tip.length();
  for (int i = 0; i + m <= n; ++i) {
    bool ok = true;
    for (int j = 0; j < m; ++j)
      if (p.arrows[i + j] != tip.arrows[j]) { ok = false; break; }
    if (ok) return i;
  }
  return -1;
}

template <class K>
struct Rule {
  Path tip;           // leading path, coefficient 1 in full
  PathPoly<K> full;   // tip + tail
};

template <class K>
class Rewriter {
public:
  Rewriter(QuiverShape shape, PathBasisOptions opt) : shape_(std::move(shape)), opt_(opt) {}

  Path slice(const Path& p, int pos, int len) const {
    Path r;
    r.arrows.assign(p.arrows.begin() + pos, p.arrows.begin() + pos + len);
    r.src = pos == 0 ? p.src : shape_.atgt[p.arrows[pos - 1]];
    r.tgt = len == 0 ? r.src : shape_.atgt[r.arrows.back()];
    return r;
  }

  PathPoly<K> nf(PathPoly<K> f) const {
    for (;;) {
      const Path* hit_path = nullptr;
      const Rule<K>* hit_rule = nullptr;
      int hit_pos = -1;
      for (auto it = f.rbegin(); it != f.rend() && !hit_rule; ++it) {
        for (const Rule<K>& r : rules_) {
          int pos = find_subpath(it->first, r.tip);
          if (pos >= 0) {
            hit_path = &it->first;
            hit_rule = &r;
            hit_pos = pos;
            break;
          }
        }
      }
      if (!hit_rule) return f;
      Path p = *hit_path;
      K c = f.at(p);
      Path u = slice(p, 0, hit_pos);
      Path v = slice(p, hit_pos + hit_rule->tip.length(),
                     p.length() - hit_pos - hit_rule->tip.length());
      PathPoly<K> repl = sandwich(u, hit_rule->full, v);
      add_poly(f, repl, -c);  // cancels the term at p, adds smaller ones
    }
  }

  // Buchberger/Knuth-Bendix completion on the relation polynomials.
  void complete(const std::vector<PathPoly<K>>& gens) {
    for (const PathPoly<K>& g : gens) {
      PathPoly<K> r = nf(g);
      if (!r.empty()) add_rule(std::move(r));
    }
    interreduce();
    bool changed = true;
    int sweeps = 0;
    while (changed) {
      if (++sweeps > 1000)
        throw std::runtime_error("path basis: rewriting completion did not stabilize");
      changed = false;
      std::size_t count = rules_.size();
      for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
          if (i >= rules_.size() || j >= rules_.size()) break;
          const Path t1 = rules_[i].tip;
          const Path t2 = rules_[j].tip;
          int l1 = t1.length(), l2 = t2.length();
          for (int o = 1; o < std::min(l1, l2); ++o) {
            bool match = true;
            for (int k = 0; k < o; ++k)
              if (t1.arrows[l1 - o + k] != t2.arrows[k]) { match = false; break; }
            if (!match) continue;
            // w = t1 glued with t2 over an overlap of length o; the two
            // one-step rewrites of w differ by s = u*tail_j - tail_i*z.
            Path u = slice_of(t1, 0, l1 - o);
            Path z = slice_of(t2, o, l2 - o);
            PathPoly<K> tail_i = tail_of(rules_[i]);
            PathPoly<K> tail_j = tail_of(rules_[j]);
            PathPoly<K> s = sandwich(u, tail_j, trivial_at(t2.tgt));
            PathPoly<K> rhs = sandwich(trivial_at(t1.src), tail_i, z);
            add_poly(s, rhs, K(-1));
            PathPoly<K> red = nf(std::move(s));
            if (!red.empty()) {
              add_rule(std::move(red));
              interreduce();
              changed = true;
            }
          }
        }
      }
    }
  }

  const std::vector<Rule<K>>& rules() const { return rules_; }

private:
  QuiverShape shape_;
  PathBasisOptions opt_;
  std::vector<Rule<K>> rules_;

  Path trivial_at(int v) const { return Path{v, v, {}}; }
  Path slice_of(const Path& p, int pos, int len) const { return slice(p, pos, len); }

  static PathPoly<K> tail_of(const Rule<K>& r) {
    PathPoly<K> t = r.full;
    t.erase(r.tip);
    return t;
  }

  void add_rule(PathPoly<K> f) {
    auto lead = f.rbegin();
    K inv = lead->second.inverse();
    PathPoly<K> monic;
    for (const auto& [p, c] : f) monic.emplace(p, inv * c);
    Rule<K> r;
    r.tip = monic.rbegin()->first;
    r.full = std::move(monic);
    if (r.tip.length() > opt_.max_word_length)
      throw std::runtime_error(
          "path basis: rewriting rule exceeds the word length bound (" +
          std::to_string(opt_.max_word_length) + "); raise the bound or check the relations");
    rules_.push_back(std::move(r));
    if (static_cast<int>(rules_.size()) > opt_.max_rules)
      throw std::runtime_error("path basis: rewriting system exceeds the rule budget (" +
                               std::to_string(opt_.max_rules) + ")");
  }

  void interreduce() {
    bool stable = false;
    while (!stable) {
      stable = true;
      for (std::size_t k = 0; k < rules_.size(); ++k) {
        Rule<K> r = rules_[k];
        rules_.erase(rules_.begin() + k);
        PathPoly<K> red = nf(r.full);
        if (red == r.full) {
          rules_.insert(rules_.begin() + k, std::move(r));
        } else {
          stable = false;
          if (!red.empty()) add_rule(std::move(red));
          break;
        }
      }
    }
  }
};

template <class K>
K parse_scalar(const std::string& s, std::uint32_t modulus) {
  if constexpr (std::is_same_v<K, Fp>) {
    return Fp::parse(s, modulus);
  } else {
    (void)modulus;
    return K::parse(s);
  }
}

}  // namespace gb_detail

// Element of Lambda: dense coordinates over the path basis.
template <class K>
struct AlgElem {
  std::vector<K> c;
  bool is_zero() const {
    for (const K& x : c)
      if (!x.is_zero()) return false;
    return true;
  }
  friend bool operator==(const AlgElem& a, const AlgElem& b) { return a.c == b.c; }
};

template <class K>
class Algebra {
public:
  static Algebra build(const QuiverDescription& d, PathBasisOptions opt = {},
                       std::uint32_t fp_modulus = 0) {
    Algebra A;
    A.desc_ = d;
    A.opt_ = opt;
    if constexpr (std::is_same_v<K, Fp>) {
      A.modulus_ = fp_modulus ? fp_modulus : (d.has_field && !d.field_is_q ? d.modulus : 0);
      if (A.modulus_ == 0)
        throw std::runtime_error("algebra over Fp needs a modulus (file field line or override)");
    } else {
      A.modulus_ = 0;
    }
    // Every scalar the algebra hands out is derived from this unit, so over Fp
    // all coefficients carry the modulus from the start (a bare K(1) would not).
    A.one_ = gb_detail::parse_scalar<K>("1", A.modulus_);

    int n = static_cast<int>(d.vertex_labels.size());
    gb_detail::QuiverShape shape;
    shape.n_vertices = n;
    for (const ArrowDecl& a : d.arrows) {
      shape.asrc.push_back(d.vertex_index(a.src_label));
      shape.atgt.push_back(d.vertex_index(a.tgt_label));
    }
    A.shape_ = shape;

    // Relation polynomials.
    std::vector<PathPoly<K>> gens;
    for (const Relation& r : d.relations) {
      PathPoly<K> f;
      for (const RelationTerm& t : r.terms) {
        K c = gb_detail::parse_scalar<K>(t.coef, A.modulus_);
        if (c.is_zero()) continue;
        Path p;
        for (const std::string& name : t.arrows) p.arrows.push_back(d.arrow_index(name));
        p.src = shape.asrc[p.arrows.front()];
        p.tgt = shape.atgt[p.arrows.back()];
        gb_detail::add_term(f, p, c);
      }
      if (!f.empty()) gens.push_back(std::move(f));
    }

    A.rw_ = std::make_shared<gb_detail::Rewriter<K>>(shape, opt);
    A.rw_->complete(gens);

    // Normal words, level by level.  A word is normal iff no rule tip occurs in
    // it; extending a normal word by one arrow can only create a tip at the end.
    std::vector<Path> level;
    for (int v = 0; v < n; ++v) {
      level.push_back(Path{v, v, {}});
      A.words_.push_back(level.back());
    }
    int len = 0;
    while (!level.empty()) {
      if (len >= opt.max_word_length)
        throw std::runtime_error(
            "path basis: words of length " + std::to_string(opt.max_word_length) +
            " survive all relations; the algebra is not finite-dimensional within the bound");
      ++len;
      std::vector<Path> next;
      for (const Path& w : level) {
        for (std::size_t a = 0; a < shape.asrc.size(); ++a) {
          if (shape.asrc[a] != w.tgt) continue;
          Path w2 = w;
          w2.arrows.push_back(static_cast<int>(a));
          w2.tgt = shape.atgt[a];
          bool reducible = false;
          for (const auto& rule : A.rw_->rules()) {
            int m = rule.tip.length();
            if (m > w2.length()) continue;
            bool match = true;
            for (int k = 0; k < m; ++k)
              if (w2.arrows[w2.length() - m + k] != rule.tip.arrows[k]) { match = false; break; }
            if (match) { reducible = true; break; }
          }
          if (!reducible) next.push_back(std::move(w2));
        }
      }
      for (const Path& w : next) A.words_.push_back(w);
      if (static_cast<int>(A.words_.size()) > opt.max_words)
        throw std::runtime_error("path basis: dimension exceeds the word budget (" +
                                 std::to_string(opt.max_words) + ")");
      level = std::move(next);
    }
    std::sort(A.words_.begin(), A.words_.end(), [](const Path& x, const Path& y) {
      return PathLess{}(x, y);
    });
    for (std::size_t i = 0; i < A.words_.size(); ++i)
      A.index_.emplace(A.words_[i], static_cast<int>(i));
    A.trivial_idx_.assign(n, -1);
    for (int v = 0; v < n; ++v) A.trivial_idx_[v] = A.index_.at(Path{v, v, {}});

    // Multiplication table: table_[i][j] = coordinates of nf(w_i * w_j).
    int dim = A.dim();
    A.table_.assign(dim, std::vector<std::vector<K>>(dim));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        std::vector<K> row(dim);
        if (A.words_[i].tgt == A.words_[j].src) {
          PathPoly<K> f;
          f.emplace(gb_detail::concat(A.words_[i], A.words_[j]), A.one_);
          for (const auto& [p, c] : A.rw_->nf(std::move(f))) row[A.index_.at(p)] = c;
        }
        A.table_[i][j] = std::move(row);
      }

    A.certify_admissible();
    return A;
  }

  int dim() const { return static_cast<int>(words_.size()); }
  int num_vertices() const { return static_cast<int>(desc_.vertex_labels.size()); }
  int num_arrows() const { return static_cast<int>(desc_.arrows.size()); }
  int vertex_label(int v) const { return desc_.vertex_labels.at(v); }
  int vertex_of_label(int label) const { return desc_.vertex_index(label); }
  int arrow_src(int a) const { return shape_.asrc.at(a); }
  int arrow_tgt(int a) const { return shape_.atgt.at(a); }
  const std::string& arrow_name(int a) const { return desc_.arrows.at(a).name; }
  std::uint32_t fp_modulus() const { return modulus_; }
  const QuiverDescription& description() const { return desc_; }
  const PathBasisOptions& options() const { return opt_; }

  // Nilpotency index m of the arrow ideal: smallest m with r^m = 0; every path
  // of length >= m lies in the relation ideal.
  int nilpotency_index() const { return m_; }

  const Path& word(int i) const { return words_.at(i); }
  int word_src(int i) const { return words_.at(i).src; }
  int word_tgt(int i) const { return words_.at(i).tgt; }
  int word_len(int i) const { return words_.at(i).length(); }
  int word_index(const Path& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
  }
  int trivial_word_index(int v) const { return trivial_idx_.at(v); }
  int arrow_word_index(int a) const {
    return index_.at(Path{shape_.asrc[a], shape_.atgt[a], {a}});
  }

  // Basis words lying in e_s Lambda e_t (paths s -> t); these index Hom(P_s, P_t).
  std::vector<int> words_from_to(int s, int t) const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
      if (words_[i].src == s && words_[i].tgt == t) out.push_back(i);
    return out;
  }

  std::string word_name(int i) const {
    const Path& p = words_.at(i);
    if (p.trivial()) return "e_" + std::to_string(vertex_label(p.src));
    std::string s;
    for (std::size_t k = 0; k < p.arrows.size(); ++k) {
      if (k) s += "*";
      s += desc_.arrows[p.arrows[k]].name;
    }
    return s;
  }

  AlgElem<K> zero_elem() const { return AlgElem<K>{std::vector<K>(dim())}; }
  AlgElem<K> from_word(int i) const {
    AlgElem<K> x = zero_elem();
    x.c.at(i) = one_;
    return x;
  }
  AlgElem<K> unit(int v) const { return from_word(trivial_idx_.at(v)); }
  AlgElem<K> identity() const {
    AlgElem<K> x = zero_elem();
    for (int v = 0; v < num_vertices(); ++v) x.c[trivial_idx_[v]] = one_;
    return x;
  }
  // The field unit, modulus-aligned over Fp; use this instead of K(1) when
  // building matrices whose other entries come from a representation.
  const K& one() const { return one_; }
  AlgElem<K> arrow_elem(int a) const { return from_word(arrow_word_index(a)); }

  AlgElem<K> add(const AlgElem<K>& x, const AlgElem<K>& y) const {
    AlgElem<K> r = x;
    for (int i = 0; i < dim(); ++i) r.c[i] += y.c[i];
    return r;
  }
  AlgElem<K> sub(const AlgElem<K>& x, const AlgElem<K>& y) const {
    AlgElem<K> r = x;
    for (int i = 0; i < dim(); ++i) r.c[i] -= y.c[i];
    return r;
  }
  AlgElem<K> scale(const K& s, const AlgElem<K>& x) const {
    AlgElem<K> r = x;
    for (int i = 0; i < dim(); ++i) r.c[i] = s * r.c[i];
    return r;
  }
  AlgElem<K> mul(const AlgElem<K>& x, const AlgElem<K>& y) const {
    AlgElem<K> r = zero_elem();
    for (int i = 0; i < dim(); ++i) {
      if (x.c[i].is_zero()) continue;
      for (int j = 0; j < dim(); ++j) {
        if (y.c[j].is_zero()) continue;
        const std::vector<K>& t = table_[i][j];
        K f = x.c[i] * y.c[j];
        for (int k = 0; k < dim(); ++k)
          if (!t[k].is_zero()) r.c[k] += f * t[k];
      }
    }
    return r;
  }

  // Is x supported on words s -> t only?
  bool elem_in_component(const AlgElem<K>& x, int s, int t) const {
    for (int i = 0; i < dim(); ++i)
      if (!x.c[i].is_zero() && (words_[i].src != s || words_[i].tgt != t)) return false;
    return true;
  }

  // Units of the local algebra e_v Lambda e_v: nonzero coefficient on e_v.
  bool is_local_unit(const AlgElem<K>& x, int v) const {
    return elem_in_component(x, v, v) && !x.c[trivial_idx_[v]].is_zero();
  }

  AlgElem<K> local_inverse(const AlgElem<K>& x, int v) const {
    if (!is_local_unit(x, v))
      throw std::invalid_argument("local_inverse: element is not a unit of e_v Lambda e_v");
    K c0 = x.c[trivial_idx_[v]];
    K c0inv = c0.inverse();
    // x = c0 (e_v + u) with u nilpotent; invert by the finite geometric series.
    AlgElem<K> u = scale(c0inv, x);
    u.c[trivial_idx_[v]] -= K(1);
    AlgElem<K> acc = unit(v);
    AlgElem<K> pow = unit(v);
    for (int k = 1; k < m_; ++k) {
      pow = mul(pow, u);
      if (pow.is_zero()) break;
      acc = (k % 2) ? sub(acc, pow) : add(acc, pow);
    }
    return scale(c0inv, acc);
  }

  std::string elem_to_string(const AlgElem<K>& x) const {
    if (x.is_zero()) return "0";
    std::string out;
    for (int i = 0; i < dim(); ++i) {
      if (x.c[i].is_zero()) continue;
      std::string cs = x.c[i].to_string();
      bool neg = !cs.empty() && cs[0] == '-';
      std::string mag = neg ? cs.substr(1) : cs;
      if (out.empty()) out += neg ? "- " : "";
      else out += neg ? " - " : " + ";
      if (mag != "1") out += mag + " ";
      out += word_name(i);
    }
    return out;
  }

  K parse_coef(const std::string& s) const { return gb_detail::parse_scalar<K>(s, modulus_); }

  Algebra opposite() const {
    QuiverDescription od = desc_;
    for (ArrowDecl& a : od.arrows) std::swap(a.src_label, a.tgt_label);
    for (Relation& r : od.relations)
      for (RelationTerm& t : r.terms) std::reverse(t.arrows.begin(), t.arrows.end());
    return build(od, opt_, modulus_);
  }

private:
  QuiverDescription desc_;
  PathBasisOptions opt_;
  gb_detail::QuiverShape shape_;
  std::uint32_t modulus_ = 0;
  K one_ = K(1);
  std::shared_ptr<gb_detail::Rewriter<K>> rw_;
  std::vector<Path> words_;
  std::map<Path, int, PathLess> index_;
  std::vector<int> trivial_idx_;
  std::vector<std::vector<std::vector<K>>> table_;
  int m_ = 1;

  // Drive powers of the arrow ideal to zero.  W_k = span{classes of paths of
  // length >= k}; W_{k+1} = sum_a W_k * a.  The chain strictly decreases until
  // it hits 0 (admissible, m = first zero) or stabilizes nonzero (rejected).
  void certify_admissible() {
    int n = num_vertices(), dimv = dim();
    std::vector<Matrix<K>> right_mul;
    for (int a = 0; a < num_arrows(); ++a) {
      Matrix<K> R(dimv, dimv);
      int ia = arrow_word_index(a);
      for (int i = 0; i < dimv; ++i) {
        const std::vector<K>& t = table_[i][ia];
        for (int k = 0; k < dimv; ++k) R.at(k, i) = t[k];
      }
      right_mul.push_back(std::move(R));
    }
    Matrix<K> B(dimv, dimv - n);
    int col = 0;
    for (int i = 0; i < dimv; ++i) {
      if (words_[i].trivial()) continue;
      B.at(i, col++) = K(1);
    }
    int prev = rank(B);
    for (int k = 1; k <= dimv + 1; ++k) {
      if (prev == 0) { m_ = k; return; }
      Matrix<K> next(dimv, 0);
      for (const Matrix<K>& R : right_mul) {
        Matrix<K> RB = R * B;
        next = next.cols() == 0 ? RB : Matrix<K>::hstack(next, RB);
      }
      if (next.cols() == 0) { m_ = k + 1; return; }  // no arrows at all
      Rref<K> r = rref(next);
      Matrix<K> basis(dimv, r.rank);
      for (int c = 0; c < r.rank; ++c)
        for (int i = 0; i < dimv; ++i) basis.at(i, c) = next.at(i, r.pivot_cols[c]);
      if (r.rank == prev)
        throw std::runtime_error(
            "ideal is not admissible: powers of the arrow ideal stabilize at a nonzero subspace");
      B = std::move(basis);
      prev = r.rank;
    }
    throw std::runtime_error("internal error: arrow ideal power iteration did not terminate");
  }
};

}  // namespace siltlab
