#pragma once
// Text format for a quiver with relations, and its canonical serializer.
//
//   # comment
//   field Q              (or: field Fp 32003)
//   vertices 1 2 3
//   arrow a: 1 -> 2
//   arrow b: 2 -> 3
//   relation a*b
//   relation a*c - 2 b*d
//
// Paths compose left to right: a*b means "first a, then b" and requires
// target(a) = source(b).  Every term of a relation must be a path of length
// at least two, and all terms of one relation must be parallel (same source
// and target).  Coefficients are integers or fractions n/d.
//
// serialize_quiver emits a canonical form: statements in the order
// field / vertices / arrows / relations, relation terms sorted by
// (length, arrow indices), coefficients normalized through the field.
// Parsing the canonical form and serializing again is byte-identical.

#include "siltlab/field.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace siltlab {

struct ArrowDecl {
  std::string name;
  int src_label = 0;
  int tgt_label = 0;
};

struct RelationTerm {
  std::string coef = "1";          // signed literal: "1", "-2", "1/2", ...
  std::vector<std::string> arrows;  // traversal order (left to right)
};

struct Relation {
  std::vector<RelationTerm> terms;
};

struct QuiverDescription {
  bool has_field = false;
  bool field_is_q = true;
  std::uint32_t modulus = 0;
  std::vector<int> vertex_labels;
  std::vector<ArrowDecl> arrows;
  std::vector<Relation> relations;

  int vertex_index(int label) const {
    for (std::size_t i = 0; i < vertex_labels.size(); ++i)
      if (vertex_labels[i] == label) return static_cast<int>(i);
    return -1;
  }
  int arrow_index(const std::string& name) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
      if (arrows[i].name == name) return static_cast<int>(i);
    return -1;
  }
};

namespace dsl_detail {

inline std::runtime_error err(int line, const std::string& msg) {
  return std::runtime_error("quiver parse error (line " + std::to_string(line) + "): " + msg);
}

struct Tok {
  enum Kind { Ident, Number, Plus, Minus, Star } kind;
  std::string text;
};

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

inline std::vector<Tok> lex_expr(const std::string& s, int line) {
  std::vector<Tok> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    if (c == '+') { out.push_back({Tok::Plus, "+"}); ++i; continue; }
    if (c == '-') { out.push_back({Tok::Minus, "-"}); ++i; continue; }
    if (c == '*') { out.push_back({Tok::Star, "*"}); ++i; continue; }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j < s.size() && s[j] == '/') {
        ++j;
        if (j >= s.size() || !std::isdigit(static_cast<unsigned char>(s[j])))
          throw err(line, "malformed fraction in relation");
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      }
      out.push_back({Tok::Number, s.substr(i, j - i)});
      i = j;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < s.size() && ident_char(s[j])) ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i)});
      i = j;
      continue;
    }
    throw err(line, std::string("unexpected character '") + c + "' in relation");
  }
  return out;
}

// terms: [sign] [number ['*']] ident ('*' ident)*  ((+|-) term)*
inline Relation parse_relation_expr(const std::string& s, int line) {
  std::vector<Tok> toks = lex_expr(s, line);
  if (toks.empty()) throw err(line, "empty relation");
  Relation rel;
  std::size_t i = 0;
  bool first = true;
  while (i < toks.size()) {
    std::string sign;
    if (toks[i].kind == Tok::Plus || toks[i].kind == Tok::Minus) {
      if (first && toks[i].kind == Tok::Plus)
        throw err(line, "relation must not start with '+'");
      sign = toks[i].kind == Tok::Minus ? "-" : "";
      ++i;
    } else if (!first) {
      throw err(line, "expected '+' or '-' between relation terms");
    }
    first = false;
    RelationTerm term;
    term.coef = sign.empty() ? "1" : "-1";
    if (i < toks.size() && toks[i].kind == Tok::Number) {
      term.coef = sign + toks[i].text;
      ++i;
      if (i < toks.size() && toks[i].kind == Tok::Star) ++i;  // allow 2*a*b and 2 a*b
    }
    if (i >= toks.size() || toks[i].kind != Tok::Ident)
      throw err(line, "expected an arrow name in relation term");
    term.arrows.push_back(toks[i].text);
    ++i;
    while (i < toks.size() && toks[i].kind == Tok::Star) {
      ++i;
      if (i >= toks.size() || toks[i].kind != Tok::Ident)
        throw err(line, "expected an arrow name after '*'");
      term.arrows.push_back(toks[i].text);
      ++i;
    }
    rel.terms.push_back(std::move(term));
  }
  return rel;
}

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace dsl_detail

inline QuiverDescription parse_quiver(const std::string& text) {
  using namespace dsl_detail;
  QuiverDescription d;
  bool seen_vertices = false;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string s = trim(raw);
    if (s.empty()) continue;
    std::istringstream ls(s);
    std::string kw;
    ls >> kw;
    if (kw == "field") {
      if (d.has_field) throw err(line, "duplicate field statement");
      std::string f;
      ls >> f;
      if (f == "Q") {
        d.field_is_q = true;
      } else if (f == "Fp") {
        long long p = 0;
        if (!(ls >> p) || p < 2) throw err(line, "field Fp needs a modulus >= 2");
        d.field_is_q = false;
        d.modulus = static_cast<std::uint32_t>(p);
      } else {
        throw err(line, "unknown field '" + f + "' (expected Q or Fp <p>)");
      }
      d.has_field = true;
      std::string extra;
      if (ls >> extra) throw err(line, "trailing tokens after field statement");
    } else if (kw == "vertices") {
      if (seen_vertices) throw err(line, "duplicate vertices statement");
      seen_vertices = true;
      int v;
      while (ls >> v) {
        if (d.vertex_index(v) >= 0) throw err(line, "duplicate vertex label " + std::to_string(v));
        d.vertex_labels.push_back(v);
      }
      if (!ls.eof()) throw err(line, "vertex labels must be integers");
      if (d.vertex_labels.empty()) throw err(line, "vertices statement needs at least one label");
    } else if (kw == "arrow") {
      std::string rest;
      std::getline(ls, rest);
      auto colon = rest.find(':');
      if (colon == std::string::npos) throw err(line, "arrow statement needs 'name: src -> tgt'");
      ArrowDecl a;
      a.name = trim(rest.substr(0, colon));
      if (a.name.empty() || !ident_start(a.name[0]))
        throw err(line, "invalid arrow name '" + a.name + "'");
      for (char c : a.name)
        if (!ident_char(c)) throw err(line, "invalid arrow name '" + a.name + "'");
      if (d.arrow_index(a.name) >= 0) throw err(line, "duplicate arrow name '" + a.name + "'");
      std::string tail = rest.substr(colon + 1);
      // Tolerate '1->2' as well as '1 -> 2'.
      std::string spaced;
      for (std::size_t i = 0; i < tail.size(); ++i) {
        if (tail[i] == '-' && i + 1 < tail.size() && tail[i + 1] == '>') {
          spaced += " -> ";
          ++i;
        } else {
          spaced += tail[i];
        }
      }
      std::istringstream ts(spaced);
      std::string arrow_tok;
      if (!(ts >> a.src_label >> arrow_tok >> a.tgt_label) || arrow_tok != "->")
        throw err(line, "arrow statement needs 'name: src -> tgt'");
      std::string extra;
      if (ts >> extra) throw err(line, "trailing tokens after arrow statement");
      d.arrows.push_back(a);
    } else if (kw == "relation") {
      std::string rest;
      std::getline(ls, rest);
      d.relations.push_back(parse_relation_expr(trim(rest), line));
    } else {
      throw err(line, "unknown statement '" + kw + "'");
    }
  }

  // Cross validation.
  if (d.vertex_labels.empty()) throw std::runtime_error("quiver parse error: no vertices declared");
  for (const ArrowDecl& a : d.arrows) {
    if (d.vertex_index(a.src_label) < 0)
      throw std::runtime_error("quiver parse error: arrow '" + a.name + "' uses unknown vertex " +
                               std::to_string(a.src_label));
    if (d.vertex_index(a.tgt_label) < 0)
      throw std::runtime_error("quiver parse error: arrow '" + a.name + "' uses unknown vertex " +
                               std::to_string(a.tgt_label));
  }
  for (const Relation& r : d.relations) {
    int rel_src = -1, rel_tgt = -1;
    std::vector<std::vector<int>> seen_paths;
    for (const RelationTerm& t : r.terms) {
      if (t.arrows.size() < 2)
        throw std::runtime_error(
            "quiver parse error: every relation term must be a path of length >= 2 "
            "(the ideal must lie inside the square of the arrow ideal)");
      std::vector<int> idx;
      for (const std::string& name : t.arrows) {
        int ai = d.arrow_index(name);
        if (ai < 0)
          throw std::runtime_error("quiver parse error: relation uses unknown arrow '" + name + "'");
        idx.push_back(ai);
      }
      for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        if (d.arrows[idx[i]].tgt_label != d.arrows[idx[i + 1]].src_label)
          throw std::runtime_error("quiver parse error: relation term '" + t.arrows[i] + "*" +
                                   t.arrows[i + 1] + "...' is not a composable path");
      int s = d.arrows[idx.front()].src_label, e = d.arrows[idx.back()].tgt_label;
      if (rel_src < 0) { rel_src = s; rel_tgt = e; }
      else if (rel_src != s || rel_tgt != e)
        throw std::runtime_error("quiver parse error: relation terms must be parallel paths");
      if (std::find(seen_paths.begin(), seen_paths.end(), idx) != seen_paths.end())
        throw std::runtime_error("quiver parse error: relation repeats the same path twice");
      seen_paths.push_back(idx);
    }
  }
  return d;
}

inline QuiverDescription parse_quiver_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open quiver file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_quiver(buf.str());
}

inline std::string serialize_quiver(const QuiverDescription& d) {
  std::ostringstream os;
  if (d.has_field) {
    if (d.field_is_q) os << "field Q\n";
    else os << "field Fp " << d.modulus << "\n";
  }
  os << "vertices";
  for (int v : d.vertex_labels) os << " " << v;
  os << "\n";
  for (const ArrowDecl& a : d.arrows)
    os << "arrow " << a.name << ": " << a.src_label << " -> " << a.tgt_label << "\n";
  for (const Relation& r : d.relations) {
    // Sort terms by (length, arrow index sequence); normalize coefficients
    // through the declared field.
    struct Key {
      std::vector<int> idx;
      std::string coef_str;
      bool negative;
      const RelationTerm* term;
    };
    std::vector<Key> keys;
    for (const RelationTerm& t : r.terms) {
      Key k;
      for (const std::string& name : t.arrows) k.idx.push_back(d.arrow_index(name));
      if (!d.has_field || d.field_is_q) {
        Rational c = Rational::parse(t.coef);
        if (c.is_zero()) continue;
        k.negative = c.sign() < 0;
        k.coef_str = (k.negative ? -c : c).to_string();
      } else {
        Fp c = Fp::parse(t.coef, d.modulus);
        if (c.is_zero()) continue;
        k.negative = false;
        k.coef_str = c.to_string();
      }
      k.term = &t;
      keys.push_back(std::move(k));
    }
    std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
      if (a.idx.size() != b.idx.size()) return a.idx.size() < b.idx.size();
      return a.idx < b.idx;
    });
    os << "relation";
    bool first = true;
    for (const Key& k : keys) {
      if (first) os << (k.negative ? " -" : "");
      else os << (k.negative ? " -" : " +");
      first = false;
      if (k.coef_str != "1") os << " " << k.coef_str;
      os << " ";
      for (std::size_t i = 0; i < k.term->arrows.size(); ++i) {
        if (i) os << "*";
        os << k.term->arrows[i];
      }
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace siltlab
