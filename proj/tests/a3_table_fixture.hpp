#pragma once
// Hand-computed expected data for the linear A3 quiver 1 -> 2 -> 3: one row
// per basic two-term silting object, with the subcategories each row induces.
//
// Complex labels ("P1", "S2", "P1[1]", ...) name indecomposable two-term
// complexes: "Pi" the projective stalk, "Pi[1]" its shift, and "S2"/"I2"/"I3"
// the minimal presentations P1 -a-> P2, P1 -ab-> P3, P2 -b-> P3.  Module
// labels name the six indecomposable modules.
//
// Derivation notes (all checked against each other during transcription):
//  - x/y columns are the E-orthogonal closures of the silting object; on
//    every row x and y intersect in exactly the silting summands.
//  - thick is thick(U_rho) for the shifted half of Lambda >--> U^0 -->> U^1
//    and simultaneously the semistable class T(wide) - both computations
//    agree on all fourteen rows.
//  - wide is the kernel-closed heart of the torsion class, torsion_t is
//    Fac(H^0 U), torsion_f its Hom-perpendicular.

#include <set>
#include <string>
#include <vector>

struct A3TableRow {
  std::set<std::string> silting;
  std::set<std::string> x;          // complexes
  std::set<std::string> y;          // complexes
  std::set<std::string> thick;      // complexes
  std::set<std::string> wide;       // modules
  std::set<std::string> torsion_t;  // modules
  std::set<std::string> torsion_f;  // modules
};

inline const std::vector<A3TableRow>& a3_correspondence_table() {
  using S = std::set<std::string>;
  static const S all_cx = {"P1", "P2", "P3", "S2",  "I2",
                           "I3", "P1[1]", "P2[1]", "P3[1]"};
  static const S all_mod = {"P1", "P2", "P3", "S2", "I2", "I3"};
  static const std::vector<A3TableRow> rows = {
      // 1: Lambda itself
      {{"P1", "P2", "P3"}, {"P1", "P2", "P3"}, all_cx, {}, all_mod, all_mod, {}},
      // 2: Lambda[1]
      {{"P1[1]", "P2[1]", "P3[1]"},
       all_cx,
       {"P1[1]", "P2[1]", "P3[1]"},
       all_cx,
       {},
       {},
       all_mod},
      // 3: torsion class {I3}
      {{"I3", "P1[1]", "P2[1]"},
       {"P1", "P2", "P3", "S2", "I2", "I3", "P1[1]", "P2[1]"},
       {"I3", "P1[1]", "P2[1]", "P3[1]"},
       {"P1", "P2", "S2", "P1[1]", "P2[1]"},
       {"I3"},
       {"I3"},
       {"P1", "P2", "P3", "S2", "I2"}},
      // 4: torsion class {S2}
      {{"S2", "P1[1]", "P3[1]"},
       {"P1", "P2", "P3", "S2", "I2", "P1[1]", "P3[1]"},
       {"S2", "P1[1]", "P2[1]", "P3[1]"},
       {"P1", "P3", "I2", "P1[1]", "P3[1]"},
       {"S2"},
       {"S2"},
       {"P1", "P2", "P3", "I3"}},
      // 5: torsion class {S2, I2, I3}
      {{"S2", "I2", "P1[1]"},
       {"P1", "P2", "P3", "S2", "I2", "P1[1]"},
       {"S2", "I2", "I3", "P1[1]", "P2[1]", "P3[1]"},
       {"P1", "P1[1]"},
       {"S2", "I2", "I3"},
       {"S2", "I2", "I3"},
       {"P1", "P2", "P3"}},
      // 6: torsion class {I2, I3}
      {{"I2", "I3", "P1[1]"},
       {"P1", "P2", "P3", "S2", "I2", "I3", "P1[1]"},
       {"I2", "I3", "P1[1]", "P2[1]", "P3[1]"},
       {"P1", "I3", "P1[1]"},
       {"I2"},
       {"I2", "I3"},
       {"P1", "P2", "P3", "S2"}},
      // 7: torsion class {P3, I2, I3}
      {{"P3", "I2", "I3"},
       {"P1", "P2", "P3", "S2", "I2", "I3"},
       {"P3", "I2", "I3", "P1[1]", "P2[1]", "P3[1]"},
       {"S2", "I2", "I3"},
       {"P3"},
       {"P3", "I2", "I3"},
       {"P1", "P2", "S2"}},
      // 8: torsion class {P2, S2}
      {{"P2", "S2", "P3[1]"},
       {"P1", "P2", "P3", "S2", "P3[1]"},
       {"P2", "S2", "P1[1]", "P2[1]", "P3[1]"},
       {"P3", "S2", "P3[1]"},
       {"P2"},
       {"P2", "S2"},
       {"P1", "I3"}},
      // 9: torsion class of everything except P1
      {{"P2", "P3", "S2"},
       {"P1", "P2", "P3", "S2"},
       {"P2", "P3", "S2", "I2", "I3", "P1[1]", "P2[1]", "P3[1]"},
       {"S2"},
       {"P2", "P3", "I3"},
       {"P2", "P3", "S2", "I2", "I3"},
       {"P1"}},
      // 10: torsion class {S2, P3, I2, I3}
      {{"P3", "S2", "I2"},
       {"P1", "P2", "P3", "S2", "I2"},
       {"P3", "S2", "I2", "I3", "P1[1]", "P2[1]", "P3[1]"},
       {"I2"},
       {"P3", "S2"},
       {"P3", "S2", "I2", "I3"},
       {"P1", "P2"}},
      // 11: torsion class {P1}
      {{"P1", "P2[1]", "P3[1]"},
       {"P1", "P2", "P3", "I3", "P2[1]", "P3[1]"},
       {"P1", "P1[1]", "P2[1]", "P3[1]"},
       {"P2", "P3", "I3", "P2[1]", "P3[1]"},
       {"P1"},
       {"P1"},
       {"S2", "I2", "I3"}},
      // 12: torsion class {P1, I3}
      {{"P1", "I3", "P2[1]"},
       {"P1", "P2", "P3", "I3", "P2[1]"},
       {"P1", "I3", "P1[1]", "P2[1]", "P3[1]"},
       {"P2", "P2[1]"},
       {"P1", "I3"},
       {"P1", "I3"},
       {"S2", "I2"}},
      // 13: torsion class {P1, P2, S2}
      {{"P1", "P2", "P3[1]"},
       {"P1", "P2", "P3", "P3[1]"},
       {"P1", "P2", "S2", "P1[1]", "P2[1]", "P3[1]"},
       {"P3", "P3[1]"},
       {"P1", "P2", "S2"},
       {"P1", "P2", "S2"},
       {"I3"}},
      // 14: torsion class {P1, P3, I2, I3}
      {{"P1", "P3", "I3"},
       {"P1", "P2", "P3", "I3"},
       {"P1", "P3", "I2", "I3", "P1[1]", "P2[1]", "P3[1]"},
       {"I3"},
       {"P1", "P3", "I2"},
       {"P1", "P3", "I2", "I3"},
       {"S2"}},
  };
  return rows;
}
