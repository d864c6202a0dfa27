#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "siltlab/stability.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

using namespace siltlab;

namespace {

Algebra<Rational> load(const std::string& name) {
  return Algebra<Rational>::build(parse_quiver_file(std::string(SILTLAB_FIXTURES_DIR) + "/" + name));
}

struct Setup {
  Algebra<Rational> A;
  ModuleUniverse<Rational> MU;
  ComplexUniverse<Rational> CU;
};

Setup make_setup(const std::string& fixture) {
  Algebra<Rational> A = load(fixture);
  auto MU = enumerate_indecomposables(A);
  auto CU = two_term_universe(A, MU);
  return Setup{std::move(A), std::move(MU), std::move(CU)};
}

int cidx(const ComplexUniverse<Rational>& U, const std::string& label) {
  for (std::size_t i = 0; i < U.labels.size(); ++i)
    if (U.labels[i] == label) return static_cast<int>(i);
  throw std::runtime_error("no universe member labeled " + label);
}

template <class K>
int midx(const Algebra<K>& A, const ModuleUniverse<K>& MU, const std::string& label) {
  for (std::size_t j = 0; j < MU.modules.size(); ++j)
    if (module_display_name(A, MU.modules[j]) == label) return static_cast<int>(j);
  throw std::runtime_error("no module labeled " + label);
}

template <class K>
std::set<std::string> mod_labels(const Algebra<K>& A, const ModuleUniverse<K>& MU,
                                 const std::vector<int>& v) {
  std::set<std::string> out;
  for (int j : v) out.insert(module_display_name(A, MU.modules[j]));
  return out;
}

std::set<std::string> cx_labels(const ComplexUniverse<Rational>& U, const std::vector<int>& v) {
  std::set<std::string> out;
  for (int i : v) out.insert(U.labels[i]);
  return out;
}

}  // namespace

TEST_CASE("determinantal semi-invariant on the square algebra") {
  Setup s = make_setup("square.quiver");
  const auto& A = s.A;
  TwoTermComplex<Rational> X1 = s.CU.objects[cidx(s.CU, "S2")];  // P1 -> P2
  TwoTermComplex<Rational> X2 = s.CU.objects[cidx(s.CU, "S1")];  // P2 -> P1
  Representation<Rational> P1 = projective_rep(A, 0);
  Representation<Rational> P2 = projective_rep(A, 1);

  SUBCASE("s(X1,P2) and s(X2,P1) are nonzero") {
    auto s1 = det_semi_invariant(A, X1, P2);
    CHECK_FALSE(s1.value.is_zero());
    CHECK(s1.matrix.rows() == 1);
    auto s2 = det_semi_invariant(A, X2, P1);
    CHECK_FALSE(s2.value.is_zero());
    CHECK(is_M_semistable(A, X1, P2));
    CHECK(is_M_semistable(A, X2, P1));
  }

  SUBCASE("crossed pairs vanish") {
    // The pairing is zero but the differential acts by zero on the module.
    auto sx = det_semi_invariant(A, X1, P1);
    CHECK(sx.value.is_zero());
    CHECK_FALSE(is_M_semistable(A, X1, P1));
  }

  SUBCASE("zero complex has the empty determinant") {
    auto sz = det_semi_invariant(A, zero_complex<Rational>(), P2);
    CHECK(sz.value == Rational(1));
    CHECK(is_M_semistable(A, zero_complex<Rational>(), P2));
  }

  SUBCASE("nonzero pairing is a precondition error carrying the value") {
    TwoTermComplex<Rational> p1 = proj_complex(A, 0);
    CHECK(euler_pairing(A, p1, P1) == 1);
    CHECK_THROWS_AS(det_semi_invariant(A, p1, P1), std::invalid_argument);
    CHECK_THROWS_WITH_AS(det_semi_invariant(A, p1, P1),
                         "det_semi_invariant: Euler pairing <[X],[M]> = 1 is nonzero, "
                         "x* is not square",
                         std::invalid_argument);
    CHECK_FALSE(is_M_semistable(A, p1, P1));
  }

  SUBCASE("X1+X2 kills every class of dimension (1,1)") {
    TwoTermComplex<Rational> X = direct_sum_complex(A, {X1, X2});
    // The three isomorphism classes of dimension (1,1): arrow values
    // (a,b) in {(1,0),(0,1),(0,0)}; the first two are P2 and P1.
    for (auto [av, bv] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {0, 0}}) {
      Representation<Rational> M;
      M.dims = {1, 1};
      M.arrow = {Matrix<Rational>(1, 1, {Rational(av)}), Matrix<Rational>(1, 1, {Rational(bv)})};
      CHECK(det_semi_invariant(A, X, M).value.is_zero());
      CHECK_FALSE(is_M_semistable(A, X, M));
    }
  }
}

TEST_CASE("basis and representative independence of nonvanishing") {
  Setup s = make_setup("a3.quiver");
  const auto& A = s.A;
  TwoTermComplex<Rational> rS2 = s.CU.objects[cidx(s.CU, "S2")];

  SUBCASE("permuting the Hom bases only changes the sign") {
    // M = P2 + P3 gives a 2x2 invertible x* for the presentation of S2.
    Representation<Rational> M;
    M.dims = {2, 2, 1};
    M.arrow = {Matrix<Rational>(2, 2, {Rational(1), Rational(0), Rational(0), Rational(1)}),
               Matrix<Rational>(2, 1, {Rational(0), Rational(1)})};
    require_valid(A, M);
    auto si = det_semi_invariant(A, rS2, M);
    CHECK_FALSE(si.value.is_zero());
    CHECK(si.matrix.rows() == 2);
    Matrix<Rational> perm(2, 2);
    for (int j = 0; j < 2; ++j) {
      perm.at(0, j) = si.matrix.at(1, j);
      perm.at(1, j) = si.matrix.at(0, j);
    }
    CHECK(det(perm) == -si.value);
    CHECK_FALSE(det(perm).is_zero());
  }

  SUBCASE("adding a contractible summand never changes the verdict") {
    TwoTermComplex<Rational> contr;
    contr.v1 = {1};
    contr.v0 = {1};
    contr.d = {{A.unit(1)}};
    for (const std::string xl : {"S2", "P1", "P2[1]", "I2"}) {
      const auto& X = s.CU.objects[cidx(s.CU, xl)];
      TwoTermComplex<Rational> Xc = direct_sum_complex(A, {X, contr});
      for (const auto& M : s.MU.modules)
        CHECK(is_M_semistable(A, X, M) == is_M_semistable(A, Xc, M));
    }
  }
}

TEST_CASE("script_T and script_W anchors over A3") {
  Setup s = make_setup("a3.quiver");
  const auto& A = s.A;

  SUBCASE("empty inputs give everything") {
    CHECK(script_T(A, s.CU, {}).size() == s.CU.objects.size());
    CHECK(script_W(A, s.MU, {}).size() == s.MU.modules.size());
    CHECK(script_W(A, s.MU, {zero_complex<Rational>()}).size() == s.MU.modules.size());
  }

  SUBCASE("semistable complexes of a single simple") {
    std::vector<Representation<Rational>> H = {s.MU.modules[midx(A, s.MU, "S2")]};
    CHECK(cx_labels(s.CU, script_T(A, s.CU, H)) ==
          std::set<std::string>{"P1", "P3", "I2", "P1[1]", "P3[1]"});
  }

  SUBCASE("no nonzero complex survives all modules; stalks vanish on perp modules") {
    CHECK(script_T(A, s.CU, s.MU.modules).empty());
    std::vector<TwoTermComplex<Rational>> C = {s.CU.objects[cidx(s.CU, "P2")]};
    CHECK(mod_labels(A, s.MU, script_W(A, s.MU, C)) == std::set<std::string>{"P1", "I3"});
  }

  SUBCASE("monotone Galois pair on singletons") {
    for (std::size_t j = 0; j < s.MU.modules.size(); ++j) {
      std::vector<Representation<Rational>> H = {s.MU.modules[j]};
      std::vector<TwoTermComplex<Rational>> TH;
      for (int i : script_T(A, s.CU, H)) TH.push_back(s.CU.objects[i]);
      std::vector<int> WT = script_W(A, s.MU, TH);
      CHECK(std::find(WT.begin(), WT.end(), static_cast<int>(j)) != WT.end());
    }
    for (std::size_t i = 0; i < s.CU.objects.size(); ++i) {
      std::vector<TwoTermComplex<Rational>> C = {s.CU.objects[i]};
      std::vector<Representation<Rational>> WC;
      for (int j : script_W(A, s.MU, C)) WC.push_back(s.MU.modules[j]);
      std::vector<int> TW = script_T(A, s.CU, WC);
      CHECK(std::find(TW.begin(), TW.end(), static_cast<int>(i)) != TW.end());
    }
  }

  SUBCASE("larger module sets cut the semistable complexes down") {
    std::vector<Representation<Rational>> H1 = {s.MU.modules[midx(A, s.MU, "S2")]};
    std::vector<Representation<Rational>> H2 = H1;
    H2.push_back(s.MU.modules[midx(A, s.MU, "P3")]);
    std::vector<int> T1 = script_T(A, s.CU, H1), T2 = script_T(A, s.CU, H2);
    for (int i : T2) CHECK(std::find(T1.begin(), T1.end(), i) != T1.end());
  }
}

TEST_CASE("King semistability over F2 agrees with the complex-side routes") {
  Algebra<Fp> A2 = Algebra<Fp>::build(
      parse_quiver("field Fp 2\nvertices 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n"));
  ModuleUniverse<Fp> MU2 = enumerate_indecomposables(A2);
  ComplexUniverse<Fp> CU2 = two_term_universe(A2, MU2);
  REQUIRE(MU2.modules.size() == 6);
  std::vector<int> theta = {-1, 1, 0};  // g-vector of the presentation of S2

  SUBCASE("individual verdicts") {
    CHECK(king_semistable(A2, zero_representation(A2), theta));
    CHECK(king_semistable(A2, zero_representation(A2), {5, -3, 7}));
    CHECK_FALSE(king_semistable(A2, MU2.modules[midx(A2, MU2, "S2")], theta));
    CHECK(king_semistable(A2, MU2.modules[midx(A2, MU2, "P2")], theta));
    CHECK(king_semistable(A2, MU2.modules[midx(A2, MU2, "P3")], theta));
    CHECK(king_semistable(A2, MU2.modules[midx(A2, MU2, "I3")], theta));
    CHECK_FALSE(king_semistable(A2, MU2.modules[midx(A2, MU2, "P1")], theta));
    CHECK_FALSE(king_semistable(A2, MU2.modules[midx(A2, MU2, "I2")], theta));
    // P3 against the g-vector of the stalk presentation of S1 = P1.
    CHECK_FALSE(king_semistable(A2, MU2.modules[midx(A2, MU2, "P3")], {1, 0, 0}));
  }

  SUBCASE("King = union route = Nakayama formula for a presilting weight") {
    std::vector<int> kings;
    for (std::size_t j = 0; j < MU2.modules.size(); ++j)
      if (king_semistable(A2, MU2.modules[j], theta)) kings.push_back(static_cast<int>(j));
    WThetaResult wt = w_theta_members(A2, MU2, CU2, theta);
    CHECK(wt.members == kings);
    CHECK_FALSE(wt.lower_bound);
    int u = -1;
    for (std::size_t i = 0; i < CU2.labels.size(); ++i)
      if (CU2.labels[i] == "S2") u = static_cast<int>(i);
    REQUIRE(u >= 0);
    CHECK(w_presilting_formula(A2, MU2, CU2.objects[u]) == kings);
    CHECK(mod_labels(A2, MU2, kings) == std::set<std::string>{"P2", "P3", "I3"});
  }

  SUBCASE("rational-field requests are refused") {
    Setup s = make_setup("a3.quiver");
    CHECK_THROWS_WITH_AS(
        king_semistable(s.A, s.MU.modules[0], theta),
        "king_semistable needs a finite field (the submodule lattice is infinite over Q)",
        std::runtime_error);
  }
}

TEST_CASE("w_theta_members over A3: every single universe object is presilting-exact") {
  Setup s = make_setup("a3.quiver");
  const auto& A = s.A;

  SUBCASE("theta = 0 returns the whole module universe exactly") {
    WThetaResult wt = w_theta_members(A, s.MU, s.CU, {0, 0, 0});
    CHECK(wt.members.size() == s.MU.modules.size());
    CHECK_FALSE(wt.lower_bound);
  }

  SUBCASE("union route matches the Nakayama formula on every universe object") {
    for (std::size_t i = 0; i < s.CU.objects.size(); ++i) {
      const auto& U = s.CU.objects[i];
      REQUIRE(ext_dim(A, U, U) == 0);  // all nine A3 objects are presilting
      WThetaResult wt = w_theta_members(A, s.MU, s.CU, g_vector(A, U));
      CHECK_FALSE(wt.lower_bound);
      CHECK(wt.members == w_presilting_formula(A, s.MU, U));
    }
  }

  SUBCASE("the semistable modules of the S2-presentation weight") {
    WThetaResult wt = w_theta_members(A, s.MU, s.CU, {-1, 1, 0});
    CHECK(mod_labels(A, s.MU, wt.members) == std::set<std::string>{"P2", "P3", "I3"});
  }
}

TEST_CASE("numerical semistability on the square algebra") {
  Setup s = make_setup("square.quiver");
  const auto& A = s.A;
  TwoTermComplex<Rational> X1 = s.CU.objects[cidx(s.CU, "S2")];
  TwoTermComplex<Rational> X2 = s.CU.objects[cidx(s.CU, "S1")];

  SUBCASE("X1+X2 is (1,1)-semistable within budget") {
    TwoTermComplex<Rational> X = direct_sum_complex(A, {X1, X2});
    NumericalVerdict v = is_numerically_semistable(A, s.CU, X, {1, 1});
    CHECK(v.semistable);
    CHECK(v.budget_limited);
  }

  SUBCASE("P1 + P1[1] is refuted by its shifted summand") {
    TwoTermComplex<Rational> X =
        direct_sum_complex(A, {proj_complex(A, 0), shifted_proj_complex(A, 0)});
    NumericalVerdict v = is_numerically_semistable(A, s.CU, X, {1, 1});
    CHECK_FALSE(v.semistable);
    CHECK_FALSE(v.budget_limited);
    CHECK(v.witness_pairing == -1);
    CHECK(v.witness.find("P1[1]") != std::string::npos);
  }

  SUBCASE("degenerate verdicts") {
    NumericalVerdict z = is_numerically_semistable(A, s.CU, zero_complex<Rational>(), {1, 1});
    CHECK(z.semistable);
    NumericalVerdict p = is_numerically_semistable(A, s.CU, proj_complex(A, 0), {1, 1});
    CHECK_FALSE(p.semistable);
    CHECK(p.witness_pairing == 1);  // the pairing of X itself obstructs
    // A negative weight coordinate is refuted through a projective stalk.
    NumericalVerdict n = is_numerically_semistable(A, s.CU, zero_complex<Rational>(), {0, -1});
    CHECK_FALSE(n.semistable);
    CHECK(n.witness_pairing == -1);
    CHECK(n.witness.find("stalk") != std::string::npos);
  }
}

TEST_CASE("M-semistability implies numerical semistability exhaustively") {
  for (const std::string fixture : {"a3.quiver", "square.quiver"}) {
    Setup s = make_setup(fixture);
    for (const auto& X : s.CU.objects)
      for (const auto& M : s.MU.modules) {
        ImplicationReport r = check_M_implies_numerical(s.A, s.CU, X, M);
        CHECK_FALSE(r.violation);
      }
  }
}

TEST_CASE("Kronecker regular presentations have no common semistable module") {
  Setup s = make_setup("kronecker.quiver");
  const auto& A = s.A;
  CHECK_FALSE(s.MU.complete);
  // Regular modules in the bounded universe: dimension vectors (n, n), n <= 2.
  std::vector<TwoTermComplex<Rational>> C;
  for (std::size_t j = 0; j < s.MU.modules.size(); ++j) {
    const auto& dims = s.MU.modules[j].dims;
    if (dims[0] == dims[1] && dims[0] >= 1)
      C.push_back(presentation_complex(A, s.MU.modules[j]));
  }
  REQUIRE(C.size() == 12);
  CHECK(script_W(A, s.MU, C).empty());
  // A single regular presentation does have semistable modules: the emptiness
  // above is a statement about the family, not about any one member.
  CHECK_FALSE(script_W(A, s.MU, {C[0]}).empty());
}
