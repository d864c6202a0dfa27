#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "siltlab/field.hpp"
#include "siltlab/matrix.hpp"

using siltlab::Fp;
using siltlab::Matrix;
using siltlab::Rational;

TEST_CASE("rational arithmetic and parsing") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a * b == Rational(1, 18));
  CHECK(a - a == Rational(0));
  CHECK((a / b) == Rational(2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(7).inverse() == Rational(1, 7));
  CHECK_THROWS(Rational(0).inverse());
  CHECK_THROWS(Rational(1, 0));

  CHECK(Rational::parse("-2/4") == Rational(-1, 2));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("-7/3").to_string() == "-7/3");
  CHECK_THROWS(Rational::parse("x"));
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK(Rational(-1).sign() == -1);
}

TEST_CASE("prime field arithmetic with runtime modulus") {
  Fp a(3, 7), b(5, 7);
  CHECK((a + b) == Fp(1, 7));
  CHECK((a * b) == Fp(1, 7));
  CHECK((a - b) == Fp(5, 7));
  CHECK(a.inverse() == Fp(5, 7));
  CHECK((a / b) == Fp(3 * 3, 7));  // 1/5 = 3 mod 7
  CHECK(Fp(-1, 7) == Fp(6, 7));
  CHECK_THROWS(Fp(0, 7).inverse());

  // Integer literals adopt the modulus of the first field element they meet.
  Fp lit(10);
  CHECK((lit + Fp(0, 7)) == Fp(3, 7));
  CHECK(Fp(1) == Fp(1, 7));
  CHECK(Fp(1) == Fp(1, 5));

  CHECK_THROWS(Fp(1, 5) + Fp(1, 7));
  CHECK_THROWS(Fp(2).inverse());  // unknown modulus
  CHECK(Fp(1).inverse() == Fp(1));

  // Large modulus products must not overflow.
  Fp big(32002, 32003);
  CHECK((big * big) == Fp(1, 32003));
}

TEST_CASE("matrix arithmetic over Q") {
  Matrix<Rational> a(2, 2, {Rational(2), Rational(1), Rational(1), Rational(1)});
  Matrix<Rational> id = Matrix<Rational>::identity(2);
  CHECK(det(a) == Rational(1));
  auto ainv = inverse(a);
  REQUIRE(ainv.has_value());
  CHECK((a * *ainv) == id);
  CHECK((a + (-a)).is_zero());
  CHECK(a.transpose().at(0, 1) == Rational(1));

  Matrix<Rational> b(2, 3, {Rational(1), Rational(2), Rational(3),
                            Rational(4), Rational(5), Rational(6)});
  CHECK((a * b).at(0, 0) == Rational(6));
  CHECK_THROWS(b * a);
  CHECK(Matrix<Rational>::hstack(a, b).cols() == 5);
  CHECK(Matrix<Rational>::vstack(b, b).rows() == 4);
  CHECK(b.block(0, 1, 2, 2).at(1, 0) == Rational(5));
}

TEST_CASE("rref, rank, kernel over Q") {
  // Rank-1 matrix with rows (1,2,3) and (2,4,6).
  Matrix<Rational> m(2, 3, {Rational(1), Rational(2), Rational(3),
                            Rational(2), Rational(4), Rational(6)});
  CHECK(rank(m) == 1);
  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 2);
  for (const auto& v : ker) {
    auto img = m.apply(v);
    for (const auto& x : img) CHECK(x.is_zero());
  }
  // The two kernel vectors are the standard free-column ones.
  CHECK(ker[0] == std::vector<Rational>{Rational(-2), Rational(1), Rational(0)});
  CHECK(ker[1] == std::vector<Rational>{Rational(-3), Rational(0), Rational(1)});
}

TEST_CASE("solve: consistent and inconsistent systems") {
  Matrix<Rational> A(3, 2, {Rational(1), Rational(0),
                            Rational(0), Rational(1),
                            Rational(1), Rational(1)});
  auto x = solve(A, {Rational(2), Rational(3), Rational(5)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(2));
  CHECK((*x)[1] == Rational(3));
  auto bad = solve(A, {Rational(2), Rational(3), Rational(6)});
  CHECK(!bad.has_value());

  // Matrix right- and left-division.
  Matrix<Rational> B(3, 1, {Rational(1), Rational(1), Rational(2)});
  auto X = solve_matrix(A, B);
  REQUIRE(X.has_value());
  CHECK((A * *X) == B);
  Matrix<Rational> C(1, 2, {Rational(3), Rational(4)});
  auto Y = solve_matrix_left(A, C);  // Y * A = C with Y 1x3
  REQUIRE(Y.has_value());
  CHECK((*Y * A) == C);
}

TEST_CASE("linear algebra over a small prime field") {
  // Same matrix as the Q test, now over F_5: [[2,1],[1,1]].
  Matrix<Fp> a(2, 2, {Fp(2, 5), Fp(1, 5), Fp(1, 5), Fp(1, 5)});
  CHECK(det(a) == Fp(1, 5));
  auto ainv = inverse(a);
  REQUIRE(ainv.has_value());
  CHECK((a * *ainv) == Matrix<Fp>::identity(2));

  // Singular over F_5 but not over Q: [[1,2],[3,1]] has det -5.
  Matrix<Fp> s(2, 2, {Fp(1, 5), Fp(2, 5), Fp(3, 5), Fp(1, 5)});
  CHECK(det(s).is_zero());
  CHECK(rank(s) == 1);
  CHECK(kernel_basis(s).size() == 1);
  Matrix<Rational> sq(2, 2, {Rational(1), Rational(2), Rational(3), Rational(1)});
  CHECK(det(sq) == Rational(-5));
  CHECK(rank(sq) == 2);
}

TEST_CASE("span containment") {
  Matrix<Rational> basis(3, 2, {Rational(1), Rational(0),
                                Rational(0), Rational(1),
                                Rational(1), Rational(1)});
  Matrix<Rational> inside(3, 1, {Rational(2), Rational(3), Rational(5)});
  Matrix<Rational> outside(3, 1, {Rational(0), Rational(0), Rational(1)});
  CHECK(columns_contained_in_span(basis, inside));
  CHECK(!columns_contained_in_span(basis, outside));
}
