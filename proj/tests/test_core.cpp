#include "pairkit/quadform.hpp"
#include "pairkit/rational.hpp"

#include "doctest.h"

using namespace pairkit;

TEST_CASE("isqrt is the floor square root") {
    for (Int n = 0; n <= 5000; ++n) {
        Int r = isqrt(n);
        CHECK(r * r <= n);
        CHECK((r + 1) * (r + 1) > n);
    }
    Int big = Int("123456789012345678901234567890");
    Int r = isqrt(big);
    CHECK(r * r <= big);
    CHECK((r + 1) * (r + 1) > big);
    CHECK_THROWS_AS(isqrt(Int(-1)), DomainError);
}

TEST_CASE("step and sign helpers") {
    CHECK(heaviside(Int(0)) == 0);
    CHECK(heaviside(Int(3)) == 1);
    CHECK(heaviside_plus(Int(0)) == 1);
    CHECK(heaviside_plus(Int(-1)) == 0);
    CHECK(sgn(Int(0)) == 0);
    CHECK(sgn(Int(-7)) == -1);
    CHECK(sgn_plus(Int(0)) == 1);
    CHECK(sgn_plus(Int(-2)) == -1);
}

TEST_CASE("rationals stay canonical") {
    Rational a(2, 4);
    CHECK(a.num() == 1);
    CHECK(a.den() == 2);
    Rational b(3, -6);
    CHECK(b.num() == -1);
    CHECK(b.den() == 2);
    CHECK(a + b == Rational(0));
    CHECK(a * Rational(4) == Rational(2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK(Rational(7, 2) / Rational(7) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK(Rational(-3, 2) < Rational(-1, 2));
    CHECK(Rational(5, 3).abs() == Rational(5, 3));
    CHECK(Rational(-5, 3).abs() == Rational(5, 3));
}

TEST_CASE("rational string round trip") {
    for (const char* s : {"0", "7", "-7", "1/2", "-3/2", "123456789123456789/2"}) {
        Rational r = Rational::parse(s);
        CHECK(r.str() == s);
    }
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational(1, 2).is_integer() == false);
    CHECK(Rational(6, 3).as_int() == 2);
    CHECK_THROWS_AS(Rational(1, 2).as_int(), DomainError);
}

TEST_CASE("quadratic form evaluation") {
    // x^2/2 + xy + y^2/2 + 3x/2 + y/2  (pairs diagonally)
    QuadForm f{Rational(1, 2), 1, Rational(1, 2), Rational(3, 2), Rational(1, 2), 0};
    CHECK(f.eval({0, 0}) == Rational(0));
    CHECK(f.eval({1, 0}) == Rational(2));
    CHECK(f.eval({1, 1}) == Rational(4));
    CHECK(QuadForm::from_coeffs(f.coeffs()) == f);
}

TEST_CASE("cubic monomial order is the documented one") {
    auto m = CubicForm3D::monomials({2, 3, 5});
    CHECK(m[0] == 8);     // x^3
    CHECK(m[1] == 27);    // y^3
    CHECK(m[2] == 125);   // z^3
    CHECK(m[3] == 12);    // x^2 y
    CHECK(m[9] == 30);    // xyz
    CHECK(m[19] == 1);    // 1
}
