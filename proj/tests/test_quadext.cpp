#include <doctest.h>

#include <cmath>

#include "knotcv/error.hpp"
#include "knotcv/quadext.hpp"

using namespace knotcv;

namespace {
QuadExt Q(long a, long b, long d) { return QuadExt(Rational(a), Rational(b), Integer(d)); }
}  // namespace

TEST_CASE("squarefree split") {
    Integer square;
    CHECK(squarefree_split(Integer(12), square) == 3);
    CHECK(square == 2);
    CHECK(squarefree_split(Integer(5), square) == 5);
    CHECK(square == 1);
    CHECK(squarefree_split(Integer(-8), square) == -2);
    CHECK(square == 2);
    CHECK(squarefree_split(Integer(49), square) == 1);
    CHECK(square == 7);
}

TEST_CASE("construction normalizes the radicand") {
    QuadExt v(Rational(1), Rational(1), Integer(8));  // 1 + sqrt(8) = 1 + 2 sqrt(2)
    CHECK(v.radicand() == 2);
    CHECK(v.radical_part() == 2);
    QuadExt w(Rational(3), Rational(5), Integer(4));  // 3 + 5 sqrt(4) = 13
    CHECK(w.is_rational());
    CHECK(w.rational_part() == 13);
    CHECK_THROWS_AS(QuadExt(Rational(0), Rational(1), Integer(0)), Error);
}

TEST_CASE("field arithmetic in Q(sqrt 2)") {
    QuadExt s = Q(1, 1, 2);   // 1 + sqrt 2
    QuadExt t = Q(1, -1, 2);  // 1 - sqrt 2
    CHECK((s * t).is_rational());
    CHECK((s * t).rational_part() == -1);
    CHECK(s + t == QuadExt(Rational(2)));
    CHECK(s.norm() == -1);
    CHECK(s / s == QuadExt(Rational(1)));
    CHECK(s * s == Q(3, 2, 2));
    QuadExt inv = QuadExt(Rational(1)) / s;
    CHECK(inv == Q(-1, 1, 2));
    CHECK_THROWS_AS(Q(1, 1, 2) + Q(1, 1, 5), Error);
    CHECK(Q(1, 1, 2) + QuadExt(Rational(3)) == Q(4, 1, 2));
}

TEST_CASE("square roots inside the field") {
    // (1 + sqrt 2)^2 = 3 + 2 sqrt 2
    auto r = Q(3, 2, 2).sqrt();
    REQUIRE(r.has_value());
    CHECK(*r * *r == Q(3, 2, 2));
    CHECK_FALSE(Q(1, 1, 2).sqrt().has_value());
    auto rq = QuadExt(make_rational(9, 4)).sqrt();
    REQUIRE(rq.has_value());
    CHECK(rq->rational_part() == make_rational(3, 2));
    auto r5 = QuadExt(Rational(5)).sqrt();
    REQUIRE(r5.has_value());
    CHECK(*r5 == Q(0, 1, 5));
    auto rneg = QuadExt(Rational(-4)).sqrt();
    REQUIRE(rneg.has_value());
    CHECK(*rneg == Q(0, 2, -1));
    auto rfrac = QuadExt(make_rational(5, 4)).sqrt();
    REQUIRE(rfrac.has_value());
    CHECK(*rfrac * *rfrac == QuadExt(make_rational(5, 4)));
    CHECK(QuadExt::sqrt_integer(Integer(5)) == Q(0, 1, 5));
    CHECK(QuadExt::sqrt_integer(Integer(18)) == Q(0, 3, 2));
}

TEST_CASE("quadratic solve over Q(sqrt 5)") {
    // t^2 - 3 t + 1 has roots (3 +- sqrt 5)/2
    auto roots = solve_quadratic(QuadExt(Rational(1)), QuadExt(Rational(-3)),
                                 QuadExt(Rational(1)));
    REQUIRE(roots.has_value());
    CHECK_FALSE(roots->repeated);
    QuadExt sum = roots->first + roots->second;
    QuadExt prod = roots->first * roots->second;
    CHECK(sum == QuadExt(Rational(3)));
    CHECK(prod == QuadExt(Rational(1)));

    auto rep = solve_quadratic(QuadExt(Rational(1)), QuadExt(Rational(-2)),
                               QuadExt(Rational(1)));
    REQUIRE(rep.has_value());
    CHECK(rep->repeated);
    CHECK(rep->first == QuadExt(Rational(1)));

    // t^2 - sqrt 5 t + 1: discriminant 5 - 4 = 1
    auto mixed = solve_quadratic(QuadExt(Rational(1)), -Q(0, 1, 5), QuadExt(Rational(1)));
    REQUIRE(mixed.has_value());
    QuadExt expect_hi = Q(0, 1, 5) * QuadExt(make_rational(1, 2)) + QuadExt(make_rational(1, 2));
    CHECK((mixed->first == expect_hi || mixed->second == expect_hi));
}

TEST_CASE("exact bivariate evaluation") {
    MultiPoly g = MultiPoly::parse("z^2 - (1 + x^2) z + 2 x^2 - 1", {"x", "z"});
    // x = sqrt 5, z = 3 lies on the curve: 9 - 18 + 10 - 1 = 0
    CHECK(eval_quad(g, Q(0, 1, 5), QuadExt(Rational(3))).is_zero());
    // x = 0 forces z^2 - z - 1 = 0, so z = (1 + sqrt 5)/2 works
    QuadExt golden(make_rational(1, 2), make_rational(1, 2), Integer(5));
    CHECK(eval_quad(g, QuadExt(Rational(0)), golden).is_zero());
    CHECK_FALSE(eval_quad(g, QuadExt(Rational(0)), QuadExt(Rational(1))).is_zero());
    MultiPoly f = MultiPoly::parse("x^4 - 5 x^2 + 2", {"x", "z"});
    QuadExt gold = Q(1, 1, 2);  // golden-like point x = 1 + sqrt 2
    QuadExt val = eval_quad(f, gold, QuadExt(Rational(0)));
    // (1+sqrt2)^2 = 3 + 2 sqrt2, (1+sqrt2)^4 = 17 + 12 sqrt2
    CHECK(val == Q(17 - 15 + 2, 12 - 10, 2));
    double approx = std::abs(val.to_complex() - Complex(4.0 + 2.0 * std::sqrt(2.0), 0.0));
    CHECK(approx < 1e-12);
}

TEST_CASE("complex embedding for negative radicands") {
    QuadExt i2 = Q(0, 1, -1);
    Complex c = i2.to_complex();
    CHECK(std::abs(c - Complex(0.0, 1.0)) < 1e-15);
    CHECK(Q(2, 3, -7).norm() == 4 + 9 * 7);
}
