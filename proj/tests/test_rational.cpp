#include <doctest.h>

#include <random>

#include "knotcv/rational.hpp"

using namespace knotcv;

TEST_CASE("construction canonicalizes") {
    Rational r = make_rational(6, 4);
    CHECK(r.get_num() == 3);
    CHECK(r.get_den() == 2);
    CHECK(is_canonical(r));

    Rational s = make_rational(-6, -4);
    CHECK(s.get_num() == 3);
    CHECK(s.get_den() == 2);

    Rational t = make_rational(5, -10);
    CHECK(t.get_num() == -1);
    CHECK(t.get_den() == 2);
}

TEST_CASE("zero denominator rejected") {
    CHECK_THROWS_AS(make_rational(1, 0), Error);
}

TEST_CASE("string round trip") {
    CHECK(rational_to_string(rational_from_string("22/7")) == "22/7");
    CHECK(rational_to_string(rational_from_string("-10/4")) == "-5/2");
    CHECK(rational_to_string(rational_from_string("42")) == "42");
    CHECK(rational_from_string("123456789012345678901234567890/3") ==
          Rational(Integer("41152263004115226300411522630")));
    CHECK_THROWS_AS(rational_from_string("x"), Error);
}

TEST_CASE("random arithmetic chains stay canonical") {
    std::mt19937 rng(20240817u);
    std::uniform_int_distribution<long> coef(-50, 50);
    for (int trial = 0; trial < 200; ++trial) {
        Rational acc = make_rational(coef(rng), 1 + std::abs(coef(rng)));
        for (int step = 0; step < 25; ++step) {
            long d = coef(rng);
            Rational v = make_rational(coef(rng), d == 0 ? 1 : d);
            switch (step % 4) {
                case 0: acc += v; break;
                case 1: acc -= v; break;
                case 2: acc *= v; break;
                case 3:
                    if (v != 0) acc /= v;
                    break;
            }
            REQUIRE(is_canonical(acc));
        }
    }
}
