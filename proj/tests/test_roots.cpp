#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "knotcv/roots.hpp"

using namespace knotcv;

namespace {
MultiPoly U(const std::string& s) { return MultiPoly::parse(s, {"x"}); }
}  // namespace

TEST_CASE("double root of the slope eliminant factor") {
    auto roots = complex_roots(U("(x^2 - 2 x - 1)^2"), 1e-9);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].multiplicity == 2);
    CHECK(roots[1].multiplicity == 2);
    CHECK(std::abs(roots[0].value - Complex(1.0 - std::sqrt(2.0), 0.0)) < 1e-10);
    CHECK(std::abs(roots[1].value - Complex(1.0 + std::sqrt(2.0), 0.0)) < 1e-10);
}

TEST_CASE("gaussian units") {
    auto roots = complex_roots(U("x^2 + 1"), 1e-10);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].multiplicity == 1);
    CHECK(std::abs(roots[0].value - Complex(0.0, -1.0)) < 1e-12);
    CHECK(std::abs(roots[1].value - Complex(0.0, 1.0)) < 1e-12);
}

TEST_CASE("mixed multiplicities at zero") {
    auto roots = complex_roots(U("x^4 - 5 x^2"), 1e-9);
    REQUIRE(roots.size() == 3);
    unsigned total = 0;
    bool saw_zero = false;
    for (const auto& r : roots) {
        total += r.multiplicity;
        if (std::abs(r.value) < 1e-10) {
            saw_zero = true;
            CHECK(r.multiplicity == 2);
        }
    }
    CHECK(total == 4);
    CHECK(saw_zero);
    CHECK(std::abs(roots.front().value - Complex(-std::sqrt(5.0), 0.0)) < 1e-10);
    CHECK(std::abs(roots.back().value - Complex(std::sqrt(5.0), 0.0)) < 1e-10);
}

TEST_CASE("random products: completeness and residuals") {
    std::mt19937 rng(77u);
    std::uniform_int_distribution<long> coef(-8, 8);
    for (int trial = 0; trial < 40; ++trial) {
        MultiPoly p = U("1");
        int deg = 0;
        for (int f = 0; f < 3; ++f) {
            MultiPoly lin = U("x") + MultiPoly::constant({"x"}, Rational(coef(rng)));
            unsigned mult = 1 + (trial + f) % 3;
            p = p * lin.pow(mult);
            deg += static_cast<int>(mult);
        }
        auto roots = complex_roots(p, 1e-8);
        unsigned total = 0;
        for (const auto& r : roots) {
            total += r.multiplicity;
            CHECK(r.residual < 1e-8);
        }
        CHECK(total == static_cast<unsigned>(deg));
    }
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(complex_roots(MultiPoly({"x"}), 1e-9), Error);
    CHECK_THROWS_AS(complex_roots(U("x"), -1.0), Error);
    CHECK_THROWS_AS(complex_roots(MultiPoly::parse("x z", {"x", "z"}), 1e-9), Error);
    CHECK(complex_roots(U("5"), 1e-9).empty());
}
